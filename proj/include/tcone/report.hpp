#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcone/semigroup.hpp"
#include "tcone/tangent_cone.hpp"

namespace tcone::cli {

struct AlphaEntry {
    int i = 0;
    int j = 0;
    int count = 0;

    friend bool operator==(const AlphaEntry&, const AlphaEntry&) = default;
};

/// Witness of a nonzero product (t^g)* (t^a)* in degree + 1.
struct ReportCertificate {
    Value a = 0;
    Value g = 0;
    int degree = 0;
    std::string kind;

    friend bool operator==(const ReportCertificate&, const ReportCertificate&) = default;
};

struct ReportCheck {
    std::string name;
    bool passed = true;

    friend bool operator==(const ReportCheck&, const ReportCheck&) = default;
};

struct Report {
    std::vector<Value> generators;
    Value e = 1;
    Value b = 1;
    Value frobenius = -1;
    Value genus = 0;
    int r = 0;
    std::vector<std::vector<Value>> apery_table;
    std::string decomposition;
    std::vector<int> free_degrees;
    std::vector<TorsionSummand> torsion;
    std::map<int, int> alpha;
    std::vector<AlphaEntry> alpha_ij;
    std::map<int, int> betti0;
    std::map<int, int> betti1;
    /// H(0), ..., H(r + 1).
    std::vector<Value> hilbert;
    bool cohen_macaulay = true;
    bool buchsbaum = true;
    std::optional<ReportCertificate> certificate;
    /// Empty when the oracle checks were skipped.
    std::vector<ReportCheck> checks;

    friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const NumericalSemigroup& s, bool run_checks = true);

nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

std::string render_text(const Report& report);

std::string csv_header();
std::string csv_row(const Report& report);

}  // namespace tcone::cli
