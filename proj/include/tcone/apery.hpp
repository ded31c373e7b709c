#pragma once

#include <string>
#include <vector>

#include "tcone/semigroup.hpp"

namespace tcone {

/*
 * Apery table of S: row n is Ap(nM) for 0 <= n <= r, columns indexed by
 * residue class mod e.  Column i is the ladder of values omega_{n,i}.
 */
struct AperyTable {
    Value e = 1;
    int r = 0;
    std::vector<std::vector<Value>> rows;

    Value at(int n, std::size_t i) const { return rows[static_cast<std::size_t>(n)][i]; }
    std::vector<Value> column(std::size_t i) const;

    friend bool operator==(const AperyTable&, const AperyTable&) = default;
};

/// Throws ReductionBoundExceeded if the rows fail to stabilize by n = e - 1.
AperyTable build_apery_table(const NumericalSemigroup& s);

struct TableViolation {
    enum class Rule {
        Shape,          // row count or row width is wrong
        Residue,        // omega_{n,i} not congruent to i mod e
        ColumnZero,     // omega_{n,0} != n*e
        Step,           // omega_{n+1,i} - omega_{n,i} not in {0, e}
        MaximalIdeal,   // omega_{1,i} != omega_{0,i} for i >= 1
        ReductionBound, // r > e - 1
        NotMinimal,     // row r already equals row r-1 shifted by e
    };

    int n = 0;
    std::size_t i = 0;
    Rule rule = Rule::Shape;

    friend bool operator==(const TableViolation&, const TableViolation&) = default;
};

const char* to_string(TableViolation::Rule rule);
std::string describe(const TableViolation& v);

std::vector<TableViolation> validate_table(const AperyTable& table);

/// Rows labelled Ap(S), Ap(M), Ap(2M), ... with columns in residue order.
std::string format_table(const AperyTable& table);

}  // namespace tcone
