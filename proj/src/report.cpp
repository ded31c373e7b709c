#include "tcone/report.hpp"

#include <sstream>

#include "tcone/apery.hpp"
#include "tcone/ideals.hpp"
#include "tcone/oracle.hpp"

namespace tcone::cli {

Report make_report(const NumericalSemigroup& s, bool run_checks)
{
    const AperyTable table = build_apery_table(s);
    const TangentConeDecomposition d = decompose(table);
    IdealChain chain(s);
    const BuchsbaumResult buchsbaum = is_buchsbaum(s, table, d, chain);

    Report report;
    report.generators = s.minimal_generators();
    report.e = s.multiplicity();
    report.b = static_cast<Value>(s.embedding_dimension());
    report.frobenius = s.frobenius();
    report.genus = s.genus();
    report.r = table.r;
    report.apery_table = table.rows;
    report.decomposition = render(d);
    report.free_degrees = d.free_degrees;
    report.torsion = d.torsion;
    report.alpha = d.alpha;
    for (const auto& [key, count] : d.alpha_torsion) report.alpha_ij.push_back({key.first, key.second, count});
    report.betti0 = d.betti0;
    report.betti1 = d.betti1;
    for (int n = 0; n <= table.r + 1; ++n) report.hilbert.push_back(hilbert_function(d, n));
    report.cohen_macaulay = is_cohen_macaulay(d);
    report.buchsbaum = buchsbaum.buchsbaum;
    if (buchsbaum.certificate) {
        const auto& c = *buchsbaum.certificate;
        report.certificate = ReportCertificate{
            c.a, c.g, c.degree,
            c.kind == BuchsbaumCertificate::Kind::Product ? "product" : "torsion-exponent"};
    }
    if (run_checks)
        for (const auto& check : oracle::consistency_report(s).checks)
            report.checks.push_back({check.name, check.passed});
    return report;
}

namespace {

nlohmann::ordered_json degree_map(const std::map<int, int>& m)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [deg, count] : m) j[std::to_string(deg)] = count;
    return j;
}

std::map<int, int> read_degree_map(const nlohmann::json& j)
{
    std::map<int, int> m;
    for (const auto& [key, value] : j.items()) m[std::stoi(key)] = value.get<int>();
    return m;
}

}  // namespace

nlohmann::ordered_json to_json(const Report& report)
{
    nlohmann::ordered_json j;
    j["generators"] = report.generators;
    j["e"] = report.e;
    j["b"] = report.b;
    j["frobenius"] = report.frobenius;
    j["genus"] = report.genus;
    j["r"] = report.r;
    j["apery_table"] = report.apery_table;
    j["decomposition"] = report.decomposition;
    j["free_degrees"] = report.free_degrees;
    j["torsion"] = nlohmann::ordered_json::array();
    for (const auto& box : report.torsion) j["torsion"].push_back({{"b", box.b}, {"c", box.c}});
    j["alpha"] = degree_map(report.alpha);
    j["alpha_ij"] = nlohmann::ordered_json::array();
    for (const auto& entry : report.alpha_ij)
        j["alpha_ij"].push_back({{"i", entry.i}, {"j", entry.j}, {"count", entry.count}});
    j["betti0"] = degree_map(report.betti0);
    j["betti1"] = degree_map(report.betti1);
    j["hilbert"] = report.hilbert;
    j["cohen_macaulay"] = report.cohen_macaulay;
    j["buchsbaum"] = report.buchsbaum;
    if (report.certificate) {
        const auto& c = *report.certificate;
        j["certificate"] = {{"a", c.a}, {"g", c.g}, {"degree", c.degree}, {"kind", c.kind}};
    } else {
        j["certificate"] = nullptr;
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& check : report.checks) j["checks"].push_back({{"name", check.name}, {"passed", check.passed}});
    return j;
}

Report report_from_json(const nlohmann::json& j)
{
    Report report;
    report.generators = j.at("generators").get<std::vector<Value>>();
    report.e = j.at("e").get<Value>();
    report.b = j.at("b").get<Value>();
    report.frobenius = j.at("frobenius").get<Value>();
    report.genus = j.at("genus").get<Value>();
    report.r = j.at("r").get<int>();
    report.apery_table = j.at("apery_table").get<std::vector<std::vector<Value>>>();
    report.decomposition = j.value("decomposition", std::string());
    report.free_degrees = j.at("free_degrees").get<std::vector<int>>();
    for (const auto& box : j.at("torsion")) report.torsion.push_back({box.at("b").get<int>(), box.at("c").get<int>()});
    report.alpha = read_degree_map(j.at("alpha"));
    for (const auto& entry : j.at("alpha_ij"))
        report.alpha_ij.push_back({entry.at("i").get<int>(), entry.at("j").get<int>(), entry.at("count").get<int>()});
    report.betti0 = read_degree_map(j.at("betti0"));
    report.betti1 = read_degree_map(j.at("betti1"));
    report.hilbert = j.at("hilbert").get<std::vector<Value>>();
    report.cohen_macaulay = j.at("cohen_macaulay").get<bool>();
    report.buchsbaum = j.at("buchsbaum").get<bool>();
    if (const auto& c = j.at("certificate"); !c.is_null())
        report.certificate = ReportCertificate{c.at("a").get<Value>(), c.at("g").get<Value>(),
                                               c.value("degree", 0), c.value("kind", std::string("product"))};
    if (j.contains("checks"))
        for (const auto& check : j.at("checks"))
            report.checks.push_back({check.at("name").get<std::string>(), check.at("passed").get<bool>()});
    return report;
}

std::string render_text(const Report& report)
{
    std::ostringstream out;
    out << "S = <" << format_generators(report.generators, ", ") << ">\n";
    out << "multiplicity e = " << report.e << ", embedding dimension b = " << report.b
        << ", Frobenius number F = " << report.frobenius << ", genus = " << report.genus << '\n';
    out << "reduction number r = " << report.r << "\n\n";

    AperyTable table;
    table.e = report.e;
    table.r = report.r;
    table.rows = report.apery_table;
    out << "Apery table\n" << format_table(table) << '\n';

    out << "G = " << report.decomposition << "   (x = (t^" << report.e << ")*)\n";
    out << "free summand degrees:";
    for (int deg : report.free_degrees) out << ' ' << deg;
    out << "\ntorsion boxes (b, c):";
    if (report.torsion.empty()) out << " none";
    for (const auto& box : report.torsion) out << " (" << box.b << ", " << box.c << ")";
    out << "\nalpha:";
    for (const auto& [deg, count] : report.alpha) out << " a_" << deg << '=' << count;
    if (!report.alpha_ij.empty()) {
        out << "\nalpha_ij:";
        for (const auto& entry : report.alpha_ij) out << " a_{" << entry.i << ',' << entry.j << "}=" << entry.count;
    }
    out << "\nbetti0:";
    for (const auto& [deg, count] : report.betti0) out << " b_{0," << deg << "}=" << count;
    out << "\nbetti1:";
    if (report.betti1.empty()) out << " none";
    for (const auto& [deg, count] : report.betti1) out << " b_{1," << deg << "}=" << count;
    out << "\nHilbert function H(0.." << report.r + 1 << "):";
    for (Value h : report.hilbert) out << ' ' << h;
    out << "\n\n";

    out << "tangent cone is " << (report.cohen_macaulay ? "" : "not ") << "Cohen-Macaulay\n";
    if (report.buchsbaum) {
        out << "tangent cone is Buchsbaum\n";
    } else {
        out << "tangent cone is not Buchsbaum";
        if (report.certificate) {
            const auto& c = *report.certificate;
            out << ", certificate (t^" << c.g << ")*·(t^" << c.a << ")* = (t^" << c.a + c.g << ")* != 0 in m^"
                << c.degree + 1 << "/m^" << c.degree + 2;
        }
        out << '\n';
    }

    if (!report.checks.empty()) {
        std::size_t passed = 0;
        for (const auto& check : report.checks) passed += check.passed ? 1 : 0;
        out << "self-check: " << passed << '/' << report.checks.size() << " passed";
        for (const auto& check : report.checks)
            if (!check.passed) out << "\n  FAILED " << check.name;
        out << '\n';
    }
    return out.str();
}

std::string csv_header() { return "generators,e,b,frobenius,genus,r,cohen_macaulay,buchsbaum,decomposition"; }

std::string csv_row(const Report& report)
{
    std::ostringstream out;
    TangentConeDecomposition d;
    d.alpha = report.alpha;
    for (const auto& entry : report.alpha_ij) d.alpha_torsion[{entry.i, entry.j}] = entry.count;

    out << format_generators(report.generators, " ") << ',' << report.e << ',' << report.b << ','
        << report.frobenius << ',' << report.genus << ',' << report.r << ','
        << (report.cohen_macaulay ? "true" : "false") << ',' << (report.buchsbaum ? "true" : "false") << ','
        << render(d, Notation::Ascii);
    return out.str();
}

}  // namespace tcone::cli
