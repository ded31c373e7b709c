#include "tcone/tangent_cone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tcone {

TangentConeDecomposition decompose(const AperyTable& table)
{
    TangentConeDecomposition d;
    d.e = table.e;
    d.r = table.r;
    d.free_degrees.push_back(0);
    d.column_degrees.push_back(0);
    d.column_torsion.emplace_back();

    for (std::size_t i = 1; i < static_cast<std::size_t>(table.e); ++i) {
        const std::vector<Value> column = table.column(i);
        const LadderProfile profile = analyze_ladder(column);
        if (!profile.d)
            throw Error(ErrorKind::NotALadder, "column " + std::to_string(i) + " of the Apery table has no landing");
        d.free_degrees.push_back(*profile.d);
        d.column_degrees.push_back(*profile.d);
        d.column_torsion.push_back(profile.steps);
        d.torsion.insert(d.torsion.end(), profile.steps.begin(), profile.steps.end());
    }
    std::sort(d.free_degrees.begin(), d.free_degrees.end());
    std::sort(d.torsion.begin(), d.torsion.end());

    auto alpha = alpha_invariants(d);
    d.alpha = std::move(alpha.alpha);
    d.alpha_torsion = std::move(alpha.alpha_torsion);
    auto betti = betti_numbers(d);
    d.betti0 = std::move(betti.betti0);
    d.betti1 = std::move(betti.betti1);
    return d;
}

TangentConeDecomposition decompose(const NumericalSemigroup& s)
{
    return decompose(build_apery_table(s));
}

AlphaInvariants alpha_invariants(const TangentConeDecomposition& d)
{
    AlphaInvariants out;
    for (int deg : d.free_degrees) ++out.alpha[deg];
    for (const auto& box : d.torsion) ++out.alpha_torsion[{box.b, box.c}];
    return out;
}

BettiNumbers betti_numbers(const TangentConeDecomposition& d)
{
    // 0 -> (+) F(-b-c) -> (+) F(-deg) -> G -> 0, one relation per torsion box.
    BettiNumbers out;
    for (int deg : d.free_degrees) ++out.betti0[deg];
    for (const auto& box : d.torsion) {
        ++out.betti0[box.b];
        ++out.betti1[box.b + box.c];
    }
    return out;
}

Value hilbert_function(const TangentConeDecomposition& d, int n)
{
    Value total = 0;
    for (int deg : d.free_degrees)
        if (deg <= n) ++total;
    for (const auto& box : d.torsion)
        if (box.b <= n && n < box.b + box.c) ++total;
    return total;
}

bool is_cohen_macaulay(const TangentConeDecomposition& d) { return d.torsion.empty(); }

std::vector<TorsionMonomial> torsion_monomials(const AperyTable& table, const TangentConeDecomposition& d)
{
    std::vector<TorsionMonomial> out;
    for (std::size_t i = 1; i < static_cast<std::size_t>(table.e); ++i) {
        const auto& boxes = d.column_torsion[i];
        for (int n = 0; n < d.column_degrees[i]; ++n) {
            if (table.at(n + 1, i) != table.at(n, i) + table.e) continue;
            TorsionMonomial m{i, n, table.at(n, i), 0, 0};
            for (const auto& box : boxes)
                if (box.b <= n && n < box.b + box.c) {
                    m.box_length = box.c;
                    m.box_degree = box.b;
                }
            out.push_back(m);
        }
    }
    return out;
}

namespace {

BuchsbaumResult product_test(const NumericalSemigroup& s, const AperyTable& table,
                             const TangentConeDecomposition& d, IdealChain& chain)
{
    BuchsbaumResult result;
    result.route = BuchsbaumResult::Route::ProductTest;
    for (const auto& m : torsion_monomials(table, d)) {
        for (Value g : s.minimal_generators()) {
            if (chain.order(m.exponent + g) == m.degree + 1) {
                result.buchsbaum = false;
                result.certificate = BuchsbaumCertificate{BuchsbaumCertificate::Kind::Product, m.exponent, g,
                                                          m.degree, {m.box_degree, m.box_length}};
                return result;
            }
        }
    }
    return result;
}

}  // namespace

BuchsbaumResult is_buchsbaum(const NumericalSemigroup& s, const AperyTable& table,
                             const TangentConeDecomposition& d, IdealChain& chain, BuchsbaumMode mode)
{
    if (mode == BuchsbaumMode::ProductTestOnly) return product_test(s, table, d, chain);

    BuchsbaumResult result;
    if (d.torsion.empty()) {
        result.route = BuchsbaumResult::Route::CohenMacaulay;
        return result;
    }
    for (std::size_t i = 1; i < d.column_torsion.size(); ++i)
        for (const auto& box : d.column_torsion[i])
            if (box.c > 1) {
                result.buchsbaum = false;
                result.route = BuchsbaumResult::Route::TorsionExponent;
                result.certificate = BuchsbaumCertificate{BuchsbaumCertificate::Kind::TorsionExponent,
                                                          table.at(box.b, i), table.e, box.b, box};
                return result;
            }
    if (d.torsion.size() == 1) {
        // T(G) is then the socle of G.
        result.route = BuchsbaumResult::Route::SingleBox;
        return result;
    }
    return product_test(s, table, d, chain);
}

BuchsbaumResult is_buchsbaum(const NumericalSemigroup& s, const AperyTable& table,
                             const TangentConeDecomposition& d, BuchsbaumMode mode)
{
    IdealChain chain(s);
    return is_buchsbaum(s, table, d, chain, mode);
}

std::string render(const TangentConeDecomposition& d, Notation notation)
{
    const bool ascii = notation == Notation::Ascii;
    auto with_power = [](std::string text, int count) {
        if (count > 1) text += "^" + std::to_string(count);
        return text;
    };

    std::set<int> degrees;
    for (const auto& [deg, count] : d.alpha) degrees.insert(deg);
    for (const auto& [key, count] : d.alpha_torsion) degrees.insert(key.first);

    std::vector<std::string> parts;
    for (int deg : degrees) {
        if (auto it = d.alpha.find(deg); it != d.alpha.end())
            parts.push_back(with_power(deg == 0 ? "F" : "F(-" + std::to_string(deg) + ")", it->second));
        for (const auto& [key, count] : d.alpha_torsion) {
            if (key.first != deg) continue;
            const std::string b = std::to_string(key.first);
            const std::string c = std::to_string(key.second);
            if (ascii)
                parts.push_back(with_power("F/x^" + c + "(-" + b + ")", count));
            else
                parts.push_back(with_power("(F/x" + (key.second > 1 ? "^" + c : std::string()) + "F)(-" + b + ")", count));
        }
    }

    std::ostringstream out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out << (ascii ? " + " : " ⊕ ");
        out << parts[k];
    }
    return out.str();
}

}  // namespace tcone
