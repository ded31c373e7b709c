#include "tcone/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tcone/apery.hpp"
#include "tcone/ideals.hpp"
#include "tcone/tangent_cone.hpp"

namespace tcone::oracle {

PowerSieve::PowerSieve(const NumericalSemigroup& s, Value bound)
{
    parts_.assign(static_cast<std::size_t>(bound) + 1, -1);
    parts_[0] = 0;
    for (Value v = 1; v <= bound; ++v) {
        Value best = -1;
        for (Value g : s.minimal_generators()) {
            if (g > v) break;
            const Value p = parts_[static_cast<std::size_t>(v - g)];
            if (p >= 0) best = std::max(best, p + 1);
        }
        parts_[static_cast<std::size_t>(v)] = best;
    }
}

bool PowerSieve::in_power(Value v, Value n) const
{
    if (v < 0) return false;
    if (v > bound()) throw std::out_of_range("PowerSieve queried beyond its bound");
    return parts_[static_cast<std::size_t>(v)] >= n;
}

std::vector<Value> apery_via_difference(const NumericalSemigroup& s, Value n)
{
    const Value e = s.multiplicity();
    if (n < 0 || n > std::max(e, kMinLevelCap))
        throw Error(ErrorKind::CapExceeded, "difference oracle is capped at level " +
                                                std::to_string(std::max(e, kMinLevelCap)));

    // Every element of Ap(nM) is at most F + e + n*e.
    const Value bound = (n + 1) * e + s.frobenius();
    const PowerSieve sieve(s, bound);

    std::vector<Value> out(static_cast<std::size_t>(e), -1);
    for (Value v = 0; v <= bound; ++v) {
        if (!sieve.in_power(v, n)) continue;
        bool shifted = false;
        for (Value t = 0; t <= v - e && !shifted; ++t)
            shifted = s.contains(t) && sieve.in_power(v - e - t, n);
        if (shifted) continue;
        auto& slot = out[static_cast<std::size_t>(v % e)];
        if (slot >= 0) throw std::logic_error("difference set has two elements in one residue class");
        slot = v;
    }
    if (std::find(out.begin(), out.end(), Value{-1}) != out.end())
        throw std::logic_error("difference set misses a residue class");
    return out;
}

Value hilbert_oracle(const NumericalSemigroup& s, Value n)
{
    const Value threshold = (n + 1) * s.multiplicity() + s.frobenius() + 1;
    const PowerSieve sieve(s, threshold);
    Value count = 0;
    for (Value v = 0; v < threshold; ++v)
        if (sieve.in_power(v, n) && !sieve.in_power(v, n + 1)) ++count;
    return count;
}

namespace {

// Is a a sum of k elements of M, each at least low?
bool sum_of_members(const NumericalSemigroup& s, Value a, Value k, Value low)
{
    if (k == 1) return a >= low && a > 0 && s.contains(a);
    for (Value m = low; m * k <= a; ++m)
        if (m > 0 && s.contains(m) && sum_of_members(s, a - m, k - 1, m)) return true;
    return false;
}

}  // namespace

Value order_oracle(const NumericalSemigroup& s, Value a, Value n_max)
{
    if (!s.contains(a)) throw Error(ErrorKind::NotAMember, std::to_string(a) + " is not in the semigroup");
    for (Value k = n_max; k >= 1; --k)
        if (sum_of_members(s, a, k, s.multiplicity())) return k;
    return 0;
}

bool ConsistencyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> ConsistencyReport::failures() const
{
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.name + ": " + c.detail);
    return out;
}

namespace {

std::string join(const std::vector<Value>& values)
{
    return format_generators(values, ",");
}

}  // namespace

ConsistencyReport consistency_report(const NumericalSemigroup& s)
{
    ConsistencyReport report;
    auto add = [&report](std::string name, bool passed, std::string detail = {}) {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    const Value e = s.multiplicity();
    const AperyTable table = build_apery_table(s);
    const TangentConeDecomposition d = decompose(table);
    const int r = table.r;

    {
        const auto violations = validate_table(table);
        add("table-invariants", violations.empty(), violations.empty() ? "" : describe(violations.front()));
    }

    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= r + 1 && ok; ++n) {
            std::vector<Value> expected = n <= r ? table.rows[static_cast<std::size_t>(n)] : table.rows.back();
            if (n > r)
                for (Value& w : expected) w += e;
            const auto via_difference = apery_via_difference(s, n);
            if (via_difference != expected) {
                ok = false;
                detail = "row " + std::to_string(n) + ": table [" + join(expected) + "] vs difference [" +
                         join(via_difference) + "]";
            }
        }
        add("difference-formula", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= r + 2 && ok; ++n) {
            const Value predicted = hilbert_function(d, n);
            const Value counted = hilbert_oracle(s, n);
            if (predicted != counted) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": predicted " + std::to_string(predicted) + ", counted " +
                         std::to_string(counted);
            }
        }
        if (ok && hilbert_function(d, 1) != static_cast<Value>(s.embedding_dimension())) {
            ok = false;
            detail = "H(1) differs from the embedding dimension";
        }
        add("hilbert-function", ok, detail);
    }

    {
        Value tail = 0;
        for (const auto& [deg, count] : d.alpha)
            if (deg >= 1) tail += count;
        const bool ok = d.alpha.count(0) && d.alpha.at(0) == 1 && tail == e - 1 &&
                        (r == 0 || d.alpha.count(r)) && static_cast<Value>(d.free_degrees.size()) == e &&
                        d.free_degrees.back() == r && r <= e - 1;
        add("alpha-invariants", ok, ok ? "" : "alpha_0 = 1, sum alpha_i = e - 1, alpha_r != 0 or r <= e - 1 fails");
    }

    {
        bool ok = true;
        std::map<int, int> b0;
        std::map<int, int> b1;
        for (const auto& [deg, count] : d.alpha) b0[deg] += count;
        for (const auto& [key, count] : d.alpha_torsion) {
            b0[key.first] += count;
            b1[key.first + key.second] += count;
        }
        ok = b0 == d.betti0 && b1 == d.betti1;
        for (const auto& box : d.torsion)
            ok = ok && box.b >= 1 && box.c >= 1 && box.b + box.c <= r;
        add("betti-numbers", ok, ok ? "" : "Betti numbers disagree with the alpha invariants");
    }

    {
        const PowerSieve sieve(s, (r + 3) * e + s.frobenius() + 2 * e * (r + 1));
        bool ok = true;
        std::string detail;
        for (const auto& m : torsion_monomials(table, d)) {
            const Value killed = m.exponent + m.box_length * e;
            const bool alive = sieve.in_power(m.exponent, m.degree) && !sieve.in_power(m.exponent, m.degree + 1);
            const bool dies = sieve.in_power(killed, m.degree + m.box_length + 1);
            if (!alive || !dies) {
                ok = false;
                detail = "monomial t^" + std::to_string(m.exponent) + " in degree " + std::to_string(m.degree);
                break;
            }
        }
        add("torsion-kill", ok, detail);
    }

    {
        IdealChain chain(s);
        constexpr Value kOrderCap = 6;
        std::set<Value> values;
        for (const auto& row : table.rows) values.insert(row.begin(), row.end());
        bool ok = true;
        std::string detail;
        for (Value a : values) {
            const Value walked = std::min(chain.order(a), kOrderCap);
            const Value searched = order_oracle(s, a, kOrderCap);
            if (walked != searched) {
                ok = false;
                detail = "ord(" + std::to_string(a) + "): chain " + std::to_string(walked) + ", search " +
                         std::to_string(searched);
                break;
            }
        }
        add("order-function", ok, detail);

        const auto fast = is_buchsbaum(s, table, d, chain, BuchsbaumMode::Fast);
        const auto full = is_buchsbaum(s, table, d, chain, BuchsbaumMode::ProductTestOnly);
        report.buchsbaum = fast.buchsbaum;
        bool certified = true;
        if (fast.certificate) {
            const auto& c = *fast.certificate;
            certified = chain.order(c.a) == c.degree && chain.order(c.a + c.g) == c.degree + 1;
        }
        add("buchsbaum-routes", fast.buchsbaum == full.buchsbaum && certified,
            fast.buchsbaum == full.buchsbaum ? (certified ? "" : "certificate does not witness a nonzero product")
                                             : "fast path and product test disagree");
    }

    return report;
}

}  // namespace tcone::oracle
