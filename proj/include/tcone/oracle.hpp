#pragma once

#include <string>
#include <vector>

#include "tcone/semigroup.hpp"

// Brute-force recomputations used to cross-check the main pipeline.  None of
// these go through SemigroupIdeal::add_maximal or the Apery table.
namespace tcone::oracle {

/// Levels above max(e, kMinLevelCap) throw CapExceeded.
inline constexpr Value kMinLevelCap = 4;

/*
 * Membership in nM from a max-parts table: parts[v] is the largest number of
 * minimal generators summing to v, and v lies in nM iff parts[v] >= n.
 */
class PowerSieve {
public:
    PowerSieve(const NumericalSemigroup& s, Value bound);

    Value bound() const noexcept { return static_cast<Value>(parts_.size()) - 1; }
    bool in_power(Value v, Value n) const;

private:
    std::vector<Value> parts_;
};

/// Ap(nM) as the set difference nM \ ((e + S) + nM), sorted by residue.
std::vector<Value> apery_via_difference(const NumericalSemigroup& s, Value n);

/// |nM \ (n+1)M|.
Value hilbert_oracle(const NumericalSemigroup& s, Value n);

/// Largest n <= n_max with a a sum of n elements of M, by exhaustive search.
Value order_oracle(const NumericalSemigroup& s, Value a, Value n_max);

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ConsistencyReport {
    std::vector<Check> checks;
    bool buchsbaum = true;

    bool all_passed() const;
    std::vector<std::string> failures() const;
};

ConsistencyReport consistency_report(const NumericalSemigroup& s);

}  // namespace tcone::oracle
