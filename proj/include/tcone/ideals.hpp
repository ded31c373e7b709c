#pragma once

#include <vector>

#include "tcone/semigroup.hpp"

namespace tcone {

/*
 * The ideal nM of a numerical semigroup (0M = S, 1M = M = S \ {0}).
 *
 * Membership is held as a boolean sieve on [0, threshold); every integer at or
 * above threshold = n*e + F + 1 is a member.  Apery sets are derived from the
 * sieve.
 */
class SemigroupIdeal {
public:
    /// The level-0 ideal, S itself.
    static SemigroupIdeal whole(const NumericalSemigroup& s);

    Value level() const noexcept { return level_; }
    Value multiplicity() const noexcept { return e_; }
    Value threshold() const noexcept { return threshold_; }

    bool contains(Value a) const noexcept
    {
        if (a < 0) return false;
        if (a >= threshold_) return true;
        return sieve_[static_cast<std::size_t>(a)];
    }

    /// Entry i is the least member congruent to i mod e; entry 0 equals level * e.
    std::vector<Value> apery_set() const;

    /// (level + 1)M = {n_1, ..., n_b} + nM.
    SemigroupIdeal add_maximal() const;

private:
    SemigroupIdeal() = default;

    std::vector<Value> generators_;
    std::vector<bool> sieve_;
    Value e_ = 1;
    Value frobenius_ = -1;
    Value level_ = 0;
    Value threshold_ = 0;
};

SemigroupIdeal maximal_ideal(const NumericalSemigroup& s);

inline SemigroupIdeal add_maximal(const SemigroupIdeal& ideal) { return ideal.add_maximal(); }

/*
 * The chain S, M, 2M, ... built lazily through add_maximal.  Not thread-safe;
 * keep one chain per computation.
 */
class IdealChain {
public:
    explicit IdealChain(const NumericalSemigroup& s);

    const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }

    /// nM, extending the chain as needed.
    const SemigroupIdeal& power(Value n);

    /// max{n : a in nM}.  Throws NotAMember when a is not in S.
    Value order(Value a);

    std::size_t cached_levels() const noexcept { return chain_.size(); }

private:
    NumericalSemigroup semigroup_;
    std::vector<SemigroupIdeal> chain_;
};

/// One-shot order computation on a fresh chain.
Value order(const NumericalSemigroup& s, Value a);

}  // namespace tcone
