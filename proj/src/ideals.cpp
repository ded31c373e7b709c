#include "tcone/ideals.hpp"

namespace tcone {

SemigroupIdeal SemigroupIdeal::whole(const NumericalSemigroup& s)
{
    SemigroupIdeal ideal;
    ideal.generators_ = s.minimal_generators();
    ideal.e_ = s.multiplicity();
    ideal.frobenius_ = s.frobenius();
    ideal.level_ = 0;
    ideal.threshold_ = s.frobenius() + 1;
    ideal.sieve_.resize(static_cast<std::size_t>(ideal.threshold_));
    for (Value a = 0; a < ideal.threshold_; ++a)
        ideal.sieve_[static_cast<std::size_t>(a)] = s.contains(a);
    return ideal;
}

SemigroupIdeal maximal_ideal(const NumericalSemigroup& s)
{
    // M = {n_1, ..., n_b} + S
    return SemigroupIdeal::whole(s).add_maximal();
}

std::vector<Value> SemigroupIdeal::apery_set() const
{
    std::vector<Value> out(static_cast<std::size_t>(e_), -1);
    Value found = 0;
    for (Value a = 0; found < e_; ++a) {
        auto& slot = out[static_cast<std::size_t>(a % e_)];
        if (slot < 0 && contains(a)) {
            slot = a;
            ++found;
        }
    }
    return out;
}

SemigroupIdeal SemigroupIdeal::add_maximal() const
{
    SemigroupIdeal next;
    next.generators_ = generators_;
    next.e_ = e_;
    next.frobenius_ = frobenius_;
    next.level_ = level_ + 1;
    next.threshold_ = next.level_ * e_ + frobenius_ + 1;
    next.sieve_.resize(static_cast<std::size_t>(next.threshold_));
    for (Value a = 0; a < next.threshold_; ++a) {
        bool member = false;
        for (Value g : generators_) {
            if (g > a) break;
            if (contains(a - g)) {
                member = true;
                break;
            }
        }
        next.sieve_[static_cast<std::size_t>(a)] = member;
    }
    return next;
}

IdealChain::IdealChain(const NumericalSemigroup& s) : semigroup_(s)
{
    chain_.push_back(SemigroupIdeal::whole(s));
}

const SemigroupIdeal& IdealChain::power(Value n)
{
    while (static_cast<Value>(chain_.size()) <= n)
        chain_.push_back(chain_.back().add_maximal());
    return chain_[static_cast<std::size_t>(n)];
}

Value IdealChain::order(Value a)
{
    if (!semigroup_.contains(a))
        throw Error(ErrorKind::NotAMember, std::to_string(a) + " is not in the semigroup");
    // a in nM forces a >= n*e, so the walk stops by level a / e.
    Value n = 0;
    while (power(n + 1).contains(a)) ++n;
    return n;
}

Value order(const NumericalSemigroup& s, Value a)
{
    IdealChain chain(s);
    return chain.order(a);
}

}  // namespace tcone
