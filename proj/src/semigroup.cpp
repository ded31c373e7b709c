#include "tcone/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tcone {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonPositiveGenerator: return "NonPositiveGenerator";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::NotALadder: return "NotALadder";
    case ErrorKind::ReductionBoundExceeded: return "ReductionBoundExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

NumericalSemigroup::NumericalSemigroup(std::span<const Value> generators)
{
    if (generators.empty())
        throw Error(ErrorKind::EmptyInput, "a numerical semigroup needs at least one generator");

    std::vector<Value> gens(generators.begin(), generators.end());
    for (Value g : gens) {
        if (g < 1)
            throw Error(ErrorKind::NonPositiveGenerator,
                        "generators must be positive integers, got " + std::to_string(g));
        if (g > kMaxSieve)
            throw Error(ErrorKind::Overflow, "generator " + std::to_string(g) + " is too large");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Value d = 0;
    for (Value g : gens) d = std::gcd(d, g);
    if (d != 1)
        throw Error(ErrorKind::GcdNotOne,
                    "generators " + format_generators(gens) + " have gcd " + std::to_string(d) +
                        "; the complement in N would be infinite");

    const Value e = gens.front();
    // F <= (n_1 - 1)(n_b - 1) - 1, so the sieve below stays within this size.
    if ((e - 1) > 0 && (gens.back() - 1) > kMaxSieve / (e - 1))
        throw Error(ErrorKind::Overflow, "semigroup " + format_generators(gens) + " is too large to sieve");

    // Reachability sieve, grown until e consecutive members appear.
    std::vector<bool> reach{true};
    Value run = 1;
    Value v = 0;
    while (run < e) {
        ++v;
        bool member = false;
        for (Value g : gens) {
            if (g > v) break;
            if (reach[static_cast<std::size_t>(v - g)]) {
                member = true;
                break;
            }
        }
        reach.push_back(member);
        run = member ? run + 1 : 0;
    }
    frobenius_ = v - e;  // first member of the final run is F + 1
    reach.resize(static_cast<std::size_t>(frobenius_ + 1));
    sieve_ = std::move(reach);

    for (Value g : gens) {
        bool decomposable = false;
        for (Value s = e; s <= g - e && !decomposable; ++s)
            decomposable = contains(s) && contains(g - s);
        if (!decomposable) generators_.push_back(g);
    }

    for (Value n = 1; n <= frobenius_; ++n)
        if (!contains(n)) gaps_.push_back(n);

    apery_.assign(static_cast<std::size_t>(e), -1);
    Value found = 0;
    for (Value n = 0; found < e; ++n) {
        auto& slot = apery_[static_cast<std::size_t>(n % e)];
        if (slot < 0 && contains(n)) {
            slot = n;
            ++found;
        }
    }
}

NumericalSemigroup NumericalSemigroup::remove_generator(Value g) const
{
    if (std::find(generators_.begin(), generators_.end(), g) == generators_.end())
        throw Error(ErrorKind::NotAMember, std::to_string(g) + " is not a minimal generator");

    // S \ {g} is generated by the other generators, g + n_i, 2g and 3g.
    std::vector<Value> gens;
    for (Value n : generators_) {
        if (n != g) gens.push_back(n);
        gens.push_back(g + n);
    }
    gens.push_back(3 * g);
    return NumericalSemigroup(gens);
}

std::vector<Value> NumericalSemigroup::effective_generators() const
{
    std::vector<Value> out;
    for (Value g : generators_)
        if (g > frobenius_) out.push_back(g);
    return out;
}

std::string format_generators(std::span<const Value> generators, const char* separator)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out << separator;
        out << generators[i];
    }
    return out.str();
}

}  // namespace tcone
