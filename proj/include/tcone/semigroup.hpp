#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcone {

/// Semigroup elements, Apery entries and sieve indices.
using Value = std::int64_t;

enum class ErrorKind {
    EmptyInput,
    NonPositiveGenerator,
    GcdNotOne,
    NotAMember,
    NotALadder,
    ReductionBoundExceeded,
    CapExceeded,
    Overflow,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/*
 * A numerical semigroup S, stored as its minimal generating system together
 * with a membership sieve on [0, F + e].  Everything above the Frobenius
 * number is a member, so the sieve never needs to grow after construction.
 *
 * Instances are immutable.
 */
class NumericalSemigroup {
public:
    /// Largest sieve we are willing to build; inputs beyond this throw Overflow.
    static constexpr Value kMaxSieve = Value{1} << 26;

    explicit NumericalSemigroup(std::span<const Value> generators);
    NumericalSemigroup(std::initializer_list<Value> generators)
        : NumericalSemigroup(std::span<const Value>(generators.begin(), generators.size())) {}

    /// The semigroup of all non-negative integers.
    static NumericalSemigroup naturals() { return NumericalSemigroup{1}; }

    bool contains(Value n) const noexcept
    {
        if (n < 0) return false;
        if (n > frobenius_) return true;
        return sieve_[static_cast<std::size_t>(n)];
    }

    Value multiplicity() const noexcept { return generators_.front(); }
    Value frobenius() const noexcept { return frobenius_; }
    Value genus() const noexcept { return static_cast<Value>(gaps_.size()); }
    Value conductor() const noexcept { return frobenius_ + 1; }
    std::size_t embedding_dimension() const noexcept { return generators_.size(); }

    const std::vector<Value>& minimal_generators() const noexcept { return generators_; }
    const std::vector<Value>& gaps() const noexcept { return gaps_; }

    /// Entry i is the least member congruent to i mod e.
    const std::vector<Value>& apery_set() const noexcept { return apery_; }

    /// S minus the minimal generator g; g must be a minimal generator above F.
    NumericalSemigroup remove_generator(Value g) const;

    /// Minimal generators greater than the Frobenius number (children in the semigroup tree).
    std::vector<Value> effective_generators() const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b)
    {
        return a.generators_ == b.generators_;
    }

private:
    std::vector<Value> generators_;
    std::vector<Value> gaps_;
    std::vector<Value> apery_;
    std::vector<bool> sieve_;
    Value frobenius_ = -1;
};

std::string format_generators(std::span<const Value> generators, const char* separator = ",");

}  // namespace tcone
