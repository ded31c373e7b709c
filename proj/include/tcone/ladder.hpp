#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tcone/semigroup.hpp"

namespace tcone {

/// A maximal run a_start = ... = a_end of a ladder, with end >= start + 1.
struct Landing {
    int start = 0;
    int end = 0;

    int length() const noexcept { return end - start; }
    /// A true landing does not begin at index 0.
    bool is_true() const noexcept { return start >= 1; }

    friend bool operator==(const Landing&, const Landing&) = default;
};

/// One torsion box of a column: generated in degree b, killed by (x*)^c.
struct LadderStep {
    int b = 0;
    int c = 0;

    friend bool operator==(const LadderStep&, const LadderStep&) = default;
    friend auto operator<=>(const LadderStep&, const LadderStep&) = default;
};

struct LadderProfile {
    std::vector<Landing> landings;
    /// Number of landings minus one; -1 when the ladder has no landings.
    int l = -1;
    /// End index of the last landing.
    std::optional<int> d;
    /// (b_j, c_j) for j = 1..l, with b_j = e(L_{j-1}) and c_j = s(L_j) - e(L_{j-1}).
    std::vector<LadderStep> steps;

    friend bool operator==(const LadderProfile&, const LadderProfile&) = default;
};

/// Throws NotALadder if the values decrease anywhere.
LadderProfile analyze_ladder(std::span<const Value> values);

/// Inverse of analyze_ladder for ladders whose strict increases all equal `step`.
std::vector<Value> rebuild_ladder(Value first, const LadderProfile& profile, Value step, std::size_t length);

}  // namespace tcone
