#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tcone/semigroup.hpp"

namespace tcone::cli {

/// At least max_genus or max_frobenius must be set for the family to be finite.
struct FamilyBounds {
    std::optional<Value> max_genus;
    std::optional<Value> max_multiplicity;
    std::optional<Value> max_frobenius;
};

/*
 * Walk the semigroup tree rooted at N: the children of S are S \ {g} for the
 * minimal generators g > F(S).  Genus grows by one per level while e and F
 * never decrease, so each bound prunes whole subtrees.  Visits in preorder,
 * children by increasing g.
 */
void walk_semigroup_tree(const FamilyBounds& bounds, const std::function<void(const NumericalSemigroup&)>& visit);

std::vector<NumericalSemigroup> enumerate_semigroups(const FamilyBounds& bounds);

}  // namespace tcone::cli
