#include "tcone/enumerate.hpp"

#include <stdexcept>

namespace tcone::cli {

namespace {

bool within(const FamilyBounds& bounds, const NumericalSemigroup& s)
{
    if (bounds.max_genus && s.genus() > *bounds.max_genus) return false;
    if (bounds.max_multiplicity && s.multiplicity() > *bounds.max_multiplicity) return false;
    if (bounds.max_frobenius && s.frobenius() > *bounds.max_frobenius) return false;
    return true;
}

void descend(const FamilyBounds& bounds, const NumericalSemigroup& s,
             const std::function<void(const NumericalSemigroup&)>& visit)
{
    visit(s);
    for (Value g : s.effective_generators()) {
        // Removing g makes g the new Frobenius number, and the multiplicity
        // moves only when g == e; both are known before building the child.
        if (bounds.max_frobenius && g > *bounds.max_frobenius) break;
        if (bounds.max_genus && s.genus() + 1 > *bounds.max_genus) break;
        const NumericalSemigroup child = s.remove_generator(g);
        if (within(bounds, child)) descend(bounds, child, visit);
    }
}

}  // namespace

void walk_semigroup_tree(const FamilyBounds& bounds, const std::function<void(const NumericalSemigroup&)>& visit)
{
    if (!bounds.max_genus && !bounds.max_frobenius)
        throw std::invalid_argument("semigroup family needs a genus or Frobenius bound");
    const NumericalSemigroup root = NumericalSemigroup::naturals();
    if (within(bounds, root)) descend(bounds, root, visit);
}

std::vector<NumericalSemigroup> enumerate_semigroups(const FamilyBounds& bounds)
{
    std::vector<NumericalSemigroup> out;
    walk_semigroup_tree(bounds, [&out](const NumericalSemigroup& s) { out.push_back(s); });
    return out;
}

}  // namespace tcone::cli
