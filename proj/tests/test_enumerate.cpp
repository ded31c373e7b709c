#include <doctest.h>

#include <set>

#include "tcone/enumerate.hpp"
#include "test_support.hpp"

using tcone::NumericalSemigroup;
using tcone::Value;
using tcone::cli::FamilyBounds;

namespace {

std::vector<std::size_t> counts_by_genus(const std::vector<NumericalSemigroup>& family, int max_genus)
{
    std::vector<std::size_t> counts(static_cast<std::size_t>(max_genus) + 1, 0);
    for (const auto& s : family) ++counts[static_cast<std::size_t>(s.genus())];
    return counts;
}

}  // namespace

TEST_CASE("gap-set brute force")
{
    // Frozen from the brute-force enumerator.
    const std::vector<std::size_t> expected{1, 1, 2, 4, 7, 12, 23, 39, 67};
    CHECK(tcone::test::count_by_gap_sets(8) == expected);
}

TEST_CASE("semigroup tree is complete and duplicate-free up to genus 8")
{
    const auto family = tcone::cli::enumerate_semigroups({.max_genus = 8});
    CHECK(counts_by_genus(family, 8) == tcone::test::count_by_gap_sets(8));

    std::set<std::vector<Value>> seen;
    for (const auto& s : family) CHECK(seen.insert(s.gaps()).second);
}

TEST_CASE("genus at most 3")
{
    const auto family = tcone::cli::enumerate_semigroups({.max_genus = 3});
    REQUIRE(family.size() == 8);
    CHECK(family.front() == NumericalSemigroup{1});
    std::set<std::vector<Value>> gens;
    for (const auto& s : family) gens.insert(s.minimal_generators());
    const std::set<std::vector<Value>> expected{{1},          {2, 3},       {3, 4, 5}, {2, 5},    {4, 5, 6, 7},
                                                {3, 5, 7},    {3, 4},       {2, 7}};
    CHECK(gens == expected);
}

TEST_CASE("tree order is preorder with children by increasing generator")
{
    const auto family = tcone::cli::enumerate_semigroups({.max_genus = 2});
    REQUIRE(family.size() == 4);
    CHECK(family[0].minimal_generators() == std::vector<Value>{1});
    CHECK(family[1].minimal_generators() == std::vector<Value>{2, 3});
    CHECK(family[2].minimal_generators() == std::vector<Value>{3, 4, 5});
    CHECK(family[3].minimal_generators() == std::vector<Value>{2, 5});
}

TEST_CASE("multiplicity and Frobenius bounds select exactly the bounded semigroups")
{
    const FamilyBounds bounds{.max_multiplicity = 5, .max_frobenius = 14};
    const auto family = tcone::cli::enumerate_semigroups(bounds);
    // Brute force: gap sets inside [1, 14] with additively closed complement
    // and some member among 1..5.
    std::size_t expected = 0;
    constexpr int width = 14;
    for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
        auto is_gap = [mask](int v) { return v >= 1 && v <= width && ((mask >> (v - 1)) & 1u); };
        bool closed = true;
        for (int a = 1; a <= width && closed; ++a)
            for (int b = a; a + b <= width && closed; ++b)
                if (!is_gap(a) && !is_gap(b) && is_gap(a + b)) closed = false;
        bool small_member = false;
        for (int v = 1; v <= 5; ++v) small_member = small_member || !is_gap(v);
        if (closed && small_member) ++expected;
    }
    CHECK(family.size() == expected);
    for (const auto& s : family) {
        CHECK(s.multiplicity() <= 5);
        CHECK(s.frobenius() <= 14);
    }
    CHECK(std::find(family.begin(), family.end(), NumericalSemigroup{5, 6, 13}) != family.end());
}

TEST_CASE("unbounded families are rejected")
{
    CHECK_THROWS_AS(tcone::cli::enumerate_semigroups({.max_multiplicity = 4}), std::invalid_argument);
}
