#include <doctest.h>

#include "tcone/ladder.hpp"
#include "test_support.hpp"

using tcone::Landing;
using tcone::LadderStep;
using tcone::Value;

TEST_CASE("column 4 of <5,6,13>")
{
    const std::vector<Value> column{19, 19, 19, 24, 24};
    const auto p = tcone::analyze_ladder(column);
    CHECK(p.landings == std::vector<Landing>{{0, 2}, {3, 4}});
    CHECK(p.l == 1);
    CHECK(p.d == 4);
    CHECK(p.steps == std::vector<LadderStep>{{2, 1}});
    CHECK_FALSE(p.landings[0].is_true());
    CHECK(p.landings[1].is_true());
}

TEST_CASE("column 8 of <10,11,19>")
{
    const std::vector<Value> column{38, 38, 38, 48, 58, 68, 78, 88, 88};
    const auto p = tcone::analyze_ladder(column);
    CHECK(p.l == 1);
    CHECK(p.d == 8);
    CHECK(p.steps == std::vector<LadderStep>{{2, 5}});
}

TEST_CASE("strictly increasing ladder has no landings")
{
    const std::vector<Value> column{0, 10, 20, 30};
    const auto p = tcone::analyze_ladder(column);
    CHECK(p.landings.empty());
    CHECK(p.l == -1);
    CHECK_FALSE(p.d.has_value());
    CHECK(p.steps.empty());
}

TEST_CASE("single landing at the start")
{
    const std::vector<Value> column{6, 6, 11, 16, 21};
    const auto p = tcone::analyze_ladder(column);
    CHECK(p.landings == std::vector<Landing>{{0, 1}});
    CHECK(p.l == 0);
    CHECK(p.d == 1);
    CHECK(p.steps.empty());
}

TEST_CASE("edge shapes")
{
    CHECK(tcone::analyze_ladder(std::vector<Value>{}).l == -1);
    CHECK(tcone::analyze_ladder(std::vector<Value>{7}).l == -1);
    // A single value between two strict increases is not a landing.
    const auto p = tcone::analyze_ladder(std::vector<Value>{1, 1, 2, 3, 3});
    CHECK(p.landings == std::vector<Landing>{{0, 1}, {3, 4}});
    CHECK(p.steps == std::vector<LadderStep>{{1, 2}});
    // Three landings.
    const auto q = tcone::analyze_ladder(std::vector<Value>{0, 0, 5, 5, 10, 15, 15, 15});
    CHECK(q.steps == std::vector<LadderStep>{{1, 1}, {3, 2}});
    CHECK(q.d == 7);
}

TEST_CASE("decreasing input is rejected")
{
    try {
        tcone::analyze_ladder(std::vector<Value>{3, 3, 2});
        FAIL("expected NotALadder");
    } catch (const tcone::Error& e) {
        CHECK(e.kind() == tcone::ErrorKind::NotALadder);
    }
}

TEST_CASE("random ladders: profile invariants and reconstruction")
{
    tcone::test::Rng rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t length = 1 + rng.below(12);
        const Value step = 1 + static_cast<Value>(rng.below(9));
        std::vector<Value> ladder{static_cast<Value>(rng.below(50))};
        for (std::size_t k = 1; k < length; ++k) ladder.push_back(ladder.back() + (rng.below(2) ? step : 0));
        CAPTURE(tcone::format_generators(ladder));

        const auto p = tcone::analyze_ladder(ladder);
        CHECK(p.l == static_cast<int>(p.landings.size()) - 1);
        int strict = 0;
        for (std::size_t k = 1; k < length; ++k) strict += ladder[k] > ladder[k - 1] ? 1 : 0;

        int climbs_in_steps = 0;
        for (std::size_t j = 0; j < p.landings.size(); ++j) {
            const auto& landing = p.landings[j];
            CHECK(landing.end >= landing.start + 1);
            for (int k = landing.start; k < landing.end; ++k) CHECK(ladder[k] == ladder[k + 1]);
            if (landing.start > 0) CHECK(ladder[landing.start - 1] < ladder[landing.start]);
            if (landing.end + 1 < static_cast<int>(length)) CHECK(ladder[landing.end] < ladder[landing.end + 1]);
            if (j > 0) {
                const auto& s = p.steps[j - 1];
                CHECK(s.c >= 1);
                CHECK(s.b == p.landings[j - 1].end);
                CHECK(s.b + s.c == landing.start);
                // Strictly increasing between consecutive landings.
                for (int k = p.landings[j - 1].end; k < landing.start; ++k) CHECK(ladder[k] < ladder[k + 1]);
                climbs_in_steps += s.c;
            }
        }
        // Climbs before the first landing plus the boxes plus the final climb.
        const int before = p.landings.empty() ? static_cast<int>(length) - 1 : p.landings.front().start;
        const int after = p.landings.empty() ? 0 : static_cast<int>(length) - 1 - *p.d;
        CHECK(before + climbs_in_steps + after == strict);

        CHECK(tcone::rebuild_ladder(ladder.front(), p, step, length) == ladder);
    }
}
