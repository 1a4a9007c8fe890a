#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "mgh/rng.hpp"
#include "mgh/staircase.hpp"

using namespace mgh;

namespace {

IntTable table_from(const std::vector<int>& window, const std::vector<int>& values) {
    IntTable t(window);
    std::vector<int> idx(window.size(), 0);
    std::size_t i = 0;
    do {
        t.set(idx, values[i++]);
    } while (next_index(idx, window));
    REQUIRE(i == values.size());
    return t;
}

std::vector<int> pure_power_window(const Staircase& st) {
    std::vector<int> w(st.vars(), 0);
    for (const auto& g : st.generators()) {
        for (int a = 0; a < st.vars(); ++a) w[a] = std::max(w[a], g[a]);
    }
    return w;
}

}  // namespace

TEST_CASE("construction minimalizes the generators") {
    const Staircase st(2, {{2, 0}, {2, 1}, {1, 1}, {0, 2}, {2, 0}});
    CHECK(st.generators() == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
    CHECK_THROWS_AS(Staircase(2, {{0, 0}}), MalformedInputError);
    CHECK_THROWS_AS(Staircase(2, {{1, -1}}), MalformedInputError);
    CHECK_THROWS_AS(Staircase(2, {{1}}), MalformedInputError);
}

TEST_CASE("indicator validity conditions") {
    CHECK(validate_indicator(table_from({1, 1}, {1, 0, 0, 0})));
    CHECK(validate_indicator(table_from({1, 1}, {1, 1, 1, 1})));  // the zero ideal
    CHECK_FALSE(validate_indicator(table_from({2}, {1, 0, 1})));
    CHECK_FALSE(validate_indicator(table_from({1}, {0, 0})));
    CHECK_FALSE(validate_indicator(table_from({1}, {1, 2})));
}

TEST_CASE("artinian detection on indicators") {
    CHECK(is_artinian(table_from({2, 2}, {1, 1, 0, 1, 0, 0, 0, 0, 0})));
    CHECK_FALSE(is_artinian(table_from({1, 1}, {1, 1, 1, 1})));
    CHECK(is_artinian(table_from({3}, {1, 1, 1, 0})));
    CHECK_THROWS_AS(is_artinian(table_from({2}, {1, 0, 1})), DomainError);
}

TEST_CASE("complements") {
    const Staircase st(2, {{2, 0}, {1, 1}, {0, 2}});
    const ComplementResult res = complement(st, {3, 3});
    CHECK(res.finite);
    CHECK(res.cells == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(finite_complement(st) == res.cells);

    const Staircase line(1, {{3}});
    CHECK(finite_complement(line) == std::vector<std::vector<int>>{{0}, {1}, {2}});

    const Staircase open(2, {{1, 0}});
    CHECK_FALSE(complement(open, {2, 2}).finite);
    CHECK_FALSE(open.artinian());
    CHECK_THROWS_AS(finite_complement(open), DomainError);
}

TEST_CASE("indicators of staircases") {
    const Staircase st(2, {{2, 0}, {1, 1}, {0, 2}});
    CHECK(indicator_of(st, {2, 2}) == table_from({2, 2}, {1, 1, 0, 1, 0, 0, 0, 0, 0}));
    CHECK(indicator_of(Staircase(1, {{1}}), {2}) == table_from({2}, {1, 0, 0}));
    CHECK(indicator_of(Staircase(2, {}), {1, 1}) == table_from({1, 1}, {1, 1, 1, 1}));
    CHECK(validate_indicator(indicator_of(st, {3, 3})));
}

TEST_CASE("random artinian staircases") {
    const Staircase tiny = random_artinian_staircase(2, 1, 4);
    CHECK(tiny.generators() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

    CHECK(random_artinian_staircase(3, 8, 5) == random_artinian_staircase(3, 8, 5));

    Rng seeds(15);
    for (int i = 0; i < 50; ++i) {
        const Staircase st = random_artinian_staircase(seeds.uniform(1, 3), 8, 500 + i);
        CHECK(st.artinian());
        const auto cells = finite_complement(st);
        CHECK(cells.size() >= 1);
        CHECK(cells.size() <= 8);
        // downward closed
        for (const auto& c : cells) {
            for (std::size_t a = 0; a < c.size(); ++a) {
                if (c[a] == 0) continue;
                std::vector<int> below = c;
                --below[a];
                CHECK(std::find(cells.begin(), cells.end(), below) != cells.end());
            }
        }
        // complement size equals the indicator mass
        const std::vector<int> w = pure_power_window(st);
        const IntTable ind = indicator_of(st, w);
        int mass = 0;
        std::vector<int> idx(st.vars(), 0);
        do {
            mass += ind.at(idx);
        } while (next_index(idx, w));
        CHECK(mass == static_cast<int>(cells.size()));
    }
}

TEST_CASE("indicator round trip through the zero-set staircase") {
    Rng seeds(16);
    for (int i = 0; i < 60; ++i) {
        const int k = seeds.uniform(1, 3);
        const Staircase st = random_artinian_staircase(k, 8, 700 + i);
        std::vector<int> w = pure_power_window(st);
        if (i % 2 == 0) {
            for (int& b : w) ++b;
        }
        const IntTable ind = indicator_of(st, w);
        REQUIRE(validate_indicator(ind));
        const Staircase back = zero_set_staircase(ind);
        CHECK(back == st);
        CHECK(indicator_of(back, w) == ind);
    }
    CHECK_THROWS_AS(zero_set_staircase(table_from({2}, {1, 0, 1})), DomainError);
}

TEST_CASE("staircase file round trip") {
    const Staircase st(3, {{2, 0, 0}, {0, 1, 1}, {0, 0, 3}});
    std::ostringstream out;
    write_staircase(out, st);
    std::istringstream in(out.str());
    CHECK(parse_staircase(in) == st);

    std::istringstream commented("staircase k=2\n# gens\n2,0\n1,1  # mixed\n0,2\n");
    CHECK(parse_staircase(commented) == Staircase(2, {{2, 0}, {1, 1}, {0, 2}}));

    auto reject = [](const std::string& text) {
        std::istringstream bad(text);
        CHECK_THROWS_AS(parse_staircase(bad), MalformedInputError);
    };
    reject("");
    reject("pointset k=2 n=1,1\n");
    reject("staircase k=x\n");
    reject("staircase k=2\n1\n");
    reject("staircase k=2\n1,b\n");
}
