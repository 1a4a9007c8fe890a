#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "mgh/geometry.hpp"
#include "mgh/hilbert.hpp"

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

}  // namespace

TEST_CASE("component dimensions") {
    CHECK(dim_component({1, 1}, {2, 3}) == 12);
    CHECK(dim_component({1, 1}, {0, 0}) == 1);
    CHECK(dim_component({3, 2, 5}, {0, 0, 0}) == 1);
    CHECK(dim_component({2}, {3}) == 10);
}

TEST_CASE("monomial columns are ordered by decreasing exponent tuples") {
    const auto exps = monomial_exponents({1, 1}, {1, 1});
    REQUIRE(exps.size() == 4);
    CHECK(exps[0] == std::vector<int>{1, 0, 1, 0});
    CHECK(exps[1] == std::vector<int>{1, 0, 0, 1});
    CHECK(exps[2] == std::vector<int>{0, 1, 1, 0});
    CHECK(exps[3] == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("evaluation matrices") {
    const PointSet single({1, 1}, {Point({{1, 0}, {1, 0}})});
    const Matrix m = evaluation_matrix(single, {1, 1});
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 4);
    CHECK(m.at(0, 0).rat() == 1);
    CHECK(m.at(0, 1).rat() == 0);
    CHECK(m.at(0, 2).rat() == 0);
    CHECK(m.at(0, 3).rat() == 0);

    const PointSet grid = gen_grid(2, 2);
    const Matrix zero_degree = evaluation_matrix(grid, {0, 0});
    REQUIRE(zero_degree.cols() == 1);
    for (std::size_t r = 0; r < zero_degree.rows(); ++r) {
        CHECK(zero_degree.at(r, 0).rat() == 1);
    }
    CHECK(rank(evaluation_matrix(grid, {1, 1})) == 4);
}

TEST_CASE("evaluation is representative independent") {
    // scaling a representative scales a matrix row, so ranks agree
    const PointSet a({1, 1}, {Point({{2, 4}, {0, 3}}), Point({{1, 1}, {1, 2}})});
    const PointSet b({1, 1}, {Point({{1, 2}, {0, 1}}), Point({{3, 3}, {2, 4}})});
    for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
            CHECK(hilbert_value(a, {i, j}) == hilbert_value(b, {i, j}));
        }
    }
}

TEST_CASE("hilbert values") {
    const PointSet single({1, 1}, {Point({{1, 0}, {1, 0}})});
    CHECK(hilbert_value(single, {2, 3}) == 1);
    CHECK(hilbert_value(gen_grid(2, 2), {1, 1}) == 4);
    CHECK(hilbert_value(gen_depth_example({1, 1}, 1), {1, 1}) == 2);
}

TEST_CASE("hilbert tables and extension") {
    const HilbertTable depth = hilbert_table(gen_depth_example({1, 1}, 1));
    CHECK(depth.base() == table_from({2, 2}, {1, 2, 2, 2, 2, 2, 2, 2, 2}));
    CHECK(extend(depth, {7, 9}) == 2);
    CHECK(extend(depth, {0, 0}) == 1);

    const HilbertTable grid = hilbert_table(gen_grid(2, 2));
    CHECK(grid.base() == table_from({2, 2}, {1, 2, 2, 2, 4, 4, 2, 4, 4}));
    CHECK(extend(grid, {0, 5}) == 2);

    const HilbertTable single = hilbert_table(PointSet({1, 1}, {Point({{1, 0}, {1, 0}})}));
    CHECK(single.t() == std::vector<int>{1, 1});
    CHECK(single.base() == table_from({1, 1}, {1, 1, 1, 1}));
}

TEST_CASE("tables in prime mode match rational mode") {
    const Field modp = Field::modp(1000003);
    for (const PointSet& x : {gen_grid(2, 3), gen_depth_example({1, 1}, 1),
                              gen_random({1, 1}, 7, 21)}) {
        CHECK(hilbert_table(x, modp).base() == hilbert_table(x).base());
    }
}

TEST_CASE("axis sequences match axis projections") {
    CHECK(axis_sequence(gen_grid(2, 3), 1) == std::vector<int>{1, 2, 3, 3});
    CHECK(axis_sequence(PointSet({1, 1}, {Point({{1, 0}, {1, 0}})}), 0) ==
          std::vector<int>{1, 1});
    CHECK(axis_sequence(gen_depth_example({1, 1}, 1), 0) == std::vector<int>{1, 2, 2});

    const PointSet x = gen_random({1, 2}, 6, 13);
    for (int a = 0; a < 2; ++a) {
        const HilbertTable proj = hilbert_table(projection(x, a));
        std::vector<int> flat;
        for (int j = 0; j <= proj.t()[0]; ++j) flat.push_back(proj.base().at({j}));
        CHECK(axis_sequence(x, a) == flat);
    }
}

TEST_CASE("table rendering as TSV") {
    std::ostringstream out;
    write_table_tsv(out, hilbert_table(PointSet({1, 1}, {Point({{1, 0}, {1, 0}})})).base());
    CHECK(out.str() == "H\t0\t1\n0\t1\t1\n1\t1\t1\n");

    std::ostringstream k1;
    write_table_tsv(k1, table_from({2}, {1, 2, 2}));
    CHECK(k1.str() == "H\t0\t1\t2\n0\t1\t2\t2\n");

    std::ostringstream k3;
    write_table_tsv(k3, table_from({0, 0, 1}, {1, 1}));
    CHECK(k3.str() ==
          "slice i3=0\nH\t0\n0\t1\n"
          "slice i3=1\nH\t0\n0\t1\n");
}

TEST_CASE("window rendering clamps beyond stabilization") {
    const HilbertTable tbl = hilbert_table(gen_grid(2, 2));
    const IntTable wide = render_window(tbl, {3, 3});
    CHECK(wide.at({3, 3}) == 4);
    CHECK(wide.at({0, 3}) == 2);
    const IntTable narrow = render_window(tbl, {1, 0});
    CHECK(narrow == table_from({1, 0}, {1, 2}));
}
