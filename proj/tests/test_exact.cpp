#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "mgh/exact.hpp"
#include "mgh/rng.hpp"

using namespace mgh;

namespace {

Matrix from_ints(const std::vector<std::vector<int>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            m.set(r, c, Scalar(mpq_class(rows[r][c])));
        }
    }
    return m;
}

Matrix to_prime(const Matrix& m, std::uint64_t p) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.set(r, c, Scalar::reduce(m.at(r, c).rat(), p));
        }
    }
    return out;
}

// Independent oracle: rank = size of the largest square submatrix with a
// nonzero determinant, by exhaustive minor expansion.  Usable for tiny
// matrices only.
mpq_class det(const std::vector<std::vector<mpq_class>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    mpq_class sum = 0;
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::vector<mpq_class>> minor;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(a[i].begin() + 1, a[i].end());
        }
        const mpq_class term = a[r][0] * (minor.empty() ? mpq_class(1) : det(minor));
        sum += (r % 2 == 0) ? term : -term;
    }
    return sum;
}

std::size_t rank_by_minors(const Matrix& m) {
    const std::size_t maxk = std::min(m.rows(), m.cols());
    for (std::size_t k = maxk; k >= 1; --k) {
        std::vector<bool> pick_rows(m.rows(), false);
        std::fill(pick_rows.end() - k, pick_rows.end(), true);
        do {
            std::vector<bool> pick_cols(m.cols(), false);
            std::fill(pick_cols.end() - k, pick_cols.end(), true);
            do {
                std::vector<std::vector<mpq_class>> sub;
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    if (!pick_rows[r]) continue;
                    std::vector<mpq_class> row;
                    for (std::size_t c = 0; c < m.cols(); ++c) {
                        if (pick_cols[c]) row.push_back(m.at(r, c).rat());
                    }
                    sub.push_back(std::move(row));
                }
                if (det(sub) != 0) return k;
            } while (std::next_permutation(pick_cols.begin(), pick_cols.end()));
        } while (std::next_permutation(pick_rows.begin(), pick_rows.end()));
    }
    return 0;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    Matrix id = from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(rank(id) == 3);

    Matrix zero = from_ints({{0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(rank(zero) == 0);

    Matrix dependent = from_ints({{1, 2}, {2, 4}});
    CHECK(rank(dependent) == 1);
}

TEST_CASE("rank works on rational entries") {
    Matrix m(2, 2);
    m.set(0, 0, Scalar(mpq_class(1, 2)));
    m.set(0, 1, Scalar(mpq_class(1, 3)));
    m.set(1, 0, Scalar(mpq_class(3, 2)));
    m.set(1, 1, Scalar(mpq_class(1)));
    CHECK(rank(m) == 1);  // second row is 3 times the first
}

TEST_CASE("prime mode matches the simple cases") {
    const std::uint64_t p = 1000003;
    CHECK(rank(to_prime(from_ints({{1, 0}, {0, 1}}), p)) == 2);
    CHECK(rank(to_prime(from_ints({{1, 2}, {2, 4}}), p)) == 1);
}

TEST_CASE("mixed-mode entries are rejected") {
    Matrix m(1, 2);
    m.set(0, 0, Scalar(mpq_class(1)));
    m.set(0, 1, Scalar::residue(1, 7));
    CHECK_THROWS_AS(rank(m), MalformedInputError);
}

TEST_CASE("matrix entry count must match dimensions") {
    CHECK_THROWS_AS(Matrix(2, 2, std::vector<Scalar>(3)), MalformedInputError);
}

TEST_CASE("field construction validates the modulus") {
    CHECK_THROWS_AS(Field::modp(1000000), MalformedInputError);
    CHECK_THROWS_AS(Field::modp(1), MalformedInputError);
    CHECK(Field::modp(1000003).prime == 1000003);
}

TEST_CASE("rank agrees with the minor-expansion oracle") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = rng.uniform(1, 4), cols = rng.uniform(1, 4);
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                m.set(r, c, Scalar(mpq_class(rng.uniform(-3, 3))));
            }
        }
        CHECK(rank(m) == rank_by_minors(m));
    }
}

TEST_CASE("rank invariances and prime agreement") {
    Rng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = rng.uniform(1, 6), cols = rng.uniform(1, 6);
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                m.set(r, c, Scalar(mpq_class(rng.uniform(-20, 20))));
            }
        }
        const std::size_t rk = rank(m);
        CHECK(rk <= std::min(rows, cols));

        // permuting rows and columns and scaling one row by a nonzero constant
        auto shuffle = [&](std::size_t n) {
            std::vector<std::size_t> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = i;
            for (std::size_t i = n; i > 1; --i) {
                std::swap(perm[i - 1], perm[rng.uniform(0, static_cast<int>(i) - 1)]);
            }
            return perm;
        };
        const std::vector<std::size_t> row_perm = shuffle(rows), col_perm = shuffle(cols);
        const std::size_t scaled_row = rng.uniform(0, static_cast<int>(rows) - 1);
        const mpq_class factor(rng.uniform(1, 5), rng.uniform(1, 5));
        Matrix shuffled(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                mpq_class v = m.at(row_perm[r], col_perm[c]).rat();
                if (row_perm[r] == scaled_row) v *= factor;
                shuffled.set(r, c, Scalar(std::move(v)));
            }
        }
        CHECK(rank(shuffled) == rk);

        CHECK(rank(to_prime(m, 1000003)) == rk);
    }
}
