#include "mgh/lifting.hpp"

#include <numeric>

namespace mgh {

namespace {

void check_grouping(const Staircase& st, const std::vector<int>& dims) {
    if (dims.empty()) throw MalformedInputError("need at least one factor");
    int total = 0;
    for (int n : dims) {
        if (n < 1) throw MalformedInputError("factor dimension must be >= 1");
        total += n;
    }
    if (total != st.vars()) {
        throw MalformedInputError("factor dimensions do not partition the variables");
    }
}

}  // namespace

PointSet lift_staircase(const Staircase& st, const std::vector<int>& dims) {
    check_grouping(st, dims);
    const std::vector<std::vector<int>> cells = finite_complement(st);
    std::vector<Point> pts;
    pts.reserve(cells.size());
    for (const auto& cell : cells) {
        std::vector<std::vector<mpq_class>> factors;
        int off = 0;
        for (int n : dims) {
            std::vector<mpq_class> f;
            f.reserve(n + 1);
            f.emplace_back(1);
            for (int j = 0; j < n; ++j) f.emplace_back(cell[off + j]);
            factors.push_back(std::move(f));
            off += n;
        }
        pts.emplace_back(std::move(factors));
    }
    return PointSet(dims, std::move(pts));
}

mpz_class eval_lifted_monomial(const std::vector<int>& alpha, const std::vector<int>& beta) {
    if (alpha.size() != beta.size()) throw MalformedInputError("exponent shape mismatch");
    mpz_class out = 1;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] < 0 || beta[j] < 0) throw MalformedInputError("negative exponent");
        for (int l = 1; l <= alpha[j]; ++l) out *= beta[j] - (l - 1);
    }
    return out;
}

IntTable lifted_hilbert_expected(const Staircase& st, const std::vector<int>& window) {
    if (!st.artinian()) throw DomainError("staircase is not artinian");
    return cumulative_sum(indicator_of(st, window));
}

IntTable lifted_degree_counts(const Staircase& st, const std::vector<int>& dims,
                              const std::vector<int>& window) {
    check_grouping(st, dims);
    if (dims.size() != window.size()) throw MalformedInputError("window arity mismatch");
    IntTable out(window);
    for (const auto& cell : finite_complement(st)) {
        std::vector<int> degree(dims.size());
        int off = 0;
        bool inside = true;
        for (std::size_t h = 0; h < dims.size(); ++h) {
            degree[h] = std::accumulate(cell.begin() + off, cell.begin() + off + dims[h], 0);
            off += dims[h];
            if (degree[h] > window[h]) inside = false;
        }
        if (inside) out.set(degree, out.at(degree) + 1);
    }
    return out;
}

IntTable lifted_hilbert_expected(const Staircase& st, const std::vector<int>& dims,
                                 const std::vector<int>& window) {
    return cumulative_sum(lifted_degree_counts(st, dims, window));
}

}  // namespace mgh
