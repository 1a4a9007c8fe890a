#include "mgh/acm.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mgh/staircase.hpp"

namespace mgh {

namespace {

void require_p1p1(const PointSet& x, const char* what) {
    if (x.arity() != 2 || x.dims()[0] != 1 || x.dims()[1] != 1) {
        throw DomainError(std::string(what) + " is defined here for P^1 x P^1 only");
    }
}

// First failure, in lex order, of the staircase conditions: values 0/1 with
// downward-closed support and both axes reaching 0 at the window edge.
std::optional<DeltaViolation> first_delta_violation(const IntTable& delta) {
    std::vector<int> idx(delta.axes(), 0), nb(delta.axes());
    do {
        const int v = delta.at(idx);
        if (v != 0 && v != 1) return DeltaViolation{idx, v};
        if (v == 1) {
            for (int a = 0; a < delta.axes(); ++a) {
                if (idx[a] == 0) continue;
                nb = idx;
                --nb[a];
                if (delta.at(nb) == 0) return DeltaViolation{idx, v};
            }
        }
    } while (next_index(idx, delta.window()));
    for (int a = 0; a < delta.axes(); ++a) {
        std::vector<int> edge(delta.axes(), 0);
        edge[a] = delta.window()[a];
        if (delta.at(edge) != 0) return DeltaViolation{edge, delta.at(edge)};
    }
    return std::nullopt;
}

}  // namespace

Border border(const PointSet& x, const Field& field) {
    require_p1p1(x, "border");
    const auto [alpha, beta] = alpha_beta(x);
    const int t = alpha.length(), r = beta.length();

    auto counting_sum = [](const Partition& p, int len) {
        std::vector<int> out(len);
        int acc = 0;
        for (int j = 0; j < len; ++j) {
            int count = 0;
            for (int part : p.parts()) {
                if (part >= j + 1) ++count;
            }
            acc += count;
            out[j] = acc;
        }
        return out;
    };

    Border b{counting_sum(alpha, r), counting_sum(beta, t)};

    const HilbertTable tbl = hilbert_table(x, field);
    for (int j = 0; j < r; ++j) {
        if (b.b_c[j] != extend(tbl, {t - 1, j})) {
            throw InternalError("border column formula disagrees with the rank oracle");
        }
    }
    for (int i = 0; i < t; ++i) {
        if (b.b_r[i] != extend(tbl, {i, r - 1})) {
            throw InternalError("border row formula disagrees with the rank oracle");
        }
    }
    return b;
}

BettiData betti(const Partition& alpha) {
    if (alpha.empty()) throw DomainError("betti needs a non-empty partition");
    const auto& a = alpha.parts();
    const int t = alpha.length();
    std::set<std::pair<int, int>> c, v;
    c.insert({t, 0});
    c.insert({0, a[0]});
    v.insert({t, a[t - 1]});
    for (int i = 1; i < t; ++i) {
        if (a[i] < a[i - 1]) {
            c.insert({i, a[i]});
            v.insert({i, a[i - 1]});
        }
    }
    BettiData out{{c.begin(), c.end()}, {v.begin(), v.end()}};
    for (const auto& shift : out.c_set) {
        if (v.count(shift)) throw InternalError("resolution shift sets intersect");
    }
    if (out.v_set.size() + 1 != out.c_set.size()) {
        throw InternalError("resolution shift sets have inconsistent sizes");
    }
    return out;
}

AcmVerdict is_acm(const PointSet& x, const Field& field) {
    require_p1p1(x, "the ACM test");
    AcmVerdict verdict;
    std::tie(verdict.alpha, verdict.beta) = alpha_beta(x);
    verdict.alpha_conjugate = verdict.alpha.conjugate();
    const bool conjugate_ok = verdict.alpha_conjugate == verdict.beta;

    const HilbertTable tbl = hilbert_table(x, field);
    verdict.witness = first_delta_violation(first_difference(tbl.base()));
    verdict.delta_ok = !verdict.witness.has_value();

    if (conjugate_ok != verdict.delta_ok) {
        throw InternalError("conjugate test and first-difference test disagree");
    }
    verdict.is_acm = conjugate_ok;
    return verdict;
}

long long hilbert_from_resolution(const BettiData& b, const std::vector<int>& degree) {
    if (degree.size() != 2) throw MalformedInputError("bidegree expected");
    auto dim_free = [](long long i, long long j) {
        return (i < 0 || j < 0) ? 0 : (i + 1) * (j + 1);
    };
    long long h = dim_free(degree[0], degree[1]);
    for (const auto& [c1, c2] : b.c_set) h -= dim_free(degree[0] - c1, degree[1] - c2);
    for (const auto& [v1, v2] : b.v_set) h += dim_free(degree[0] - v1, degree[1] - v2);
    return h;
}

long long hilbert_from_alpha(const Partition& alpha, const std::vector<int>& degree) {
    if (degree.size() != 2) throw MalformedInputError("bidegree expected");
    const int i = degree[0], j = degree[1];
    long long h = 0;
    for (int m = 1; m <= alpha.length(); ++m) {
        if (m - 1 <= i) h += std::min(j + 1, alpha.parts()[m - 1]);
    }
    return h;
}

std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>
corners_vertices(const IntTable& delta) {
    if (delta.axes() != 2) throw DomainError("corner extraction needs a two-axis table");
    if (!validate_indicator(delta) || !is_artinian(delta)) {
        throw DomainError("not a terminating 0/1 staircase table");
    }
    const auto& w = delta.window();
    int t = 0, r = 0;
    for (int i = 0; i <= w[0]; ++i) t += delta.at({i, 0});
    for (int j = 0; j <= w[1]; ++j) r += delta.at({0, j});

    std::set<std::pair<int, int>> corners{{t, 0}, {0, r}}, vertices;
    for (int i = 1; i <= w[0]; ++i) {
        for (int j = 1; j <= w[1]; ++j) {
            const int here = delta.at({i, j});
            const int up = delta.at({i - 1, j});
            const int left = delta.at({i, j - 1});
            const int diag = delta.at({i - 1, j - 1});
            if (here == 0 && up == 1 && left == 1) corners.insert({i, j});
            if (here == 0 && up == 0 && left == 0 && diag == 1) vertices.insert({i, j});
        }
    }
    return {{corners.begin(), corners.end()}, {vertices.begin(), vertices.end()}};
}

PointSet peel(const PointSet& x, const Field& field) {
    const AcmVerdict verdict = is_acm(x, field);
    if (!verdict.is_acm) throw DomainError("peel requires an ACM set");
    if (verdict.alpha.length() < 2) throw DomainError("cannot peel a single fiber");

    std::map<std::vector<mpq_class>, std::vector<Point>> fibers;
    for (const Point& p : x.points()) fibers[p.factors()[0]].push_back(p);
    const int biggest = verdict.alpha.parts()[0];
    // map order = normalized coordinate order, so the first hit breaks ties
    auto chosen = fibers.begin();
    while (static_cast<int>(chosen->second.size()) != biggest) ++chosen;

    std::vector<Point> rest;
    for (auto it = fibers.begin(); it != fibers.end(); ++it) {
        if (it == chosen) continue;
        rest.insert(rest.end(), it->second.begin(), it->second.end());
    }
    return PointSet(x.dims(), std::move(rest));
}

std::pair<Partition, Partition> row_column_sums(const IntTable& delta, int t, int r) {
    if (delta.axes() != 2) throw MalformedInputError("two-axis table expected");
    if (t < 1 || r < 1 || t - 1 > delta.window()[0] || r - 1 > delta.window()[1]) {
        throw MalformedInputError("projection counts exceed the table window");
    }
    std::vector<int> alpha_star(r), beta_star(t);
    for (int j = 0; j < r; ++j) {
        for (int h = 0; h < t; ++h) alpha_star[j] += delta.at({h, j});
    }
    for (int i = 0; i < t; ++i) {
        for (int h = 0; h < r; ++h) beta_star[i] += delta.at({i, h});
    }
    return {Partition::from_weakly_decreasing(std::move(alpha_star)),
            Partition::from_weakly_decreasing(std::move(beta_star))};
}

}  // namespace mgh
