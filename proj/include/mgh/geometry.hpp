#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mgh/combinat.hpp"
#include "mgh/error.hpp"

namespace mgh {

// A point of P^{n_1} x ... x P^{n_k}: one homogeneous coordinate vector per
// factor, each nonzero.  Points are not normalized automatically; see
// normalized().
class Point {
public:
    explicit Point(std::vector<std::vector<mpq_class>> factors);

    int arity() const { return static_cast<int>(factors_.size()); }
    const std::vector<std::vector<mpq_class>>& factors() const { return factors_; }

    // Each factor scaled so its first nonzero coordinate is 1; idempotent.
    Point normalized() const;

    bool operator==(const Point& o) const { return factors_ == o.factors_; }

private:
    std::vector<std::vector<mpq_class>> factors_;
};

// Three-way lexicographic comparison of coordinate lists.
int compare(const Point& a, const Point& b);

// Finite reduced set of points, stored normalized, sorted and pairwise
// distinct, so equality is structural and output is reproducible.
class PointSet {
public:
    PointSet(std::vector<int> dims, std::vector<Point> points);

    int arity() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<Point>& points() const { return points_; }

    bool operator==(const PointSet&) const = default;

private:
    std::vector<int> dims_;
    std::vector<Point> points_;
};

// Distinct axis-th factors as a point set in the single factor P^{n_axis}.
// axis is 0-based.
PointSet projection(const PointSet& x, int axis);

// Fiber-size partitions (alpha, beta) of the two projections; k = 2 only.
std::pair<Partition, Partition> alpha_beta(const PointSet& x);

// t x r grid {[1:i-1] x [1:j-1]} in P^1 x P^1; the complete intersection
// configuration with alpha = (r,...,r), beta = (t,...,t).
PointSet gen_grid(int t, int r);

// The two-point configuration {P_1 x...x P_k, P_1 x...x P_{l-1} x Q_l x...x Q_k}
// with P_i = [1:0:...:0], Q_i = [0:1:0:...:0]; depth l, so ACM iff l = k.
// l is 1-based, 1 <= l <= k.
PointSet gen_depth_example(const std::vector<int>& dims, int l);

// s distinct points with coordinates drawn uniformly from {0,...,2s+2},
// deterministic in the seed; collisions are resampled.
PointSet gen_random(const std::vector<int>& dims, int s, std::uint64_t seed);

// Text format:
//   pointset k=<k> n=<n_1>,...,<n_k>
//   <c>,<c>,... | <c>,... | ...
// one point per line, '#' comments, blank lines ignored; coordinates are
// integers or rationals p/q.  Writing emits normalized, sorted points.
PointSet parse_pointset(std::istream& in);
PointSet parse_pointset_file(const std::string& path);
void write_pointset(std::ostream& out, const PointSet& x);

}  // namespace mgh
