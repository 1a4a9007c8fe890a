#pragma once

#include <iosfwd>
#include <vector>

#include "mgh/combinat.hpp"
#include "mgh/exact.hpp"
#include "mgh/geometry.hpp"

namespace mgh {

// Number of monomials of the given multidegree: product over factors of
// binomial(n_h + d_h, d_h).
long long dim_component(const std::vector<int>& dims, const std::vector<int>& degree);

// All exponent tuples of the degree-d monomials, one flat tuple of length
// sum(n_h + 1) per monomial, listed in decreasing lexicographic order.
std::vector<std::vector<int>> monomial_exponents(const std::vector<int>& dims,
                                                 const std::vector<int>& degree);

// s x dim_component matrix of monomial values at the normalized points.
Matrix evaluation_matrix(const PointSet& x, const std::vector<int>& degree,
                         const Field& field = Field::rationals());

// Hilbert function value at one multidegree, as the rank of the evaluation
// matrix.
int hilbert_value(const PointSet& x, const std::vector<int>& degree,
                  const Field& field = Field::rationals());

// Hilbert values on the window (t_1,...,t_k), one index beyond the
// guaranteed per-axis stabilization bound, so stabilization is witnessed by
// construction rather than assumed.  Construction re-checks every invariant
// (monotonicity, equal edge slices, terminal value s) and throws
// InternalError on any violation.
class HilbertTable {
public:
    HilbertTable(IntTable base, std::vector<int> t, int s);

    const IntTable& base() const { return base_; }
    const std::vector<int>& t() const { return t_; }
    int s() const { return s_; }

private:
    IntTable base_;
    std::vector<int> t_;
    int s_;
};

HilbertTable hilbert_table(const PointSet& x, const Field& field = Field::rationals());

// Value at an arbitrary multidegree, clamping each coordinate to t_h - 1.
int extend(const HilbertTable& tbl, const std::vector<int>& degree);

// (H(0*e_axis), ..., H(t_axis*e_axis)); equals the Hilbert function of the
// axis projection.  axis is 0-based.
std::vector<int> axis_sequence(const PointSet& x, int axis,
                               const Field& field = Field::rationals());

// The table restricted/extended to the given window via clamped reads.
IntTable render_window(const HilbertTable& tbl, const std::vector<int>& window);

// TSV: k=1 one labelled row; k=2 header `H <cols>` then one row per first
// index; k>=3 one k=2 block per trailing slice, preceded by a `slice` line.
void write_table_tsv(std::ostream& out, const IntTable& table);

}  // namespace mgh
