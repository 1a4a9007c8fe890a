#pragma once

#include <vector>

#include <gmpxx.h>

#include "mgh/combinat.hpp"
#include "mgh/geometry.hpp"
#include "mgh/staircase.hpp"

namespace mgh {

// Points of the lifted ideal of an artinian staircase: one point per
// complement cell.  The staircase's variables are grouped into factor
// blocks of sizes dims = (n_1,...,n_k) (sum n_i = st.vars()); the cell
// block (a_1,...,a_{n_i}) becomes the factor [1:a_1:...:a_{n_i}].  Throws
// DomainError when the staircase is not artinian.
PointSet lift_staircase(const Staircase& st, const std::vector<int>& dims);

// Value of the lifted monomial of exponent tuple alpha at the lattice point
// beta: product over slots of the falling factorial
// beta_j (beta_j - 1) ... (beta_j - alpha_j + 1).
// Zero exactly when beta fails to dominate alpha componentwise.
mpz_class eval_lifted_monomial(const std::vector<int>& alpha, const std::vector<int>& beta);

// Expected Hilbert values of the lifted point set, one variable per factor:
// cumulative sums of the staircase's indicator table.
IntTable lifted_hilbert_expected(const Staircase& st, const std::vector<int>& window);

// Number of complement cells per multidegree for a factor grouping dims
// (block degree of a cell = sum of each block); the n_i = 1 case is the
// indicator table.
IntTable lifted_degree_counts(const Staircase& st, const std::vector<int>& dims,
                              const std::vector<int>& window);

// General-shape expected table: cumulative sums of the degree counts.
IntTable lifted_hilbert_expected(const Staircase& st, const std::vector<int>& dims,
                                 const std::vector<int>& window);

}  // namespace mgh
