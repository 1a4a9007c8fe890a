#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mgh/combinat.hpp"
#include "mgh/geometry.hpp"
#include "mgh/hilbert.hpp"

namespace mgh {

// Last non-stabilized column and row of the Hilbert table of a set in
// P^1 x P^1: b_c = (H(t-1,0),...,H(t-1,r-1)), b_r = (H(0,r-1),...,H(t-1,r-1)).
struct Border {
    std::vector<int> b_c;
    std::vector<int> b_r;
};

// b_c/b_r computed by fiber counting from alpha/beta and verified against
// the rank oracle entry by entry; a mismatch is an InternalError.
// Restricted to P^1 x P^1 (dims (1,1)).
Border border(const PointSet& x, const Field& field = Field::rationals());

// Bidegree shifts of the length-2 resolution of an ACM set: c_set for the
// generators, v_set for the first syzygies, both lex sorted.
struct BettiData {
    std::vector<std::pair<int, int>> c_set;
    std::vector<std::pair<int, int>> v_set;
};

// Shift sets from alpha alone:
//   C = {(t,0),(0,alpha_1)} u {(i-1,alpha_i)   : alpha_i < alpha_{i-1}}
//   V = {(t,alpha_t)}       u {(i-1,alpha_{i-1}): alpha_i < alpha_{i-1}}
// with the descent index i running over 2..t.
BettiData betti(const Partition& alpha);

struct DeltaViolation {
    std::vector<int> where;
    int value;
};

// Outcome of the two implementable ACM criteria (conjugate test and
// first-difference staircase test); they are asserted to agree.
struct AcmVerdict {
    bool is_acm = false;
    Partition alpha, beta, alpha_conjugate;
    bool delta_ok = false;
    std::optional<DeltaViolation> witness;  // first staircase violation, lex order
};

// Evaluates both criteria on a set in P^1 x P^1 and returns the verdict;
// disagreement between them throws InternalError.
AcmVerdict is_acm(const PointSet& x, const Field& field = Field::rationals());

// Alternating sum of free-module component dimensions from the resolution
// shifts; equals the Hilbert function for ACM sets.
long long hilbert_from_resolution(const BettiData& b, const std::vector<int>& degree);

// Closed form from alpha: sum over rows m-1 <= i of min(j+1, alpha_m).
long long hilbert_from_alpha(const Partition& alpha, const std::vector<int>& degree);

// Corner and vertex positions of a 0/1 staircase table; equal the betti
// shift sets of the same set.  Non-staircase input is a DomainError.
std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>
corners_vertices(const IntTable& delta);

// Removes one largest first-projection fiber (ties: smallest base point).
// Input must be ACM with at least two fibers; the result is ACM with the
// tail partition.
PointSet peel(const PointSet& x, const Field& field = Field::rationals());

// Column sums (over rows 0..t-1) and row sums (over columns 0..r-1) of a
// first-difference table: the conjugates of alpha and beta.
std::pair<Partition, Partition> row_column_sums(const IntTable& delta, int t, int r);

}  // namespace mgh
