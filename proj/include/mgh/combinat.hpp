#pragma once

#include <string>
#include <vector>

#include "mgh/error.hpp"

namespace mgh {

// Weakly decreasing tuple of positive integers.  The default constructor
// gives the empty partition (the conjugation identity edge case).
class Partition {
public:
    Partition() = default;
    // Sorts descending and drops zeros; negative parts are malformed.
    explicit Partition(std::vector<int> parts);
    // Accepts only an already weakly decreasing tuple (a zero tail is
    // dropped); any increase throws.  Used where sortedness is part of the
    // claim being checked, so silent re-sorting would hide bugs.
    static Partition from_weakly_decreasing(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long weight() const;

    // lambda*_i = #{parts >= i}, i = 1..lambda_1; an involution.
    Partition conjugate() const;

    std::string str() const;  // "(4,3,1)", "()" when empty

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// conjugate(p) extended with a zero tail to exactly `len` entries; the form
// the border/row-sum identities take on sets whose border is longer than
// the conjugate.
std::vector<int> conjugate_padded(const Partition& p, int len);

// (p_1, p_2 - p_1, ..., p_k - p_{k-1}); rejects the empty tuple.
std::vector<int> delta_tuple(const std::vector<int>& p);

// Componentwise a <= b.
bool tuple_leq(const std::vector<int>& a, const std::vector<int>& b);

// Odometer step through [0..window_1] x ... x [0..window_k] in row-major
// order (last axis fastest).  Returns false after the last index.
bool next_index(std::vector<int>& idx, const std::vector<int>& window);

// Dense table of integers on the window [0..w_1] x ... x [0..w_k].
class IntTable {
public:
    explicit IntTable(std::vector<int> window);

    int axes() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }
    std::size_t cells() const { return values_.size(); }

    int at(const std::vector<int>& idx) const { return values_[flat(idx)]; }
    void set(const std::vector<int>& idx, int v) { values_[flat(idx)] = v; }

    bool operator==(const IntTable&) const = default;

private:
    std::size_t flat(const std::vector<int>& idx) const;

    std::vector<int> window_;
    std::vector<int> values_;
};

// Inclusion-exclusion difference over the unit box below each index,
// with entries below the origin read as zero.
IntTable first_difference(const IntTable& h);

// Partial sums over all indices <= each index; inverse of first_difference.
IntTable cumulative_sum(const IntTable& d);

}  // namespace mgh
