#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "mgh/error.hpp"

namespace mgh {

enum class FieldMode { Rational, Prime };

// The coefficient field used by a computation: the rationals (authoritative)
// or Z/p for a fixed prime p (a fast consistency check, never ground truth).
struct Field {
    FieldMode mode = FieldMode::Rational;
    std::uint64_t prime = 0;

    static Field rationals() { return {}; }
    static Field modp(std::uint64_t p);  // validates primality, requires p < 2^31

    bool operator==(const Field&) const = default;
};

bool is_prime_modulus(std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

// One field element, tagged with its mode.
// Rational mode keeps mpq canonical form (den > 0, gcd(|num|, den) = 1);
// prime mode keeps 0 <= residue < p.
class Scalar {
public:
    Scalar() : mode_(FieldMode::Rational) {}
    explicit Scalar(mpq_class v) : mode_(FieldMode::Rational), rat_(std::move(v)) {
        rat_.canonicalize();
    }

    static Scalar residue(std::uint64_t value, std::uint64_t p);
    // Image of a rational under reduction mod p; denominator divisible by p
    // is a malformed-input error.
    static Scalar reduce(const mpq_class& q, std::uint64_t p);

    FieldMode mode() const { return mode_; }
    const mpq_class& rat() const { return rat_; }
    std::uint64_t res() const { return res_; }
    std::uint64_t modulus() const { return prime_; }

    bool is_zero() const {
        return mode_ == FieldMode::Rational ? rat_ == 0 : res_ == 0;
    }

    bool operator==(const Scalar& o) const {
        if (mode_ != o.mode_) return false;
        if (mode_ == FieldMode::Rational) return rat_ == o.rat_;
        return res_ == o.res_ && prime_ == o.prime_;
    }

private:
    FieldMode mode_;
    mpq_class rat_;
    std::uint64_t res_ = 0;
    std::uint64_t prime_ = 0;
};

// Dense matrix over one field; rows*cols Scalars in row-major order.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, Scalar v) {
        entries_[r * cols_ + c] = std::move(v);
    }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

// Exact rank.  Rational mode clears denominators row by row and runs
// fraction-free Bareiss elimination over the integers; prime mode runs
// ordinary Gaussian elimination in Z/p.  Mixed-mode entries are a
// malformed-input error.
std::size_t rank(const Matrix& m);

}  // namespace mgh
