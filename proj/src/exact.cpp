#include "mgh/exact.hpp"

#include <utility>

namespace mgh {

bool is_prime_modulus(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

Field Field::modp(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) {
        throw MalformedInputError("prime modulus too large (must be < 2^31): " + std::to_string(p));
    }
    if (!is_prime_modulus(p)) {
        throw MalformedInputError("modulus is not prime: " + std::to_string(p));
    }
    Field f;
    f.mode = FieldMode::Prime;
    f.prime = p;
    return f;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p); a must be nonzero mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw InternalError("mod_inverse of non-unit");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t p) {
    if (p < 2) throw MalformedInputError("residue modulus must be >= 2");
    Scalar s;
    s.mode_ = FieldMode::Prime;
    s.res_ = value % p;
    s.prime_ = p;
    return s;
}

Scalar Scalar::reduce(const mpq_class& q, std::uint64_t p) {
    const std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), static_cast<unsigned long>(p));
    if (den == 0) {
        throw MalformedInputError("denominator divisible by modulus " + std::to_string(p));
    }
    const std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), static_cast<unsigned long>(p));
    return residue(num * mod_inverse(den, p) % p, p);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw MalformedInputError("matrix entry count does not match dimensions");
    }
}

namespace {

// Fraction-free elimination (Bareiss).  After k pivots every remaining entry
// is a (k+1)x(k+1) minor of the original integer matrix, so the division by
// the previous pivot is exact; we verify that rather than trust it.
std::size_t rank_rational(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class den_lcm = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    m.at(r, c).rat().get_den().get_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const mpq_class& q = m.at(r, c).rat();
            a[r][c] = q.get_num() * (den_lcm / q.get_den());
        }
    }

    std::size_t rk = 0, pivot_row = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if (a[r][col] != 0) { sel = r; break; }
        }
        if (sel == rows) continue;
        std::swap(a[sel], a[pivot_row]);
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class num = a[pivot_row][col] * a[r][c] - a[r][col] * a[pivot_row][c];
                mpz_class quot, rem;
                mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(),
                            num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw InternalError("Bareiss division not exact");
                a[r][c] = quot;
            }
            a[r][col] = 0;
        }
        prev = a[pivot_row][col];
        ++pivot_row;
        ++rk;
    }
    return rk;
}

std::size_t rank_prime(const Matrix& m, std::uint64_t p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c).res();

    std::size_t rk = 0, pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if (a[r][col] != 0) { sel = r; break; }
        }
        if (sel == rows) continue;
        std::swap(a[sel], a[pivot_row]);
        const std::uint64_t inv = mod_inverse(a[pivot_row][col], p);
        for (std::size_t c = col; c < cols; ++c) a[pivot_row][c] = a[pivot_row][c] * inv % p;
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            const std::uint64_t f = a[r][col];
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c) {
                a[r][c] = (a[r][c] + (p - f) * a[pivot_row][c]) % p;
            }
        }
        ++pivot_row;
        ++rk;
    }
    return rk;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const FieldMode mode = m.at(0, 0).mode();
    const std::uint64_t p = m.at(0, 0).modulus();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Scalar& s = m.at(r, c);
            if (s.mode() != mode || (mode == FieldMode::Prime && s.modulus() != p)) {
                throw MalformedInputError("matrix entries mix field modes");
            }
        }
    }
    return mode == FieldMode::Rational ? rank_rational(m) : rank_prime(m, p);
}

}  // namespace mgh
