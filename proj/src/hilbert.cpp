#include "mgh/hilbert.hpp"

#include <ostream>

namespace mgh {

namespace {

void check_degree(const std::vector<int>& dims, const std::vector<int>& degree) {
    if (degree.size() != dims.size()) throw MalformedInputError("degree arity mismatch");
    for (int d : degree) {
        if (d < 0) throw MalformedInputError("negative degree");
    }
}

// Exponent vectors (e_0,...,e_n) with sum d, decreasing lex.
void compositions_desc(int d, int slots, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        prefix.push_back(d);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = d; first >= 0; --first) {
        prefix.push_back(first);
        compositions_desc(d - first, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

mpq_class mpq_pow(const mpq_class& base, int e) {
    if (e == 0) return 1;
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

std::uint64_t pow_mod(std::uint64_t base, int e, std::uint64_t p) {
    std::uint64_t out = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1) out = out * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return out;
}

}  // namespace

long long dim_component(const std::vector<int>& dims, const std::vector<int>& degree) {
    check_degree(dims, degree);
    mpz_class total = 1;
    for (std::size_t h = 0; h < dims.size(); ++h) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(dims[h] + degree[h]),
                     static_cast<unsigned long>(degree[h]));
        total *= b;
    }
    if (!total.fits_slong_p()) throw DomainError("component dimension too large");
    return total.get_si();
}

std::vector<std::vector<int>> monomial_exponents(const std::vector<int>& dims,
                                                 const std::vector<int>& degree) {
    check_degree(dims, degree);
    std::vector<std::vector<std::vector<int>>> per_factor(dims.size());
    for (std::size_t h = 0; h < dims.size(); ++h) {
        std::vector<int> prefix;
        compositions_desc(degree[h], dims[h] + 1, prefix, per_factor[h]);
    }
    std::vector<std::vector<int>> out;
    std::vector<std::size_t> pick(dims.size(), 0);
    for (;;) {
        std::vector<int> flat;
        for (std::size_t h = 0; h < dims.size(); ++h) {
            const auto& t = per_factor[h][pick[h]];
            flat.insert(flat.end(), t.begin(), t.end());
        }
        out.push_back(std::move(flat));
        std::size_t h = dims.size();
        while (h-- > 0) {
            if (++pick[h] < per_factor[h].size()) break;
            pick[h] = 0;
            if (h == 0) return out;
        }
    }
}

Matrix evaluation_matrix(const PointSet& x, const std::vector<int>& degree,
                         const Field& field) {
    const std::vector<std::vector<int>> monomials = monomial_exponents(x.dims(), degree);
    const std::size_t rows = static_cast<std::size_t>(x.size());
    const std::size_t cols = monomials.size();
    Matrix m(rows, cols);

    if (field.mode == FieldMode::Rational) {
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<mpq_class> coords;
            for (const auto& f : x.points()[r].factors()) {
                coords.insert(coords.end(), f.begin(), f.end());
            }
            for (std::size_t c = 0; c < cols; ++c) {
                mpq_class v = 1;
                for (std::size_t j = 0; j < coords.size(); ++j) {
                    const int e = monomials[c][j];
                    if (e > 0) v *= mpq_pow(coords[j], e);
                }
                m.set(r, c, Scalar(std::move(v)));
            }
        }
        return m;
    }

    const std::uint64_t p = field.prime;
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::uint64_t> coords;
        for (const auto& f : x.points()[r].factors()) {
            for (const auto& c : f) coords.push_back(Scalar::reduce(c, p).res());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            std::uint64_t v = 1 % p;
            for (std::size_t j = 0; j < coords.size(); ++j) {
                const int e = monomials[c][j];
                if (e > 0) v = v * pow_mod(coords[j], e, p) % p;
            }
            m.set(r, c, Scalar::residue(v, p));
        }
    }
    return m;
}

int hilbert_value(const PointSet& x, const std::vector<int>& degree, const Field& field) {
    return static_cast<int>(rank(evaluation_matrix(x, degree, field)));
}

HilbertTable::HilbertTable(IntTable base, std::vector<int> t, int s)
    : base_(std::move(base)), t_(std::move(t)), s_(s) {
    if (base_.window() != t_) throw InternalError("table window must equal projection counts");
    const int k = base_.axes();

    std::vector<int> idx(k, 0), nb(k);
    do {
        const int v = base_.at(idx);
        if (v < 1 || v > s_) throw InternalError("Hilbert value outside [1, s]");
        for (int a = 0; a < k; ++a) {
            if (idx[a] == 0) continue;
            nb = idx;
            --nb[a];
            if (base_.at(nb) > v) throw InternalError("Hilbert table not monotone");
        }
        // stabilization witness: the edge slice repeats the one before it
        for (int a = 0; a < k; ++a) {
            if (idx[a] != t_[a]) continue;
            nb = idx;
            --nb[a];
            if (base_.at(nb) != v) throw InternalError("Hilbert table edge slice not stable");
        }
    } while (next_index(idx, t_));

    std::vector<int> corner(t_);
    for (int& c : corner) --c;
    if (base_.at(corner) != s_) throw InternalError("Hilbert table does not reach s");
}

HilbertTable hilbert_table(const PointSet& x, const Field& field) {
    std::vector<int> t(x.arity());
    for (int a = 0; a < x.arity(); ++a) t[a] = projection(x, a).size();
    IntTable base(t);
    std::vector<int> idx(x.arity(), 0);
    do {
        base.set(idx, hilbert_value(x, idx, field));
    } while (next_index(idx, t));
    return HilbertTable(std::move(base), std::move(t), x.size());
}

int extend(const HilbertTable& tbl, const std::vector<int>& degree) {
    if (static_cast<int>(degree.size()) != tbl.base().axes()) {
        throw MalformedInputError("degree arity mismatch");
    }
    std::vector<int> idx(degree.size());
    for (std::size_t a = 0; a < degree.size(); ++a) {
        if (degree[a] < 0) throw MalformedInputError("negative degree");
        idx[a] = std::min(degree[a], tbl.t()[a] - 1);
    }
    return tbl.base().at(idx);
}

std::vector<int> axis_sequence(const PointSet& x, int axis, const Field& field) {
    if (axis < 0 || axis >= x.arity()) throw DomainError("axis out of range");
    const int t = projection(x, axis).size();
    std::vector<int> out;
    out.reserve(t + 1);
    std::vector<int> degree(x.arity(), 0);
    for (int j = 0; j <= t; ++j) {
        degree[axis] = j;
        out.push_back(hilbert_value(x, degree, field));
    }
    return out;
}

IntTable render_window(const HilbertTable& tbl, const std::vector<int>& window) {
    IntTable out(window);
    std::vector<int> idx(window.size(), 0);
    do {
        out.set(idx, extend(tbl, idx));
    } while (next_index(idx, window));
    return out;
}

void write_table_tsv(std::ostream& out, const IntTable& table) {
    const int k = table.axes();
    const auto& w = table.window();
    const int cols = k == 1 ? w[0] : w[1];

    auto header = [&]() {
        out << "H";
        for (int j = 0; j <= cols; ++j) out << "\t" << j;
        out << "\n";
    };

    if (k == 1) {
        header();
        out << 0;
        for (int j = 0; j <= w[0]; ++j) out << "\t" << table.at({j});
        out << "\n";
        return;
    }

    std::vector<int> trailing(w.begin() + 2, w.end());
    std::vector<int> slice(trailing.size(), 0);
    bool more = true;
    while (more) {
        if (k > 2) {
            out << "slice i3";
            for (std::size_t a = 1; a < slice.size(); ++a) out << ",i" << (a + 3);
            out << "=";
            for (std::size_t a = 0; a < slice.size(); ++a) out << (a ? "," : "") << slice[a];
            out << "\n";
        }
        header();
        std::vector<int> idx(k);
        std::copy(slice.begin(), slice.end(), idx.begin() + 2);
        for (int i = 0; i <= w[0]; ++i) {
            idx[0] = i;
            out << i;
            for (int j = 0; j <= w[1]; ++j) {
                idx[1] = j;
                out << "\t" << table.at(idx);
            }
            out << "\n";
        }
        more = k > 2 && next_index(slice, trailing);
    }
}

}  // namespace mgh
