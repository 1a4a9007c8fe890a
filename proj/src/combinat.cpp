#include "mgh/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mgh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw MalformedInputError("partition part is negative");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::from_weakly_decreasing(std::vector<int> parts) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i] < parts[i + 1]) {
            throw MalformedInputError("tuple is not weakly decreasing");
        }
    }
    if (!parts.empty() && parts.back() < 0) {
        throw MalformedInputError("partition part is negative");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::conjugate() const {
    Partition out;
    if (parts_.empty()) return out;
    out.parts_.reserve(parts_[0]);
    for (int i = 1; i <= parts_[0]; ++i) {
        int count = 0;
        for (int p : parts_) {
            if (p >= i) ++count;
        }
        out.parts_.push_back(count);
    }
    return out;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<int> conjugate_padded(const Partition& p, int len) {
    std::vector<int> out = p.conjugate().parts();
    if (static_cast<int>(out.size()) > len) {
        throw InternalError("conjugate longer than requested padding length");
    }
    out.resize(len, 0);
    return out;
}

std::vector<int> delta_tuple(const std::vector<int>& p) {
    if (p.empty()) throw MalformedInputError("delta of empty tuple");
    std::vector<int> out(p.size());
    out[0] = p[0];
    for (std::size_t i = 1; i < p.size(); ++i) out[i] = p[i] - p[i - 1];
    return out;
}

bool tuple_leq(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw MalformedInputError("tuple length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

bool next_index(std::vector<int>& idx, const std::vector<int>& window) {
    for (std::size_t h = idx.size(); h-- > 0;) {
        if (idx[h] < window[h]) {
            ++idx[h];
            std::fill(idx.begin() + h + 1, idx.end(), 0);
            return true;
        }
    }
    return false;
}

IntTable::IntTable(std::vector<int> window) : window_(std::move(window)) {
    if (window_.empty()) throw MalformedInputError("table needs at least one axis");
    std::size_t n = 1;
    for (int w : window_) {
        if (w < 0) throw MalformedInputError("negative table window");
        n *= static_cast<std::size_t>(w) + 1;
    }
    values_.assign(n, 0);
}

std::size_t IntTable::flat(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (std::size_t h = 0; h < window_.size(); ++h) {
        f = f * (static_cast<std::size_t>(window_[h]) + 1) + static_cast<std::size_t>(idx[h]);
    }
    return f;
}

IntTable first_difference(const IntTable& h) {
    const int k = h.axes();
    IntTable out(h.window());
    std::vector<int> idx(k, 0), shifted(k);
    do {
        int sum = 0;
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            bool below = false;
            int bits = 0;
            for (int a = 0; a < k; ++a) {
                const int l = (mask >> a) & 1;
                bits += l;
                shifted[a] = idx[a] - l;
                if (shifted[a] < 0) below = true;
            }
            if (below) continue;
            sum += (bits % 2 == 0) ? h.at(shifted) : -h.at(shifted);
        }
        out.set(idx, sum);
    } while (next_index(idx, h.window()));
    return out;
}

IntTable cumulative_sum(const IntTable& d) {
    IntTable out = d;
    std::vector<int> idx(d.axes(), 0), prev(d.axes());
    // one running-sum sweep per axis
    for (int a = 0; a < d.axes(); ++a) {
        std::fill(idx.begin(), idx.end(), 0);
        do {
            if (idx[a] == 0) continue;
            prev = idx;
            --prev[a];
            out.set(idx, out.at(idx) + out.at(prev));
        } while (next_index(idx, d.window()));
    }
    return out;
}

}  // namespace mgh
