#include "mgh/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "mgh/rng.hpp"

namespace mgh {

Point::Point(std::vector<std::vector<mpq_class>> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw MalformedInputError("point needs at least one factor");
    for (const auto& f : factors_) {
        if (f.empty()) throw MalformedInputError("empty coordinate vector");
        bool nonzero = false;
        for (const auto& c : f) {
            if (c != 0) { nonzero = true; break; }
        }
        if (!nonzero) throw MalformedInputError("zero coordinate vector is not projective");
    }
}

Point Point::normalized() const {
    std::vector<std::vector<mpq_class>> out = factors_;
    for (auto& f : out) {
        mpq_class lead;
        for (const auto& c : f) {
            if (c != 0) { lead = c; break; }
        }
        for (auto& c : f) c /= lead;
    }
    return Point(std::move(out));
}

int compare(const Point& a, const Point& b) {
    if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
    for (int h = 0; h < a.arity(); ++h) {
        const auto& fa = a.factors()[h];
        const auto& fb = b.factors()[h];
        if (fa.size() != fb.size()) return fa.size() < fb.size() ? -1 : 1;
        for (std::size_t j = 0; j < fa.size(); ++j) {
            const int c = cmp(fa[j], fb[j]);
            if (c != 0) return c;
        }
    }
    return 0;
}

PointSet::PointSet(std::vector<int> dims, std::vector<Point> points) : dims_(std::move(dims)) {
    if (dims_.empty()) throw MalformedInputError("point set needs at least one factor");
    for (int n : dims_) {
        if (n < 1) throw MalformedInputError("factor dimension must be >= 1");
    }
    if (points.empty()) throw MalformedInputError("point set is empty");
    points_.reserve(points.size());
    for (const Point& p : points) {
        if (p.arity() != arity()) throw MalformedInputError("point arity does not match dims");
        for (int h = 0; h < arity(); ++h) {
            if (static_cast<int>(p.factors()[h].size()) != dims_[h] + 1) {
                throw MalformedInputError("coordinate count does not match factor dimension");
            }
        }
        points_.push_back(p.normalized());
    }
    std::sort(points_.begin(), points_.end(),
              [](const Point& a, const Point& b) { return compare(a, b) < 0; });
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        if (points_[i] == points_[i + 1]) {
            throw MalformedInputError("duplicate point (set must be reduced)");
        }
    }
}

PointSet projection(const PointSet& x, int axis) {
    if (axis < 0 || axis >= x.arity()) throw DomainError("projection axis out of range");
    std::vector<Point> factors;
    for (const Point& p : x.points()) {
        Point q(std::vector<std::vector<mpq_class>>{p.factors()[axis]});
        if (std::none_of(factors.begin(), factors.end(),
                         [&](const Point& r) { return r == q; })) {
            factors.push_back(std::move(q));
        }
    }
    return PointSet({x.dims()[axis]}, std::move(factors));
}

std::pair<Partition, Partition> alpha_beta(const PointSet& x) {
    if (x.arity() != 2) throw DomainError("alpha/beta need exactly two factors");
    std::map<std::vector<mpq_class>, int> first, second;
    for (const Point& p : x.points()) {
        ++first[p.factors()[0]];
        ++second[p.factors()[1]];
    }
    std::vector<int> a, b;
    for (const auto& [_, n] : first) a.push_back(n);
    for (const auto& [_, n] : second) b.push_back(n);
    return {Partition(std::move(a)), Partition(std::move(b))};
}

PointSet gen_grid(int t, int r) {
    if (t < 1 || r < 1) throw DomainError("grid sides must be >= 1");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(t) * r);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < r; ++j) {
            pts.push_back(Point({{1, i}, {1, j}}));
        }
    }
    return PointSet({1, 1}, std::move(pts));
}

PointSet gen_depth_example(const std::vector<int>& dims, int l) {
    const int k = static_cast<int>(dims.size());
    if (l < 1 || l > k) throw DomainError("depth parameter out of range");
    auto unit = [](int n, int pos) {
        std::vector<mpq_class> c(n + 1, 0);
        c[pos] = 1;
        return c;
    };
    std::vector<std::vector<mpq_class>> x1, x2;
    for (int i = 0; i < k; ++i) {
        x1.push_back(unit(dims[i], 0));
        x2.push_back(unit(dims[i], i + 1 <= l - 1 ? 0 : 1));
    }
    return PointSet(dims, {Point(std::move(x1)), Point(std::move(x2))});
}

PointSet gen_random(const std::vector<int>& dims, int s, std::uint64_t seed) {
    if (s < 1) throw DomainError("point count must be >= 1");
    Rng rng(seed);
    const int hi = 2 * s + 2;
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < s) {
        std::vector<std::vector<mpq_class>> factors;
        for (int n : dims) {
            std::vector<mpq_class> f;
            do {
                f.clear();
                for (int j = 0; j <= n; ++j) f.emplace_back(rng.uniform(0, hi));
            } while (std::all_of(f.begin(), f.end(), [](const mpq_class& c) { return c == 0; }));
            factors.push_back(std::move(f));
        }
        Point p = Point(std::move(factors)).normalized();
        if (std::none_of(pts.begin(), pts.end(), [&](const Point& q) { return q == p; })) {
            pts.push_back(std::move(p));
        }
    }
    return PointSet(dims, std::move(pts));
}

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

mpq_class parse_rational(const std::string& text) {
    const std::string t = strip(text);
    if (t.empty()) throw MalformedInputError("empty coordinate");
    if (t.find_first_of(" \t") != std::string::npos) {
        // GMP would skip interior whitespace and read "1 2" as 12
        throw MalformedInputError("whitespace inside coordinate: '" + t + "'");
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0) {
        throw MalformedInputError("bad rational: '" + t + "'");
    }
    if (q.get_den() == 0) throw MalformedInputError("zero denominator: '" + t + "'");
    q.canonicalize();
    return q;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    for (const std::string& piece : split(text, ',')) {
        const std::string t = strip(piece);
        try {
            std::size_t pos = 0;
            const int v = std::stoi(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
            out.push_back(v);
        } catch (const std::exception&) {
            throw MalformedInputError("bad " + what + ": '" + t + "'");
        }
    }
    return out;
}

// Next content line, with comments and blanks removed.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (!line.empty()) return true;
    }
    return false;
}

}  // namespace

PointSet parse_pointset(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw MalformedInputError("missing pointset header");
    std::istringstream head(line);
    std::string tag, kfield, nfield;
    head >> tag >> kfield >> nfield;
    if (tag != "pointset" || kfield.rfind("k=", 0) != 0 || nfield.rfind("n=", 0) != 0) {
        throw MalformedInputError("bad pointset header: '" + line + "'");
    }
    const std::vector<int> kvec = parse_int_list(kfield.substr(2), "factor count");
    if (kvec.size() != 1 || kvec[0] < 1) throw MalformedInputError("bad factor count");
    const int k = kvec[0];
    const std::vector<int> dims = parse_int_list(nfield.substr(2), "factor dimension");
    if (static_cast<int>(dims.size()) != k) {
        throw MalformedInputError("dimension list does not match k");
    }

    std::vector<Point> pts;
    while (next_line(in, line)) {
        const std::vector<std::string> factors = split(line, '|');
        if (static_cast<int>(factors.size()) != k) {
            throw MalformedInputError("wrong factor count on line: '" + line + "'");
        }
        std::vector<std::vector<mpq_class>> coords;
        for (const std::string& f : factors) {
            std::vector<mpq_class> v;
            for (const std::string& c : split(f, ',')) v.push_back(parse_rational(c));
            coords.push_back(std::move(v));
        }
        pts.emplace_back(std::move(coords));
    }
    return PointSet(dims, std::move(pts));
}

PointSet parse_pointset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot read file: " + path);
    return parse_pointset(in);
}

void write_pointset(std::ostream& out, const PointSet& x) {
    out << "pointset k=" << x.arity() << " n=";
    for (int h = 0; h < x.arity(); ++h) out << (h ? "," : "") << x.dims()[h];
    out << "\n";
    for (const Point& p : x.points()) {
        for (int h = 0; h < x.arity(); ++h) {
            if (h) out << " | ";
            const auto& f = p.factors()[h];
            for (std::size_t j = 0; j < f.size(); ++j) out << (j ? "," : "") << f[j];
        }
        out << "\n";
    }
}

}  // namespace mgh
