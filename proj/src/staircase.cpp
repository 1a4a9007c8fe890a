#include "mgh/staircase.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "mgh/rng.hpp"

namespace mgh {

Staircase::Staircase(int vars, std::vector<std::vector<int>> generators) : vars_(vars) {
    if (vars_ < 1) throw MalformedInputError("staircase needs at least one variable");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != vars_) {
            throw MalformedInputError("generator arity does not match variable count");
        }
        for (int e : g) {
            if (e < 0) throw MalformedInputError("negative exponent");
        }
        if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; })) {
            throw MalformedInputError("unit generator (ideal would be the whole ring)");
        }
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (const auto& g : generators) {
        if (std::none_of(generators.begin(), generators.end(), [&](const auto& o) {
                return o != g && tuple_leq(o, g);
            })) {
            gens_.push_back(g);
        }
    }
}

bool Staircase::contains(const std::vector<int>& cell) const {
    if (static_cast<int>(cell.size()) != vars_) {
        throw MalformedInputError("cell arity does not match variable count");
    }
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const auto& g) { return tuple_leq(g, cell); });
}

bool Staircase::artinian() const {
    for (int a = 0; a < vars_; ++a) {
        const bool blocked = std::any_of(gens_.begin(), gens_.end(), [&](const auto& g) {
            for (int b = 0; b < vars_; ++b) {
                if (b != a && g[b] != 0) return false;
            }
            return g[a] > 0;
        });
        if (!blocked) return false;
    }
    return true;
}

bool validate_indicator(const IntTable& h) {
    std::vector<int> idx(h.axes(), 0), nb(h.axes());
    if (h.at(idx) != 1) return false;
    do {
        const int v = h.at(idx);
        if (v != 0 && v != 1) return false;
        if (v == 1) {
            // support must be downward closed, i.e. zeros upward closed
            for (int a = 0; a < h.axes(); ++a) {
                if (idx[a] == 0) continue;
                nb = idx;
                --nb[a];
                if (h.at(nb) == 0) return false;
            }
        }
    } while (next_index(idx, h.window()));
    return true;
}

bool is_artinian(const IntTable& h) {
    if (!validate_indicator(h)) throw DomainError("not a valid indicator table");
    for (int a = 0; a < h.axes(); ++a) {
        std::vector<int> edge(h.axes(), 0);
        edge[a] = h.window()[a];
        if (h.at(edge) != 0) return false;
    }
    return true;
}

ComplementResult complement(const Staircase& st, const std::vector<int>& bound) {
    if (static_cast<int>(bound.size()) != st.vars()) {
        throw MalformedInputError("bound arity does not match variable count");
    }
    ComplementResult out;
    out.finite = st.artinian();
    std::vector<int> idx(st.vars(), 0);
    do {
        if (!st.contains(idx)) out.cells.push_back(idx);
    } while (next_index(idx, bound));
    return out;
}

std::vector<std::vector<int>> finite_complement(const Staircase& st) {
    if (!st.artinian()) {
        throw DomainError("staircase is not artinian: complement is infinite");
    }
    // the pure power on each axis bounds the complement box
    std::vector<int> bound(st.vars(), 0);
    for (const auto& g : st.generators()) {
        for (int a = 0; a < st.vars(); ++a) bound[a] = std::max(bound[a], g[a] - 1);
    }
    return complement(st, bound).cells;
}

IntTable indicator_of(const Staircase& st, const std::vector<int>& window) {
    IntTable out(window);
    if (static_cast<int>(window.size()) != st.vars()) {
        throw MalformedInputError("window arity does not match variable count");
    }
    std::vector<int> idx(st.vars(), 0);
    do {
        out.set(idx, st.contains(idx) ? 0 : 1);
    } while (next_index(idx, window));
    return out;
}

Staircase zero_set_staircase(const IntTable& indicator) {
    if (!validate_indicator(indicator)) throw DomainError("not a valid indicator table");
    std::vector<std::vector<int>> gens;
    std::vector<int> idx(indicator.axes(), 0), nb(indicator.axes());
    do {
        if (indicator.at(idx) != 0) continue;
        bool minimal = true;
        for (int a = 0; a < indicator.axes() && minimal; ++a) {
            if (idx[a] == 0) continue;
            nb = idx;
            --nb[a];
            if (indicator.at(nb) == 0) minimal = false;
        }
        if (minimal) gens.push_back(idx);
    } while (next_index(idx, indicator.window()));
    return Staircase(indicator.axes(), std::move(gens));
}

Staircase random_artinian_staircase(int k, int max_cells, std::uint64_t seed) {
    if (k < 1 || max_cells < 1) throw DomainError("bad staircase size parameters");
    Rng rng(seed);
    const int target = rng.uniform(1, max_cells);

    std::set<std::vector<int>> cells;
    cells.insert(std::vector<int>(k, 0));
    while (static_cast<int>(cells.size()) < target) {
        std::set<std::vector<int>> frontier;
        for (const auto& c : cells) {
            for (int a = 0; a < k; ++a) {
                std::vector<int> d = c;
                ++d[a];
                if (cells.count(d)) continue;
                bool closed = true;
                for (int b = 0; b < k && closed; ++b) {
                    if (d[b] == 0) continue;
                    std::vector<int> below = d;
                    --below[b];
                    if (!cells.count(below)) closed = false;
                }
                if (closed) frontier.insert(std::move(d));
            }
        }
        auto it = frontier.begin();
        std::advance(it, rng.uniform(0, static_cast<int>(frontier.size()) - 1));
        cells.insert(*it);
    }

    // minimal generators of the complement ideal live in the box extended
    // one step beyond the order ideal on each axis
    std::vector<int> box(k, 0);
    for (const auto& c : cells) {
        for (int a = 0; a < k; ++a) box[a] = std::max(box[a], c[a] + 1);
    }
    std::vector<std::vector<int>> gens;
    std::vector<int> idx(k, 0);
    do {
        if (cells.count(idx)) continue;
        bool minimal = true;
        for (int a = 0; a < k && minimal; ++a) {
            if (idx[a] == 0) continue;
            std::vector<int> below = idx;
            --below[a];
            if (!cells.count(below)) minimal = false;
        }
        if (minimal) gens.push_back(idx);
    } while (next_index(idx, box));
    return Staircase(k, std::move(gens));
}

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

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

Staircase parse_staircase(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw MalformedInputError("missing staircase header");
    std::istringstream head(line);
    std::string tag, kfield;
    head >> tag >> kfield;
    int k = 0;
    try {
        if (tag != "staircase" || kfield.rfind("k=", 0) != 0) throw std::invalid_argument(line);
        std::size_t pos = 0;
        k = std::stoi(kfield.substr(2), &pos);
        if (pos != kfield.size() - 2) throw std::invalid_argument(line);
    } catch (const std::exception&) {
        throw MalformedInputError("bad staircase header: '" + line + "'");
    }

    std::vector<std::vector<int>> gens;
    while (next_line(in, line)) {
        std::vector<int> g;
        std::istringstream row(line);
        std::string piece;
        while (std::getline(row, piece, ',')) {
            try {
                std::size_t pos = 0;
                const std::string t = strip(piece);
                g.push_back(std::stoi(t, &pos));
                if (pos != t.size()) throw std::invalid_argument(t);
            } catch (const std::exception&) {
                throw MalformedInputError("bad exponent on line: '" + line + "'");
            }
        }
        gens.push_back(std::move(g));
    }
    return Staircase(k, std::move(gens));
}

Staircase parse_staircase_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot read file: " + path);
    return parse_staircase(in);
}

void write_staircase(std::ostream& out, const Staircase& st) {
    out << "staircase k=" << st.vars() << "\n";
    for (const auto& g : st.generators()) {
        for (std::size_t a = 0; a < g.size(); ++a) out << (a ? "," : "") << g[a];
        out << "\n";
    }
}

}  // namespace mgh
