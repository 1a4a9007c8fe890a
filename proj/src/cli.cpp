#include "mgh/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "mgh/acm.hpp"
#include "mgh/geometry.hpp"
#include "mgh/hilbert.hpp"
#include "mgh/lifting.hpp"
#include "mgh/selftest.hpp"
#include "mgh/staircase.hpp"

namespace mgh {

namespace {

const char* kUsage =
    "usage: mgh <verb> [args] [flags]\n"
    "\n"
    "verbs:\n"
    "  hilbert <pointset-file>      print the Hilbert function table (TSV)\n"
    "  delta <pointset-file>        print its first difference table (TSV)\n"
    "  acm <pointset-file>          ACM verdict with alpha, beta, alpha*, witness\n"
    "  border <pointset-file>       border tuples B_C and B_R\n"
    "  betti <pointset-file>        resolution shifts C/V (ACM sets only)\n"
    "  lift <staircase-file>        lift an artinian staircase to a point set\n"
    "  gen grid <t> <r>             t x r grid in P^1 x P^1\n"
    "  gen depth <k> <l>            two-point depth example in (P^1)^k\n"
    "  gen random <s> [seed]        s random points (see --dims, --seed)\n"
    "  peel <pointset-file>         remove the largest first-coordinate fiber\n"
    "  selftest                     run the acceptance criteria suite\n"
    "\n"
    "flags:\n"
    "  --field rational|prime:<p>   coefficient field (default rational)\n"
    "  --window w1,w2,...           table window (default stabilization window)\n"
    "  --seed <u64>                 seed for gen random (default 0)\n"
    "  --dims n1,n2,...             ambient factor dimensions for gen random (default 1,1)\n"
    "  --out <path>                 write output to a file instead of stdout\n";

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw MalformedInputError("bad " + what + ": '" + s + "'");
    }
}

int parse_int(const std::string& s, const std::string& what) {
    const long long v = parse_ll(s, what);
    if (v < INT32_MIN || v > INT32_MAX) throw MalformedInputError("out of range: '" + s + "'");
    return static_cast<int>(v);
}

std::vector<int> parse_csv_ints(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string piece;
    while (std::getline(in, piece, ',')) out.push_back(parse_int(piece, what));
    if (out.empty()) throw MalformedInputError("empty " + what);
    return out;
}

struct Options {
    Field field = Field::rationals();
    std::optional<std::vector<int>> window;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_path;
    std::vector<int> dims{1, 1};
    std::vector<std::string> positional;
};

Options parse_options(const std::vector<std::string>& args) {
    Options o;
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) != 0) {
            o.positional.push_back(a);
            continue;
        }
        std::string name = a.substr(2), value;
        const auto eq = name.find('=');
        if (eq != std::string::npos) {
            value = name.substr(eq + 1);
            name = name.substr(0, eq);
        } else {
            if (++i >= args.size()) throw MalformedInputError("flag --" + name + " needs a value");
            value = args[i];
        }
        if (name == "field") {
            if (value == "rational") {
                o.field = Field::rationals();
            } else if (value.rfind("prime:", 0) == 0) {
                const long long p = parse_ll(value.substr(6), "prime");
                if (p < 2) throw MalformedInputError("bad prime: '" + value + "'");
                o.field = Field::modp(static_cast<std::uint64_t>(p));
            } else {
                throw MalformedInputError("bad field: '" + value + "'");
            }
        } else if (name == "window") {
            o.window = parse_csv_ints(value, "window");
            for (int w : *o.window) {
                if (w < 0) throw MalformedInputError("negative window");
            }
        } else if (name == "seed") {
            const long long s = parse_ll(value, "seed");
            if (s < 0) throw MalformedInputError("negative seed");
            o.seed = static_cast<std::uint64_t>(s);
        } else if (name == "out") {
            o.out_path = value;
        } else if (name == "dims") {
            o.dims = parse_csv_ints(value, "dims");
        } else {
            throw MalformedInputError("unknown flag: --" + name);
        }
    }
    return o;
}

const std::string& positional(const Options& o, std::size_t i, const std::string& what) {
    if (i >= o.positional.size()) throw MalformedInputError("missing " + what);
    return o.positional[i];
}

void print_verdict(std::ostream& out, const AcmVerdict& v) {
    out << (v.is_acm ? "ACM" : "NOT ACM") << "\n";
    out << "alpha=" << v.alpha.str() << " alpha*=" << v.alpha_conjugate.str()
        << " beta=" << v.beta.str() << "\n";
    if (v.witness) {
        out << "delta violation at (";
        for (std::size_t i = 0; i < v.witness->where.size(); ++i) {
            out << (i ? "," : "") << v.witness->where[i];
        }
        out << "): value " << v.witness->value << "\n";
    }
}

IntTable windowed_table(const PointSet& x, const Options& o) {
    const HilbertTable tbl = hilbert_table(x, o.field);
    if (!o.window) return tbl.base();
    if (static_cast<int>(o.window->size()) != x.arity()) {
        throw MalformedInputError("window arity does not match the point set");
    }
    return render_window(tbl, *o.window);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
    const std::string& verb = args[0];
    const Options o = parse_options(args);

    std::ofstream file_out;
    std::ostream* target = &out;
    if (o.out_path) {
        file_out.open(*o.out_path);
        if (!file_out) throw MalformedInputError("cannot write file: " + *o.out_path);
        target = &file_out;
    }

    if (verb == "hilbert") {
        write_table_tsv(*target, windowed_table(parse_pointset_file(positional(o, 0, "pointset file")), o));
    } else if (verb == "delta") {
        write_table_tsv(*target, first_difference(windowed_table(
                                     parse_pointset_file(positional(o, 0, "pointset file")), o)));
    } else if (verb == "acm") {
        print_verdict(*target, is_acm(parse_pointset_file(positional(o, 0, "pointset file")), o.field));
    } else if (verb == "border") {
        const Border b = border(parse_pointset_file(positional(o, 0, "pointset file")), o.field);
        *target << "B_C";
        for (int v : b.b_c) *target << "\t" << v;
        *target << "\nB_R";
        for (int v : b.b_r) *target << "\t" << v;
        *target << "\n";
    } else if (verb == "betti") {
        const AcmVerdict v = is_acm(parse_pointset_file(positional(o, 0, "pointset file")), o.field);
        if (!v.is_acm) throw DomainError("betti requires an ACM set");
        const BettiData b = betti(v.alpha);
        for (const auto& [c1, c2] : b.c_set) *target << "C\t" << c1 << "\t" << c2 << "\n";
        for (const auto& [v1, v2] : b.v_set) *target << "V\t" << v1 << "\t" << v2 << "\n";
    } else if (verb == "lift") {
        const Staircase st = parse_staircase_file(positional(o, 0, "staircase file"));
        write_pointset(*target, lift_staircase(st, std::vector<int>(st.vars(), 1)));
    } else if (verb == "gen") {
        const std::string& kind = positional(o, 0, "generator kind");
        if (kind == "grid") {
            write_pointset(*target, gen_grid(parse_int(positional(o, 1, "t"), "t"),
                                             parse_int(positional(o, 2, "r"), "r")));
        } else if (kind == "depth") {
            const int k = parse_int(positional(o, 1, "k"), "k");
            if (k < 1) throw MalformedInputError("k must be >= 1");
            write_pointset(*target, gen_depth_example(std::vector<int>(k, 1),
                                                      parse_int(positional(o, 2, "l"), "l")));
        } else if (kind == "random") {
            const int s = parse_int(positional(o, 1, "s"), "s");
            std::uint64_t seed = o.seed.value_or(0);
            if (o.positional.size() > 2) {
                seed = static_cast<std::uint64_t>(parse_ll(o.positional[2], "seed"));
            }
            write_pointset(*target, gen_random(o.dims, s, seed));
        } else {
            throw MalformedInputError("unknown generator: '" + kind + "'");
        }
    } else if (verb == "peel") {
        write_pointset(*target, peel(parse_pointset_file(positional(o, 0, "pointset file")), o.field));
    } else if (verb == "selftest") {
        return report_selftest(*target);
    } else {
        throw MalformedInputError("unknown verb: '" + verb + "'");
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return 2;
    }
    try {
        return dispatch(args, out);
    } catch (const MalformedInputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mgh
