#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "mgh/cli.hpp"
#include "mgh/geometry.hpp"

using namespace mgh;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

// Temporary file that cleans up after itself.
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& text) const {
        std::ofstream f(path);
        f << text;
    }
    std::string read() const {
        std::ifstream f(path);
        std::ostringstream s;
        s << f.rdbuf();
        return s.str();
    }
};

}  // namespace

TEST_CASE("usage and unknown verbs") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"hilbert"}).status == 2);               // missing file
    CHECK(run({"hilbert", "no_such_file"}).status == 2);
    CHECK(run({"hilbert", "x", "--bogus", "1"}).status == 2);
}

TEST_CASE("gen writes parseable, deterministic files") {
    TempFile f("grid.pts");
    const RunResult r = run({"gen", "grid", "2", "3", "--out", f.path});
    REQUIRE(r.status == 0);
    CHECK(parse_pointset_file(f.path) == gen_grid(2, 3));

    const RunResult once = run({"gen", "random", "6", "9"});
    const RunResult twice = run({"gen", "random", "6", "--seed", "9"});
    CHECK(once.status == 0);
    CHECK(once.out == twice.out);

    std::istringstream in(once.out);
    CHECK(parse_pointset(in) == gen_random({1, 1}, 6, 9));

    const RunResult spatial = run({"gen", "random", "4", "2", "--dims", "1,2"});
    std::istringstream sin(spatial.out);
    CHECK(parse_pointset(sin).dims() == std::vector<int>{1, 2});
}

TEST_CASE("hilbert and delta tables") {
    TempFile f("single.pts");
    f.write("pointset k=2 n=1,1\n1,0 | 1,0\n");
    const RunResult h = run({"hilbert", f.path});
    CHECK(h.status == 0);
    CHECK(h.out == "H\t0\t1\n0\t1\t1\n1\t1\t1\n");

    const RunResult d = run({"delta", f.path});
    CHECK(d.status == 0);
    CHECK(d.out == "H\t0\t1\n0\t1\t0\n1\t0\t0\n");

    const RunResult windowed = run({"hilbert", f.path, "--window", "0,2"});
    CHECK(windowed.out == "H\t0\t1\t2\n0\t1\t1\t1\n");

    const RunResult prime = run({"hilbert", f.path, "--field", "prime:1000003"});
    CHECK(prime.out == h.out);
    CHECK(run({"hilbert", f.path, "--field", "prime:10"}).status == 2);
}

TEST_CASE("acm verdict output") {
    TempFile f("depth.pts");
    REQUIRE(run({"gen", "depth", "2", "1", "--out", f.path}).status == 0);
    const RunResult r = run({"acm", f.path});
    CHECK(r.status == 0);
    CHECK(r.out.find("NOT ACM") != std::string::npos);
    CHECK(r.out.find("alpha*=(2) beta=(1,1)") != std::string::npos);
    CHECK(r.out.find("delta violation at (1,1): value -1") != std::string::npos);

    TempFile g("depth2.pts");
    REQUIRE(run({"gen", "depth", "2", "2", "--out", g.path}).status == 0);
    const RunResult ok = run({"acm", g.path});
    CHECK(ok.status == 0);
    CHECK(ok.out.rfind("ACM", 0) == 0);
}

TEST_CASE("border and betti output") {
    TempFile f("grid23.pts");
    REQUIRE(run({"gen", "grid", "2", "3", "--out", f.path}).status == 0);

    const RunResult b = run({"border", f.path});
    CHECK(b.status == 0);
    CHECK(b.out == "B_C\t2\t4\t6\nB_R\t3\t6\n");

    const RunResult betti_out = run({"betti", f.path});
    CHECK(betti_out.status == 0);
    CHECK(betti_out.out == "C\t0\t3\nC\t2\t0\nV\t2\t3\n");

    TempFile bad("nonacm.pts");
    REQUIRE(run({"gen", "depth", "2", "1", "--out", bad.path}).status == 0);
    const RunResult refuse = run({"betti", bad.path});
    CHECK(refuse.status == 1);
    CHECK(refuse.err.find("ACM") != std::string::npos);
}

TEST_CASE("lift then acm reports ACM") {
    TempFile st("stairs.txt");
    st.write("staircase k=2\n2,0\n1,1\n0,2\n");
    TempFile pts("lifted.pts");
    REQUIRE(run({"lift", st.path, "--out", pts.path}).status == 0);
    CHECK(parse_pointset_file(pts.path).size() == 3);

    const RunResult verdict = run({"acm", pts.path});
    CHECK(verdict.status == 0);
    CHECK(verdict.out.rfind("ACM", 0) == 0);

    TempFile open("open.txt");
    open.write("staircase k=2\n1,0\n");
    CHECK(run({"lift", open.path}).status == 1);  // infinite complement
}

TEST_CASE("peel files") {
    TempFile f("grid22.pts");
    REQUIRE(run({"gen", "grid", "2", "2", "--out", f.path}).status == 0);
    const RunResult r = run({"peel", f.path});
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    CHECK(parse_pointset(in).size() == 2);

    TempFile single("one.pts");
    single.write("pointset k=2 n=1,1\n1,0 | 1,0\n");
    CHECK(run({"peel", single.path}).status == 1);
}

TEST_CASE("identical invocations are byte identical") {
    TempFile f("rand.pts");
    REQUIRE(run({"gen", "random", "8", "5", "--out", f.path}).status == 0);
    const RunResult a = run({"hilbert", f.path});
    const RunResult b = run({"hilbert", f.path});
    CHECK(a.out == b.out);
    const RunResult da = run({"delta", f.path});
    const RunResult db = run({"delta", f.path});
    CHECK(da.out == db.out);
}
