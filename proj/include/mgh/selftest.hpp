#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgh {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The exact-identity verification suite behind the `selftest` CLI verb and
// the acceptance test binary: every closed-form formula in the library is
// checked against the rank oracle on seed-deterministic corpora.
std::vector<CriterionResult> run_selftest();

// One PASS/FAIL line per criterion; returns 0 when everything passed.
int report_selftest(std::ostream& out);

}  // namespace mgh
