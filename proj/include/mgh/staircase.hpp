#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mgh/combinat.hpp"

namespace mgh {

// Monomial ideal given by its minimal generators (exponent tuples forming an
// antichain under componentwise <=).  Construction minimalizes.
class Staircase {
public:
    Staircase(int vars, std::vector<std::vector<int>> generators);

    int vars() const { return vars_; }
    const std::vector<std::vector<int>>& generators() const { return gens_; }

    // Membership of a monomial: divisible by some generator.
    bool contains(const std::vector<int>& cell) const;

    // Every axis blocked by a pure-power generator, i.e. the complement of
    // the ideal is finite.
    bool artinian() const;

    bool operator==(const Staircase&) const = default;

private:
    int vars_;
    std::vector<std::vector<int>> gens_;
};

// Validity of an indicator table: value 1 at the origin, all values 0/1,
// and the zero set upward closed on the window.
bool validate_indicator(const IntTable& h);

// Every axis of the window reaches 0.  Requires a valid indicator.
bool is_artinian(const IntTable& h);

struct ComplementResult {
    std::vector<std::vector<int>> cells;  // lex sorted
    bool finite;                          // pure powers block every axis
};

// Cells within the bound not divisible by any generator, plus whether the
// full complement is provably finite.
ComplementResult complement(const Staircase& st, const std::vector<int>& bound);

// The whole complement; throws DomainError if the staircase is not artinian.
std::vector<std::vector<int>> finite_complement(const Staircase& st);

// Membership-complement indicator on the window; always a valid indicator.
IntTable indicator_of(const Staircase& st, const std::vector<int>& window);

// The staircase whose ideal is generated by the zero cells of a valid
// indicator (minimal zero cells of the window).
Staircase zero_set_staircase(const IntTable& indicator);

// Seed-deterministic artinian staircase whose complement has between 1 and
// max_cells cells, grown as a random order ideal.
Staircase random_artinian_staircase(int k, int max_cells, std::uint64_t seed);

// Text format:
//   staircase k=<k>
//   <e_1>,...,<e_k>
// one generator per line, '#' comments, blank lines ignored.
Staircase parse_staircase(std::istream& in);
Staircase parse_staircase_file(const std::string& path);
void write_staircase(std::ostream& out, const Staircase& st);

}  // namespace mgh
