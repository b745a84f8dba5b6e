#pragma once

#include "boardsat/cnf.hpp"
#include "boardsat/instance.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace boardsat {

inline constexpr unsigned kBruteForceCap = 24;

/// Every satisfying assignment, ascending. OpenMP kernel; throws
/// ResourceLimit when n exceeds `cap`.
std::vector<Assignment> brute_force(const Instance& instance, unsigned cap = kBruteForceCap);
/// Single-threaded reference for brute_force.
std::vector<Assignment> brute_force_serial(const Instance& instance, unsigned cap = kBruteForceCap);

/// Hidden-witness instance with a witness drawn uniformly from `seed`, or none.
ImplicitFormula extreme_instance(unsigned n, std::uint64_t seed, bool satisfiable);

/// Full-width CNF whose only model is the hidden witness: every full clause
/// except the one whose complement is the witness (all 2^n when there is no
/// witness). Throws ResourceLimit when n > limit.
Formula to_cnf(const ImplicitFormula& f, unsigned limit = 20);

struct WidthDistribution {
    unsigned min_width = 3;
    unsigned max_width = 3;

    static WidthDistribution fixed(unsigned k) { return {k, k}; }
    static WidthDistribution mixed(unsigned lo, unsigned hi) { return {lo, hi}; }
};

/// m clauses with widths uniform in the distribution's range (clamped to n),
/// distinct variables per clause, fair signs. Duplicate clauses may occur.
Formula random_formula(unsigned n, std::size_t m, WidthDistribution widths, std::uint64_t seed);

} // namespace boardsat
