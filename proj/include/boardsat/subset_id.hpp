#pragma once

#include "boardsat/cnf.hpp"

#include <cstdint>

namespace boardsat {

/// Identification number of a variable subset, in [0, 2^n - 1]. Subsets are
/// numbered by size first ({} = 0, singletons next, ..., X = 2^n - 1) and,
/// within one size, by the numeric value of their descending index string.
struct SubsetId {
    Word value = 0;

    friend auto operator<=>(const SubsetId&, const SubsetId&) = default;
};

/// C(n, k) for n <= 63; zero when k > n.
Word binomial(unsigned n, unsigned k) noexcept;

/// Combinatorial ranking: sum_{j<k} C(n, j) + sum_i C(d_i, i + 1) where
/// d_{k-1} > ... > d_0 are the member indices. O(k).
SubsetId idss(const VarSet& s);

/// Throws InvalidInput if id >= 2^n.
VarSet idss_inverse(SubsetId id, unsigned n);

} // namespace boardsat
