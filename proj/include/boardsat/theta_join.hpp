#pragma once

#include "boardsat/cnf.hpp"

#include <cstddef>
#include <stop_token>
#include <vector>

namespace boardsat {

/// A set of partial assignments over one variable set. Rows use the
/// PartialAssignment bit layout and are kept sorted and unique.
class Relation {
public:
    Relation() = default;
    Relation(VarSet vars, std::vector<Word> rows);

    /// vars = {}, one empty row: the neutral element of theta_join.
    static Relation unit(unsigned universe) { return {VarSet::empty(universe), {0}}; }

    const VarSet& vars() const noexcept { return vars_; }
    const std::vector<Word>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }
    bool contains(Word row) const;

    PartialAssignment row(std::size_t i) const { return {vars_, rows_[i]}; }

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    VarSet vars_;
    std::vector<Word> rows_;
};

enum class JoinCase {
    CrossProduct,  // disjoint variable sets
    NaturalJoin,   // shared variables with at least one agreeing pair of rows
    Incompatible,  // shared variables, no agreeing pair
};

inline constexpr std::size_t kDefaultJoinRowCap = std::size_t{1} << 20;

/// Which of the three join cases applies to (a, b).
JoinCase classify_join(const Relation& a, const Relation& b);

/// Cross product on disjoint variables, natural join on the shared ones.
/// Throws ResourceLimit when the result would exceed `row_cap` rows.
Relation theta_join(const Relation& a, const Relation& b, std::size_t row_cap = kDefaultJoinRowCap);

struct FoldStats {
    std::size_t joins = 0;
    std::size_t rows_peak = 0;
};

class FoldCancelled : public std::exception {
public:
    const char* what() const noexcept override { return "fold cancelled"; }
};

/// Left fold of theta_join after sorting operands by ascending row count.
/// Empty input yields the unit relation; an empty intermediate result
/// short-circuits. Polls `stop` between joins and throws FoldCancelled.
Relation fold_theta(std::vector<Relation> relations, unsigned universe, std::size_t row_cap = kDefaultJoinRowCap,
                    FoldStats* stats = nullptr, std::stop_token stop = {});

/// Every full assignment agreeing with some row. Sorted ascending.
std::vector<Assignment> expand_rows(const Relation& r, unsigned n, std::size_t cap = kDefaultJoinRowCap);

} // namespace boardsat
