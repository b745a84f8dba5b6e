#pragma once

#include "boardsat/bits.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace boardsat {

/// Subset of the variables {x_{n-1}, ..., x_0}, stored as a bit mask over the
/// universe. Members are always enumerated in descending index order.
class VarSet {
public:
    VarSet() = default;
    VarSet(unsigned universe, Word mask);

    static VarSet full(unsigned universe) { return {universe, low_mask(universe)}; }
    static VarSet empty(unsigned universe) { return {universe, 0}; }
    /// Throws InvalidInput on duplicates or indices >= universe.
    static VarSet from_indices(unsigned universe, std::span<const unsigned> indices);

    unsigned universe() const noexcept { return universe_; }
    Word mask() const noexcept { return mask_; }
    unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }
    bool is_empty() const noexcept { return mask_ == 0; }
    bool is_full() const noexcept { return mask_ == low_mask(universe_); }
    bool contains(unsigned var) const noexcept { return var < 64 && ((mask_ >> var) & 1); }

    std::vector<unsigned> members() const;

    VarSet united(const VarSet& other) const { return {universe_, mask_ | other.mask_}; }
    VarSet intersected(const VarSet& other) const { return {universe_, mask_ & other.mask_}; }

    /// "{x3,x1}"
    std::string to_string() const;

    friend bool operator==(const VarSet&, const VarSet&) = default;

private:
    unsigned universe_ = 0;
    Word mask_ = 0;
};

/// Complete assignment over n variables; bit i holds the value of x_i.
struct Assignment {
    unsigned n = 0;
    Word bits = 0;

    std::string to_string() const { return to_bitstring(bits, n); }
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Values for the members of `vars`. Bit j of `bits` belongs to the j-th
/// smallest member, so the bit string reads in descending member order and a
/// full-width pattern coincides with the Assignment of the same value.
struct PartialAssignment {
    VarSet vars;
    Word bits = 0;

    Assignment with_free_zero() const { return {vars.universe(), deposit_bits(bits, vars.mask())}; }
    std::string to_string() const { return to_bitstring(bits, vars.size()); }
    friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;
};

struct Literal {
    unsigned var = 0;
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

class Clause {
public:
    /// Duplicate literals collapse; a variable occurring with both signs is
    /// rejected with InvalidInput.
    Clause(unsigned universe, std::span<const Literal> literals);
    Clause(unsigned universe, std::initializer_list<Literal> literals)
        : Clause(universe, std::span<const Literal>(literals.begin(), literals.size()))
    {
    }
    /// Builds the clause whose binary translation over `pattern.vars` is `pattern.bits`.
    explicit Clause(const PartialAssignment& pattern);

    const VarSet& vars() const noexcept { return vars_; }
    unsigned width() const noexcept { return vars_.size(); }
    /// One bit per member, 1 = positive literal; same alignment as PartialAssignment.
    Word signs() const noexcept { return signs_; }
    Word positive_mask() const noexcept { return positive_; }
    Word negative_mask() const noexcept { return vars_.mask() & ~positive_; }

    bool satisfied_by(Word assignment) const noexcept
    {
        return (assignment & positive_) != 0 || (~assignment & negative_mask()) != 0;
    }

    /// Literals in descending variable order.
    std::vector<Literal> literals() const;
    /// "(x3 | ~x2 | x0)"
    std::string to_string() const;

    friend bool operator==(const Clause&, const Clause&) = default;

private:
    VarSet vars_;
    Word signs_ = 0;
    Word positive_ = 0;
};

class Formula {
public:
    explicit Formula(unsigned n = 0);
    Formula(unsigned n, std::vector<Clause> clauses);

    unsigned variable_count() const noexcept { return n_; }
    std::size_t clause_count() const noexcept { return clauses_.size(); }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    /// Throws InvalidInput when the clause is over a different universe.
    void add(Clause clause);

    bool satisfied_by(Word assignment) const noexcept
    {
        for (const Clause& c : clauses_)
            if (!c.satisfied_by(assignment))
                return false;
        return true;
    }

    friend bool operator==(const Formula&, const Formula&) = default;

private:
    unsigned n_;
    std::vector<Clause> clauses_;
};

/// The pattern b that satisfies every literal of the clause.
PartialAssignment clause_to_binary(const Clause& c);

constexpr Word complement(Word bits, unsigned width) noexcept { return ~bits & low_mask(width); }
inline PartialAssignment complement(const PartialAssignment& p)
{
    return {p.vars, complement(p.bits, p.vars.size())};
}

bool eval_clause(const Clause& c, const Assignment& a);
bool eval_formula(const Formula& f, const Assignment& a);

inline constexpr unsigned kDefaultExpansionLimit = 20;

/// Extends a clause to every full-width clause over n variables by choosing
/// both signs for each missing variable. The conjunction of the result is
/// equivalent to `c`. Throws ResourceLimit when more than `limit` variables
/// are missing.
std::vector<Clause> expand_to_ssat(const Clause& c, unsigned n, unsigned limit = kDefaultExpansionLimit);

} // namespace boardsat
