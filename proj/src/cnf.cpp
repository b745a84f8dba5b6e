#include "boardsat/cnf.hpp"

#include "boardsat/error.hpp"

#include <fmt/format.h>

namespace boardsat {

VarSet::VarSet(unsigned universe, Word mask) : universe_(universe), mask_(mask)
{
    if (universe > kMaxVariables)
        throw InvalidInput(fmt::format("{} variables exceed the supported maximum of {}", universe, kMaxVariables));
    if ((mask & ~low_mask(universe)) != 0)
        throw InvalidInput(fmt::format("variable set {:#x} does not fit in {} variables", mask, universe));
}

VarSet VarSet::from_indices(unsigned universe, std::span<const unsigned> indices)
{
    Word mask = 0;
    for (unsigned i : indices) {
        if (i >= universe)
            throw InvalidInput(fmt::format("variable x{} out of range for n = {}", i, universe));
        if ((mask >> i) & 1)
            throw InvalidInput(fmt::format("variable x{} repeated", i));
        mask |= Word{1} << i;
    }
    return {universe, mask};
}

std::vector<unsigned> VarSet::members() const
{
    std::vector<unsigned> out;
    out.reserve(size());
    for (Word m = mask_; m != 0; m &= ~(Word{1} << (63 - std::countl_zero(m))))
        out.push_back(63 - static_cast<unsigned>(std::countl_zero(m)));
    return out;
}

std::string VarSet::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (unsigned v : members()) {
        if (!first)
            s += ',';
        s += fmt::format("x{}", v);
        first = false;
    }
    return s + "}";
}

Clause::Clause(unsigned universe, std::span<const Literal> literals)
{
    Word mask = 0;
    Word positive = 0;
    for (const Literal& lit : literals) {
        if (lit.var >= universe)
            throw InvalidInput(fmt::format("variable x{} out of range for n = {}", lit.var, universe));
        const Word bit = Word{1} << lit.var;
        if (mask & bit) {
            if (((positive & bit) != 0) != lit.positive)
                throw InvalidInput(fmt::format("tautological clause: x{} occurs with both signs", lit.var));
            continue;
        }
        mask |= bit;
        if (lit.positive)
            positive |= bit;
    }
    vars_ = VarSet(universe, mask);
    positive_ = positive;
    signs_ = extract_bits(positive, mask);
}

Clause::Clause(const PartialAssignment& pattern)
    : vars_(pattern.vars),
      signs_(pattern.bits & low_mask(pattern.vars.size())),
      positive_(deposit_bits(signs_, pattern.vars.mask()))
{
}

std::vector<Literal> Clause::literals() const
{
    std::vector<Literal> out;
    for (unsigned v : vars_.members())
        out.push_back({v, ((positive_ >> v) & 1) != 0});
    return out;
}

std::string Clause::to_string() const
{
    std::string s = "(";
    bool first = true;
    for (const Literal& lit : literals()) {
        if (!first)
            s += " | ";
        s += fmt::format("{}x{}", lit.positive ? "" : "~", lit.var);
        first = false;
    }
    return s + ")";
}

Formula::Formula(unsigned n) : n_(n)
{
    if (n > kMaxVariables)
        throw InvalidInput(fmt::format("{} variables exceed the supported maximum of {}", n, kMaxVariables));
}

Formula::Formula(unsigned n, std::vector<Clause> clauses) : Formula(n)
{
    clauses_.reserve(clauses.size());
    for (Clause& c : clauses)
        add(std::move(c));
}

void Formula::add(Clause clause)
{
    if (clause.vars().universe() != n_)
        throw InvalidInput(fmt::format("clause over {} variables added to a formula over {}",
                                       clause.vars().universe(), n_));
    clauses_.push_back(std::move(clause));
}

PartialAssignment clause_to_binary(const Clause& c)
{
    return {c.vars(), c.signs()};
}

bool eval_clause(const Clause& c, const Assignment& a)
{
    return c.satisfied_by(a.bits);
}

bool eval_formula(const Formula& f, const Assignment& a)
{
    return f.satisfied_by(a.bits);
}

std::vector<Clause> expand_to_ssat(const Clause& c, unsigned n, unsigned limit)
{
    if (c.vars().universe() != n)
        throw InvalidInput(fmt::format("clause universe {} does not match n = {}", c.vars().universe(), n));
    const Word missing = low_mask(n) & ~c.vars().mask();
    const unsigned free_count = static_cast<unsigned>(std::popcount(missing));
    if (free_count > limit)
        throw ResourceLimit(fmt::format("expansion too large: 2^{} clauses (limit 2^{})", free_count, limit));

    const Word count = Word{1} << free_count;
    const VarSet full = VarSet::full(n);
    std::vector<Clause> out;
    out.reserve(count);
    // All-positive extension first, matching the usual written order.
    for (Word pattern = count; pattern-- > 0;) {
        const Word positive = c.positive_mask() | deposit_bits(pattern, missing);
        out.emplace_back(PartialAssignment{full, positive});
    }
    return out;
}

} // namespace boardsat
