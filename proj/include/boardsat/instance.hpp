#pragma once

#include "boardsat/cnf.hpp"

#include <optional>
#include <string>
#include <variant>

namespace boardsat {

/// Evaluation-only formula with at most one satisfying assignment: the single
/// DNF term fixing every variable to the hidden witness, or nothing at all.
class ImplicitFormula {
public:
    ImplicitFormula(unsigned n, std::optional<Word> witness);

    unsigned variable_count() const noexcept { return n_; }
    const std::optional<Word>& witness() const noexcept { return witness_; }
    bool satisfied_by(Word assignment) const noexcept { return witness_ && *witness_ == assignment; }

    /// "(~x2 & ~x1 & x0)" for witness 001; "false" without a witness.
    std::string dnf() const;

private:
    unsigned n_;
    std::optional<Word> witness_;
};

/// What the engines search: an explicit CNF or an implicit instance.
class Instance {
public:
    Instance(Formula f) : value_(std::move(f)) {}
    Instance(ImplicitFormula f) : value_(std::move(f)) {}

    unsigned variable_count() const noexcept
    {
        return std::visit([](const auto& f) { return f.variable_count(); }, value_);
    }

    bool satisfied_by(Word assignment) const noexcept
    {
        if (const auto* f = std::get_if<Formula>(&value_))
            return f->satisfied_by(assignment);
        return std::get<ImplicitFormula>(value_).satisfied_by(assignment);
    }

    const Formula* formula() const noexcept { return std::get_if<Formula>(&value_); }
    const ImplicitFormula* implicit() const noexcept { return std::get_if<ImplicitFormula>(&value_); }

private:
    std::variant<Formula, ImplicitFormula> value_;
};

} // namespace boardsat
