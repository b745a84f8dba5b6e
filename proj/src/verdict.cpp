#include "boardsat/verdict.hpp"

#include "boardsat/error.hpp"
#include "boardsat/instance.hpp"

#include <fmt/format.h>

namespace boardsat {

std::string_view to_string(Answer a) noexcept
{
    switch (a) {
    case Answer::Sat: return "sat";
    case Answer::Unsat: return "unsat";
    case Answer::Inconclusive: return "inconclusive";
    case Answer::Cancelled: return "cancelled";
    }
    return "?";
}

std::string_view to_string(EngineKind e) noexcept
{
    switch (e) {
    case EngineKind::Deterministic: return "deterministic";
    case EngineKind::Random: return "random";
    case EngineKind::Tracker: return "tracker";
    case EngineKind::Portfolio: return "portfolio";
    }
    return "?";
}

std::string_view to_string(UnsatReason r) noexcept
{
    switch (r) {
    case UnsatReason::None: return "none";
    case UnsatReason::BlockedBoard: return "blocked-board";
    case UnsatReason::IncompatibleBoards: return "incompatible-boards";
    case UnsatReason::SearchExhausted: return "search-exhausted";
    case UnsatReason::CandidatesExhausted: return "candidates-exhausted";
    }
    return "?";
}

ImplicitFormula::ImplicitFormula(unsigned n, std::optional<Word> witness) : n_(n), witness_(witness)
{
    if (n > kMaxVariables)
        throw InvalidInput(fmt::format("{} variables exceed the supported maximum of {}", n, kMaxVariables));
    if (witness && *witness > low_mask(n))
        throw InvalidInput(fmt::format("witness {} does not fit in {} variables", *witness, n));
}

std::string ImplicitFormula::dnf() const
{
    if (!witness_)
        return "false";
    if (n_ == 0)
        return "true";
    std::string s = "(";
    for (unsigned i = n_; i-- > 0;) {
        s += fmt::format("{}x{}", ((*witness_ >> i) & 1) ? "" : "~", i);
        if (i != 0)
            s += " & ";
    }
    return s + ")";
}

} // namespace boardsat
