#include "boardsat/dimacs.hpp"

#include "boardsat/error.hpp"

#include <charconv>
#include <optional>

#include <fmt/format.h>

namespace boardsat {
namespace {

bool is_space(char ch)
{
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f';
}

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i]))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i]))
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<long long> to_integer(std::string_view token)
{
    if (!token.empty() && token.front() == '+')
        token.remove_prefix(1);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        return std::nullopt;
    return value;
}

} // namespace

Formula parse_dimacs(std::string_view text, std::vector<ParseDiagnostic>* warnings)
{
    std::optional<Formula> formula;
    long long declared_clauses = 0;
    std::vector<Literal> pending;
    std::size_t pending_line = 0;
    std::size_t line_no = 0;
    std::size_t last_line = 1;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto tokens = split_tokens(line);
        if (tokens.empty())
            continue;
        last_line = line_no;
        if (tokens.front().front() == 'c')
            continue;
        if (tokens.front().front() == '%')
            break;

        if (tokens.front() == "p") {
            if (formula)
                throw ParseError(line_no, "duplicate problem line");
            if (tokens.size() != 4 || tokens[1] != "cnf")
                throw ParseError(line_no, "expected 'p cnf <variables> <clauses>'");
            const auto vars = to_integer(tokens[2]);
            const auto clauses = to_integer(tokens[3]);
            if (!vars || *vars < 0)
                throw ParseError(line_no, "invalid variable count");
            if (!clauses || *clauses < 0)
                throw ParseError(line_no, "invalid clause count");
            if (*vars > static_cast<long long>(kMaxVariables))
                throw ParseError(line_no, fmt::format("{} variables exceed the supported maximum of {}", *vars,
                                                      kMaxVariables));
            formula.emplace(static_cast<unsigned>(*vars));
            declared_clauses = *clauses;
            continue;
        }

        if (!formula)
            throw ParseError(line_no, "missing 'p cnf' header before clauses");

        const auto n = static_cast<long long>(formula->variable_count());
        for (std::string_view token : tokens) {
            const auto lit = to_integer(token);
            if (!lit)
                throw ParseError(line_no, fmt::format("invalid literal '{}'", token));
            if (*lit == 0) {
                try {
                    formula->add(Clause(formula->variable_count(), pending));
                } catch (const InvalidInput& e) {
                    throw ParseError(pending_line ? pending_line : line_no, e.what());
                }
                pending.clear();
                pending_line = 0;
                continue;
            }
            if (*lit > n || *lit < -n)
                throw ParseError(line_no, fmt::format("literal {} exceeds declared variable count {}", *lit, n));
            const long long magnitude = *lit < 0 ? -*lit : *lit;
            if (pending.empty())
                pending_line = line_no;
            pending.push_back({static_cast<unsigned>(magnitude - 1), *lit > 0});
        }
    }

    if (!formula)
        throw ParseError(last_line, "missing 'p cnf' header");
    if (!pending.empty())
        throw ParseError(pending_line, "unterminated final clause (missing 0)");
    if (warnings && static_cast<long long>(formula->clause_count()) != declared_clauses)
        warnings->push_back({last_line, fmt::format("header declares {} clauses, found {}", declared_clauses,
                                                    formula->clause_count())});
    return std::move(*formula);
}

std::string write_dimacs(const Formula& f)
{
    std::string out = fmt::format("p cnf {} {}\n", f.variable_count(), f.clause_count());
    for (const Clause& c : f.clauses()) {
        const auto lits = c.literals();
        for (auto it = lits.rbegin(); it != lits.rend(); ++it)
            fmt::format_to(std::back_inserter(out), "{} ", it->positive ? static_cast<long long>(it->var) + 1
                                                                         : -static_cast<long long>(it->var) - 1);
        out += "0\n";
    }
    return out;
}

} // namespace boardsat
