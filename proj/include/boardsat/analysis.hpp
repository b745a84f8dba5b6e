#pragma once

#include "boardsat/bits.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace boardsat {

/// Exact probability as a reduced fraction.
struct Probability {
    Word numerator = 0;
    Word denominator = 1;
    bool approximate = false;

    double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    friend bool operator==(const Probability&, const Probability&) = default;
};

/// Exact comparison a < b by cross multiplication.
bool operator<(const Probability& a, const Probability& b) noexcept;
inline bool operator<=(const Probability& a, const Probability& b) noexcept { return !(b < a); }

/// s / (2^n - k): chance the next untried candidate is a witness after k
/// distinct failures. Requires k <= 2^n - s; throws InvalidInput otherwise.
Probability prob_sequential(Word s, Word k, unsigned n);
/// s / (2^n - k 2^p): after k iterations that each clear 2^p candidates.
Probability prob_random_engine(Word s, Word k, unsigned n, unsigned p);
/// s / (2^n - k 2^(p+1)), flagged approximate: assumes every report from both
/// producers is delivered and new.
Probability prob_tracker(Word s, Word k, unsigned n, unsigned p);

enum class ProbModel { Sequential, RandomEngine, Tracker };

struct ProbPoint {
    Word k = 0;
    Word s = 0;
    unsigned n = 0;
    unsigned p = 0;
    ProbModel model = ProbModel::Sequential;
    Probability value;
};

std::string_view to_string(ProbModel m) noexcept;
ProbPoint prob_point(ProbModel model, Word s, Word k, unsigned n, unsigned p);

inline constexpr std::string_view kProbCsvHeader = "k,s,n,p,model,prob_num,prob_den,prob_float";
std::string to_csv_row(const ProbPoint& point);

struct HitHistogram {
    unsigned n = 0;
    unsigned p = 0;
    std::uint64_t trials = 0;
    /// Iteration (1-based) at which each trial found its witness, or the
    /// iteration count at exhaustion for unsatisfiable trials.
    std::vector<std::uint64_t> iterations;
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t exhausted = 0;
    double mean = 0.0;
    double stddev = 0.0;
};

/// Runs the random engine alone on fresh hidden-witness instances.
HitHistogram empirical_hit_histogram(unsigned n, unsigned p, std::uint64_t trials, std::uint64_t seed,
                                     bool satisfiable = true);

} // namespace boardsat
