#pragma once

#include "boardsat/bits.hpp"

namespace boardsat {

/// One-way channel for candidates known to falsify the formula. Delivery is
/// best effort: implementations may drop reports.
class FailureSink {
public:
    virtual ~FailureSink() = default;
    virtual void report(Word candidate) noexcept = 0;
};

class NullSink final : public FailureSink {
public:
    void report(Word) noexcept override {}
};

} // namespace boardsat
