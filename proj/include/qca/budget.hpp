#pragma once

#include <cstdint>

#include "qca/errors.hpp"

namespace qca {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deterministic work limiter: while a guard is alive, every term-pair
/// operation in polynomial and torus multiplication draws from its budget,
/// and exhaustion throws BudgetExceeded.  Guards nest; without one, work is
/// unlimited.  Counting operations (not wall time) keeps sampling decisions
/// reproducible across machines.
class OpBudget {
public:
    explicit OpBudget(std::uint64_t ops) : previous_(remaining_), active_prev_(active_) {
        remaining_ = ops;
        active_ = true;
    }
    ~OpBudget() {
        remaining_ = previous_;
        active_ = active_prev_;
    }
    OpBudget(const OpBudget&) = delete;
    OpBudget& operator=(const OpBudget&) = delete;

    static void charge(std::uint64_t ops) {
        if (!active_) return;
        if (ops > remaining_) throw BudgetExceeded("operation budget exhausted");
        remaining_ -= ops;
    }

private:
    static thread_local std::uint64_t remaining_;
    static thread_local bool active_;
    std::uint64_t previous_;
    bool active_prev_;
};

}  // namespace qca
