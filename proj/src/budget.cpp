#include "qca/budget.hpp"

namespace qca {

thread_local std::uint64_t OpBudget::remaining_ = 0;
thread_local bool OpBudget::active_ = false;

}  // namespace qca
