#ifndef INVTENSOR_KERNELS_HPP
#define INVTENSOR_KERNELS_HPP

#include <cstdint>

#include "invtensor/decomp.hpp"

namespace invtensor {

/// r^{|F|} * prod(d_i): multiply-adds of the naive enumeration.
std::uint64_t naive_cost(const Decomposition& d);

/// Reference kernel: every assignment in lexicographic order, no pruning.
/// Throws BudgetExceeded when naive_cost exceeds the budget.
GlobalTensor contract_serial(const Decomposition& d, std::uint64_t budget = kDefaultBudget);

/// Depth-first over copy positions, skipping subtrees as soon as a completed
/// site has a zero local vector. Prefix tasks run under OpenMP with private
/// accumulators summed in task order, so the output does not depend on the
/// thread count. Work beyond the budget throws BudgetExceeded.
GlobalTensor contract_parallel(const Decomposition& d, std::uint64_t budget = kDefaultBudget);

}  // namespace invtensor

#endif
