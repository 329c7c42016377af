#ifndef INVTENSOR_RANDOM_HPP
#define INVTENSOR_RANDOM_HPP

#include <cstdint>
#include <random>

#include "invtensor/decomp.hpp"

namespace invtensor {

using Rng = std::mt19937_64;

/// Independent stream per (seed, stream) pair.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Standard complex normal.
cplx random_complex(Rng& rng);

GlobalTensor random_tensor(const std::vector<int>& dims, Rng& rng);
/// Entries uniform in [0, 1).
GlobalTensor random_nonnegative_tensor(const std::vector<int>& dims, Rng& rng);
GlobalTensor random_invariant_tensor(const WscAction& a, const std::vector<int>& dims, Rng& rng);

/// Random locals satisfying condition (b); nonnegative draws real uniform
/// entries in [0, 1).
Decomposition random_decomposition(const WscAction& a, int r, const std::vector<int>& dims, Rng& rng,
                                   bool nonnegative = false);

}  // namespace invtensor

#endif
