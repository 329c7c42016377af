#include "invtensor/random.hpp"

namespace invtensor {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

cplx random_complex(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

GlobalTensor random_tensor(const std::vector<int>& dims, Rng& rng) {
  GlobalTensor t(dims);
  for (auto& x : t.entries) x = random_complex(rng);
  return t;
}

GlobalTensor random_nonnegative_tensor(const std::vector<int>& dims, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  GlobalTensor t(dims);
  for (auto& x : t.entries) x = unif(rng);
  return t;
}

GlobalTensor random_invariant_tensor(const WscAction& a, const std::vector<int>& dims, Rng& rng) {
  return symmetrize(a, random_tensor(dims, rng));
}

Decomposition random_decomposition(const WscAction& a, int r, const std::vector<int>& dims, Rng& rng,
                                   bool nonnegative) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto compute = [&](int i, const std::vector<int>&, cplx* out) {
    for (int c = 0; c < dims[i]; ++c) out[c] = nonnegative ? cplx(unif(rng)) : random_complex(rng);
  };
  return materialize_invariant(a, r, dims, compute);
}

}  // namespace invtensor
