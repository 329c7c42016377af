#ifndef INVTENSOR_COMMON_HPP
#define INVTENSOR_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace invtensor {

using cplx = std::complex<double>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data: bad shapes, out-of-range ids, unparsable files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Well-formed data that does not meet an operation's precondition
/// (action not free, tensor not invariant, complex disconnected, ...).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct Violation {
  std::string kind;
  std::string detail;
  double deviation = 0.0;
};

/// Axiom checks report every violation instead of stopping at the first.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string kind, std::string detail, double deviation = 0.0) {
    violations.push_back({std::move(kind), std::move(detail), deviation});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Tolerance and work budget threaded through the constructions.
struct RunOptions {
  double tol = kDefaultTol;
  std::uint64_t budget = kDefaultBudget;
};

/// a*b clamped to UINT64_MAX.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

/// base^exp clamped to UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < exp; ++k) out = saturating_mul(out, base);
  return out;
}

}  // namespace invtensor

#endif
