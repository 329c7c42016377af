#ifndef INVTENSOR_COMPLEX_HPP
#define INVTENSOR_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "invtensor/common.hpp"
#include "invtensor/finite_group.hpp"

namespace invtensor {

/// Sorted vertex set without duplicates.
using Simplex = std::vector<int>;

struct FacetCopy {
  Simplex facet;
  int copy = 0;
  bool operator==(const FacetCopy&) const = default;
};

/// Weighted simplicial complex on vertices 0..n. Weights are stored sparsely;
/// an unstored nonempty set gets the gcd of its stored nonzero supersets
/// (0 if there are none). The empty set is ignored.
class Wsc {
 public:
  Wsc() = default;
  /// Throws InvalidInput on vertex ids outside [0..n], unsorted or duplicate
  /// entries, or an empty set. Axiom violations are left to `validate`.
  Wsc(int n, std::map<Simplex, std::uint64_t> weights);

  int n() const { return n_; }
  int num_vertices() const { return n_ + 1; }
  std::uint64_t weight(const Simplex& s) const;
  const std::map<Simplex, std::uint64_t>& stored() const { return weights_; }

  ValidationReport validate() const;
  bool valid() const { return validate().ok(); }

  /// Inclusion-maximal nonzero sets in lexicographic order.
  const std::vector<Simplex>& facets() const { return facets_; }
  std::uint64_t facet_weight(int f) const { return facet_weight_[f]; }
  /// Facet multiset in canonical order.
  const std::vector<FacetCopy>& copies() const { return copies_; }
  int num_copies() const { return static_cast<int>(copies_.size()); }
  /// Facet index (into `facets()`) of the copy at canonical position p.
  int facet_of_copy(int p) const { return copy_facet_[p]; }
  /// Canonical positions of the copies whose facet contains i, ascending.
  const std::vector<int>& incident(int i) const { return incident_[i]; }
  /// Position of copy p inside `incident(i)`, or -1.
  int local_slot(int i, int p) const { return slot_[i][p]; }
  int copy_position(const Simplex& facet, int copy) const;
  int facet_index(const Simplex& facet) const;

  bool operator==(const Wsc& other) const { return n_ == other.n_ && weights_ == other.weights_; }

 private:
  void derive();

  int n_ = 0;
  std::map<Simplex, std::uint64_t> weights_;
  std::vector<Simplex> facets_;
  std::vector<std::uint64_t> facet_weight_;
  std::vector<FacetCopy> copies_;
  std::vector<int> copy_facet_;
  std::vector<int> first_copy_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> slot_;
};

ValidationReport validate_wsc(const Wsc& w);

/// Throws PreconditionFailed when `w` fails validation.
void require_valid(const Wsc& w);

std::vector<Simplex> facets(const Wsc& w);
std::vector<FacetCopy> facet_multiset(const Wsc& w);
std::vector<FacetCopy> incident(const Wsc& w, int i);

bool is_connected(const Wsc& w);

Wsc simplex_complex(int n);
Wsc complete_complex(int n);
Wsc line_complex(int n);
/// Circle on vertices 0..k-1 (k >= 3), edges {i, i+1 mod k}.
Wsc circle_complex(int k);
Wsc double_edge_complex();
/// Cayley complex on the elements of `g`: {a,b} gets weight 2 if both
/// directed edges exist, 1 if one does.
Wsc cayley_complex(const FiniteGroup& g, const std::vector<int>& generators);

/// Multiplies every facet weight by m; other stored weights stay as they are.
Wsc scale_weights(const Wsc& w, std::uint64_t m);
/// Inverse of scale_weights: divides every facet weight by m.
Wsc unscale_weights(const Wsc& w, std::uint64_t m);

enum class ComplexFamily { simplex, complete, line, circle, double_edge, cayley };

struct ComplexParams {
  int n = 1;
  const FiniteGroup* group = nullptr;
  std::vector<int> generators;
};

Wsc standard_complex(ComplexFamily family, const ComplexParams& params);

}  // namespace invtensor

#endif
