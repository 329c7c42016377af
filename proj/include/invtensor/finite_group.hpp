#ifndef INVTENSOR_FINITE_GROUP_HPP
#define INVTENSOR_FINITE_GROUP_HPP

#include <vector>

#include "invtensor/common.hpp"

namespace invtensor {

using GroupTable = std::vector<std::vector<int>>;

/// A finite group given by its multiplication table. Elements are
/// 0..order-1 and element 0 is the identity. `mul(a, b)` is the product ab,
/// i.e. b acts first when the group acts on the left.
class FiniteGroup {
 public:
  /// Checks closure, identity at 0, Latin-square rows/columns and
  /// associativity; throws InvalidInput on any failure.
  static FiniteGroup from_table(GroupTable mul);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int k);
  /// Permutations of {0..m-1} in lexicographic order (identity first);
  /// the product is composition, (ab)(x) = a(b(x)).
  static FiniteGroup symmetric(int m);
  /// Rotations r^i (ids 0..k-1) followed by reflections r^i s (ids k..2k-1).
  static FiniteGroup dihedral(int k);

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const GroupTable& table() const { return mul_; }

  /// Permutation attached to an element of `symmetric(m)`; empty otherwise.
  const std::vector<std::vector<int>>& permutations() const { return perms_; }

  bool is_subgroup(const std::vector<int>& elements) const;
  bool is_normal_subgroup(const std::vector<int>& elements) const;
  /// Subset generated by `gens` (closure under products).
  std::vector<int> generated_by(const std::vector<int>& gens) const;

  bool operator==(const FiniteGroup& other) const { return mul_ == other.mul_; }

 private:
  FiniteGroup() = default;
  GroupTable mul_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> perms_;
};

/// Left cosets gH of a normal subgroup, labelled 0.. in order of their
/// smallest element.
struct Quotient {
  int count = 0;
  std::vector<int> coset_of;        ///< element -> coset label
  std::vector<int> representative;  ///< coset label -> smallest element
  GroupTable mul;                   ///< multiplication of coset labels
};

Quotient quotient(const FiniteGroup& g, const std::vector<int>& normal_subgroup);

/// The subgroup as a group in its own right; `embedding[k]` is the element of
/// `g` carrying new id k (identity stays 0).
struct SubgroupView {
  FiniteGroup group;
  std::vector<int> embedding;
};

SubgroupView subgroup(const FiniteGroup& g, const std::vector<int>& elements);

}  // namespace invtensor

#endif
