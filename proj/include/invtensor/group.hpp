#ifndef INVTENSOR_GROUP_HPP
#define INVTENSOR_GROUP_HPP

#include <vector>

#include "invtensor/common.hpp"
#include "invtensor/complex.hpp"
#include "invtensor/finite_group.hpp"

namespace invtensor {

using Perm = std::vector<int>;

/// A finite group acting on a complex: per element a vertex permutation and a
/// permutation of canonical copy positions.
struct WscAction {
  FiniteGroup group = FiniteGroup::trivial();
  Wsc complex;
  std::vector<Perm> vertex_act;
  std::vector<Perm> copy_act;

  /// Checks table shapes only; throws InvalidInput.
  WscAction(FiniteGroup g, Wsc w, std::vector<Perm> vertex, std::vector<Perm> copy);
  WscAction() = default;

  int order() const { return group.order(); }
  int vertex(int g, int i) const { return vertex_act[g][i]; }
  int copy(int g, int p) const { return copy_act[g][p]; }
};

ValidationReport validate_action(const WscAction& a);
void require_valid(const WscAction& a);

bool is_free(const WscAction& a);
bool is_blending(const WscAction& a);
bool is_strongly_blending(const WscAction& a);

/// z[p] for every canonical copy position p.
struct ZMap {
  std::vector<int> values;
};

/// Throws PreconditionFailed naming a stabilizing (g, copy) pair when the
/// action is not free.
ZMap z_map(const WscAction& a);

/// Multiplies all facet weights by |G|; copy c of a facet with label h becomes
/// copy c*|G| + h and g sends (F_c)^h to (gF_c)^{gh}.
WscAction free_refinement(const WscAction& a);

enum class OrbitDomain { vertices, copies };

/// Orbits sorted by smallest member, each sorted ascending.
std::vector<std::vector<int>> orbits(const WscAction& a, OrbitDomain on);

/// Smallest vertex in the orbit of each vertex.
std::vector<int> vertex_orbit_rep(const WscAction& a);

/// Group elements fixing vertex i.
std::vector<int> stabilizer(const WscAction& a, int i);

WscAction trivial_action(const Wsc& w);
/// Vertex permutations given per element; copy k of F goes to copy k of gF.
WscAction induced_action(const FiniteGroup& g, const Wsc& w, const std::vector<Perm>& vertex);
/// Same group and vertex action restricted to the elements of a subgroup.
WscAction restrict_action(const WscAction& a, const std::vector<int>& subgroup_elements);

/// S_{n+1} permuting the vertices of the n-simplex.
WscAction symmetric_simplex_action(int n);
/// S_{n+1} permuting the vertices of the complete graph.
WscAction symmetric_complete_action(int n);
/// C_2 reflecting the line 0..n.
WscAction reflection_line_action(int n);
/// C_k rotating the circle on k vertices.
WscAction rotation_circle_action(int k);
/// C_2 on the double edge, optionally swapping the two copies.
WscAction double_edge_action(bool swap_copies);
/// Left multiplication on the Cayley complex; copies are directed edges.
WscAction cayley_action(const FiniteGroup& g, const std::vector<int>& generators);

/// Canonical copy position of the directed Cayley edge (a, b).
int cayley_edge_position(const Wsc& w, int a, int b);

}  // namespace invtensor

#endif
