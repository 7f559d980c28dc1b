#pragma once

// The Hopf-Galois correspondence at group level: G-stable subgroups P of N
// and the subgroups U of G whose fixed fields they cut out.

#include <vector>

#include "hgslab/group.hpp"
#include "hgslab/hgs.hpp"
#include "hgslab/perm.hpp"

namespace hgslab {

// Subgroups of N closed under g * eta = lambda(g) eta lambda(g)^-1, sorted by
// (order, elements).
std::vector<PermGroup> g_stable_subgroups(const RegularSubgroup& n);

// U = <eta^-1[0] : eta in P>. Throws Error(kStabilityViolation) if P is not
// a G-stable subgroup of N or if |U| != |P|.
Subgroup fixed_subgroup(const RegularSubgroup& n, const PermGroup& p);

struct LatticeEntry {
  PermGroup p;
  Subgroup u;
};

struct RealizableLattice {
  RegularSubgroup structure;
  std::vector<LatticeEntry> entries;  // in g_stable_subgroups order

  // Sorted element lists of the realized subgroups U.
  std::vector<std::vector<ElementId>> realized() const;
  // P -> U is injective and P1 <= P2 iff U1 <= U2.
  bool injective() const;
  bool inclusion_preserving() const;
};

RealizableLattice realizable_lattice(const RegularSubgroup& n);

// Pairs P with rho(g) P rho(g)^-1 and checks that it is G-stable in N_g with
// fixed subgroup g U g^-1, and that both lattices have the same size.
bool realizable_transport_check(const RegularSubgroup& n, ElementId g);

}  // namespace hgslab
