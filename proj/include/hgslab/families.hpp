#pragma once

// Explicitly described structures on metacyclic, dihedral and symmetric
// groups, built directly from their generators.
//
// Metacyclic(p, q, d): G = <s, t | s^p = t^q = e, t s t^-1 = s^d>.
// Dihedral(n): G = <r, s | r^n = s^2 = e, s r s^-1 = r^-1>.

#include <vector>

#include "hgslab/constructions.hpp"
#include "hgslab/group.hpp"
#include "hgslab/hgs.hpp"
#include "hgslab/perm.hpp"

namespace hgslab {

// s^i t^j in a metacyclic group (exponents reduced).
ElementId metacyclic_element(const FiniteGroup& g, long long i, long long j);
// r^i s^j in a dihedral group (exponents reduced).
ElementId dihedral_element(const FiniteGroup& g, long long i, long long j);

// lambda(x) rho(y).
Perm lambda_rho(const FiniteGroup& g, ElementId x, ElementId y);

// <gens>, certified.
RegularSubgroup structure_from_generators(const FiniteGroup& g,
                                          std::vector<Perm> gens);

// <lambda(s) rho(s^(i(1-d)) t)>, cyclic of order pq.
RegularSubgroup metacyclic_cyclic_structure(const FiniteGroup& g, long long i);
// <lambda(s), lambda(t) rho((s^k t)^-1)>, of metacyclic type; x -> t x s^k t.
// rho(s) sends the k-th member to the (k + 1 - d)-th.
RegularSubgroup metacyclic_split_structure(const FiniteGroup& g, long long k);

// <lambda(r) rho(r^(2k) s), lambda(s)> for even n, of dihedral type.
RegularSubgroup dihedral_structure(const FiniteGroup& g, long long k);
// mu_k[r^i s^j] = r^(i + (-1)^(i+j+k)) s^j.
Perm dihedral_mu(const FiniteGroup& g, long long k);

// Fixed-point-free pair on dihedral G = M: f1(r^i s^j) = mu^i pi^j,
// f2(r^i s^j) = (mu^(2k) pi)^i.
struct HomPair {
  GroupHom f1;
  GroupHom f2;
};
HomPair dihedral_fpf_pair(const FiniteGroup& g, long long k);

// On sym(n): psi_x(t) = e for even t, x for odd t; x of order <= 2.
AbelianMap sign_abelian_map(const FiniteGroup& g, ElementId x);

// Metacyclic G with T = s^i <t> s^-i, S = <s>, and the unique structures on
// G/T (prime degree p) and on T (prime order q).
InducedInput metacyclic_induced_input(const FiniteGroup& g, long long i = 0);

}  // namespace hgslab
