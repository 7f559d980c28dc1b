#pragma once

// Ways of building G-stable regular subgroups: regular embeddings into the
// holomorph (Byott translation), fixed-point-free pairs, abelian maps and
// induced structures, together with how each transforms under
// rho-conjugation.

#include <vector>

#include "hgslab/group.hpp"
#include "hgslab/hgs.hpp"
#include "hgslab/perm.hpp"

namespace hgslab {

// beta : source -> Perm(target), beta[g] the image of g.
struct HolEmbedding {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Perm> beta;
};

// Throws Error(kInvalidEmbedding) unless beta is a homomorphism with regular
// image inside Hol(target).
void validate_embedding(const HolEmbedding& beta);

// a^-1(g) = beta(g)[0]; N = {a lambda_M(mu) a^-1 : mu in M} on the source.
RegularSubgroup from_hol_embedding(const HolEmbedding& beta);

// iota: M -> n.star_group() an isomorphism; a(mu) = iota(mu) and
// beta(g) = a^-1 lambda(g) a. Throws Error(kInvalidHom) if iota is not an
// isomorphism onto N.
HolEmbedding to_hol_embedding(const RegularSubgroup& n, const GroupHom& iota);

// beta2(g) = theta beta1(g) theta^-1 for some theta in Aut(M).
bool equivalent_embeddings(const HolEmbedding& b1, const HolEmbedding& b2);

// beta o phi for an automorphism phi of the source.
HolEmbedding precompose(const HolEmbedding& beta, const GroupHom& phi);

// from_hol_embedding(beta o phi_{g^-1}) == rho_conjugate(from_hol_embedding(beta), g).
bool embedding_conjugation_check(const HolEmbedding& beta, ElementId g);

// f1(h) == f2(h) only for h = e.
bool fpf_check(const GroupHom& f1, const GroupHom& f2);
// h -> lambda_M(f1(h)) rho_M(f2(h)). Throws Error(kNotFixedPointFree) or
// Error(kNotRegular).
HolEmbedding fpf_embedding(const GroupHom& f1, const GroupHom& f2);
RegularSubgroup hgs_from_fpf(const GroupHom& f1, const GroupHom& f2);
// The pair (f1 phi_{g^-1}, f2 phi_{g^-1}) yields rho_conjugate(N, g), where
// N comes from (f1, f2).
bool fpf_conjugation_check(const GroupHom& f1, const GroupHom& f2, ElementId g);

struct AbelianMap {
  GroupHom psi;
};

// Endomorphisms with abelian image, sorted by image sequence.
std::vector<AbelianMap> abelian_maps(const FiniteGroup& group);
// N_psi = {lambda(h psi(h)^-1) rho(psi(h)^-1) : h}. Throws
// Error(kConstructionFailure) if the result is not a G-stable regular
// subgroup.
RegularSubgroup hgs_from_abelian_map(const AbelianMap& psi);
// phi psi phi^-1.
AbelianMap conjugate_abelian_map(const AbelianMap& psi, const GroupHom& phi);

// T <= G with normal complement S; A a G-stable regular subgroup of
// Perm(G/T) (points are coset indices of coset_space(G, T)); B a T-stable
// regular subgroup of Perm(T) (points are positions in T.elements).
struct InducedInput {
  FiniteGroup group;
  Subgroup t;
  Subgroup s;
  PermGroup a;
  PermGroup b;
};

// Finds S as a normal complement of T (Error(kNoNormalComplement)) and
// validates the rest.
InducedInput make_induced_input(const FiniteGroup& group, const Subgroup& t,
                                PermGroup a, PermGroup b);
// Throws Error(kInvalidSpec) naming the violated condition.
void validate_induced_input(const InducedInput& in);

// eta(a, b)[st] = a[s] b[t], with A read on S through s -> sT. Throws
// Error(kIdentificationFailure) if s -> sT is not a bijection.
RegularSubgroup induced_hgs(const InducedInput& in);

// phi A phi^-1 on G/phi(T) and phi B phi^-1 on phi(T). phi must be an
// automorphism of G preserving S, else Error(kNotPreserved).
PermGroup transport_quotient_structure(const InducedInput& in,
                                       const GroupHom& phi);
PermGroup transport_subgroup_structure(const InducedInput& in,
                                       const GroupHom& phi);
InducedInput transport_induced_input(const InducedInput& in,
                                     const GroupHom& phi);

// Regular subgroups of Perm(G/T) normalized by the left translations.
// Supported for [G:T] <= 8 and for prime [G:T] <= 11; otherwise
// Error(kDegreeTooLarge).
std::vector<PermGroup> coset_stable_regular_subgroups(const FiniteGroup& group,
                                                      const Subgroup& t);

// T-stable regular subgroups of Perm(T), on positions in T.elements.
std::vector<PermGroup> subgroup_stable_regular_subgroups(const Subgroup& t);

// Every induced structure over every subgroup T with a normal complement
// (T != {e}, T != G) whose coset degree is supported. Sorted, deduplicated.
std::vector<RegularSubgroup> induced_structures_search(const FiniteGroup& group);

}  // namespace hgslab
