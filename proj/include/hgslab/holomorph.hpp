#pragma once

#include <cstddef>
#include <vector>

#include "hgslab/group.hpp"
#include "hgslab/perm.hpp"

namespace hgslab {

// Hol(M) = lambda(M) Aut(M) realised inside Perm(M). Element index
// m * |Aut(M)| + k stands for x -> m * theta_k(x); automorphism 0 is the
// identity, so index 0 is the identity of Hol(M).
struct Holomorph {
  FiniteGroup base;
  std::vector<GroupHom> automorphisms;
  FiniteGroup group;
  std::vector<Perm> perms;

  std::size_t order() const { return perms.size(); }
  ElementId translation_part(ElementId h) const {
    return static_cast<ElementId>(h / automorphisms.size());
  }
  std::size_t automorphism_part(ElementId h) const {
    return h % automorphisms.size();
  }
};

// Throws Error(kOrderTooLarge) if |M| * |Aut(M)| exceeds 4096.
Holomorph holomorph(const FiniteGroup& m);

// Factor p as lambda(m) theta with theta in Aut(M); false if p is not in
// Hol(M). Works without building the holomorph.
bool factor_in_holomorph(const FiniteGroup& m, const Perm& p,
                         ElementId* translation = nullptr,
                         GroupHom* automorphism = nullptr);

}  // namespace hgslab
