#pragma once

// rho-conjugation N -> N_g = rho(g) N rho(g)^-1 and the orbit partition it
// induces on Hopf-Galois structures.

#include <string>
#include <vector>

#include "hgslab/hgs.hpp"

namespace hgslab {

RegularSubgroup rho_conjugate(const RegularSubgroup& n, ElementId g);
// The same subgroup computed as phi_g N phi_g^-1 with phi_g the inner
// automorphism of G, used to cross-check rho_conjugate.
RegularSubgroup inner_conjugate(const RegularSubgroup& n, ElementId g);

// rho(x) normalizes N.
bool rho_normalizes(const RegularSubgroup& n, ElementId x);

struct RhoOrbit {
  RegularSubgroup base;
  std::vector<RegularSubgroup> members;  // canonical order
  Subgroup stabilizer;                   // {g : N_g = N}

  std::size_t size() const { return members.size(); }
  // Hash of the least member; stable across runs.
  std::string id() const { return members.front().hash(); }
  bool contains(const RegularSubgroup& n) const;
};

RhoOrbit rho_orbit(const RegularSubgroup& n);
// Orbits ordered by their least member.
std::vector<RhoOrbit> rho_partition(const std::vector<RegularSubgroup>& ns);
std::vector<RhoOrbit> rho_partition(const HgsInventory& inventory);

// N_g == N_h.
bool same_conjugate(const RegularSubgroup& n, ElementId g, ElementId h);
// (N_g)^opp == (N^opp)_g, both sides computed independently.
bool opp_of_conjugate_check(const RegularSubgroup& n, ElementId g);

}  // namespace hgslab
