#include "hgslab/rho.hpp"

#include <algorithm>
#include <map>

namespace hgslab {

RegularSubgroup rho_conjugate(const RegularSubgroup& n, ElementId g) {
  if (g == 0) return n;
  return certify(n.group(),
                 n.perms().conjugated_by(rho_embed(n.group(), g)))
      .with_type(n.type_label());
}

RegularSubgroup inner_conjugate(const RegularSubgroup& n, ElementId g) {
  const Perm phi = hom_as_perm(inner_automorphism(n.group(), g));
  return certify(n.group(), n.perms().conjugated_by(phi))
      .with_type(n.type_label());
}

bool rho_normalizes(const RegularSubgroup& n, ElementId x) {
  const Perm r = rho_embed(n.group(), x);
  return n.perms().normalized_by(std::span<const Perm>(&r, 1));
}

bool RhoOrbit::contains(const RegularSubgroup& n) const {
  return std::binary_search(members.begin(), members.end(), n);
}

RhoOrbit rho_orbit(const RegularSubgroup& n) {
  const FiniteGroup& g = n.group();
  std::vector<RegularSubgroup> members;
  std::vector<ElementId> stab;
  for (ElementId x = 0; x < g.order(); ++x) {
    RegularSubgroup conj = rho_conjugate(n, x);
    if (conj == n) stab.push_back(x);
    members.push_back(std::move(conj));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup stabilizer = subgroup_closure(g, stab);
  stabilizer.generators = small_generating_set(subgroup_as_group(stabilizer));
  for (ElementId& x : stabilizer.generators) x = stabilizer.elements[x];
  return RhoOrbit{n, std::move(members), std::move(stabilizer)};
}

std::vector<RhoOrbit> rho_partition(const std::vector<RegularSubgroup>& ns) {
  std::vector<RhoOrbit> orbits;
  std::vector<RegularSubgroup> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> assigned(sorted.size(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (assigned[i]) continue;
    RhoOrbit orbit = rho_orbit(sorted[i]);
    for (const RegularSubgroup& m : orbit.members) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
      if (it != sorted.end() && *it == m) {
        assigned[static_cast<std::size_t>(it - sorted.begin())] = 1;
      }
    }
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const RhoOrbit& a, const RhoOrbit& b) {
              return a.members.front() < b.members.front();
            });
  return orbits;
}

std::vector<RhoOrbit> rho_partition(const HgsInventory& inventory) {
  return rho_partition(inventory.structures);
}

bool same_conjugate(const RegularSubgroup& n, ElementId g, ElementId h) {
  return rho_conjugate(n, g) == rho_conjugate(n, h);
}

bool opp_of_conjugate_check(const RegularSubgroup& n, ElementId g) {
  return opposite(rho_conjugate(n, g)) == rho_conjugate(opposite(n), g);
}

}  // namespace hgslab
