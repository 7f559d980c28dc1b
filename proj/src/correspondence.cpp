#include "hgslab/correspondence.hpp"

#include <algorithm>

#include "hgslab/error.hpp"
#include "hgslab/rho.hpp"

namespace hgslab {

namespace {

std::vector<Perm> lambda_generators(const FiniteGroup& g) {
  std::vector<Perm> out;
  for (ElementId x : small_generating_set(g)) out.push_back(lambda_embed(g, x));
  return out;
}

bool is_subset(const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_subset(const PermGroup& a, const PermGroup& b) {
  return std::includes(b.elements().begin(), b.elements().end(),
                       a.elements().begin(), a.elements().end());
}

}  // namespace

std::vector<PermGroup> g_stable_subgroups(const RegularSubgroup& n) {
  const auto lambdas = lambda_generators(n.group());
  std::vector<PermGroup> out;
  for (const Subgroup& sub : all_subgroups(n.star_group())) {
    std::vector<Perm> elems, gens;
    for (ElementId a : sub.elements) elems.push_back(n.eta(a));
    for (ElementId a : sub.generators) gens.push_back(n.eta(a));
    PermGroup p = PermGroup::from_elements(n.group().order(), std::move(elems),
                                           std::move(gens));
    if (p.normalized_by(lambdas)) out.push_back(std::move(p));
  }
  std::stable_sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a < b;
  });
  return out;
}

Subgroup fixed_subgroup(const RegularSubgroup& n, const PermGroup& p) {
  const FiniteGroup& g = n.group();
  for (const Perm& eta : p.elements()) {
    if (!n.contains(eta)) {
      throw Error(ErrorKind::kStabilityViolation, "P is not contained in N");
    }
  }
  if (!p.normalized_by(lambda_generators(g))) {
    throw Error(ErrorKind::kStabilityViolation, "P is not G-stable");
  }
  std::vector<ElementId> points;
  for (const Perm& eta : p.elements()) points.push_back(invert(eta)[0]);
  Subgroup u = subgroup_closure(g, points);
  if (u.order() != p.order()) {
    throw Error(ErrorKind::kStabilityViolation,
                "|U| = " + std::to_string(u.order()) +
                    " differs from |P| = " + std::to_string(p.order()));
  }
  u.generators = small_generating_set(subgroup_as_group(u));
  for (ElementId& x : u.generators) x = u.elements[x];
  return u;
}

std::vector<std::vector<ElementId>> RealizableLattice::realized() const {
  std::vector<std::vector<ElementId>> out;
  for (const LatticeEntry& e : entries) out.push_back(e.u.elements);
  std::sort(out.begin(), out.end());
  return out;
}

bool RealizableLattice::injective() const {
  auto r = realized();
  return std::adjacent_find(r.begin(), r.end()) == r.end();
}

bool RealizableLattice::inclusion_preserving() const {
  for (const LatticeEntry& a : entries) {
    for (const LatticeEntry& b : entries) {
      if (is_subset(a.p, b.p) != is_subset(a.u.elements, b.u.elements)) {
        return false;
      }
    }
  }
  return true;
}

RealizableLattice realizable_lattice(const RegularSubgroup& n) {
  RealizableLattice out{n, {}};
  for (PermGroup& p : g_stable_subgroups(n)) {
    Subgroup u = fixed_subgroup(n, p);
    out.entries.push_back({std::move(p), std::move(u)});
  }
  return out;
}

bool realizable_transport_check(const RegularSubgroup& n, ElementId g) {
  const RegularSubgroup ng = rho_conjugate(n, g);
  const RealizableLattice before = realizable_lattice(n);
  const RealizableLattice after = realizable_lattice(ng);
  if (before.entries.size() != after.entries.size()) return false;
  const Perm r = rho_embed(n.group(), g);
  for (const LatticeEntry& e : before.entries) {
    const PermGroup moved = e.p.conjugated_by(r);
    auto it = std::find_if(after.entries.begin(), after.entries.end(),
                           [&](const LatticeEntry& f) { return f.p == moved; });
    if (it == after.entries.end()) return false;
    if (it->u.elements != conjugate_subgroup(e.u, g).elements) return false;
  }
  return true;
}

}  // namespace hgslab
