#include "hgslab/families.hpp"

#include <string>

#include "hgslab/error.hpp"

namespace hgslab {

namespace {

long long reduce(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

void require_kind(const FiniteGroup& g, GroupSpec::Kind kind, const char* what) {
  if (g.spec().kind != kind) {
    throw Error(ErrorKind::kInvalidSpec,
                g.spec().to_string() + " is not a " + what + " group");
  }
}

}  // namespace

ElementId metacyclic_element(const FiniteGroup& g, long long i, long long j) {
  require_kind(g, GroupSpec::Kind::kMetacyclic, "metacyclic");
  const long long p = g.spec().params[0], q = g.spec().params[1];
  return static_cast<ElementId>(q * reduce(i, p) + reduce(j, q));
}

ElementId dihedral_element(const FiniteGroup& g, long long i, long long j) {
  require_kind(g, GroupSpec::Kind::kDihedral, "dihedral");
  const long long n = g.spec().params[0];
  return static_cast<ElementId>(2 * reduce(i, n) + reduce(j, 2));
}

Perm lambda_rho(const FiniteGroup& g, ElementId x, ElementId y) {
  return compose(lambda_embed(g, x), rho_embed(g, y));
}

RegularSubgroup structure_from_generators(const FiniteGroup& g,
                                          std::vector<Perm> gens) {
  return certify(g, PermGroup::generate(g.order(), std::move(gens)));
}

RegularSubgroup metacyclic_cyclic_structure(const FiniteGroup& g, long long i) {
  const long long d = g.spec().params[2];
  const ElementId s = metacyclic_element(g, 1, 0);
  return structure_from_generators(
             g, {lambda_rho(g, s, metacyclic_element(g, i * (1 - d), 1))})
      .with_type(GroupSpec::cyclic(static_cast<int>(g.order())));
}

RegularSubgroup metacyclic_split_structure(const FiniteGroup& g, long long k) {
  const ElementId s = metacyclic_element(g, 1, 0);
  const ElementId t = metacyclic_element(g, 0, 1);
  return structure_from_generators(
             g, {lambda_embed(g, s),
                 lambda_rho(g, t, g.inv(metacyclic_element(g, k, 1)))})
      .with_type(g.spec());
}

RegularSubgroup dihedral_structure(const FiniteGroup& g, long long k) {
  require_kind(g, GroupSpec::Kind::kDihedral, "dihedral");
  if (g.spec().params[0] % 2 != 0) {
    throw Error(ErrorKind::kInvalidSpec, "dihedral family needs even n");
  }
  const ElementId r = dihedral_element(g, 1, 0);
  const ElementId s = dihedral_element(g, 0, 1);
  return structure_from_generators(
             g, {lambda_rho(g, r, dihedral_element(g, 2 * k, 1)),
                 lambda_embed(g, s)})
      .with_type(g.spec());
}

Perm dihedral_mu(const FiniteGroup& g, long long k) {
  require_kind(g, GroupSpec::Kind::kDihedral, "dihedral");
  std::vector<Point> img(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    const long long i = x / 2, j = x % 2;
    const long long sign = (i + j + k) % 2 == 0 ? 1 : -1;
    img[x] = dihedral_element(g, i + sign, j);
  }
  return Perm(std::move(img));
}

HomPair dihedral_fpf_pair(const FiniteGroup& g, long long k) {
  require_kind(g, GroupSpec::Kind::kDihedral, "dihedral");
  const std::size_t n = g.order();
  HomPair out{identity_hom(g), {g, g, std::vector<ElementId>(n)}};
  const ElementId base = dihedral_element(g, 2 * k, 1);  // mu^(2k) pi
  for (ElementId x = 0; x < n; ++x) out.f2.images[x] = g.pow(base, x / 2);
  if (!out.f2.is_homomorphism()) {
    throw Error(ErrorKind::kInvalidHom, "f2 is not a homomorphism");
  }
  return out;
}

AbelianMap sign_abelian_map(const FiniteGroup& g, ElementId x) {
  require_kind(g, GroupSpec::Kind::kSymmetric, "symmetric");
  if (g.mul(x, x) != 0) {
    throw Error(ErrorKind::kInvalidHom, g.name(x) + " has order > 2");
  }
  // The alternating group is generated by squares.
  std::vector<ElementId> squares;
  for (ElementId y = 0; y < g.order(); ++y) squares.push_back(g.mul(y, y));
  const Subgroup alt = subgroup_closure(g, squares);
  GroupHom psi{g, g, std::vector<ElementId>(g.order())};
  for (ElementId y = 0; y < g.order(); ++y) psi.images[y] = alt.contains(y) ? 0 : x;
  return {std::move(psi)};
}

InducedInput metacyclic_induced_input(const FiniteGroup& g, long long i) {
  const ElementId si = metacyclic_element(g, i, 0);
  const ElementId t = metacyclic_element(g, 0, 1);
  const ElementId ti = g.mul(g.mul(si, t), g.inv(si));
  const ElementId tgen[] = {ti};
  const Subgroup tsub = subgroup_closure(g, tgen);
  auto as = coset_stable_regular_subgroups(g, tsub);
  auto bs = subgroup_stable_regular_subgroups(tsub);
  if (as.size() != 1 || bs.size() != 1) {
    throw Error(ErrorKind::kConstructionFailure,
                "expected unique structures on G/T and T, found " +
                    std::to_string(as.size()) + " and " +
                    std::to_string(bs.size()));
  }
  return make_induced_input(g, tsub, std::move(as.front()),
                            std::move(bs.front()));
}

}  // namespace hgslab
