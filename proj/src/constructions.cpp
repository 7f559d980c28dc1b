#include "hgslab/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hgslab/error.hpp"
#include "hgslab/holomorph.hpp"
#include "hgslab/rho.hpp"

namespace hgslab {

namespace {

bool image_is_abelian(const GroupHom& f) {
  std::vector<ElementId> img(f.images.begin(), f.images.end());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  for (ElementId x : img) {
    for (ElementId y : img) {
      if (f.codomain.mul(x, y) != f.codomain.mul(y, x)) return false;
    }
  }
  return true;
}

void require_same_group(const FiniteGroup& a, const FiniteGroup& b,
                        const char* what) {
  if (!a.same_table(b)) throw Error(ErrorKind::kBaseMismatch, what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Holomorph embeddings

void validate_embedding(const HolEmbedding& e) {
  const std::size_t n = e.source.order();
  if (e.target.order() != n || e.beta.size() != n) {
    throw Error(ErrorKind::kInvalidEmbedding,
                "source, target and beta must all have size " + std::to_string(n));
  }
  std::vector<char> hit(n, 0);
  for (ElementId g = 0; g < n; ++g) {
    if (e.beta[g].size() != n) {
      throw Error(ErrorKind::kInvalidEmbedding,
                  "beta(" + e.source.name(g) + ") has the wrong degree");
    }
    const Point x = e.beta[g][0];
    if (hit[x]) {
      throw Error(ErrorKind::kInvalidEmbedding,
                  "image is not regular: two elements send e to " +
                      e.target.name(x));
    }
    hit[x] = 1;
    if (!factor_in_holomorph(e.target, e.beta[g])) {
      throw Error(ErrorKind::kInvalidEmbedding,
                  "beta(" + e.source.name(g) + ") is not in Hol(M)");
    }
  }
  for (ElementId g = 0; g < n; ++g) {
    for (ElementId h = 0; h < n; ++h) {
      if (e.beta[e.source.mul(g, h)] != compose(e.beta[g], e.beta[h])) {
        throw Error(ErrorKind::kInvalidEmbedding,
                    "beta is not a homomorphism at (" + e.source.name(g) +
                        ", " + e.source.name(h) + ")");
      }
    }
  }
}

RegularSubgroup from_hol_embedding(const HolEmbedding& e) {
  validate_embedding(e);
  const std::size_t n = e.source.order();
  std::vector<ElementId> a_inv(n), a(n);
  for (ElementId g = 0; g < n; ++g) {
    a_inv[g] = e.beta[g][0];
    a[a_inv[g]] = g;
  }
  auto eta = [&](ElementId mu) {
    std::vector<Point> img(n);
    for (ElementId x = 0; x < n; ++x) img[x] = a[e.target.mul(mu, a_inv[x])];
    return Perm::from_images_unchecked(std::move(img));
  };
  std::vector<Perm> elems;
  elems.reserve(n);
  for (ElementId mu = 0; mu < n; ++mu) elems.push_back(eta(mu));
  std::vector<Perm> gens;
  for (ElementId mu : small_generating_set(e.target)) gens.push_back(eta(mu));
  return certify(e.source,
                 PermGroup::from_elements(n, std::move(elems), std::move(gens)));
}

HolEmbedding to_hol_embedding(const RegularSubgroup& nsub, const GroupHom& iota) {
  const FiniteGroup star = nsub.star_group();
  if (iota.domain.order() != nsub.order() || !iota.codomain.same_table(star) ||
      !iota.is_bijective() || !iota.is_homomorphism()) {
    throw Error(ErrorKind::kInvalidHom, "iota is not an isomorphism M -> N");
  }
  const FiniteGroup& g = nsub.group();
  const std::size_t n = g.order();
  const std::vector<ElementId>& a = iota.images;  // a(mu) = eta_{iota(mu)}[0]
  std::vector<ElementId> a_inv(n);
  for (ElementId mu = 0; mu < n; ++mu) a_inv[a[mu]] = mu;
  HolEmbedding e{g, iota.domain, {}};
  e.beta.reserve(n);
  for (ElementId h = 0; h < n; ++h) {
    std::vector<Point> img(n);
    for (ElementId mu = 0; mu < n; ++mu) img[mu] = a_inv[g.mul(h, a[mu])];
    e.beta.push_back(Perm::from_images_unchecked(std::move(img)));
  }
  validate_embedding(e);
  return e;
}

bool equivalent_embeddings(const HolEmbedding& b1, const HolEmbedding& b2) {
  if (b1.beta.size() != b2.beta.size() || !b1.target.same_table(b2.target)) {
    return false;
  }
  for (const GroupHom& theta : automorphisms(b1.target)) {
    const Perm t = hom_as_perm(theta);
    bool ok = true;
    for (std::size_t g = 0; g < b1.beta.size() && ok; ++g) {
      ok = conjugate(b1.beta[g], t) == b2.beta[g];
    }
    if (ok) return true;
  }
  return false;
}

HolEmbedding precompose(const HolEmbedding& e, const GroupHom& phi) {
  HolEmbedding out{e.source, e.target, {}};
  out.beta.reserve(e.beta.size());
  for (ElementId h = 0; h < e.beta.size(); ++h) out.beta.push_back(e.beta[phi(h)]);
  return out;
}

bool embedding_conjugation_check(const HolEmbedding& e, ElementId g) {
  const GroupHom phi = inner_automorphism(e.source, e.source.inv(g));
  return from_hol_embedding(precompose(e, phi)) ==
         rho_conjugate(from_hol_embedding(e), g);
}

// ---------------------------------------------------------------------------
// Fixed-point-free pairs

bool fpf_check(const GroupHom& f1, const GroupHom& f2) {
  for (ElementId h = 1; h < f1.images.size(); ++h) {
    if (f1(h) == f2(h)) return false;
  }
  return true;
}

HolEmbedding fpf_embedding(const GroupHom& f1, const GroupHom& f2) {
  require_same_group(f1.domain, f2.domain, "f1 and f2 have different domains");
  require_same_group(f1.codomain, f2.codomain,
                     "f1 and f2 have different codomains");
  if (f1.domain.order() != f1.codomain.order()) {
    throw Error(ErrorKind::kInvalidHom, "|G| != |M|");
  }
  if (!f1.is_homomorphism() || !f2.is_homomorphism()) {
    throw Error(ErrorKind::kInvalidHom, "f1 and f2 must be homomorphisms");
  }
  if (!fpf_check(f1, f2)) {
    throw Error(ErrorKind::kNotFixedPointFree,
                "f1 and f2 agree away from the identity");
  }
  const FiniteGroup& m = f1.codomain;
  HolEmbedding e{f1.domain, m, {}};
  std::vector<char> hit(m.order(), 0);
  for (ElementId h = 0; h < f1.domain.order(); ++h) {
    Perm p = compose(lambda_embed(m, f1(h)), rho_embed(m, f2(h)));
    if (hit[p[0]]) {
      throw Error(ErrorKind::kNotRegular,
                  "two elements of G send e to " + m.name(p[0]));
    }
    hit[p[0]] = 1;
    e.beta.push_back(std::move(p));
  }
  return e;
}

RegularSubgroup hgs_from_fpf(const GroupHom& f1, const GroupHom& f2) {
  return from_hol_embedding(fpf_embedding(f1, f2)).with_type(f1.codomain.spec());
}

bool fpf_conjugation_check(const GroupHom& f1, const GroupHom& f2, ElementId g) {
  const GroupHom phi = inner_automorphism(f1.domain, f1.domain.inv(g));
  return hgs_from_fpf(compose(f1, phi), compose(f2, phi)) ==
         rho_conjugate(hgs_from_fpf(f1, f2), g);
}

// ---------------------------------------------------------------------------
// Abelian maps

std::vector<AbelianMap> abelian_maps(const FiniteGroup& group) {
  std::vector<AbelianMap> out;
  for (GroupHom& f : endomorphisms(group)) {
    if (image_is_abelian(f)) out.push_back({std::move(f)});
  }
  return out;
}

RegularSubgroup hgs_from_abelian_map(const AbelianMap& map) {
  const GroupHom& psi = map.psi;
  const FiniteGroup& g = psi.domain;
  if (!psi.codomain.same_table(g) || !psi.is_homomorphism() ||
      !image_is_abelian(psi)) {
    throw Error(ErrorKind::kInvalidHom, "psi is not an abelian map");
  }
  const std::size_t n = g.order();
  std::vector<Perm> elems;
  elems.reserve(n);
  for (ElementId h = 0; h < n; ++h) {
    const ElementId pi = g.inv(psi(h));
    elems.push_back(compose(lambda_embed(g, g.mul(h, pi)), rho_embed(g, pi)));
  }
  std::vector<Perm> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kConstructionFailure, "eta_psi is not injective");
  }
  try {
    // eta_psi is a bijection G -> N but not a homomorphism, so closure is
    // taken over the whole image.
    PermGroup generated = PermGroup::generate(n, elems, n);
    PermGroup listed = PermGroup::from_elements(n, std::move(elems));
    if (generated != listed) {
      throw Error(ErrorKind::kConstructionFailure,
                  "eta_psi(G) is not closed under composition");
    }
    return certify(g, std::move(listed));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::kConstructionFailure) throw;
    throw Error(ErrorKind::kConstructionFailure, err.what());
  }
}

AbelianMap conjugate_abelian_map(const AbelianMap& map, const GroupHom& phi) {
  return {compose(phi, compose(map.psi, inverse(phi)))};
}

// ---------------------------------------------------------------------------
// Induced structures

namespace {

std::vector<Perm> translations_of_subgroup(const Subgroup& t) {
  const FiniteGroup tg = subgroup_as_group(t);
  std::vector<Perm> out;
  for (ElementId x = 0; x < tg.order(); ++x) out.push_back(lambda_embed(tg, x));
  return out;
}

std::size_t position_in(const Subgroup& t, ElementId x) {
  auto it = std::lower_bound(t.elements.begin(), t.elements.end(), x);
  if (it == t.elements.end() || *it != x) {
    throw Error(ErrorKind::kNotMember, "element is not in the subgroup");
  }
  return static_cast<std::size_t>(it - t.elements.begin());
}

Subgroup image_subgroup(const GroupHom& phi, const Subgroup& t) {
  std::vector<ElementId> gens;
  for (ElementId x : t.elements) gens.push_back(phi(x));
  Subgroup out = subgroup_closure(phi.codomain, gens);
  std::vector<ElementId> small;
  for (ElementId x : t.generators) small.push_back(phi(x));
  out.generators = small;
  return out;
}

void require_preserves_s(const InducedInput& in, const GroupHom& phi) {
  if (!phi.domain.same_table(in.group) || !phi.is_bijective() ||
      !phi.is_homomorphism()) {
    throw Error(ErrorKind::kInvalidHom, "phi is not an automorphism of G");
  }
  for (ElementId x : in.s.elements) {
    if (!in.s.contains(phi(x))) {
      throw Error(ErrorKind::kNotPreserved,
                  "phi sends " + in.group.name(x) + " outside S");
    }
  }
}

}  // namespace

InducedInput make_induced_input(const FiniteGroup& group, const Subgroup& t,
                                PermGroup a, PermGroup b) {
  auto s = normal_complement(group, t);
  if (!s) {
    throw Error(ErrorKind::kNoNormalComplement,
                "subgroup of order " + std::to_string(t.order()) +
                    " has no normal complement");
  }
  InducedInput in{group, t, std::move(*s), std::move(a), std::move(b)};
  validate_induced_input(in);
  return in;
}

void validate_induced_input(const InducedInput& in) {
  const std::size_t n = in.group.order();
  if (!is_normal(in.s)) throw Error(ErrorKind::kInvalidSpec, "S is not normal");
  for (ElementId x : in.s.elements) {
    if (x != 0 && in.t.contains(x)) {
      throw Error(ErrorKind::kInvalidSpec, "S and T intersect nontrivially");
    }
  }
  if (in.s.order() * in.t.order() != n) {
    throw Error(ErrorKind::kInvalidSpec, "|S| |T| != |G|");
  }
  const CosetSpace space = coset_space(in.group, in.t);
  if (in.a.base() != space.size() || !in.a.is_regular()) {
    throw Error(ErrorKind::kInvalidSpec, "A is not regular on G/T");
  }
  const auto lt = left_translation_generators(space);
  if (!in.a.normalized_by(lt)) {
    throw Error(ErrorKind::kInvalidSpec, "A is not G-stable");
  }
  if (in.b.base() != in.t.order() || !in.b.is_regular()) {
    throw Error(ErrorKind::kInvalidSpec, "B is not regular on T");
  }
  if (!in.b.normalized_by(translations_of_subgroup(in.t))) {
    throw Error(ErrorKind::kInvalidSpec, "B is not T-stable");
  }
}

RegularSubgroup induced_hgs(const InducedInput& in) {
  validate_induced_input(in);
  const FiniteGroup& g = in.group;
  const std::size_t n = g.order();
  const CosetSpace space = coset_space(g, in.t);

  // s -> sT and its inverse.
  std::vector<ElementId> s_of_coset(space.size(), n);
  for (ElementId s : in.s.elements) {
    const std::size_t c = space.coset_of[s];
    if (s_of_coset[c] != n) {
      throw Error(ErrorKind::kIdentificationFailure,
                  "two elements of S lie in the same coset of T");
    }
    s_of_coset[c] = s;
  }
  for (ElementId s : s_of_coset) {
    if (s == n) {
      throw Error(ErrorKind::kIdentificationFailure, "S misses a coset of T");
    }
  }

  // g = s t, stored as (s, position of t).
  std::vector<ElementId> s_part(n);
  std::vector<std::size_t> t_part(n);
  for (ElementId s : in.s.elements) {
    for (std::size_t j = 0; j < in.t.order(); ++j) {
      const ElementId x = g.mul(s, in.t.elements[j]);
      s_part[x] = s;
      t_part[x] = j;
    }
  }

  auto eta = [&](const Perm& a, const Perm& b) {
    std::vector<Point> img(n);
    for (ElementId x = 0; x < n; ++x) {
      const ElementId s2 = s_of_coset[a[static_cast<Point>(space.coset_of[s_part[x]])]];
      img[x] = g.mul(s2, in.t.elements[b[static_cast<Point>(t_part[x])]]);
    }
    return Perm::from_images_unchecked(std::move(img));
  };

  const Perm id_a = Perm::identity(in.a.base());
  const Perm id_b = Perm::identity(in.b.base());
  std::vector<Perm> elems;
  elems.reserve(n);
  for (const Perm& a : in.a.elements()) {
    for (const Perm& b : in.b.elements()) elems.push_back(eta(a, b));
  }
  std::vector<Perm> gens;
  for (const Perm& a : in.a.generators()) gens.push_back(eta(a, id_b));
  for (const Perm& b : in.b.generators()) gens.push_back(eta(id_a, b));
  return certify(g, PermGroup::from_elements(n, std::move(elems), std::move(gens)));
}

PermGroup transport_quotient_structure(const InducedInput& in,
                                       const GroupHom& phi) {
  require_preserves_s(in, phi);
  const FiniteGroup& g = in.group;
  const CosetSpace old_space = coset_space(g, in.t);
  const CosetSpace new_space = coset_space(g, image_subgroup(phi, in.t));
  const GroupHom phi_inv = inverse(phi);
  const std::size_t m = new_space.size();
  auto move = [&](const Perm& a) {
    std::vector<Point> img(m);
    for (std::size_t c = 0; c < m; ++c) {
      const ElementId x = phi_inv(new_space.representatives[c]);
      const auto target = a[static_cast<Point>(old_space.coset_of[x])];
      img[c] = static_cast<Point>(
          new_space.coset_of[phi(old_space.representatives[target])]);
    }
    return Perm::from_images_unchecked(std::move(img));
  };
  std::vector<Perm> elems, gens;
  for (const Perm& a : in.a.elements()) elems.push_back(move(a));
  for (const Perm& a : in.a.generators()) gens.push_back(move(a));
  return PermGroup::from_elements(m, std::move(elems), std::move(gens));
}

PermGroup transport_subgroup_structure(const InducedInput& in,
                                       const GroupHom& phi) {
  require_preserves_s(in, phi);
  const Subgroup t2 = image_subgroup(phi, in.t);
  const GroupHom phi_inv = inverse(phi);
  const std::size_t m = t2.order();
  auto move = [&](const Perm& b) {
    std::vector<Point> img(m);
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t old = position_in(in.t, phi_inv(t2.elements[j]));
      img[j] = static_cast<Point>(
          position_in(t2, phi(in.t.elements[b[static_cast<Point>(old)]])));
    }
    return Perm::from_images_unchecked(std::move(img));
  };
  std::vector<Perm> elems, gens;
  for (const Perm& b : in.b.elements()) elems.push_back(move(b));
  for (const Perm& b : in.b.generators()) gens.push_back(move(b));
  return PermGroup::from_elements(m, std::move(elems), std::move(gens));
}

InducedInput transport_induced_input(const InducedInput& in,
                                     const GroupHom& phi) {
  InducedInput out{in.group, image_subgroup(phi, in.t), in.s,
                   transport_quotient_structure(in, phi),
                   transport_subgroup_structure(in, phi)};
  validate_induced_input(out);
  return out;
}

std::vector<PermGroup> coset_stable_regular_subgroups(const FiniteGroup& group,
                                                      const Subgroup& t) {
  const CosetSpace space = coset_space(group, t);
  const std::size_t m = space.size();
  const auto lt = left_translation_generators(space);
  if (m == 1) return {PermGroup::from_elements(1, {Perm::identity(1)})};
  if (m <= 8) {
    std::set<PermGroup> found;
    for (const GroupSpec& spec : catalog_types(m)) {
      for (PermGroup& p :
           stable_regular_subgroups_by_bijection(build_group(spec), lt)) {
        found.insert(std::move(p));
      }
    }
    return {found.begin(), found.end()};
  }
  bool prime = m <= 11;
  for (std::size_t d = 2; d * d <= m && prime; ++d) prime = m % d != 0;
  if (!prime) {
    throw Error(ErrorKind::kDegreeTooLarge,
                "coset degree " + std::to_string(m) +
                    " is neither <= 8 nor a prime <= 11");
  }
  // A regular group of prime degree p is generated by a p-cycle, and
  // contains exactly one p-cycle sending 0 to 1.
  std::vector<Point> order(m);  // cycle 0 -> 1 -> order[2] -> ...
  std::iota(order.begin(), order.end(), Point{0});
  std::set<PermGroup> found;
  do {
    std::vector<Point> img(m);
    for (std::size_t i = 0; i < m; ++i) img[order[i]] = order[(i + 1) % m];
    PermGroup c = PermGroup::generate(m, {Perm::from_images_unchecked(img)}, m);
    if (c.normalized_by(lt)) found.insert(std::move(c));
  } while (std::next_permutation(order.begin() + 2, order.end()));
  return {found.begin(), found.end()};
}

std::vector<PermGroup> subgroup_stable_regular_subgroups(const Subgroup& t) {
  std::vector<PermGroup> out;
  for (const RegularSubgroup& n : enumerate_hgs(subgroup_as_group(t)).structures) {
    out.push_back(n.perms());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RegularSubgroup> induced_structures_search(const FiniteGroup& group) {
  std::set<RegularSubgroup> found;
  for (const Subgroup& t : all_subgroups(group)) {
    if (t.order() == 1 || t.order() == group.order()) continue;
    if (!normal_complement(group, t)) continue;
    std::vector<PermGroup> as;
    try {
      as = coset_stable_regular_subgroups(group, t);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::kDegreeTooLarge) continue;
      throw;
    }
    const auto bs = subgroup_stable_regular_subgroups(t);
    for (const PermGroup& a : as) {
      for (const PermGroup& b : bs) {
        found.insert(induced_hgs(make_induced_input(group, t, a, b)));
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace hgslab
