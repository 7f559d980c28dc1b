#include "hgslab/brace.hpp"

#include <algorithm>
#include <string>

#include "hgslab/error.hpp"
#include "hgslab/rho.hpp"

namespace hgslab {

namespace {

// Identity 0, Latin square, associative. Fills `inverse` on success.
bool is_group_table(std::size_t n, const std::vector<ElementId>& t,
                    std::vector<ElementId>& inverse) {
  if (t.size() != n * n) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a] != a || t[a * n] != a) return false;
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId x = t[a * n + b];
      if (x >= n || seen[x]) return false;
      seen[x] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) return false;
      }
    }
  }
  inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t[a * n + b] == 0) inverse[a] = static_cast<ElementId>(b);
    }
  }
  return true;
}

// First triple violating the left brace relation, if any.
bool find_relation_failure(const SkewBrace& b, ElementId* wx, ElementId* wy,
                           ElementId* wz) {
  const auto n = static_cast<ElementId>(b.size);
  for (ElementId x = 0; x < n; ++x) {
    const ElementId xi = b.sinv(x);
    for (ElementId y = 0; y < n; ++y) {
      const ElementId left = b.s(b.c(x, y), xi);
      for (ElementId z = 0; z < n; ++z) {
        if (b.c(x, b.s(y, z)) != b.s(left, b.c(x, z))) {
          *wx = x;
          *wy = y;
          *wz = z;
          return true;
        }
      }
    }
  }
  return false;
}

bool preserves_star(const SkewBrace& b, const std::vector<ElementId>& phi) {
  for (ElementId x = 0; x < b.size; ++x) {
    for (ElementId y = 0; y < b.size; ++y) {
      if (phi[b.s(x, y)] != b.s(phi[x], phi[y])) return false;
    }
  }
  return true;
}

std::vector<ElementId> inner_circ(const SkewBrace& b, ElementId g) {
  std::vector<ElementId> phi(b.size);
  const ElementId gi = b.cinv(g);
  for (ElementId x = 0; x < b.size; ++x) phi[x] = b.c(b.c(g, x), gi);
  return phi;
}

FiniteGroup table_group(const SkewBrace& b, const std::vector<ElementId>& t,
                        std::string label) {
  return FiniteGroup::from_table(b.size, t, {}, GroupSpec::custom(std::move(label)),
                                 FiniteGroup::Validation::kSkipAssociativity);
}

}  // namespace

SkewBrace make_brace(std::size_t size, std::vector<ElementId> star,
                     std::vector<ElementId> circ) {
  SkewBrace b;
  b.size = size;
  b.star = std::move(star);
  b.circ = std::move(circ);
  if (!is_group_table(size, b.star, b.star_inverse)) {
    throw Error(ErrorKind::kBraceAxiom, "star is not a group table with identity 0");
  }
  if (!is_group_table(size, b.circ, b.circ_inverse)) {
    throw Error(ErrorKind::kBraceAxiom, "circ is not a group table with identity 0");
  }
  ElementId x = 0, y = 0, z = 0;
  if (find_relation_failure(b, &x, &y, &z)) {
    throw Error(ErrorKind::kBraceAxiom,
                "brace relation fails at (x, y, z) = (" + std::to_string(x) +
                    ", " + std::to_string(y) + ", " + std::to_string(z) + ")");
  }
  return b;
}

bool brace_axioms_hold(const SkewBrace& b) {
  std::vector<ElementId> inv;
  if (b.star_inverse.size() != b.size || b.circ_inverse.size() != b.size) {
    return false;
  }
  if (!is_group_table(b.size, b.star, inv) || inv != b.star_inverse) return false;
  if (!is_group_table(b.size, b.circ, inv) || inv != b.circ_inverse) return false;
  ElementId x = 0, y = 0, z = 0;
  return !find_relation_failure(b, &x, &y, &z);
}

FiniteGroup star_group(const SkewBrace& b) {
  return table_group(b, b.star, "(B, star)");
}

FiniteGroup circ_group(const SkewBrace& b) {
  return table_group(b, b.circ, "(B, circ)");
}

SkewBrace brace_from_subgroup(const RegularSubgroup& n) {
  const std::size_t size = n.group().order();
  std::vector<ElementId> star(size * size);
  for (ElementId a = 0; a < size; ++a) {
    const Perm& eta = n.eta(a);
    for (ElementId b = 0; b < size; ++b) star[a * size + b] = eta[b];
  }
  const auto t = n.group().table();
  return make_brace(size, std::move(star), {t.begin(), t.end()});
}

RegularSubgroup subgroup_from_brace(const SkewBrace& b, const FiniteGroup& group) {
  const auto t = group.table();
  if (group.order() != b.size || !std::equal(t.begin(), t.end(), b.circ.begin())) {
    throw Error(ErrorKind::kBaseMismatch, "group table differs from the circ table");
  }
  std::vector<Perm> elems;
  elems.reserve(b.size);
  for (ElementId a = 0; a < b.size; ++a) {
    elems.push_back(Perm::from_images_unchecked(
        {b.star.begin() + a * b.size, b.star.begin() + (a + 1) * b.size}));
  }
  return certify(group, PermGroup::from_elements(b.size, std::move(elems)));
}

RegularSubgroup subgroup_from_brace(const SkewBrace& b) {
  return subgroup_from_brace(b, circ_group(b));
}

bool is_two_sided(const SkewBrace& b) {
  const auto n = static_cast<ElementId>(b.size);
  for (ElementId g = 0; g < n; ++g) {
    const ElementId gi = b.sinv(g);
    for (ElementId y = 0; y < n; ++y) {
      const ElementId left = b.s(b.c(y, g), gi);
      for (ElementId z = 0; z < n; ++z) {
        if (b.c(b.s(y, z), g) != b.s(left, b.c(z, g))) return false;
      }
    }
  }
  return true;
}

std::vector<GroupHom> brace_automorphisms(const SkewBrace& b) {
  std::vector<GroupHom> out;
  for (GroupHom& phi : automorphisms(circ_group(b))) {
    if (preserves_star(b, phi.images)) out.push_back(std::move(phi));
  }
  return out;
}

Subgroup g_prime(const SkewBrace& b) {
  std::vector<ElementId> members;
  for (ElementId g = 0; g < b.size; ++g) {
    if (preserves_star(b, inner_circ(b, g))) members.push_back(g);
  }
  Subgroup s = subgroup_closure(circ_group(b), members);
  if (s.elements != members) {
    throw Error(ErrorKind::kBraceAxiom, "G' is not closed under circ");
  }
  return s;
}

NormalizerConditions normalizer_conditions(const RegularSubgroup& n,
                                           const SkewBrace& b, ElementId g) {
  NormalizerConditions out;
  out.rho_normalizes = rho_normalizes(n, g);
  out.inner_preserves_star = preserves_star(b, inner_circ(b, g));
  out.right_relation = true;
  const ElementId gi = b.sinv(g);
  for (ElementId y = 0; y < b.size && out.right_relation; ++y) {
    const ElementId left = b.s(b.c(y, g), gi);
    for (ElementId z = 0; z < b.size; ++z) {
      if (b.c(b.s(y, z), g) != b.s(left, b.c(z, g))) {
        out.right_relation = false;
        break;
      }
    }
  }
  return out;
}

bool gv_identity_check(const SkewBrace& b) {
  for (ElementId g = 0; g < b.size; ++g) {
    const ElementId gb = b.cinv(g);
    const ElementId gbi = b.sinv(gb);
    if (b.s(b.s(gbi, b.c(gb, b.sinv(g))), gbi) != 0) return false;
  }
  return true;
}

std::optional<GroupHom> braces_isomorphic(const SkewBrace& b1,
                                          const SkewBrace& b2) {
  if (b1.size != b2.size) return std::nullopt;
  const FiniteGroup c1 = circ_group(b1);
  const FiniteGroup c2 = circ_group(b2);
  const auto base = are_isomorphic(c1, c2);
  if (!base) return std::nullopt;
  for (const GroupHom& alpha : automorphisms(c1)) {
    GroupHom phi = compose(*base, alpha);
    bool ok = true;
    for (ElementId x = 0; x < b1.size && ok; ++x) {
      for (ElementId y = 0; y < b1.size; ++y) {
        if (phi(b1.s(x, y)) != b2.s(phi(x), phi(y))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return phi;
  }
  return std::nullopt;
}

BraceComparison braces_equal_via(const RegularSubgroup& n1,
                                 const RegularSubgroup& n2) {
  if (!n1.group().same_table(n2.group())) {
    throw Error(ErrorKind::kBaseMismatch, "structures live on different groups");
  }
  const SkewBrace b1 = brace_from_subgroup(n1);
  const SkewBrace b2 = brace_from_subgroup(n2);
  BraceComparison out;
  out.isomorphic_by_search = braces_isomorphic(b1, b2).has_value();
  out.same_brace = b1.star == b2.star;

  // phi^-1 N1 phi = N2 for some phi in Aut(G, circ), and for some phi that
  // also respects N1's star.
  for (const GroupHom& phi : automorphisms(n1.group())) {
    const Perm p = hom_as_perm(phi);
    if (n1.perms().conjugated_by(invert(p)) != n2.perms()) continue;
    out.isomorphic_by_subgroups = true;
    if (preserves_star(b1, phi.images)) {
      out.same_by_subgroups = true;
      break;
    }
  }
  return out;
}

YbeMap ybe_map_unchecked(const SkewBrace& b) {
  YbeMap r;
  r.size = b.size;
  r.table.resize(b.size * b.size);
  for (ElementId x = 0; x < b.size; ++x) {
    for (ElementId y = 0; y < b.size; ++y) {
      const ElementId xy = b.c(x, y);
      const ElementId u = b.s(b.sinv(x), xy);
      r.table[x * b.size + y] = {u, b.c(b.cinv(u), xy)};
    }
  }
  return r;
}

bool is_bijective(const YbeMap& r) {
  std::vector<char> seen(r.size * r.size, 0);
  for (const auto& [u, v] : r.table) {
    if (u >= r.size || v >= r.size) return false;
    char& s = seen[u * r.size + v];
    if (s) return false;
    s = 1;
  }
  return true;
}

bool satisfies_braid_relation(const YbeMap& r) {
  const auto n = static_cast<ElementId>(r.size);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id)
        auto [a1, b1] = r(x, y);
        auto [b2, c2] = r(b1, z);
        auto [a3, b3] = r(a1, b2);
        // (id x r)(r x id)(id x r)
        auto [q1, w1] = r(y, z);
        auto [p2, q2] = r(x, q1);
        auto [q3, w3] = r(q2, w1);
        if (a3 != p2 || b3 != q3 || c2 != w3) return false;
      }
    }
  }
  return true;
}

YbeMap ybe_map(const SkewBrace& b) {
  YbeMap r = ybe_map_unchecked(b);
  if (!is_bijective(r)) {
    throw Error(ErrorKind::kBraidFailure, "r is not a bijection of B x B");
  }
  if (!satisfies_braid_relation(r)) {
    throw Error(ErrorKind::kBraidFailure, "r violates the braid relation");
  }
  return r;
}

}  // namespace hgslab
