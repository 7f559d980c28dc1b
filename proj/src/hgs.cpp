#include "hgslab/hgs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hgslab/constructions.hpp"
#include "hgslab/error.hpp"
#include "hgslab/holomorph.hpp"

namespace hgslab {

RegularSubgroup RegularSubgroup::with_type(
    std::optional<GroupSpec> type) const {
  RegularSubgroup out = *this;
  out.type_ = std::move(type);
  return out;
}

FiniteGroup RegularSubgroup::star_group() const {
  return regular_group_as_abstract(
      perms_, GroupSpec::custom("star group of " + hash()));
}

RegularSubgroup certify(const FiniteGroup& group, PermGroup perms) {
  const std::size_t n = group.order();
  if (perms.base() != n) {
    throw Error(ErrorKind::kNotRegular,
                "acts on " + std::to_string(perms.base()) + " points, |G| = " +
                    std::to_string(n));
  }
  if (perms.order() != n) {
    throw Error(ErrorKind::kNotRegular,
                "order " + std::to_string(perms.order()) + " != |G| = " +
                    std::to_string(n));
  }
  std::vector<std::size_t> eta(n, n);
  for (std::size_t i = 0; i < perms.order(); ++i) {
    const Point x = perms.elements()[i][0];
    if (eta[x] != n) {
      throw Error(ErrorKind::kNotRegular,
                  "two elements send 0 to " + group.name(x) +
                      "; the orbit of 0 is not all of G");
    }
    eta[x] = i;
  }
  for (ElementId g = 0; g < n; ++g) {
    const Perm lg = lambda_embed(group, g);
    for (std::size_t k = 0; k < perms.generators().size(); ++k) {
      if (!perms.contains(conjugate(perms.generators()[k], lg))) {
        throw Error(ErrorKind::kNotStable,
                    "lambda(" + group.name(g) + ") moves generator " +
                        std::to_string(k) + " out of N");
      }
    }
  }
  RegularSubgroup out;
  out.group_ = group;
  out.perms_ = std::move(perms);
  out.eta_ = std::move(eta);
  return out;
}

bool is_g_stable_exhaustive(const RegularSubgroup& n) {
  const FiniteGroup& g = n.group();
  for (ElementId x = 0; x < g.order(); ++x) {
    const Perm lx = lambda_embed(g, x);
    for (const Perm& eta : n.perms().elements()) {
      if (!n.contains(conjugate(eta, lx))) return false;
    }
  }
  return true;
}

Perm g_star_action(const RegularSubgroup& n, ElementId g, const Perm& eta) {
  if (!n.contains(eta)) {
    throw Error(ErrorKind::kNotMember, "permutation is not an element of N");
  }
  return conjugate(eta, lambda_embed(n.group(), g));
}

RegularSubgroup opposite(const RegularSubgroup& n) {
  return certify(n.group(), centralizer_of_regular(n.perms()))
      .with_type(n.type_label());
}

// ---------------------------------------------------------------------------
// Enumeration through the holomorph

namespace {

// Element counts by order, indexed by order.
std::vector<std::size_t> order_counts(const FiniteGroup& g) {
  std::vector<std::size_t> counts(g.order() + 1, 0);
  for (ElementId x = 0; x < g.order(); ++x) ++counts[g.element_order(x)];
  return counts;
}

// Regular subgroups of Hol(M) (as sorted Hol indices) whose order profile
// fits inside G's. Explores the lattice of semiregular subgroups by adding
// one generator at a time; a candidate whose image of 0 is already covered
// would create a nontrivial point stabilizer and is skipped.
std::vector<std::vector<ElementId>> regular_subgroups_of_holomorph(
    const Holomorph& hol, const FiniteGroup& target) {
  const std::size_t n = hol.base.order();
  const FiniteGroup& h = hol.group;
  if (n == 1) return {{0}};
  const auto target_counts = order_counts(target);
  auto order_ok = [&](std::size_t k) {
    return k < target_counts.size() && target_counts[k] > 0;
  };

  std::vector<ElementId> candidates;
  for (ElementId x = 1; x < h.order(); ++x) {
    if (!hol.perms[x].has_fixed_point() && order_ok(h.element_order(x))) {
      candidates.push_back(x);
    }
  }

  struct Node {
    std::vector<ElementId> elements;
    std::vector<ElementId> gens;
  };
  std::set<std::vector<ElementId>> visited;
  std::vector<Node> queue{{{0}, {}}};
  std::vector<std::vector<ElementId>> regular;
  std::vector<char> covered(n);
  std::vector<std::size_t> counts;

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Node node = queue[qi];
    std::fill(covered.begin(), covered.end(), 0);
    for (ElementId x : node.elements) covered[hol.perms[x][0]] = 1;
    for (ElementId c : candidates) {
      if (covered[hol.perms[c][0]]) continue;
      std::vector<ElementId> gens = node.gens;
      gens.push_back(c);
      auto elems = bounded_closure(h, gens, n);
      if (!elems || n % elems->size() != 0) continue;
      bool ok = true;
      counts.assign(target_counts.size(), 0);
      for (ElementId x : *elems) {
        const std::size_t k = h.element_order(x);
        if ((x != 0 && hol.perms[x].has_fixed_point()) || !order_ok(k) ||
            ++counts[k] > target_counts[k]) {
          ok = false;
          break;
        }
      }
      if (!ok || !visited.insert(*elems).second) continue;
      if (elems->size() == n) {
        regular.push_back(*elems);
      } else {
        queue.push_back({std::move(*elems), std::move(gens)});
      }
    }
  }
  std::sort(regular.begin(), regular.end());
  return regular;
}

}  // namespace

HgsInventory enumerate_hgs(const FiniteGroup& group,
                           const std::optional<GroupSpec>& type) {
  const std::size_t n = group.order();
  HgsInventory inv;
  inv.group = group;
  inv.type_filter = type;
  inv.complete = catalog_complete(n);
  if (!type && !inv.complete) {
    throw Error(ErrorKind::kUnsupportedOrder,
                "order " + std::to_string(n) +
                    " is not catalog-complete; pass a type filter");
  }
  const std::vector<GroupSpec> types =
      type ? std::vector<GroupSpec>{*type} : catalog_types(n);
  const auto group_auts = automorphisms(group);

  std::set<RegularSubgroup> found;
  for (const GroupSpec& spec : types) {
    const FiniteGroup m = build_group(spec);
    if (m.order() != n) {
      throw Error(ErrorKind::kInvalidSpec,
                  spec.to_string() + " has order " +
                      std::to_string(m.order()) + ", expected " +
                      std::to_string(n));
    }
    const Holomorph hol = holomorph(m);
    for (const auto& q : regular_subgroups_of_holomorph(hol, group)) {
      // Index Q's elements by their image of 0.
      std::vector<ElementId> by_point(n);
      for (ElementId x : q) by_point[hol.perms[x][0]] = x;
      std::vector<ElementId> table(n * n);
      for (ElementId i = 0; i < n; ++i) {
        for (ElementId j = 0; j < n; ++j) {
          table[i * n + j] = hol.perms[by_point[i]][j];
        }
      }
      const FiniteGroup q_abstract = FiniteGroup::from_table(
          n, std::move(table), {}, GroupSpec::custom("Q"),
          FiniteGroup::Validation::kSkipAssociativity);
      const auto iso = are_isomorphic(group, q_abstract);
      if (!iso) continue;
      for (const GroupHom& alpha : group_auts) {
        const GroupHom iota = compose(*iso, alpha);
        HolEmbedding beta{group, m, {}};
        beta.beta.reserve(n);
        for (ElementId g = 0; g < n; ++g) {
          beta.beta.push_back(hol.perms[by_point[iota(g)]]);
        }
        found.insert(from_hol_embedding(beta).with_type(spec));
      }
    }
  }
  inv.structures.assign(found.begin(), found.end());
  return inv;
}

// ---------------------------------------------------------------------------
// Bijection oracle

std::vector<PermGroup> stable_regular_subgroups_by_bijection(
    const FiniteGroup& m, std::span<const Perm> normalizers) {
  const std::size_t n = m.order();
  const auto m_gens = small_generating_set(m);
  std::vector<Point> b(n);
  std::iota(b.begin(), b.end(), Point{0});
  std::vector<Point> b_inv(n);
  std::set<PermGroup> found;
  do {
    for (Point x = 0; x < n; ++x) b_inv[b[x]] = x;
    auto eta = [&](ElementId mu) {
      std::vector<Point> img(n);
      for (Point x = 0; x < n; ++x) img[x] = b[m.mul(mu, b_inv[x])];
      return Perm::from_images_unchecked(std::move(img));
    };
    std::vector<Perm> elems;
    elems.reserve(n);
    for (ElementId mu = 0; mu < n; ++mu) elems.push_back(eta(mu));
    std::vector<Perm> gens;
    for (ElementId g : m_gens) gens.push_back(eta(g));
    PermGroup candidate =
        PermGroup::from_elements(n, std::move(elems), std::move(gens));
    if (candidate.normalized_by(normalizers)) found.insert(std::move(candidate));
  } while (std::next_permutation(b.begin() + 1, b.end()));
  return {found.begin(), found.end()};
}

HgsInventory brute_force_inventory(const FiniteGroup& group) {
  const std::size_t n = group.order();
  if (n > 8) {
    throw Error(ErrorKind::kOrderTooLarge,
                "bijection oracle is limited to |G| <= 8, got " +
                    std::to_string(n));
  }
  std::vector<Perm> lambdas;
  for (ElementId g = 0; g < n; ++g) lambdas.push_back(lambda_embed(group, g));

  std::set<RegularSubgroup> found;
  for (const GroupSpec& spec : catalog_types(n)) {
    const FiniteGroup m = build_group(spec);
    for (auto& perms : stable_regular_subgroups_by_bijection(m, lambdas)) {
      found.insert(certify(group, std::move(perms)).with_type(spec));
    }
  }
  HgsInventory inv;
  inv.group = group;
  inv.complete = true;
  inv.structures.assign(found.begin(), found.end());
  return inv;
}

GroupSpec type_of(const RegularSubgroup& n) {
  const FiniteGroup star = n.star_group();
  std::vector<GroupSpec> candidates = catalog_types(n.order());
  const GroupSpec& own = n.group().spec();
  if (own.kind != GroupSpec::Kind::kCustom &&
      std::find(candidates.begin(), candidates.end(), own) ==
          candidates.end()) {
    candidates.push_back(own);
  }
  for (const GroupSpec& spec : candidates) {
    if (are_isomorphic(star, build_group(spec))) return spec;
  }
  throw Error(ErrorKind::kUnknownType,
              "no catalog group of order " + std::to_string(n.order()) +
                  " is isomorphic to N");
}

}  // namespace hgslab
