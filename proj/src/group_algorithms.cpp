#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "hgslab/error.hpp"
#include "hgslab/group.hpp"

namespace hgslab {

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(ElementId a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

std::optional<std::vector<ElementId>> bounded_closure(
    const FiniteGroup& group, std::span<const ElementId> generators,
    std::size_t cap) {
  const std::size_t n = group.order();
  std::vector<char> member(n, 0);
  std::vector<ElementId> elements{0};
  member[0] = 1;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const ElementId x = elements[i];
    for (ElementId g : generators) {
      const ElementId y = group.mul(x, g);
      if (!member[y]) {
        member[y] = 1;
        elements.push_back(y);
        if (elements.size() > cap) return std::nullopt;
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

Subgroup subgroup_closure(const FiniteGroup& group,
                          std::span<const ElementId> generators) {
  for (ElementId g : generators) {
    if (g >= group.order()) {
      throw Error(ErrorKind::kInvalidSpec,
                  "generator " + std::to_string(g) + " out of range");
    }
  }
  auto elements = bounded_closure(group, generators, group.order());
  return Subgroup{group, std::move(*elements),
                  std::vector<ElementId>(generators.begin(), generators.end())};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group) {
  const std::size_t n = group.order();
  // One representative generator per cyclic subgroup.
  std::vector<ElementId> cyclic_reps;
  std::set<std::vector<ElementId>> cyclic_seen;
  for (ElementId x = 1; x < n; ++x) {
    const ElementId gens[] = {x};
    auto elems = *bounded_closure(group, gens, n);
    if (cyclic_seen.insert(elems).second) cyclic_reps.push_back(x);
  }

  std::set<std::vector<ElementId>> seen;
  std::vector<Subgroup> found;
  found.push_back(Subgroup{group, {0}, {}});
  seen.insert({0});
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (ElementId x : cyclic_reps) {
      if (found[i].contains(x)) continue;
      std::vector<ElementId> gens = found[i].generators;
      gens.push_back(x);
      auto elems = *bounded_closure(group, gens, n);
      if (seen.insert(elems).second) {
        found.push_back(Subgroup{group, std::move(elems), std::move(gens)});
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a,
                                           const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return found;
}

bool is_normal(const Subgroup& subgroup) {
  const FiniteGroup& g = subgroup.parent;
  for (ElementId x = 0; x < g.order(); ++x) {
    for (ElementId h : subgroup.elements) {
      if (!subgroup.contains(g.mul(g.mul(x, h), g.inv(x)))) return false;
    }
  }
  return true;
}

Subgroup center(const FiniteGroup& group) {
  std::vector<ElementId> elems;
  for (ElementId z = 0; z < group.order(); ++z) {
    bool central = true;
    for (ElementId x = 0; x < group.order() && central; ++x) {
      central = group.mul(z, x) == group.mul(x, z);
    }
    if (central) elems.push_back(z);
  }
  auto gens = elems;
  return subgroup_closure(group, gens);
}

Subgroup conjugate_subgroup(const Subgroup& subgroup, ElementId g) {
  const FiniteGroup& grp = subgroup.parent;
  auto conj = [&](ElementId h) { return grp.mul(grp.mul(g, h), grp.inv(g)); };
  Subgroup out{grp, {}, {}};
  for (ElementId h : subgroup.elements) out.elements.push_back(conj(h));
  for (ElementId h : subgroup.generators) out.generators.push_back(conj(h));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::optional<Subgroup> normal_complement(const FiniteGroup& group,
                                          const Subgroup& t) {
  const std::size_t n = group.order();
  if (n % t.order() != 0) return std::nullopt;
  const std::size_t target = n / t.order();
  std::optional<Subgroup> best;
  for (auto& s : all_subgroups(group)) {
    if (s.order() != target) continue;
    bool trivial_meet = true;
    for (ElementId x : s.elements) {
      if (x != 0 && t.contains(x)) {
        trivial_meet = false;
        break;
      }
    }
    if (!trivial_meet || !is_normal(s)) continue;
    if (!best || s.elements < best->elements) best = std::move(s);
  }
  return best;
}

FiniteGroup subgroup_as_group(const Subgroup& subgroup) {
  const FiniteGroup& g = subgroup.parent;
  const std::size_t m = subgroup.order();
  std::vector<ElementId> pos(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) pos[subgroup.elements[i]] =
      static_cast<ElementId>(i);
  std::vector<ElementId> table(m * m);
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = g.name(subgroup.elements[i]);
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] =
          pos[g.mul(subgroup.elements[i], subgroup.elements[j])];
    }
  }
  return FiniteGroup::from_table(
      m, std::move(table), std::move(names),
      GroupSpec::custom("subgroup of " + g.spec().to_string()),
      FiniteGroup::Validation::kSkipAssociativity);
}

// ---------------------------------------------------------------------------
// Generating sets and classes

std::vector<ElementId> small_generating_set(const FiniteGroup& group) {
  const std::size_t n = group.order();
  if (n == 1) return {};
  std::vector<ElementId> by_order(n - 1);
  for (ElementId x = 1; x < n; ++x) by_order[x - 1] = x;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](ElementId a, ElementId b) {
                     return group.element_order(a) > group.element_order(b);
                   });

  std::vector<ElementId> gens;
  std::vector<char> member(n, 0);
  member[0] = 1;
  for (ElementId x : by_order) {
    if (member[x]) continue;
    gens.push_back(x);
    auto elems = *bounded_closure(group, gens, n);
    for (ElementId y : elems) member[y] = 1;
    if (elems.size() == n) break;
  }
  if (gens.size() <= 2 || n > 128) return gens;

  // Prefer a generating pair when one exists.
  for (std::size_t i = 0; i < by_order.size(); ++i) {
    for (std::size_t j = i + 1; j < by_order.size(); ++j) {
      const ElementId pair[] = {by_order[i], by_order[j]};
      if (bounded_closure(group, pair, n)->size() == n) {
        return {pair[0], pair[1]};
      }
    }
  }
  return gens;
}

std::vector<std::vector<ElementId>> conjugacy_classes(
    const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<ElementId>> classes;
  for (ElementId x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<ElementId> cls;
    for (ElementId g = 0; g < n; ++g) {
      const ElementId y = group.mul(group.mul(g, x), group.inv(g));
      if (!assigned[y]) {
        assigned[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> order_profile(const FiniteGroup& group) {
  std::vector<std::size_t> out;
  for (ElementId x = 0; x < group.order(); ++x) {
    out.push_back(group.element_order(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

bool GroupHom::is_homomorphism() const {
  if (images.size() != domain.order()) return false;
  for (ElementId a = 0; a < domain.order(); ++a) {
    if (images[a] >= codomain.order()) return false;
    for (ElementId b = 0; b < domain.order(); ++b) {
      if (images[domain.mul(a, b)] != codomain.mul(images[a], images[b])) {
        return false;
      }
    }
  }
  return true;
}

bool GroupHom::is_bijective() const {
  if (domain.order() != codomain.order()) return false;
  std::vector<char> hit(codomain.order(), 0);
  for (ElementId y : images) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool GroupHom::is_identity() const {
  for (ElementId a = 0; a < images.size(); ++a) {
    if (images[a] != a) return false;
  }
  return true;
}

GroupHom identity_hom(const FiniteGroup& group) {
  GroupHom h{group, group, std::vector<ElementId>(group.order())};
  for (ElementId a = 0; a < group.order(); ++a) h.images[a] = a;
  return h;
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  GroupHom out{g.domain, f.codomain, std::vector<ElementId>(g.images.size())};
  for (std::size_t a = 0; a < g.images.size(); ++a) {
    out.images[a] = f.images[g.images[a]];
  }
  return out;
}

GroupHom inverse(const GroupHom& iso) {
  if (!iso.is_bijective()) {
    throw Error(ErrorKind::kInvalidHom, "inverse of a non-bijective map");
  }
  GroupHom out{iso.codomain, iso.domain,
               std::vector<ElementId>(iso.images.size())};
  for (ElementId a = 0; a < iso.images.size(); ++a) {
    out.images[iso.images[a]] = a;
  }
  return out;
}

GroupHom inner_automorphism(const FiniteGroup& group, ElementId g) {
  GroupHom h{group, group, std::vector<ElementId>(group.order())};
  const ElementId gi = group.inv(g);
  for (ElementId x = 0; x < group.order(); ++x) {
    h.images[x] = group.mul(group.mul(g, x), gi);
  }
  return h;
}

namespace {

// Backtracking over images of a fixed generating set. At each depth the
// partial assignment is propagated over the subgroup generated so far, which
// rejects inconsistent (non-homomorphic) prefixes early.
class HomSearch {
 public:
  HomSearch(const FiniteGroup& domain, const FiniteGroup& codomain,
            bool bijective)
      : domain_(domain),
        codomain_(codomain),
        bijective_(bijective),
        gens_(small_generating_set(domain)) {
    for (ElementId g : gens_) {
      std::vector<ElementId> cands;
      const std::size_t ord = domain_.element_order(g);
      for (ElementId y = 0; y < codomain_.order(); ++y) {
        const std::size_t oy = codomain_.element_order(y);
        if (bijective_ ? oy == ord : ord % oy == 0) cands.push_back(y);
      }
      candidates_.push_back(std::move(cands));
    }
  }

  // Calls `visit(images)` for every homomorphism; stops when it returns false.
  void run(const std::function<bool(const std::vector<ElementId>&)>& visit) {
    std::vector<ElementId> imgs(gens_.size());
    if (gens_.empty()) {
      visit(std::vector<ElementId>{0});
      return;
    }
    recurse(0, imgs, visit);
  }

 private:
  // Returns the full image table over <gens[0..depth]> (kUnset elsewhere), or
  // nullopt if the assignment does not extend to a homomorphism.
  std::optional<std::vector<ElementId>> propagate(
      std::size_t depth, const std::vector<ElementId>& imgs) const {
    constexpr ElementId kUnset = ~ElementId{0};
    const std::size_t n = domain_.order();
    std::vector<ElementId> map(n, kUnset);
    std::vector<char> used(codomain_.order(), 0);
    map[0] = 0;
    used[0] = 1;
    std::vector<ElementId> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const ElementId x = queue[i];
      for (std::size_t k = 0; k <= depth; ++k) {
        const ElementId y = domain_.mul(x, gens_[k]);
        const ElementId fy = codomain_.mul(map[x], imgs[k]);
        if (map[y] == kUnset) {
          if (bijective_ && used[fy]) return std::nullopt;
          map[y] = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return std::nullopt;
        }
      }
    }
    return map;
  }

  bool recurse(std::size_t depth, std::vector<ElementId>& imgs,
               const std::function<bool(const std::vector<ElementId>&)>&
                   visit) {
    for (ElementId c : candidates_[depth]) {
      imgs[depth] = c;
      auto map = propagate(depth, imgs);
      if (!map) continue;
      if (depth + 1 == gens_.size()) {
        if (!visit(*map)) return false;
      } else if (!recurse(depth + 1, imgs, visit)) {
        return false;
      }
    }
    return true;
  }

  const FiniteGroup& domain_;
  const FiniteGroup& codomain_;
  bool bijective_;
  std::vector<ElementId> gens_;
  std::vector<std::vector<ElementId>> candidates_;
};

std::vector<GroupHom> collect_homs(const FiniteGroup& domain,
                                   const FiniteGroup& codomain,
                                   bool bijective) {
  std::vector<GroupHom> out;
  HomSearch search(domain, codomain, bijective);
  search.run([&](const std::vector<ElementId>& images) {
    out.push_back(GroupHom{domain, codomain, images});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const GroupHom& a, const GroupHom& b) {
    return a.images < b.images;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<GroupHom> automorphisms(const FiniteGroup& group) {
  return collect_homs(group, group, true);
}

std::vector<GroupHom> homomorphisms(const FiniteGroup& domain,
                                    const FiniteGroup& codomain) {
  return collect_homs(domain, codomain, false);
}

std::vector<GroupHom> endomorphisms(const FiniteGroup& group) {
  return homomorphisms(group, group);
}

std::optional<GroupHom> are_isomorphic(const FiniteGroup& g,
                                       const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (order_profile(g) != order_profile(h)) return std::nullopt;
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  std::optional<GroupHom> found;
  HomSearch search(g, h, true);
  search.run([&](const std::vector<ElementId>& images) {
    found = GroupHom{g, h, images};
    return false;
  });
  return found;
}

}  // namespace hgslab
