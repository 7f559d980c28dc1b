#include "hgslab/perm.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_set>

#include "hgslab/error.hpp"

namespace hgslab {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

void require_same_base(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::kBaseMismatch,
                "permutations on " + std::to_string(p.size()) + " and " +
                    std::to_string(q.size()) + " points");
  }
}

}  // namespace

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || hit[x]) {
      throw Error(ErrorKind::kInvalidSpec, "image sequence is not a bijection");
    }
    hit[x] = 1;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  return from_images_unchecked(std::move(img));
}

Perm Perm::from_images_unchecked(std::vector<Point> images) {
  Perm p;
  p.images_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

bool Perm::has_fixed_point() const {
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] == x) return true;
  }
  return false;
}

std::size_t Perm::cycle_order() const {
  std::size_t order = 1;
  std::vector<char> seen(images_.size(), 0);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Perm compose(const Perm& p, const Perm& q) {
  require_same_base(p, q);
  std::vector<Point> img(q.size());
  for (Point x = 0; x < q.size(); ++x) img[x] = p[q[x]];
  return Perm::from_images_unchecked(std::move(img));
}

Perm invert(const Perm& p) {
  std::vector<Point> img(p.size());
  for (Point x = 0; x < p.size(); ++x) img[p[x]] = x;
  return Perm::from_images_unchecked(std::move(img));
}

Perm conjugate(const Perm& p, const Perm& q) {
  require_same_base(p, q);
  // (q p q^-1)[q[x]] = q[p[x]]
  std::vector<Point> img(p.size());
  for (Point x = 0; x < p.size(); ++x) img[q[x]] = q[p[x]];
  return Perm::from_images_unchecked(std::move(img));
}

Perm lambda_embed(const FiniteGroup& group, ElementId g) {
  std::vector<Point> img(group.order());
  for (ElementId x = 0; x < group.order(); ++x) img[x] = group.mul(g, x);
  return Perm::from_images_unchecked(std::move(img));
}

Perm rho_embed(const FiniteGroup& group, ElementId g) {
  const ElementId gi = group.inv(g);
  std::vector<Point> img(group.order());
  for (ElementId x = 0; x < group.order(); ++x) img[x] = group.mul(x, gi);
  return Perm::from_images_unchecked(std::move(img));
}

Perm hom_as_perm(const GroupHom& hom) {
  return Perm(std::vector<Point>(hom.images.begin(), hom.images.end()));
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup PermGroup::generate(std::size_t base, std::vector<Perm> generators,
                              std::size_t cap) {
  if (cap == 0) cap = std::max<std::size_t>(10 * base * base, 1);
  for (const Perm& g : generators) {
    if (g.size() != base) {
      throw Error(ErrorKind::kBaseMismatch,
                  "generator on " + std::to_string(g.size()) +
                      " points, expected " + std::to_string(base));
    }
  }
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> elements{Perm::identity(base)};
  seen.insert(elements.front());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm& g : generators) {
      Perm next = compose(elements[i], g);
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > cap) {
          throw Error(ErrorKind::kClosureCap,
                      "closure exceeded " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  PermGroup out;
  out.base_ = base;
  out.elements_ = std::move(elements);
  out.generators_ = std::move(generators);
  return out;
}

PermGroup PermGroup::from_elements(std::size_t base, std::vector<Perm> elements,
                                   std::vector<Perm> generators) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  PermGroup out;
  out.base_ = base;
  out.elements_ = std::move(elements);
  if (generators.empty() && out.order() > 1) {
    // Greedy: highest-order element not yet generated.
    std::vector<std::size_t> idx(out.order());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<std::size_t> orders(out.order());
    for (std::size_t i = 0; i < out.order(); ++i) {
      orders[i] = out.elements_[i].cycle_order();
    }
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a,
                                                 std::size_t b) {
      return orders[a] > orders[b];
    });
    std::size_t covered = 1;
    PermGroup current;
    for (std::size_t i : idx) {
      if (covered == out.order()) break;
      if (!generators.empty() && current.contains(out.elements_[i])) continue;
      generators.push_back(out.elements_[i]);
      current = generate(base, generators, out.order() + 1);
      covered = current.order();
    }
  }
  out.generators_ = std::move(generators);
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_semiregular() const {
  for (const Perm& p : elements_) {
    if (!p.is_identity() && p.has_fixed_point()) return false;
  }
  return true;
}

bool PermGroup::is_regular() const {
  if (order() != base_) return false;
  std::vector<char> hit(base_, 0);
  for (const Perm& p : elements_) {
    if (hit[p[0]]) return false;
    hit[p[0]] = 1;
  }
  return true;
}

PermGroup PermGroup::conjugated_by(const Perm& q) const {
  PermGroup out;
  out.base_ = base_;
  out.elements_.reserve(elements_.size());
  for (const Perm& p : elements_) out.elements_.push_back(conjugate(p, q));
  std::sort(out.elements_.begin(), out.elements_.end());
  for (const Perm& g : generators_) out.generators_.push_back(conjugate(g, q));
  return out;
}

bool PermGroup::normalized_by(std::span<const Perm> perms) const {
  for (const Perm& q : perms) {
    for (const Perm& g : generators_) {
      if (!contains(conjugate(g, q))) return false;
    }
  }
  return true;
}

std::string PermGroup::canonical_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(base_);
  for (const Perm& p : elements_) {
    for (Point x : p.images()) mix(x);
  }
  // FNV only carries entropy upwards; finish with a full avalanche.
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

PermGroup generated_perm_group(std::size_t base, std::span<const Perm> gens,
                               std::size_t cap) {
  return PermGroup::generate(base, std::vector<Perm>(gens.begin(), gens.end()),
                             cap);
}

namespace {

// eta[a] = element of a regular group sending 0 to a.
std::vector<const Perm*> regular_bijection(const PermGroup& n) {
  if (!n.is_regular()) {
    throw Error(ErrorKind::kNotRegular,
                "group of order " + std::to_string(n.order()) + " on " +
                    std::to_string(n.base()) + " points is not regular");
  }
  std::vector<const Perm*> eta(n.base());
  for (const Perm& p : n.elements()) eta[p[0]] = &p;
  return eta;
}

}  // namespace

PermGroup centralizer_of_regular(const PermGroup& n) {
  const auto eta = regular_bijection(n);
  const std::size_t base = n.base();
  std::vector<Perm> elems;
  elems.reserve(base);
  for (Point c = 0; c < base; ++c) {
    std::vector<Point> img(base);
    for (Point x = 0; x < base; ++x) img[x] = (*eta[x])[c];
    elems.push_back(Perm::from_images_unchecked(std::move(img)));
  }
  return PermGroup::from_elements(base, std::move(elems));
}

FiniteGroup regular_group_as_abstract(const PermGroup& n, GroupSpec spec) {
  const auto eta = regular_bijection(n);
  const std::size_t base = n.base();
  std::vector<ElementId> table(base * base);
  for (Point a = 0; a < base; ++a) {
    for (Point b = 0; b < base; ++b) table[a * base + b] = (*eta[a])[b];
  }
  return FiniteGroup::from_table(base, std::move(table), {}, std::move(spec),
                                 FiniteGroup::Validation::kSkipAssociativity);
}

// ---------------------------------------------------------------------------
// Cosets

CosetSpace coset_space(const FiniteGroup& group, const Subgroup& t) {
  CosetSpace space{group, t, {}, {}, std::vector<std::size_t>(group.order())};
  std::vector<char> done(group.order(), 0);
  for (ElementId x = 0; x < group.order(); ++x) {
    if (done[x]) continue;
    std::vector<ElementId> coset;
    for (ElementId h : t.elements) coset.push_back(group.mul(x, h));
    std::sort(coset.begin(), coset.end());
    for (ElementId y : coset) {
      done[y] = 1;
      space.coset_of[y] = space.cosets.size();
    }
    space.representatives.push_back(coset.front());
    space.cosets.push_back(std::move(coset));
  }
  return space;
}

Perm left_translation(const CosetSpace& space, ElementId h) {
  std::vector<Point> img(space.size());
  for (std::size_t c = 0; c < space.size(); ++c) {
    img[c] = static_cast<Point>(
        space.coset_of[space.parent.mul(h, space.representatives[c])]);
  }
  return Perm::from_images_unchecked(std::move(img));
}

std::vector<Perm> left_translation_generators(const CosetSpace& space) {
  std::vector<Perm> out;
  for (ElementId g : small_generating_set(space.parent)) {
    out.push_back(left_translation(space, g));
  }
  return out;
}

}  // namespace hgslab
