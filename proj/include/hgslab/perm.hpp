#pragma once

// Permutations of a finite point set {0..n-1}, the left/right regular
// representations of a FiniteGroup, and coset spaces.
//
// Conventions: compose(p, q)[x] = p[q[x]];  lambda(g)[x] = g*x;
// rho(g)[x] = x*g^-1. With these both lambda and rho are homomorphisms and
// their images commute.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hgslab/group.hpp"

namespace hgslab {

using Point = std::uint32_t;

class Perm {
 public:
  Perm() = default;
  // Throws Error(kInvalidSpec) unless `images` is a bijection of [0, n).
  explicit Perm(std::vector<Point> images);
  static Perm identity(std::size_t n);
  // No validation; for hot loops that construct bijections by design.
  static Perm from_images_unchecked(std::vector<Point> images);

  std::size_t size() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }
  bool is_identity() const;
  bool has_fixed_point() const;
  std::size_t cycle_order() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

Perm compose(const Perm& p, const Perm& q);
Perm invert(const Perm& p);
// q p q^-1
Perm conjugate(const Perm& p, const Perm& q);

Perm lambda_embed(const FiniteGroup& group, ElementId g);
Perm rho_embed(const FiniteGroup& group, ElementId g);
// A bijective group map viewed as a permutation of the underlying set.
Perm hom_as_perm(const GroupHom& hom);

// Subgroup of Sym(base) with elements kept in canonical (sorted) order.
class PermGroup {
 public:
  PermGroup() = default;
  // Closure of `generators`; `cap` bounds the number of elements (0 selects
  // the default 10 * base^2). Throws Error(kClosureCap) on overflow.
  static PermGroup generate(std::size_t base, std::vector<Perm> generators,
                            std::size_t cap = 0);
  // `elements` must already be closed under composition; they are sorted
  // here. Empty `generators` selects a small generating set.
  static PermGroup from_elements(std::size_t base, std::vector<Perm> elements,
                                 std::vector<Perm> generators = {});

  std::size_t base() const { return base_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  bool contains(const Perm& p) const;
  // Position of p in elements(), or order() if absent.
  std::size_t index_of(const Perm& p) const;
  bool is_regular() const;
  bool is_semiregular() const;
  // Conjugate every element by q: {q p q^-1}.
  PermGroup conjugated_by(const Perm& q) const;
  // Every element of `generators` maps into this group under conjugation.
  bool normalized_by(std::span<const Perm> perms) const;
  // 16 hex digits of FNV-1a over the canonical element list.
  std::string canonical_hash() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.base_ == b.base_ && a.elements_ == b.elements_;
  }
  friend bool operator<(const PermGroup& a, const PermGroup& b) {
    return a.elements_ < b.elements_;
  }

 private:
  std::size_t base_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
};

PermGroup generated_perm_group(std::size_t base, std::span<const Perm> gens,
                               std::size_t cap = 0);

// For regular N the full centralizer in Sym(base) is {x -> eta_x[c] : c},
// where eta_x is the element of N sending 0 to x. Throws Error(kNotRegular).
PermGroup centralizer_of_regular(const PermGroup& n);

// Abstract group of a regular permutation group, element a being the member
// that sends 0 to a.
FiniteGroup regular_group_as_abstract(const PermGroup& n, GroupSpec spec);

struct CosetSpace {
  FiniteGroup parent;
  Subgroup subgroup;
  std::vector<std::vector<ElementId>> cosets;  // ordered by minimal element
  std::vector<ElementId> representatives;      // minimal element of each
  std::vector<std::size_t> coset_of;           // element -> coset index

  std::size_t size() const { return cosets.size(); }
};

CosetSpace coset_space(const FiniteGroup& group, const Subgroup& t);
// h acting on left cosets: xT -> hxT.
Perm left_translation(const CosetSpace& space, ElementId h);
// Translations by a generating set of the parent group.
std::vector<Perm> left_translation_generators(const CosetSpace& space);

}  // namespace hgslab
