#pragma once

// Finite groups as Cayley tables, plus the subgroup / homomorphism machinery
// the rest of the library is built on. Element 0 is always the identity.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgslab {

using ElementId = std::uint32_t;

// Descriptor of a group in the constructor catalog. `to_string()` and
// `parse_group_spec()` implement the CLI grammar, e.g. "metacyclic:7:3:2" or
// "product:cyclic:2,cyclic:4".
struct GroupSpec {
  enum class Kind {
    kCyclic,             // params {n}
    kDihedral,           // params {n}, order 2n
    kMetacyclic,         // params {p, q, d}
    kSymmetric,          // params {n}
    kAlternating,        // params {n}
    kQuaternion,         // params {8}
    kDicyclic,           // params {order}, order divisible by 4
    kProduct,            // factors {A, B, ...}
    kElementaryAbelian,  // params {p, k}
    kCustom,             // derived groups (holomorphs, star groups); label only
  };

  Kind kind = Kind::kCyclic;
  std::vector<int> params;
  std::vector<GroupSpec> factors;
  std::string label;

  static GroupSpec cyclic(int n);
  static GroupSpec dihedral(int n);
  static GroupSpec metacyclic(int p, int q, int d);
  static GroupSpec symmetric(int n);
  static GroupSpec alternating(int n);
  static GroupSpec quaternion();
  static GroupSpec dicyclic(int order);
  static GroupSpec elementary_abelian(int p, int k);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec custom(std::string label);

  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec parse_group_spec(std::string_view text);

// Immutable handle to a Cayley table. Copies share the underlying data.
class FiniteGroup {
 public:
  enum class Validation { kFull, kSkipAssociativity };

  // Trivial group.
  FiniteGroup();

  // Throws Error(kInvalidSpec) if the table is not a group table with
  // identity 0. Associativity (n^3) is checked under Validation::kFull.
  static FiniteGroup from_table(std::size_t n, std::vector<ElementId> table,
                                std::vector<std::string> names, GroupSpec spec,
                                Validation validation = Validation::kFull);

  std::size_t order() const { return n_; }
  ElementId mul(ElementId a, ElementId b) const { return table_[a * n_ + b]; }
  ElementId inv(ElementId a) const;
  ElementId pow(ElementId a, long long k) const;
  std::size_t element_order(ElementId a) const;
  bool is_abelian() const;

  const std::string& name(ElementId a) const;
  const std::vector<std::string>& names() const;
  const GroupSpec& spec() const;
  std::span<const ElementId> table() const { return {table_, n_ * n_}; }

  // Same Cayley table (identical labelling).
  bool same_table(const FiniteGroup& other) const;

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
  std::size_t n_ = 1;
  const ElementId* table_ = nullptr;
};

// Throws Error(kInvalidSpec) on bad parameters.
FiniteGroup build_group(const GroupSpec& spec);

// Whether the catalog provably lists every isomorphism type of this order.
bool catalog_complete(std::size_t order);
// One spec per isomorphism type of the given order (empty if unknown).
std::vector<GroupSpec> catalog_types(std::size_t order);
// Every catalog group with order <= max_order.
std::vector<GroupSpec> catalog_up_to(std::size_t max_order);

struct Subgroup {
  FiniteGroup parent;
  std::vector<ElementId> elements;  // sorted, starts with 0
  std::vector<ElementId> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(ElementId a) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements == b.elements;
  }
};

Subgroup subgroup_closure(const FiniteGroup& group,
                          std::span<const ElementId> generators);
// Closure that gives up (returns nullopt) once more than `cap` elements appear.
std::optional<std::vector<ElementId>> bounded_closure(
    const FiniteGroup& group, std::span<const ElementId> generators,
    std::size_t cap);
std::vector<Subgroup> all_subgroups(const FiniteGroup& group);
bool is_normal(const Subgroup& subgroup);
Subgroup center(const FiniteGroup& group);
Subgroup conjugate_subgroup(const Subgroup& subgroup, ElementId g);
std::optional<Subgroup> normal_complement(const FiniteGroup& group,
                                          const Subgroup& t);
// The subgroup as a group in its own right; element i is subgroup.elements[i].
FiniteGroup subgroup_as_group(const Subgroup& subgroup);

std::vector<ElementId> small_generating_set(const FiniteGroup& group);
std::vector<std::vector<ElementId>> conjugacy_classes(const FiniteGroup& group);

struct GroupHom {
  FiniteGroup domain;
  FiniteGroup codomain;
  std::vector<ElementId> images;

  ElementId operator()(ElementId a) const { return images[a]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
  bool is_identity() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.images == b.images;
  }
};

GroupHom identity_hom(const FiniteGroup& group);
// (f ∘ g)(x) = f(g(x)).
GroupHom compose(const GroupHom& f, const GroupHom& g);
GroupHom inverse(const GroupHom& iso);
GroupHom inner_automorphism(const FiniteGroup& group, ElementId g);

// All automorphisms, sorted by image sequence (identity first).
std::vector<GroupHom> automorphisms(const FiniteGroup& group);
// All homomorphisms domain -> codomain, sorted by image sequence.
std::vector<GroupHom> homomorphisms(const FiniteGroup& domain,
                                    const FiniteGroup& codomain);
std::vector<GroupHom> endomorphisms(const FiniteGroup& group);
std::optional<GroupHom> are_isomorphic(const FiniteGroup& g,
                                       const FiniteGroup& h);
// Sorted multiset of element orders.
std::vector<std::size_t> order_profile(const FiniteGroup& group);

}  // namespace hgslab
