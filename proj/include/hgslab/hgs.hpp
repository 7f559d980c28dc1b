#pragma once

// Hopf-Galois structures on a Galois group G, represented by their
// Greither-Pareigis subgroups: regular subgroups N <= Perm(G) normalized by
// lambda(G).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgslab/group.hpp"
#include "hgslab/perm.hpp"

namespace hgslab {

// A certified G-stable regular subgroup. Only constructible through
// certify(), so every instance has passed the regularity and stability
// checks.
class RegularSubgroup {
 public:
  const FiniteGroup& group() const { return group_; }
  const PermGroup& perms() const { return perms_; }
  std::size_t order() const { return perms_.order(); }
  // The unique element of N sending 0 to a.
  const Perm& eta(ElementId a) const { return perms_.elements()[eta_[a]]; }
  const std::optional<GroupSpec>& type_label() const { return type_; }
  RegularSubgroup with_type(std::optional<GroupSpec> type) const;
  std::string hash() const { return perms_.canonical_hash(); }
  // (G, star) with a star b = (eta_a eta_b)[0]; isomorphic to N.
  FiniteGroup star_group() const;
  bool contains(const Perm& p) const { return perms_.contains(p); }

  friend bool operator==(const RegularSubgroup& a, const RegularSubgroup& b) {
    return a.perms_ == b.perms_;
  }
  friend bool operator<(const RegularSubgroup& a, const RegularSubgroup& b) {
    return a.perms_ < b.perms_;
  }

 private:
  friend RegularSubgroup certify(const FiniteGroup& group, PermGroup perms);

  FiniteGroup group_;
  PermGroup perms_;
  std::vector<std::size_t> eta_;
  std::optional<GroupSpec> type_;
};

// Throws Error(kNotRegular) or Error(kNotStable) naming the witness.
RegularSubgroup certify(const FiniteGroup& group, PermGroup perms);
// lambda(g) eta lambda(g)^-1 in N for every g in G and every eta in N.
bool is_g_stable_exhaustive(const RegularSubgroup& n);

// g * eta = lambda(g) eta lambda(g)^-1. Throws Error(kNotMember) if eta is
// not in N.
Perm g_star_action(const RegularSubgroup& n, ElementId g, const Perm& eta);

// Centralizer of N in Perm(G).
RegularSubgroup opposite(const RegularSubgroup& n);

struct HgsInventory {
  FiniteGroup group;
  std::vector<RegularSubgroup> structures;  // canonical order
  bool complete = false;
  std::optional<GroupSpec> type_filter;

  std::size_t size() const { return structures.size(); }
};

// Every G-stable regular subgroup (of the given type, if any) via regular
// embeddings of G into Hol(M). Without a filter the order must be catalog
// complete, else Error(kUnsupportedOrder).
HgsInventory enumerate_hgs(const FiniteGroup& group,
                           const std::optional<GroupSpec>& type = std::nullopt);

// Independent oracle: N_b = b lambda_M b^-1 over all bijections b: M -> G
// with b(0) = 0, kept when normalized by lambda(G). |G| <= 8.
HgsInventory brute_force_inventory(const FiniteGroup& group);

// Regular subgroups of Sym(degree) of the form b lambda_M b^-1 that are
// normalized by every permutation in `normalizers`, over all bijections b
// fixing 0. Sorted, deduplicated.
std::vector<PermGroup> stable_regular_subgroups_by_bijection(
    const FiniteGroup& m, std::span<const Perm> normalizers);

// Catalog label of N's isomorphism type; Error(kUnknownType) if none fits.
GroupSpec type_of(const RegularSubgroup& n);

}  // namespace hgslab
