#include <catch_amalgamated.hpp>

#include "hgslab/brace.hpp"
#include "hgslab/error.hpp"
#include "hgslab/families.hpp"
#include "hgslab/rho.hpp"
#include "oracles.hpp"

using namespace hgslab;

namespace {

// x o (y * z) = (x o y) * x^-1 * (x o z), straight from the tables.
bool oracle_brace(const SkewBrace& b) {
  const std::size_t n = b.size;
  for (ElementId x = 0; x < n; ++x) {
    ElementId xinv = 0;
    for (ElementId y = 0; y < n; ++y)
      if (b.s(x, y) == 0) xinv = y;
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z)
        if (b.c(x, b.s(y, z)) != b.s(b.s(b.c(x, y), xinv), b.c(x, z))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("braces from structures satisfy the brace relation") {
  for (const char* text : {"dihedral:4", "quaternion:8", "alt:4", "dicyclic:12"}) {
    const FiniteGroup g = build_group(parse_group_spec(text));
    for (const auto& n : enumerate_hgs(g).structures) {
      const SkewBrace b = brace_from_subgroup(n);
      CHECK(oracle_brace(b));
      CHECK(brace_axioms_hold(b));
      CHECK(circ_group(b).same_table(g));
      for (ElementId x = 0; x < g.order(); ++x)
        for (ElementId y = 0; y < g.order(); ++y)
          CHECK(b.s(x, y) == compose(n.eta(x), n.eta(y))[0]);
      CHECK(subgroup_from_brace(b, g) == n);
      CHECK(subgroup_from_brace(b).perms() == n.perms());
      CHECK(are_isomorphic(star_group(b), n.star_group()).has_value());
    }
  }
}

TEST_CASE("make_brace rejects tables that break the relation") {
  const FiniteGroup c4 = build_group(GroupSpec::cyclic(4));
  const FiniteGroup v4 = build_group(GroupSpec::elementary_abelian(2, 2));
  std::vector<ElementId> star(c4.table().begin(), c4.table().end());
  std::vector<ElementId> circ(v4.table().begin(), v4.table().end());
  CHECK_NOTHROW(make_brace(4, star, star));
  const SkewBrace raw{4, star, circ, {}, {}};
  bool rejected = false;
  try {
    make_brace(4, star, circ);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kBraceAxiom);
    rejected = true;
  }
  CHECK(rejected == !oracle_brace(raw));
  std::vector<ElementId> not_group(16, 0);
  CHECK_THROWS_AS(make_brace(4, not_group, circ), Error);
  CHECK_THROWS_AS(subgroup_from_brace(make_brace(4, star, star), v4), Error);
}

TEST_CASE("normalizer criteria agree and orbit size is the index of G'") {
  for (const auto& spec : catalog_up_to(12)) {
    const FiniteGroup g = build_group(spec);
    for (const auto& n : enumerate_hgs(g).structures) {
      const SkewBrace b = brace_from_subgroup(n);
      std::size_t normalizing = 0;
      for (ElementId x = 0; x < g.order(); ++x) {
        const auto cond = normalizer_conditions(n, b, x);
        CHECK(cond.agree());
        if (cond.rho_normalizes) ++normalizing;
      }
      const Subgroup gp = g_prime(b);
      CHECK(gp.order() == normalizing);
      CHECK(rho_orbit(n).size() * gp.order() == g.order());
      CHECK(is_two_sided(b) == (normalizing == g.order()));
      CHECK(gv_identity_check(b));
    }
  }
}

TEST_CASE("Yang-Baxter maps from braces") {
  for (const char* text : {"dihedral:3", "dihedral:4", "quaternion:8", "alt:4"}) {
    const FiniteGroup g = build_group(parse_group_spec(text));
    for (const auto& n : enumerate_hgs(g).structures) {
      const YbeMap r = ybe_map(brace_from_subgroup(n));
      CHECK(is_bijective(r));
      CHECK(satisfies_braid_relation(r));
    }
  }
  // (x, y) -> (x + y, x) is bijective but not braided.
  YbeMap bad{3, {}};
  for (ElementId x = 0; x < 3; ++x)
    for (ElementId y = 0; y < 3; ++y) bad.table.push_back({(x + y) % 3, x});
  CHECK(is_bijective(bad));
  CHECK_FALSE(satisfies_braid_relation(bad));
}

TEST_CASE("brace isomorphism agrees with conjugacy of subgroups") {
  for (const char* text : {"dihedral:4", "quaternion:8", "dihedral:6"}) {
    const FiniteGroup g = build_group(parse_group_spec(text));
    const auto ns = enumerate_hgs(g).structures;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      for (std::size_t j = 0; j < ns.size(); ++j) {
        const BraceComparison cmp = braces_equal_via(ns[i], ns[j]);
        CHECK(cmp.consistent());
        CHECK(cmp.same_by_subgroups == (i == j));
      }
    }
  }
}

TEST_CASE("cyclic-type brace on the metacyclic group of order 21") {
  const FiniteGroup g = build_group(GroupSpec::metacyclic(7, 3, 2));
  const RegularSubgroup n = metacyclic_cyclic_structure(g, 0);
  const SkewBrace b = brace_from_subgroup(n);
  CHECK(g_prime(b).order() == 3);
  CHECK(g_prime(b).contains(metacyclic_element(g, 0, 1)));
  CHECK_FALSE(is_two_sided(b));
  std::size_t preserving = 0;
  for (const auto& f : oracle::automorphisms(oracle::table_of(g))) {
    bool ok = true;
    for (ElementId x = 0; x < g.order() && ok; ++x)
      for (ElementId y = 0; y < g.order() && ok; ++y)
        ok = f[b.s(x, y)] == static_cast<int>(b.s(f[x], f[y]));
    if (ok) ++preserving;
  }
  CHECK(preserving == 6);
  CHECK(brace_automorphisms(b).size() == preserving);
  CHECK(satisfies_braid_relation(ybe_map(b)));
}

TEST_CASE("automorphisms of trivial braces are the group automorphisms") {
  for (const char* text : {"dihedral:4", "alt:4"}) {
    const FiniteGroup g = build_group(parse_group_spec(text));
    std::vector<ElementId> table(g.table().begin(), g.table().end());
    const SkewBrace b = make_brace(g.order(), table, table);
    CHECK(brace_automorphisms(b).size() == automorphisms(g).size());
    CHECK(is_two_sided(b));
  }
}
