#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>

#include "hgslab/error.hpp"
#include "hgslab/hgs.hpp"
#include "oracles.hpp"

using namespace hgslab;

namespace {

// Totals per group, computed by the holomorph oracle in tests/oracles.hpp and
// frozen.
const std::map<std::string, std::size_t> kTotals = {
    {"cyclic:1", 1},
    {"cyclic:2", 1},
    {"cyclic:3", 1},
    {"cyclic:4", 2},
    {"elementary-abelian:2:2", 4},
    {"cyclic:5", 1},
    {"cyclic:6", 3},
    {"dihedral:3", 5},
    {"cyclic:7", 1},
    {"cyclic:8", 6},
    {"product:cyclic:2,cyclic:4", 26},
    {"elementary-abelian:2:3", 106},
    {"dihedral:4", 30},
    {"quaternion:8", 22},
    {"cyclic:9", 3},
    {"elementary-abelian:3:2", 9},
    {"cyclic:10", 3},
    {"dihedral:5", 7},
    {"cyclic:11", 1},
    {"cyclic:12", 6},
    {"product:cyclic:2,cyclic:6", 20},
    {"alt:4", 14},
    {"dihedral:6", 40},
    {"dicyclic:12", 22},
};

// Order 12, rows G and columns M in catalog order (C12, C2xC6, A4, D6,
// Dic12); from the holomorph oracle.
const std::size_t kOrder12[5][5] = {
    {1, 1, 0, 2, 2},
    {3, 1, 4, 6, 6},
    {0, 4, 10, 0, 0},
    {9, 3, 0, 14, 14},
    {3, 3, 12, 2, 2},
};

}  // namespace

TEST_CASE("inventory sizes match the frozen oracle totals") {
  for (const auto& spec : catalog_up_to(12)) {
    const FiniteGroup g = build_group(spec);
    const HgsInventory inv = enumerate_hgs(g);
    INFO(spec.to_string());
    CHECK(inv.complete);
    CHECK(inv.size() == kTotals.at(spec.to_string()));
    CHECK(std::is_sorted(inv.structures.begin(), inv.structures.end()));
  }
}

TEST_CASE("per-type counts match the holomorph oracle") {
  for (std::size_t order : {4, 6, 8, 9, 10, 12}) {
    const auto types = catalog_types(order);
    std::vector<oracle::Table> tables;
    for (const auto& t : types) tables.push_back(oracle::table_of(build_group(t)));
    // Order profiles tell the types apart at these orders.
    for (std::size_t i = 0; i < tables.size(); ++i)
      for (std::size_t j = i + 1; j < tables.size(); ++j)
        REQUIRE(oracle::profile(tables[i]) != oracle::profile(tables[j]));

    for (std::size_t i = 0; i < types.size(); ++i) {
      const FiniteGroup g = build_group(types[i]);
      std::size_t total = 0;
      for (std::size_t j = 0; j < types.size(); ++j) {
        const HgsInventory inv = enumerate_hgs(g, types[j]);
        INFO(types[i].to_string() << " of type " << types[j].to_string());
        CHECK(inv.size() == oracle::structure_count(tables[i], tables[j]));
        if (order == 12) CHECK(inv.size() == kOrder12[i][j]);
        for (const auto& n : inv.structures) CHECK(type_of(n) == types[j]);
        total += inv.size();
      }
      CHECK(total == enumerate_hgs(g).size());
    }
  }
}

TEST_CASE("metacyclic group of order 21") {
  const FiniteGroup g = build_group(GroupSpec::metacyclic(7, 3, 2));
  const auto t = oracle::table_of(g);
  const auto c21 = oracle::table_of(build_group(GroupSpec::cyclic(21)));
  const HgsInventory cyclic = enumerate_hgs(g, GroupSpec::cyclic(21));
  const HgsInventory split = enumerate_hgs(g, g.spec());
  CHECK(cyclic.size() == 7);
  CHECK(cyclic.size() == oracle::structure_count(t, c21));
  CHECK(split.size() == oracle::structure_count(t, t));
  CHECK(cyclic.size() + split.size() == 23);
  CHECK(enumerate_hgs(g).size() == 23);
  // Orders without a complete catalog need an explicit type.
  CHECK_THROWS_AS(enumerate_hgs(build_group(GroupSpec::cyclic(16))), Error);
  const FiniteGroup c16 = build_group(GroupSpec::cyclic(16));
  const auto t16 = oracle::table_of(c16);
  CHECK(enumerate_hgs(c16, c16.spec()).size() == oracle::structure_count(t16, t16));
}

TEST_CASE("enumeration agrees with the bijection search up to order 8") {
  for (const auto& spec : catalog_up_to(8)) {
    const FiniteGroup g = build_group(spec);
    INFO(spec.to_string());
    CHECK(enumerate_hgs(g).structures == brute_force_inventory(g).structures);
  }
}

TEST_CASE("every inventory member is regular and G-stable") {
  for (const char* text : {"dihedral:4", "alt:4", "dicyclic:12"}) {
    const FiniteGroup g = build_group(parse_group_spec(text));
    const auto t = oracle::table_of(g);
    for (const auto& n : enumerate_hgs(g).structures) {
      const auto raw = oracle::raw_set(n.perms());
      CHECK(oracle::is_regular(raw, g.order()));
      CHECK(oracle::lambda_stable(t, raw));
      CHECK(is_g_stable_exhaustive(n));
      for (ElementId a = 0; a < g.order(); ++a) CHECK(n.eta(a)[0] == a);
    }
  }
}

TEST_CASE("certification matches the stability oracle on conjugates of lambda(G)") {
  const FiniteGroup g = build_group(GroupSpec::symmetric(3));
  const auto t = oracle::table_of(g);
  std::vector<Point> b(6);
  std::iota(b.begin(), b.end(), 0);
  std::size_t accepted = 0, rejected = 0;
  do {
    const Perm q(b);
    std::vector<Perm> gens;
    for (ElementId a = 0; a < 6; ++a) gens.push_back(conjugate(lambda_embed(g, a), q));
    const PermGroup n = PermGroup::generate(6, gens);
    const bool stable = oracle::lambda_stable(t, oracle::raw_set(n));
    try {
      certify(g, n);
      CHECK(stable);
      ++accepted;
    } catch (const Error& e) {
      CHECK_FALSE(stable);
      CHECK(e.kind() == ErrorKind::kNotStable);
      ++rejected;
    }
  } while (std::next_permutation(b.begin(), b.end()));
  CHECK(accepted > 0);
  CHECK(rejected > 0);

  std::vector<Perm> point_stabilizer{Perm({0, 2, 1, 3, 4, 5})};
  CHECK_THROWS_AS(certify(g, PermGroup::generate(6, point_stabilizer)), Error);
}

TEST_CASE("opposites are centralizers") {
  for (const char* text : {"dihedral:4", "quaternion:8", "dihedral:6"}) {
    const FiniteGroup g = build_group(parse_group_spec(text));
    for (const auto& n : enumerate_hgs(g).structures) {
      const RegularSubgroup opp = opposite(n);
      CHECK(oracle::raw_set(opp.perms()) ==
            oracle::centralizer_regular(oracle::raw_set(n.perms())));
      CHECK(opposite(opp) == n);
      CHECK(type_of(opp) == type_of(n));
    }
  }
}

TEST_CASE("G-star action") {
  const FiniteGroup g = build_group(GroupSpec::dihedral(4));
  for (const auto& n : enumerate_hgs(g).structures) {
    for (ElementId a = 0; a < g.order(); ++a) {
      const Perm moved = g_star_action(n, a, n.eta(3));
      CHECK(n.contains(moved));
      CHECK(moved == conjugate(n.eta(3), lambda_embed(g, a)));
    }
    CHECK_THROWS_AS(g_star_action(n, 1, Perm({1, 0, 2, 3, 4, 5, 6, 7})), Error);
  }
}
