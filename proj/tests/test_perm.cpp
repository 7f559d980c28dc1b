#include <catch_amalgamated.hpp>

#include "hgslab/error.hpp"
#include "hgslab/perm.hpp"
#include "oracles.hpp"

using namespace hgslab;

TEST_CASE("composition applies the right factor first") {
  const Perm p({1, 2, 0});
  const Perm q({1, 0, 2});
  CHECK(compose(p, q)[0] == p[q[0]]);
  CHECK(compose(p, q) == Perm({2, 1, 0}));
  CHECK(compose(p, invert(p)).is_identity());
  CHECK(conjugate(p, q) == compose(compose(q, p), invert(q)));
  CHECK_THROWS_AS(Perm({0, 0, 1}), Error);
}

TEST_CASE("lambda and rho are commuting homomorphisms") {
  for (const char* text : {"sym:3", "dihedral:4", "metacyclic:7:3:2", "quaternion"}) {
    const FiniteGroup g = build_group(parse_group_spec(text));
    const auto t = oracle::table_of(g);
    for (ElementId a = 0; a < g.order(); ++a) {
      CHECK(oracle::raw(lambda_embed(g, a)) == oracle::left(t, a));
      CHECK(oracle::raw(rho_embed(g, a)) == oracle::right(t, a));
      for (ElementId b = 0; b < g.order(); ++b) {
        CHECK(lambda_embed(g, g.mul(a, b)) == compose(lambda_embed(g, a), lambda_embed(g, b)));
        CHECK(rho_embed(g, g.mul(a, b)) == compose(rho_embed(g, a), rho_embed(g, b)));
        CHECK(compose(lambda_embed(g, a), rho_embed(g, b)) ==
              compose(rho_embed(g, b), lambda_embed(g, a)));
      }
    }
  }
}

TEST_CASE("permutation groups are canonical") {
  const FiniteGroup g = build_group(GroupSpec::dihedral(4));
  const PermGroup a = PermGroup::generate(8, {lambda_embed(g, 2), lambda_embed(g, 1)});
  const PermGroup b = PermGroup::generate(8, {lambda_embed(g, 1), lambda_embed(g, 3),
                                              lambda_embed(g, 2)});
  CHECK(a == b);
  CHECK(a.canonical_hash() == b.canonical_hash());
  CHECK(a.canonical_hash().size() == 16);
  CHECK(a.order() == 8);
  CHECK(a.is_regular());
  CHECK(a.contains(lambda_embed(g, 5)));
  CHECK_FALSE(a.contains(rho_embed(g, 2)));
  CHECK_THROWS_AS(PermGroup::generate(8, {rho_embed(g, 2), lambda_embed(g, 1)}, 4), Error);
}

TEST_CASE("centralizer of a regular group matches direct commutation") {
  for (const char* text : {"dihedral:4", "alt:4", "metacyclic:7:3:2"}) {
    const FiniteGroup g = build_group(parse_group_spec(text));
    std::vector<Perm> gens;
    for (ElementId a : small_generating_set(g)) gens.push_back(lambda_embed(g, a));
    const PermGroup n = PermGroup::generate(g.order(), gens);
    const PermGroup c = centralizer_of_regular(n);
    CHECK(oracle::raw_set(c) == oracle::centralizer_regular(oracle::raw_set(n)));
    // The centralizer of lambda(G) is rho(G).
    for (ElementId a = 0; a < g.order(); ++a) CHECK(c.contains(rho_embed(g, a)));
  }
}

TEST_CASE("coset spaces and left translations") {
  const FiniteGroup g = build_group(GroupSpec::metacyclic(7, 3, 2));
  const ElementId t[] = {1};
  const CosetSpace space = coset_space(g, subgroup_closure(g, t));
  CHECK(space.size() == 7);
  for (ElementId h = 0; h < g.order(); ++h) {
    const Perm p = left_translation(space, h);
    for (std::size_t c = 0; c < space.size(); ++c) {
      CHECK(space.coset_of[g.mul(h, space.representatives[c])] == p[c]);
    }
  }
  const PermGroup image = PermGroup::generate(7, left_translation_generators(space));
  CHECK(image.order() == 21);
}
