// Acceptance gate: one PASS/FAIL line per criterion, with its runtime bound.
//
// Two clauses are false as stated and are reported as FAIL with the reason,
// next to a PASS line for the statement that does hold:
//   2b  on dihedral(4) the family has n/2 = 2 rho-conjugates (it has 1)
//   7b  rho(t) normalizes every member of the split metacyclic family
// The process exits 0 only when every FAIL line is one of these.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hgslab/brace.hpp"
#include "hgslab/constructions.hpp"
#include "hgslab/correspondence.hpp"
#include "hgslab/families.hpp"
#include "hgslab/hgs.hpp"
#include "hgslab/rho.hpp"
#include "oracles.hpp"

using namespace hgslab;

namespace {

const std::set<std::string> kUnattainable = {"2b", "7b"};

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int unexpected_failures = 0;

void criterion(const std::string& id, const std::string& title, double bound_s,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > bound_s) {
    out.ok = false;
    out.note = "runtime bound exceeded";
  }
  std::printf("%s %-4s %s (%.2f s, bound %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL",
              id.c_str(), title.c_str(), secs, bound_s, out.note.empty() ? "" : ": ",
              out.note.c_str());
  std::fflush(stdout);
  if (!out.ok && kUnattainable.count(id) == 0) ++unexpected_failures;
}

std::set<RegularSubgroup> as_set(const std::vector<RegularSubgroup>& v) {
  return {v.begin(), v.end()};
}

std::vector<RegularSubgroup> inventories_up_to_12() {
  std::vector<RegularSubgroup> out;
  for (const auto& spec : catalog_up_to(12)) {
    for (auto& n : enumerate_hgs(build_group(spec)).structures) out.push_back(std::move(n));
  }
  return out;
}

FiniteGroup metacyclic() { return build_group(GroupSpec::metacyclic(7, 3, 2)); }

}  // namespace

int main() {
  std::printf("acceptance criteria\n");

  criterion("1", "metacyclic(7,3,2): orbit of <lambda(s)rho(t)> is the 7-member cyclic family, "
                 "stabilizer <t>, equal to the cyclic:21 inventory", 60, [] {
    Outcome o;
    const FiniteGroup g = metacyclic();
    const RegularSubgroup n = metacyclic_cyclic_structure(g, 0);
    o.require(n.perms() == PermGroup::generate(21, {lambda_rho(g, metacyclic_element(g, 1, 0),
                                                                metacyclic_element(g, 0, 1))}),
              "base structure is not <lambda(s)rho(t)>");
    const RhoOrbit orbit = rho_orbit(n);
    std::set<RegularSubgroup> family;
    for (int i = 0; i < 7; ++i) family.insert(metacyclic_cyclic_structure(g, i));
    o.require(orbit.size() == 7, "orbit size " + std::to_string(orbit.size()));
    o.require(as_set(orbit.members) == family, "orbit differs from the formula family");
    const ElementId t[] = {metacyclic_element(g, 0, 1)};
    o.require(orbit.stabilizer == subgroup_closure(g, t), "stabilizer is not <t>");
    const auto inv = enumerate_hgs(g, GroupSpec::cyclic(21));
    o.require(as_set(inv.structures) == family, "cyclic:21 inventory differs");
    o.require(inv.size() == 7, "cyclic:21 inventory size");
    // Independent orbit by breadth-first search over raw sets.
    const auto tab = oracle::table_of(g);
    std::set<oracle::PermSet> fam_raw;
    for (const auto& m : family) fam_raw.insert(oracle::raw_set(m.perms()));
    o.require(oracle::rho_orbit(tab, oracle::raw_set(n.perms())) == fam_raw,
              "oracle orbit differs");
    return o;
  });

  criterion("2a", "dihedral(6): the family <lambda(r)rho(r^2k s), lambda(s)> has n/2 = 3 "
                  "rho-conjugates", 10, [] {
    Outcome o;
    const FiniteGroup g = build_group(GroupSpec::dihedral(6));
    const RhoOrbit orbit = rho_orbit(dihedral_structure(g, 0));
    o.require(orbit.size() == 3, "orbit size " + std::to_string(orbit.size()));
    std::set<RegularSubgroup> fam;
    for (int k = 0; k < 3; ++k) fam.insert(dihedral_structure(g, k));
    o.require(as_set(orbit.members) == fam, "orbit differs from the family");
    return o;
  });

  criterion("2b", "dihedral(4): the same family has n/2 = 2 rho-conjugates", 10, [] {
    Outcome o;
    const FiniteGroup g = build_group(GroupSpec::dihedral(4));
    const RegularSubgroup n = dihedral_structure(g, 0);
    const std::size_t size = rho_orbit(n).size();
    o.require(size == 2,
              "unattainable: the orbit has " + std::to_string(size) +
                  " member. r^2 is central, so rho(r^2) = lambda(r^2) = "
                  "(lambda(r)rho(s))^2 lies in N, the stabilizer is all of G and "
                  "N_{r^0} = N_{r^1}");
    return o;
  });

  criterion("2b'", "dihedral(4): the family collapses to one structure fixed by all of "
                   "rho(G) (oracle orbit agrees)", 10, [] {
    Outcome o;
    const FiniteGroup g = build_group(GroupSpec::dihedral(4));
    const RegularSubgroup n = dihedral_structure(g, 0);
    o.require(rho_orbit(n).size() == 1, "library orbit size");
    o.require(dihedral_structure(g, 1) == n, "N_{r^1} != N_{r^0}");
    o.require(oracle::rho_orbit(oracle::table_of(g), oracle::raw_set(n.perms())).size() == 1,
              "oracle orbit size");
    const ElementId r2 = dihedral_element(g, 2, 0);
    o.require(n.contains(rho_embed(g, r2)), "rho(r^2) not in N");
    return o;
  });

  criterion("2c", "dihedral(4): opposite(N_{r^k}) = <rho(s), mu_k> elementwise for k = 0, 1",
            10, [] {
    Outcome o;
    const FiniteGroup g = build_group(GroupSpec::dihedral(4));
    const RegularSubgroup base = dihedral_structure(g, 0);
    const Perm rs = rho_embed(g, dihedral_element(g, 0, 1));
    for (int k = 0; k < 2; ++k) {
      const RegularSubgroup nk = rho_conjugate(base, dihedral_element(g, k, 0));
      const PermGroup expected = PermGroup::generate(8, {rs, dihedral_mu(g, k)});
      o.require(oracle::raw_set(opposite(nk).perms()) == oracle::raw_set(expected),
                "k = " + std::to_string(k));
      o.require(oracle::raw_set(opposite(nk).perms()) ==
                    oracle::centralizer_regular(oracle::raw_set(nk.perms())),
                "centralizer oracle, k = " + std::to_string(k));
    }
    return o;
  });

  criterion("3", "abelian groups C4, C6, C8, C9, C2xC2, C2xC4, C3xC3: every rho-orbit "
                 "is a single structure", 60, [] {
    Outcome o;
    for (const char* text : {"cyclic:4", "cyclic:6", "cyclic:8", "cyclic:9",
                             "elementary-abelian:2:2", "product:cyclic:2,cyclic:4",
                             "elementary-abelian:3:2"}) {
      const FiniteGroup g = build_group(parse_group_spec(text));
      for (const auto& n : enumerate_hgs(g).structures) {
        o.require(rho_orbit(n).size() == 1, std::string("non-trivial orbit on ") + text);
      }
    }
    return o;
  });

  criterion("4", "enumeration equals the bijection search for every catalog group of "
                 "order <= 8", 120, [] {
    Outcome o;
    for (const auto& spec : catalog_up_to(8)) {
      const FiniteGroup g = build_group(spec);
      o.require(enumerate_hgs(g).structures == brute_force_inventory(g).structures,
                spec.to_string());
    }
    return o;
  });

  criterion("5", "order <= 12, all structures and all g: normalizer criteria agree, "
                 "orbit = |G|/|G'|, two-sided iff rho(G) normalizes, gv identity, braid relation",
            180, [] {
    Outcome o;
    for (const auto& n : inventories_up_to_12()) {
      const FiniteGroup& g = n.group();
      const std::string where = g.spec().to_string() + " " + n.hash();
      const SkewBrace b = brace_from_subgroup(n);
      std::size_t normalizing = 0;
      for (ElementId x = 0; x < g.order(); ++x) {
        const auto c = normalizer_conditions(n, b, x);
        o.require(c.agree(), "criteria disagree on " + where);
        normalizing += c.rho_normalizes;
      }
      const Subgroup gp = g_prime(b);
      o.require(gp.order() == normalizing, "G' is not the rho-normalizer on " + where);
      o.require(rho_orbit(n).size() * gp.order() == g.order(), "orbit size on " + where);
      o.require(is_two_sided(b) == (normalizing == g.order()), "two-sidedness on " + where);
      o.require(gv_identity_check(b), "gv identity on " + where);
      const YbeMap r = ybe_map_unchecked(b);
      o.require(is_bijective(r) && satisfies_braid_relation(r), "braid relation on " + where);
    }
    return o;
  });

  criterion("6", "(N_g)^opp = (N^opp)_g for all N, g at order <= 12 and on metacyclic(7,3,2)",
            60, [] {
    Outcome o;
    auto all = inventories_up_to_12();
    for (auto& n : enumerate_hgs(metacyclic()).structures) all.push_back(std::move(n));
    for (const auto& n : all) {
      for (ElementId x = 0; x < n.group().order(); ++x) {
        o.require(opp_of_conjugate_check(n, x), n.group().spec().to_string() + " " + n.hash());
      }
    }
    return o;
  });

  // N_k = <lambda(s), lambda(t)rho'(s^k t)> with rho'(y)[x] = x y, the mirror of
  // the rho used here; equivalently lambda(t)rho((s^k t)^-1).
  criterion("7a", "metacyclic(7,3,2): the split family N_k is 7 distinct certified "
                  "structures of metacyclic type", 30, [] {
    Outcome o;
    const FiniteGroup g = metacyclic();
    std::set<RegularSubgroup> fam;
    for (int k = 0; k < 7; ++k) {
      const RegularSubgroup n = metacyclic_split_structure(g, k);
      o.require(type_of(n) == g.spec(), "type at k = " + std::to_string(k));
      o.require(is_g_stable_exhaustive(n), "stability at k = " + std::to_string(k));
      fam.insert(n);
    }
    o.require(fam.size() == 7, "not distinct");
    return o;
  });

  criterion("7b", "metacyclic(7,3,2): rho(t) normalizes every N_k", 30, [] {
    Outcome o;
    const FiniteGroup g = metacyclic();
    const ElementId t = metacyclic_element(g, 0, 1);
    std::string bad;
    for (int k = 0; k < 7; ++k) {
      if (!rho_normalizes(metacyclic_split_structure(g, k), t)) {
        bad += (bad.empty() ? "" : ",") + std::to_string(k);
      }
    }
    o.require(bad.empty(),
              "unattainable: fails for k = " + bad +
                  ". The N_k form one rho-orbit, so their stabilizers are the "
                  "conjugates g<t>g^-1; <t> is self-normalizing of index 7, so t lies "
                  "in exactly one of them");
    return o;
  });

  criterion("7b'", "metacyclic(7,3,2): N_k is normalized exactly by rho of s^-k <t> s^k", 30,
            [] {
    Outcome o;
    const FiniteGroup g = metacyclic();
    for (int k = 0; k < 7; ++k) {
      const RegularSubgroup n = metacyclic_split_structure(g, k);
      const ElementId sk = metacyclic_element(g, k, 0);
      const ElementId tk = g.mul(g.mul(g.inv(sk), metacyclic_element(g, 0, 1)), sk);
      const ElementId gen[] = {tk};
      o.require(rho_orbit(n).stabilizer == subgroup_closure(g, gen),
                "stabilizer at k = " + std::to_string(k));
    }
    return o;
  });

  criterion("7c", "metacyclic(7,3,2): rho(s)-conjugation sends N_k to N_{k+1-d}", 30, [] {
    Outcome o;
    const FiniteGroup g = metacyclic();
    const ElementId s = metacyclic_element(g, 1, 0);
    const int d = 2;
    for (int k = 0; k < 7; ++k) {
      o.require(rho_conjugate(metacyclic_split_structure(g, k), s) ==
                    metacyclic_split_structure(g, ((k + 1 - d) % 7 + 7) % 7),
                "k = " + std::to_string(k));
    }
    return o;
  });

  criterion("7d", "metacyclic(7,3,2): the 7 opposites form a second rho-orbit", 30, [] {
    Outcome o;
    const FiniteGroup g = metacyclic();
    std::set<RegularSubgroup> fam, opps;
    for (int k = 0; k < 7; ++k) {
      fam.insert(metacyclic_split_structure(g, k));
      opps.insert(opposite(metacyclic_split_structure(g, k)));
    }
    o.require(opps.size() == 7, "opposites not distinct");
    o.require(as_set(rho_orbit(*opps.begin()).members) == opps, "opposites are not one orbit");
    o.require(as_set(rho_orbit(*fam.begin()).members) == fam, "family is not one orbit");
    for (const auto& n : opps) o.require(fam.count(n) == 0, "orbits overlap");
    return o;
  });

  criterion("8a", "embedding and fixed-point-free pair transports on dihedral(4), all g; "
                  "the pairs reproduce the dihedral family", 30, [] {
    Outcome o;
    const FiniteGroup g = build_group(GroupSpec::dihedral(4));
    for (int k = 0; k < 2; ++k) {
      const HomPair pair = dihedral_fpf_pair(g, k);
      const HolEmbedding beta = fpf_embedding(pair.f1, pair.f2);
      const RegularSubgroup n = from_hol_embedding(beta);
      o.require(n == dihedral_structure(g, k), "pair does not give N_{r^k}");
      std::set<RegularSubgroup> swept;
      for (ElementId x = 0; x < g.order(); ++x) {
        o.require(embedding_conjugation_check(beta, x), "embedding at " + g.name(x));
        o.require(fpf_conjugation_check(pair.f1, pair.f2, x), "pair at " + g.name(x));
        const GroupHom phi = inner_automorphism(g, x);
        swept.insert(hgs_from_fpf(compose(pair.f1, phi), compose(pair.f2, phi)));
      }
      o.require(swept == as_set(rho_orbit(n).members), "swept pairs differ from the orbit");
    }
    return o;
  });

  criterion("8b", "induced structures on metacyclic(7,3,2) reproduce the cyclic family and "
                  "transport along every inner automorphism", 30, [] {
    Outcome o;
    const FiniteGroup g = metacyclic();
    std::set<RegularSubgroup> induced;
    for (int i = 0; i < 7; ++i) {
      const InducedInput in = metacyclic_induced_input(g, i);
      const RegularSubgroup n = induced_hgs(in);
      induced.insert(n);
      for (ElementId x = 0; x < g.order(); ++x) {
        o.require(induced_hgs(transport_induced_input(in, inner_automorphism(g, x))) ==
                      rho_conjugate(n, x),
                  "i = " + std::to_string(i) + ", g = " + g.name(x));
      }
    }
    o.require(induced == as_set(rho_orbit(metacyclic_cyclic_structure(g, 0)).members),
              "induced family differs from the cyclic orbit");
    return o;
  });

  // S5 is shared by the abelian-map transport and the partition criterion.
  const FiniteGroup s5 = build_group(GroupSpec::symmetric(5));
  std::vector<AbelianMap> maps;
  std::vector<RegularSubgroup> s5_structures;

  criterion("8c", "sym(5): phi_h psi phi_h^-1 gives the rho(h)-conjugate for every abelian "
                  "map and every h", 300, [&] {
    Outcome o;
    maps = abelian_maps(s5);
    for (const auto& m : maps) {
      const RegularSubgroup n = hgs_from_abelian_map(m);
      s5_structures.push_back(n);
      for (ElementId h = 0; h < s5.order(); ++h) {
        o.require(hgs_from_abelian_map(conjugate_abelian_map(m, inner_automorphism(s5, h))) ==
                      rho_conjugate(n, h),
                  "h = " + s5.name(h));
      }
    }
    return o;
  });

  criterion("9", "sym(5): 26 abelian maps, 26 distinct structures, rho-orbit sizes {1, 10, 15}",
            300, [&] {
    Outcome o;
    o.require(maps.size() == 26, std::to_string(maps.size()) + " maps");
    o.require(as_set(s5_structures).size() == 26, "structures not distinct");
    std::multiset<std::size_t> sizes;
    for (const auto& orbit : rho_partition(s5_structures)) sizes.insert(orbit.size());
    o.require(sizes == std::multiset<std::size_t>{1, 10, 15}, "orbit sizes");
    return o;
  });

  criterion("10", "order <= 12 and metacyclic(7,3,2): |U| = |P| everywhere, lattice transport "
                  "for all g, 4-entry cyclic-type lattice with order-3 subgroups covering all 7",
            60, [] {
    Outcome o;
    auto all = inventories_up_to_12();
    const FiniteGroup g = metacyclic();
    for (auto& n : enumerate_hgs(g).structures) all.push_back(std::move(n));
    for (const auto& n : all) {
      const RealizableLattice lat = realizable_lattice(n);
      for (const auto& e : lat.entries) o.require(e.u.order() == e.p.order(), "|U| != |P|");
      o.require(lat.injective() && lat.inclusion_preserving(), "lattice map");
      for (ElementId x = 0; x < n.group().order(); ++x) {
        o.require(realizable_transport_check(n, x), "transport on " + n.hash());
      }
    }
    std::set<std::vector<ElementId>> order3, all_order3;
    for (const auto& n : rho_orbit(metacyclic_cyclic_structure(g, 0)).members) {
      const RealizableLattice lat = realizable_lattice(n);
      o.require(lat.entries.size() == 4, "lattice size " + std::to_string(lat.entries.size()));
      for (const auto& e : lat.entries) {
        if (e.u.order() == 3) order3.insert(e.u.elements);
      }
    }
    for (const auto& s : all_subgroups(g)) {
      if (s.order() == 3) all_order3.insert(s.elements);
    }
    o.require(order3.size() == 7, "order-3 subgroups not distinct across the orbit");
    o.require(order3 == all_order3, "order-3 subgroups do not cover all 7");
    return o;
  });

  std::printf("unexpected failures: %d (documented unattainable: 2b, 7b)\n",
              unexpected_failures);
  return unexpected_failures == 0 ? 0 : 1;
}
