#include "hgslab/reference_checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hgslab/brace.hpp"
#include "hgslab/constructions.hpp"
#include "hgslab/correspondence.hpp"
#include "hgslab/error.hpp"
#include "hgslab/families.hpp"
#include "hgslab/rho.hpp"

namespace hgslab {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kDiscrepancy: return "discrepancy";
  }
  return "fail";
}

namespace {

// Collects failed expectations; the first few are kept for the report.
class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && failures_.size() < 3) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    if (ok()) return std::to_string(checked_) + " assertions";
    std::string out = std::to_string(failed_) + "/" + std::to_string(checked_) +
                      " failed: ";
    for (std::size_t i = 0; i < failures_.size(); ++i) {
      out += (i ? "; " : "") + failures_[i];
    }
    return out;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

CheckResult finish(const Expect& e) {
  CheckResult r;
  r.status = e.ok() ? CheckStatus::kPass : CheckStatus::kFail;
  r.detail = e.summary();
  return r;
}

FiniteGroup metacyclic() { return build_group(GroupSpec::metacyclic(7, 3, 2)); }

std::set<RegularSubgroup> as_set(const std::vector<RegularSubgroup>& v) {
  return {v.begin(), v.end()};
}

Subgroup generated(const FiniteGroup& g, ElementId x) {
  const ElementId gens[] = {x};
  return subgroup_closure(g, gens);
}

std::vector<RegularSubgroup> all_structures_up_to(std::size_t max_order) {
  std::vector<RegularSubgroup> out;
  for (const GroupSpec& spec : catalog_up_to(max_order)) {
    for (const RegularSubgroup& n : enumerate_hgs(build_group(spec)).structures) {
      out.push_back(n);
    }
  }
  return out;
}

// --- metacyclic family ----------------------------------------------------

CheckResult cyclic_orbit() {
  const FiniteGroup g = metacyclic();
  const RhoOrbit orbit = rho_orbit(metacyclic_cyclic_structure(g, 0));
  Expect e;
  e(orbit.size() == 7, "orbit size " + std::to_string(orbit.size()) + " != 7");
  e(orbit.stabilizer == generated(g, metacyclic_element(g, 0, 1)),
    "stabilizer is not <t>");
  for (int i = 0; i < 7; ++i) {
    e(rho_conjugate(orbit.base, metacyclic_element(g, i, 0)) ==
          metacyclic_cyclic_structure(g, i),
      "N_{s^" + std::to_string(i) + "} differs from the formula");
  }
  return finish(e);
}

CheckResult cyclic_inventory() {
  const FiniteGroup g = metacyclic();
  const RhoOrbit orbit = rho_orbit(metacyclic_cyclic_structure(g, 0));
  const HgsInventory inv = enumerate_hgs(g, GroupSpec::cyclic(21));
  Expect e;
  e(inv.size() == 7, "cyclic-type count " + std::to_string(inv.size()));
  e(inv.structures == orbit.members, "inventory differs from the orbit");
  return finish(e);
}

CheckResult split_family() {
  const FiniteGroup g = metacyclic();
  const long long d = 2;
  const ElementId s = metacyclic_element(g, 1, 0);
  const ElementId t = metacyclic_element(g, 0, 1);
  std::vector<RegularSubgroup> fam;
  for (int k = 0; k < 7; ++k) fam.push_back(metacyclic_split_structure(g, k));
  Expect e;
  e(as_set(fam).size() == 7, "members are not distinct");
  for (int k = 0; k < 7; ++k) {
    e(type_of(fam[k]) == g.spec(), "member is not of metacyclic type");
    const int next = static_cast<int>(((k + 1 - d) % 7 + 7) % 7);
    e(rho_conjugate(fam[k], s) == fam[next], "rho(s) does not send k to k+1-d");
    e(opposite(rho_conjugate(fam[k], s)) == rho_conjugate(opposite(fam[k]), s),
      "opposite does not commute with rho(s)");
    // Each member is normalized by the conjugate s^-k <t> s^k.
    const ElementId tk = g.mul(g.mul(g.inv(g.pow(s, k)), t), g.pow(s, k));
    e(rho_orbit(fam[k]).stabilizer == generated(g, tk),
      "stabilizer of member " + std::to_string(k) + " is not s^-k <t> s^k");
  }
  std::vector<RegularSubgroup> opp;
  for (const auto& n : fam) opp.push_back(opposite(n));
  const RhoOrbit opp_orbit = rho_orbit(opp.front());
  e(as_set(opp) == as_set(opp_orbit.members), "opposites are not one orbit");
  e(!opp_orbit.contains(fam.front()), "opposites coincide with the family");

  std::size_t normalized = 0;
  for (const auto& n : fam) normalized += rho_normalizes(n, t);
  CheckResult r = finish(e);
  if (r.status == CheckStatus::kPass) {
    r.status = normalized == 7 ? CheckStatus::kPass : CheckStatus::kDiscrepancy;
    r.detail = "rho(t) normalizes " + std::to_string(normalized) +
               " of 7 members (stabilizers of a 7-member orbit are the 7 "
               "conjugates of <t>); member k is normalized by rho(s^-k t s^k); " +
               r.detail;
  }
  return r;
}

CheckResult cyclic_brace() {
  const FiniteGroup g = metacyclic();
  const RegularSubgroup n = metacyclic_cyclic_structure(g, 0);
  const SkewBrace b = brace_from_subgroup(n);
  Expect e;
  e(are_isomorphic(star_group(b), build_group(GroupSpec::cyclic(21))).has_value(),
    "(G, star) is not cyclic");
  e(g_prime(b).order() == 3, "|G'| != 3");
  e(!is_two_sided(b), "brace is two-sided");
  const auto t = normalizer_conditions(n, b, metacyclic_element(g, 0, 1));
  e(t.rho_normalizes && t.inner_preserves_star && t.right_relation,
    "conditions fail at g = t");
  const auto s = normalizer_conditions(n, b, metacyclic_element(g, 1, 0));
  e(!s.rho_normalizes && !s.inner_preserves_star && !s.right_relation,
    "conditions hold at g = s");
  e(subgroup_from_brace(b, g) == n, "brace does not round-trip");
  return finish(e);
}

CheckResult cyclic_lattice() {
  const FiniteGroup g = metacyclic();
  const long long d = 2;
  Expect e;
  std::set<std::vector<ElementId>> order3;
  const ElementId s = metacyclic_element(g, 1, 0);
  for (int i = 0; i < 7; ++i) {
    const RealizableLattice lat = realizable_lattice(metacyclic_cyclic_structure(g, i));
    e(lat.entries.size() == 4, "lattice of member " + std::to_string(i) +
                                   " has " + std::to_string(lat.entries.size()) +
                                   " entries");
    if (lat.entries.size() != 4) continue;
    e(lat.entries[2].u == generated(g, s), "order-7 entry is not <s>");
    const Subgroup q = generated(g, metacyclic_element(g, i * (1 - d), 1));
    e(lat.entries[1].u == q, "order-3 entry is not <s^(i(1-d)) t>");
    const Perm r = rho_embed(g, metacyclic_element(g, i * (1 - d), 1));
    e(lat.entries[1].p == PermGroup::generate(g.order(), {r}),
      "order-3 P is not <rho(s^(i(1-d)) t)>");
    e(lat.entries[2].p == PermGroup::generate(g.order(), {lambda_embed(g, s)}),
      "order-7 P is not <lambda(s)>");
    order3.insert(lat.entries[1].u.elements);
    for (ElementId x = 0; x < g.order(); ++x) {
      e(realizable_transport_check(metacyclic_cyclic_structure(g, i), x),
        "transport fails");
    }
  }
  e(order3.size() == 7, "order-3 subgroups are not distinct across the orbit");
  return finish(e);
}

CheckResult cyclic_induced() {
  const FiniteGroup g = metacyclic();
  const RhoOrbit orbit = rho_orbit(metacyclic_cyclic_structure(g, 0));
  Expect e;
  std::vector<RegularSubgroup> induced;
  for (int i = 0; i < 7; ++i) {
    const InducedInput in = metacyclic_induced_input(g, i);
    induced.push_back(induced_hgs(in));
  }
  e(as_set(induced) == as_set(orbit.members),
    "induced family differs from the cyclic-type orbit");
  const InducedInput in = metacyclic_induced_input(g, 0);
  const RegularSubgroup n = induced_hgs(in);
  for (ElementId x = 0; x < g.order(); ++x) {
    const InducedInput moved =
        transport_induced_input(in, inner_automorphism(g, x));
    e(induced_hgs(moved) == rho_conjugate(n, x),
      "transport fails at g = " + g.name(x));
  }
  return finish(e);
}

CheckResult opposite_transport_metacyclic() {
  const FiniteGroup g = metacyclic();
  Expect e;
  for (const RegularSubgroup& n : enumerate_hgs(g).structures) {
    for (ElementId x = 0; x < g.order(); ++x) {
      e(opp_of_conjugate_check(n, x), "fails at g = " + g.name(x));
    }
  }
  return finish(e);
}

// --- dihedral family ------------------------------------------------------

CheckResult dihedral_orbit(int n) {
  const FiniteGroup g = build_group(GroupSpec::dihedral(n));
  const RegularSubgroup base = dihedral_structure(g, 0);
  const RhoOrbit orbit = rho_orbit(base);
  Expect e;
  e(type_of(base) == g.spec(), "N is not of dihedral type");
  e(rho_conjugate(base, dihedral_element(g, 0, 1)) == base, "N_s != N");
  std::set<RegularSubgroup> fam;
  for (int k = 0; k < n / 2; ++k) {
    const RegularSubgroup nk = dihedral_structure(g, k);
    fam.insert(nk);
    e(rho_conjugate(base, dihedral_element(g, k, 0)) == nk,
      "N_{r^" + std::to_string(k) + "} differs from the formula");
  }
  e(as_set(orbit.members) == fam, "orbit differs from the formula family");
  CheckResult r = finish(e);
  const std::size_t expected = static_cast<std::size_t>(n / 2);
  if (r.status == CheckStatus::kPass && orbit.size() != expected) {
    r.status = CheckStatus::kDiscrepancy;
    r.detail = "orbit has " + std::to_string(orbit.size()) + " member(s), not " +
               std::to_string(expected) +
               ": r^(n/2) is central, so rho(r^2) lies in N and the formula "
               "family collapses; " + r.detail;
  } else if (r.status == CheckStatus::kPass) {
    r.detail = std::to_string(orbit.size()) + " members; " + r.detail;
  }
  return r;
}

CheckResult dihedral_opposite(int n) {
  const FiniteGroup g = build_group(GroupSpec::dihedral(n));
  Expect e;
  const Perm rs = rho_embed(g, dihedral_element(g, 0, 1));
  for (int k = 0; k < n / 2; ++k) {
    const RegularSubgroup opp = opposite(dihedral_structure(g, k));
    const PermGroup expected =
        PermGroup::generate(g.order(), {rs, dihedral_mu(g, k)});
    e(opp.perms() == expected,
      "opposite of N_{r^" + std::to_string(k) + "} is not <rho(s), mu_k>");
  }
  return finish(e);
}

CheckResult dihedral_fpf() {
  const FiniteGroup g = build_group(GroupSpec::dihedral(4));
  Expect e;
  std::set<RegularSubgroup> from_pairs, family;
  const ElementId r = dihedral_element(g, 1, 0), s = dihedral_element(g, 0, 1);
  for (int k = 0; k < 2; ++k) {
    const HomPair pair = dihedral_fpf_pair(g, k);
    e(fpf_check(pair.f1, pair.f2), "pair is not fixed point free");
    const HolEmbedding beta = fpf_embedding(pair.f1, pair.f2);
    e(beta.beta[r] == lambda_rho(g, r, dihedral_element(g, 2 * k, 1)),
      "beta(r) != lambda(mu) rho(mu^(2k) pi)");
    e(beta.beta[s] == lambda_embed(g, s), "beta(s) != lambda(pi)");
    const RegularSubgroup n = from_hol_embedding(beta);
    from_pairs.insert(n);
    family.insert(dihedral_structure(g, k));
    e(equivalent_embeddings(
          beta, precompose(beta, inner_automorphism(g, s))),
      "composing with phi_s is not equivalent");
    for (ElementId x = 0; x < g.order(); ++x) {
      e(embedding_conjugation_check(beta, x),
        "embedding conjugation fails at g = " + g.name(x));
      e(fpf_conjugation_check(pair.f1, pair.f2, x),
        "pair transport fails at g = " + g.name(x));
    }
    // The pair precomposed with phi_g, over all g, sweeps out the orbit.
    std::set<RegularSubgroup> swept;
    for (ElementId x = 0; x < g.order(); ++x) {
      const GroupHom phi = inner_automorphism(g, x);
      swept.insert(hgs_from_fpf(compose(pair.f1, phi), compose(pair.f2, phi)));
    }
    e(swept == as_set(rho_orbit(n).members), "swept pairs differ from the orbit");
  }
  e(from_pairs == family, "pair structures differ from the dihedral family");
  return finish(e);
}

// --- abelian maps ---------------------------------------------------------

CheckResult sym5_abelian_maps() {
  const FiniteGroup g = build_group(GroupSpec::symmetric(5));
  Expect e;
  const auto maps = abelian_maps(g);
  e(maps.size() == 26, "found " + std::to_string(maps.size()) + " maps");
  std::vector<ElementId> involutions;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (g.mul(x, x) == 0) involutions.push_back(x);
  }
  std::set<std::vector<ElementId>> expected, found;
  for (ElementId x : involutions) expected.insert(sign_abelian_map(g, x).psi.images);
  for (const auto& m : maps) found.insert(m.psi.images);
  e(expected == found, "maps are not the psi_x");

  std::vector<RegularSubgroup> ns;
  for (const auto& m : maps) ns.push_back(hgs_from_abelian_map(m));
  e(as_set(ns).size() == maps.size(), "structures are not pairwise distinct");
  std::multiset<std::size_t> sizes;
  for (const RhoOrbit& o : rho_partition(ns)) sizes.insert(o.size());
  e(sizes == std::multiset<std::size_t>{1, 10, 15}, "orbit sizes are not 1, 10, 15");

  for (ElementId x : involutions) {
    const AbelianMap psi = sign_abelian_map(g, x);
    const RegularSubgroup n = hgs_from_abelian_map(psi);
    for (ElementId h = 0; h < g.order(); ++h) {
      const GroupHom phi = inner_automorphism(g, h);
      const AbelianMap moved = conjugate_abelian_map(psi, phi);
      const ElementId hx = g.mul(g.mul(h, x), g.inv(h));
      e(moved.psi == sign_abelian_map(g, hx).psi, "phi psi_x phi^-1 != psi_hxh^-1");
      e(hgs_from_abelian_map(moved) == rho_conjugate(n, h),
        "transport fails at g = " + g.name(h));
    }
  }
  return finish(e);
}

// --- braces and opposites over catalog inventories ------------------------

CheckResult brace_criteria() {
  Expect e;
  for (const RegularSubgroup& n : all_structures_up_to(12)) {
    const FiniteGroup& g = n.group();
    const SkewBrace b = brace_from_subgroup(n);
    const RhoOrbit orbit = rho_orbit(n);
    bool all_normalize = true;
    for (ElementId x = 0; x < g.order(); ++x) {
      const auto c = normalizer_conditions(n, b, x);
      e(c.agree(), "conditions disagree on " + g.spec().to_string());
      all_normalize = all_normalize && c.rho_normalizes;
      e(rho_conjugate(n, x) == inner_conjugate(n, x),
        "rho and inner conjugation differ");
    }
    e(g.order() / g_prime(b).order() == orbit.size(), "orbit size != |G|/|G'|");
    e(is_two_sided(b) == all_normalize, "two-sidedness mismatch");
    e(gv_identity_check(b), "gv identity fails");
    for (const RegularSubgroup& m : orbit.members) {
      e(braces_isomorphic(b, brace_from_subgroup(m)).has_value(),
        "rho-conjugates give non-isomorphic braces");
    }
  }
  return finish(e);
}

CheckResult opposite_transport_catalog() {
  Expect e;
  for (const RegularSubgroup& n : all_structures_up_to(12)) {
    for (ElementId x = 0; x < n.group().order(); ++x) {
      e(opp_of_conjugate_check(n, x), "fails on " + n.group().spec().to_string());
    }
  }
  return finish(e);
}

CheckResult abelian_degeneration() {
  Expect e;
  for (const GroupSpec& spec : catalog_up_to(12)) {
    const FiniteGroup g = build_group(spec);
    if (!g.is_abelian()) continue;
    for (const RegularSubgroup& n : enumerate_hgs(g).structures) {
      e(rho_orbit(n).size() == 1, spec.to_string() + " has a nontrivial orbit");
    }
  }
  return finish(e);
}

CheckResult coset_prime_degree() {
  const FiniteGroup g = metacyclic();
  Expect e;
  for (int i = 0; i < 7; ++i) {
    const ElementId si = metacyclic_element(g, i, 0);
    const ElementId ti = g.mul(g.mul(si, metacyclic_element(g, 0, 1)), g.inv(si));
    const Subgroup t = generated(g, ti);
    e(coset_stable_regular_subgroups(g, t).size() == 1,
      "G/T_i does not have a unique structure");
    e(subgroup_stable_regular_subgroups(t).size() == 1,
      "T_i does not have a unique structure");
  }
  return finish(e);
}

std::vector<ReferenceCheck> build_checks() {
  return {
      {"cyclic-type-orbit", "metacyclic",
       "on metacyclic(7,3,2) the rho-orbit of <lambda(s)rho(t)> is "
       "{<lambda(s)rho(s^(i(1-d))t)>}, 7 members, stabilizer <t>",
       cyclic_orbit},
      {"cyclic-type-inventory", "metacyclic",
       "the structures of cyclic type are exactly that orbit", cyclic_inventory},
      {"cyclic-type-brace", "metacyclic",
       "its brace has cyclic star group, |G'| = 3, is not two-sided; the "
       "normalizer conditions hold at t and fail at s",
       cyclic_brace},
      {"cyclic-type-lattice", "metacyclic",
       "each member realizes {e}, <s>, <s^(i(1-d))t>, G; the order-3 "
       "subgroups are distinct across the orbit; transport holds for all g",
       cyclic_lattice},
      {"split-type-family", "metacyclic",
       "<lambda(s), lambda(t)rho((s^k t)^-1)> gives 7 structures of metacyclic "
       "type "
       "permuted k -> k+1-d by rho(s), each normalized by rho(t); opposites "
       "form a second orbit",
       split_family},
      {"induced-cyclic-type", "metacyclic",
       "inducing over T_i = s^i<t>s^-i gives the cyclic-type orbit; induced "
       "inputs transport under every inner automorphism",
       cyclic_induced},
      {"coset-prime-degree", "metacyclic",
       "G/T_i and T_i each carry a unique structure", coset_prime_degree},
      {"metacyclic-opposite-transport", "metacyclic",
       "(N_g)^opp = (N^opp)_g for every structure on metacyclic(7,3,2)",
       opposite_transport_metacyclic},
      {"dihedral-orbit-8", "dihedral",
       "on dihedral(4) the formula family has n/2 = 2 distinct rho-conjugates",
       [] { return dihedral_orbit(4); }},
      {"dihedral-orbit-12", "dihedral",
       "on dihedral(6) the formula family has n/2 = 3 distinct rho-conjugates",
       [] { return dihedral_orbit(6); }},
      {"dihedral-opposite-8", "dihedral",
       "on dihedral(4) the opposite of N_{r^k} is <rho(s), mu_k>",
       [] { return dihedral_opposite(4); }},
      {"dihedral-fpf-pairs", "dihedral",
       "the fixed-point-free pairs on dihedral(4) give beta(r) = "
       "lambda(mu)rho(mu^(2k)pi), beta(s) = lambda(pi), reproduce the "
       "dihedral family and transport under conjugation",
       dihedral_fpf},
      {"sym5-abelian-maps", "abelian-maps",
       "sym(5) has 26 abelian maps psi_x giving 26 distinct structures in "
       "orbits of sizes 1, 10, 15; conjugation transports psi_x to psi_gxg^-1",
       sym5_abelian_maps},
      {"brace-criteria", "braces",
       "for every structure of order <= 12: the three normalizer conditions "
       "agree, orbit size = |G|/|G'|, two-sided iff normalized by rho(G), "
       "rho-conjugates give isomorphic braces",
       brace_criteria},
      {"opposite-transport", "opposites",
       "(N_g)^opp = (N^opp)_g for every structure of order <= 12",
       opposite_transport_catalog},
      {"abelian-degeneration", "abelian",
       "structures on abelian groups are fixed by rho-conjugation",
       abelian_degeneration},
  };
}

}  // namespace

const std::vector<ReferenceCheck>& reference_checks() {
  static const std::vector<ReferenceCheck> checks = build_checks();
  return checks;
}

std::vector<CheckResult> run_reference_checks(const std::string& only) {
  std::vector<CheckResult> out;
  for (const ReferenceCheck& c : reference_checks()) {
    if (!only.empty() && c.id != only && c.tag != only) continue;
    CheckResult r;
    try {
      r = c.run();
    } catch (const Error& err) {
      r.status = CheckStatus::kFail;
      r.detail = std::string("error: ") + err.what();
    }
    r.id = c.id;
    r.tag = c.tag;
    r.claim = c.claim;
    out.push_back(std::move(r));
  }
  if (out.empty()) {
    throw Error(ErrorKind::kUsage, "no check or tag named '" + only + "'");
  }
  return out;
}

}  // namespace hgslab
