#include "hgslab/serialize.hpp"

#include "hgslab/error.hpp"

namespace hgslab {

std::string schema_id(const std::string& kind) { return "hgslab/" + kind + "/1"; }

Json to_json(const Perm& p) {
  Json out = Json::array();
  for (Point x : p.images()) out.push_back(x);
  return out;
}

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(to_json(p));
  return {{"hash", g.canonical_hash()},
          {"order", g.order()},
          {"generators", std::move(gens)}};
}

Json element_names(const FiniteGroup& g, std::span<const ElementId> elements) {
  Json out = Json::array();
  for (ElementId a : elements) out.push_back(g.name(a));
  return out;
}

Json to_json(const Subgroup& s) {
  return {{"order", s.order()},
          {"elements", element_names(s.parent, s.elements)},
          {"generators", element_names(s.parent, s.generators)}};
}

Json to_json(const GroupHom& h) {
  return element_names(h.codomain, h.images);
}

std::string type_string(const RegularSubgroup& n) {
  if (n.type_label()) return n.type_label()->to_string();
  try {
    return type_of(n).to_string();
  } catch (const Error&) {
    return "unknown";
  }
}

Json to_json(const RegularSubgroup& n) {
  Json gens = Json::array();
  for (const auto& p : n.perms().generators()) gens.push_back(to_json(p));
  return {{"hash", n.hash()},
          {"order", n.order()},
          {"type", type_string(n)},
          {"generators", std::move(gens)}};
}

Json to_json(const RhoOrbit& orbit) {
  Json members = Json::array();
  for (const auto& m : orbit.members) members.push_back(m.hash());
  return {{"id", orbit.id()},
          {"size", orbit.size()},
          {"type", type_string(orbit.base)},
          {"stabilizer", to_json(orbit.stabilizer)},
          {"members", std::move(members)}};
}

Json to_json(const SkewBrace& b) {
  auto rows = [&](const std::vector<ElementId>& table) {
    Json out = Json::array();
    for (std::size_t a = 0; a < b.size; ++a) {
      out.push_back(std::vector<ElementId>(table.begin() + a * b.size,
                                           table.begin() + (a + 1) * b.size));
    }
    return out;
  };
  return {{"size", b.size}, {"star", rows(b.star)}, {"circ", rows(b.circ)}};
}

Json to_json(const YbeMap& r) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < r.size; ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < r.size; ++y) {
      const auto [u, v] = r(static_cast<ElementId>(x), static_cast<ElementId>(y));
      row.push_back({u, v});
    }
    rows.push_back(std::move(row));
  }
  return {{"size", r.size}, {"table", std::move(rows)}};
}

Json to_json(const RealizableLattice& lattice) {
  Json entries = Json::array();
  for (const auto& e : lattice.entries) {
    entries.push_back({{"p", to_json(e.p)}, {"u", to_json(e.u)}});
  }
  return {{"structure", lattice.structure.hash()},
          {"injective", lattice.injective()},
          {"inclusion_preserving", lattice.inclusion_preserving()},
          {"entries", std::move(entries)}};
}

Json to_json(const CheckResult& r) {
  return {{"id", r.id},
          {"tag", r.tag},
          {"claim", r.claim},
          {"status", to_string(r.status)},
          {"detail", r.detail}};
}

}  // namespace hgslab
