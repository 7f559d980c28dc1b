#pragma once

// JSON views of library objects. Every list is emitted in canonical order so
// identical inputs give byte-identical documents.

#include <string>

#include <json.hpp>

#include "hgslab/brace.hpp"
#include "hgslab/correspondence.hpp"
#include "hgslab/group.hpp"
#include "hgslab/hgs.hpp"
#include "hgslab/perm.hpp"
#include "hgslab/reference_checks.hpp"
#include "hgslab/rho.hpp"

namespace hgslab {

using Json = nlohmann::ordered_json;

std::string schema_id(const std::string& kind);

Json to_json(const Perm& p);
Json to_json(const PermGroup& g);
Json element_names(const FiniteGroup& g, std::span<const ElementId> elements);
Json to_json(const Subgroup& s);
Json to_json(const GroupHom& h);
// Type label, falling back to identification; "unknown" if neither works.
std::string type_string(const RegularSubgroup& n);
Json to_json(const RegularSubgroup& n);
Json to_json(const RhoOrbit& orbit);
Json to_json(const SkewBrace& b);
Json to_json(const YbeMap& r);
Json to_json(const RealizableLattice& lattice);
Json to_json(const CheckResult& r);

}  // namespace hgslab
