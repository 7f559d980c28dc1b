#include "hgslab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hgslab/brace.hpp"
#include "hgslab/constructions.hpp"
#include "hgslab/correspondence.hpp"
#include "hgslab/error.hpp"
#include "hgslab/families.hpp"
#include "hgslab/hgs.hpp"
#include "hgslab/reference_checks.hpp"
#include "hgslab/rho.hpp"
#include "hgslab/serialize.hpp"

namespace hgslab {

const std::string& Command::get(const std::string& key) const {
  const auto it = options.find(key);
  if (it == options.end()) throw Error(ErrorKind::kUsage, "missing --" + key);
  return it->second;
}

Json Report::to_json() const {
  Json out;
  out["schema"] = schema;
  out["version"] = kVersion;
  out["command"] = command;
  out["group"] = group.empty() ? Json(nullptr) : Json(group);
  out["complete"] = complete;
  out["result"] = result;
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Parsing

int threads_from_env() {
  const char* raw = std::getenv("HGSLAB_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  const std::string text(raw);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw Error(ErrorKind::kUsage,
                "HGSLAB_THREADS must be a positive integer, got '" + text + "'");
  }
  return value;
}

class Parser {
 public:
  Parser() {
    app_.require_subcommand(1, 1);
    app_.set_version_flag("--version", kVersion);

    auto* group = leaf(&app_, "group", "Describe a group");
    option(group, "group", "Group spec, e.g. metacyclic:7:3:2", true);

    auto* hgs = app_.add_subcommand("hgs", "Hopf-Galois structures on a group");
    hgs->require_subcommand(1, 1);
    for (const char* action : {"enumerate", "rho-orbits"}) {
      auto* sub = leaf(hgs, action,
                       std::string(action) == "enumerate"
                           ? "List every G-stable regular subgroup"
                           : "Partition the structures into rho-orbits");
      option(sub, "group", "Group spec", true);
      option(sub, "type", "Restrict to structures of this type");
    }

    auto* brace = app_.add_subcommand("brace", "Skew brace of a structure");
    brace->require_subcommand(1, 1);
    for (const char* action : {"extract", "check", "aut", "gprime", "ybe"}) {
      auto* sub = leaf(brace, action, std::string("brace ") + action);
      option(sub, "group", "Group spec", true);
      option(sub, "structure",
             "Canonical hash, orbit id, or generators such as "
             "'lambda(s)*rho(t);lambda(t)'",
             true);
    }

    auto* construct = app_.add_subcommand("construct", "Build structures");
    construct->require_subcommand(1, 1);
    auto* fpf = leaf(construct, "fpf", "Structure from a fixed-point-free pair");
    option(fpf, "group", "Source group G", true);
    option(fpf, "target", "Target group M", true);
    option(fpf, "f1", "Images of all elements of G, or gen=image pairs", true);
    option(fpf, "f2", "Images of all elements of G, or gen=image pairs", true);
    auto* abelian = leaf(construct, "abelian-maps", "Structures from abelian maps");
    option(abelian, "group", "Group spec", true);
    flag(abelian, "orbits", "Also partition the structures into rho-orbits");
    auto* induced = leaf(construct, "induced", "Induced structures");
    option(induced, "group", "Group spec", true);
    auto* t = option(induced, "t", "Generators of the subgroup T");
    auto* search = flag(induced, "search", "Search every admissible T");
    t->excludes(search);

    auto* corr = leaf(&app_, "correspondence", "Realizable subgroup lattice");
    option(corr, "group", "Group spec", true);
    option(corr, "structure", "Structure reference", true);
    option(corr, "transport", "Also check transport along rho-conjugation by g");

    auto* verify = leaf(&app_, "verify-paper", "Run the reference checks");
    option(verify, "only", "Check id or family tag");
  }

  Command parse(const std::vector<std::string>& args) {
    check_words(args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app_.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      return help_command();
    } catch (const CLI::CallForAllHelp&) {
      return help_command();
    } catch (const CLI::CallForVersion&) {
      Command c;
      c.verb = "version";
      return c;
    } catch (const CLI::ParseError& e) {
      throw Error(ErrorKind::kUsage, e.what());
    }

    const CLI::App* top = app_.get_subcommands().front();
    cmd_.verb = top->get_name();
    if (!top->get_subcommands().empty()) {
      cmd_.action = top->get_subcommands().front()->get_name();
    }
    if (cmd_.options.erase("json") != 0) cmd_.output = OutputMode::kJson;
    if (cmd_.verb == "construct" && cmd_.action == "induced" &&
        !cmd_.has("t") && !cmd_.has("search")) {
      throw Error(ErrorKind::kUsage, "construct induced needs --t or --search");
    }
    for (const char* key : {"group", "target"}) {
      if (!cmd_.has(key)) continue;
      try {
        build_group(parse_group_spec(cmd_.get(key)));
      } catch (const Error& e) {
        throw Error(ErrorKind::kUsage, std::string("--") + key + " " + e.what());
      }
    }
    if (cmd_.has("type")) {
      try {
        parse_group_spec(cmd_.get("type"));
      } catch (const Error& e) {
        throw Error(ErrorKind::kUsage, std::string("--type ") + e.what());
      }
    }
    cmd_.threads = threads_from_env();
    return cmd_;
  }

 private:
  // Name the offending word before CLI11 reports a generic missing
  // subcommand.
  void check_words(const std::vector<std::string>& args) const {
    if (args.empty() || args[0].rfind("-", 0) == 0) return;
    const CLI::App* verb = nullptr;
    try {
      verb = app_.get_subcommand(args[0]);
    } catch (const CLI::OptionNotFound&) {
      throw Error(ErrorKind::kUsage, "unknown verb '" + args[0] + "'");
    }
    if (verb->get_subcommands({}).empty() || args.size() < 2 ||
        args[1].rfind("-", 0) == 0) {
      return;
    }
    try {
      static_cast<void>(verb->get_subcommand(args[1]));
    } catch (const CLI::OptionNotFound&) {
      throw Error(ErrorKind::kUsage, "unknown action '" + args[1] + "' for " + args[0]);
    }
  }

  CLI::App* leaf(CLI::App* parent, const std::string& name,
                 const std::string& description) {
    auto* sub = parent->add_subcommand(name, description);
    flag(sub, "json", "Emit JSON");
    return sub;
  }

  CLI::Option* option(CLI::App* sub, const std::string& name,
                      const std::string& description, bool required = false) {
    auto* opt = sub->add_option_function<std::string>(
        "--" + name,
        [this, name](const std::string& value) { cmd_.options[name] = value; },
        description);
    if (required) opt->required();
    return opt;
  }

  CLI::Option* flag(CLI::App* sub, const std::string& name,
                    const std::string& description) {
    return sub->add_flag_function(
        "--" + name,
        [this, name](std::int64_t) { cmd_.options[name] = "true"; },
        description);
  }

  Command help_command() {
    const CLI::App* deepest = &app_;
    while (!deepest->get_subcommands().empty()) {
      deepest = deepest->get_subcommands().front();
    }
    Command c;
    c.verb = "help";
    c.options["text"] = deepest->help();
    return c;
  }

  CLI::App app_{"Hopf-Galois structures, rho-conjugation and skew braces",
                "hgslab"};
  Command cmd_;
};

// ---------------------------------------------------------------------------
// Argument values

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

bool parse_int(std::string_view s, long long& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

// Exact element name, "#index", or a word in one-letter generators such as
// "t^-1s^2".
ElementId parse_element(const FiniteGroup& g, std::string_view raw) {
  const std::string text = trim(raw);
  const auto& names = g.names();
  for (ElementId a = 0; a < g.order(); ++a) {
    if (names[a] == text) return a;
  }
  auto fail = [&]() -> ElementId {
    throw Error(ErrorKind::kUsage, "unknown element '" + text + "' of " +
                                       g.spec().to_string());
  };
  if (!text.empty() && text[0] == '#') {
    long long idx = 0;
    if (!parse_int(std::string_view(text).substr(1), idx) || idx < 0 ||
        idx >= static_cast<long long>(g.order())) {
      return fail();
    }
    return static_cast<ElementId>(idx);
  }
  ElementId result = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto it = std::find(names.begin(), names.end(), std::string(1, text[i]));
    if (it == names.end()) return fail();
    const auto gen = static_cast<ElementId>(it - names.begin());
    ++i;
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t j = ++i;
      if (j < text.size() && text[j] == '-') ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (!parse_int(std::string_view(text).substr(i, j - i), exp)) return fail();
      i = j;
    }
    result = g.mul(result, g.pow(gen, exp));
  }
  if (text.empty()) return fail();
  return result;
}

std::vector<ElementId> parse_elements(const FiniteGroup& g, std::string_view text) {
  std::vector<ElementId> out;
  for (const auto& part : split_top(text, ',')) out.push_back(parse_element(g, part));
  return out;
}

// Extends generator assignments along right multiplication; consistency on
// every (element, generator) edge makes the result a homomorphism.
GroupHom extend_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                    const std::vector<std::pair<ElementId, ElementId>>& gens) {
  constexpr ElementId kUnset = static_cast<ElementId>(-1);
  std::vector<ElementId> img(domain.order(), kUnset);
  img[0] = 0;
  std::vector<ElementId> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementId x = queue[head];
    for (const auto& [g, h] : gens) {
      const ElementId y = domain.mul(x, g);
      const ElementId v = codomain.mul(img[x], h);
      if (img[y] == kUnset) {
        img[y] = v;
        queue.push_back(y);
      } else if (img[y] != v) {
        throw Error(ErrorKind::kInvalidHom,
                    "generator images do not define a homomorphism (conflict at " +
                        domain.name(y) + ")");
      }
    }
  }
  if (queue.size() != domain.order()) {
    throw Error(ErrorKind::kUsage, "assigned generators do not generate " +
                                       domain.spec().to_string());
  }
  return {domain, codomain, std::move(img)};
}

GroupHom parse_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                   std::string_view text) {
  const auto parts = split_top(text, ',');
  const bool assignments = std::any_of(parts.begin(), parts.end(), [](const auto& p) {
    return split_top(p, '=').size() == 2;
  });
  if (assignments) {
    std::vector<std::pair<ElementId, ElementId>> gens;
    for (const auto& part : parts) {
      const auto lr = split_top(part, '=');
      if (lr.size() != 2) {
        throw Error(ErrorKind::kUsage, "expected gen=image, got '" + part + "'");
      }
      gens.emplace_back(parse_element(domain, lr[0]), parse_element(codomain, lr[1]));
    }
    return extend_hom(domain, codomain, gens);
  }
  if (parts.size() != domain.order()) {
    throw Error(ErrorKind::kUsage,
                "expected " + std::to_string(domain.order()) +
                    " images or gen=image pairs, got " + std::to_string(parts.size()));
  }
  GroupHom h{domain, codomain, {}};
  for (const auto& part : parts) h.images.push_back(parse_element(codomain, part));
  if (!h.is_homomorphism()) {
    throw Error(ErrorKind::kInvalidHom, "image list is not a homomorphism");
  }
  return h;
}

bool is_hash(std::string_view s) {
  return s.size() == 16 && std::all_of(s.begin(), s.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c)) ||
                  (c >= 'a' && c <= 'f');
         });
}

Perm parse_factor(const FiniteGroup& g, const std::string& text) {
  auto inner = [&](std::size_t prefix) {
    if (text.back() != ')') {
      throw Error(ErrorKind::kUsage, "unbalanced factor '" + text + "'");
    }
    return text.substr(prefix, text.size() - prefix - 1);
  };
  if (text.rfind("lambda(", 0) == 0) return lambda_embed(g, parse_element(g, inner(7)));
  if (text.rfind("rho(", 0) == 0) return rho_embed(g, parse_element(g, inner(4)));
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    std::vector<Point> images;
    for (const auto& part : split_top(text.substr(1, text.size() - 2), ',')) {
      long long v = 0;
      if (!parse_int(part, v) || v < 0) {
        throw Error(ErrorKind::kUsage, "bad point '" + part + "'");
      }
      images.push_back(static_cast<Point>(v));
    }
    if (images.size() != g.order()) {
      throw Error(ErrorKind::kUsage, "permutation '" + text + "' has wrong length");
    }
    try {
      return Perm(std::move(images));
    } catch (const Error&) {
      throw Error(ErrorKind::kUsage, "'" + text + "' is not a permutation");
    }
  }
  throw Error(ErrorKind::kUsage,
              "expected lambda(x), rho(x) or [images], got '" + text + "'");
}

RegularSubgroup parse_structure(const FiniteGroup& g, const std::string& ref) {
  if (is_hash(ref)) {
    for (const auto& n : enumerate_hgs(g).structures) {
      if (n.hash() == ref) return n;
    }
    throw Error(ErrorKind::kUsage,
                "no structure on " + g.spec().to_string() + " has hash " + ref);
  }
  std::vector<Perm> gens;
  for (const auto& word : split_top(ref, ';')) {
    if (word.empty()) continue;
    Perm p = Perm::identity(g.order());
    for (const auto& factor : split_top(word, '*')) p = compose(p, parse_factor(g, factor));
    gens.push_back(std::move(p));
  }
  if (gens.empty()) throw Error(ErrorKind::kUsage, "empty structure reference");
  return structure_from_generators(g, std::move(gens));
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> names_of(const FiniteGroup& g,
                                  std::span<const ElementId> elements) {
  std::vector<std::string> out;
  for (ElementId a : elements) out.push_back(g.name(a));
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json command_echo(const Command& c) {
  Json options = Json::object();
  for (const auto& [k, v] : c.options) options[k] = v;
  return {{"verb", c.verb},
          {"action", c.action.empty() ? Json(nullptr) : Json(c.action)},
          {"options", std::move(options)}};
}

std::map<std::string, std::string> orbit_ids(const std::vector<RhoOrbit>& orbits) {
  std::map<std::string, std::string> out;
  for (const auto& o : orbits) {
    for (const auto& m : o.members) out[m.hash()] = o.id();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verbs

void run_group(const Command& c, Report& r) {
  const FiniteGroup g = build_group(parse_group_spec(c.get("group")));
  const auto gens = small_generating_set(g);
  const Subgroup z = center(g);
  std::vector<std::size_t> class_sizes;
  for (const auto& cls : conjugacy_classes(g)) class_sizes.push_back(cls.size());
  std::sort(class_sizes.begin(), class_sizes.end());
  std::vector<ElementId> all(g.order());
  for (ElementId a = 0; a < g.order(); ++a) all[a] = a;

  r.schema = schema_id("group");
  r.result = {{"order", g.order()},
              {"abelian", g.is_abelian()},
              {"catalog_complete", catalog_complete(g.order())},
              {"generators", element_names(g, gens)},
              {"center", to_json(z)},
              {"class_sizes", class_sizes},
              {"elements", element_names(g, all)}};

  std::ostringstream out;
  std::vector<std::string> sizes;
  for (auto s : class_sizes) sizes.push_back(std::to_string(s));
  out << render_table({{"group", g.spec().to_string()},
                       {"order", std::to_string(g.order())},
                       {"abelian", yes_no(g.is_abelian())},
                       {"generators", join(names_of(g, gens), ", ")},
                       {"center", join(names_of(g, z.elements), ", ")},
                       {"class sizes", join(sizes, " ")}});
  out << "elements (index: name)\n";
  for (ElementId a = 0; a < g.order(); ++a) out << "  " << a << ": " << g.name(a) << "\n";
  r.text = out.str();
}

std::optional<GroupSpec> type_arg(const Command& c) {
  if (!c.has("type")) return std::nullopt;
  return parse_group_spec(c.get("type"));
}

void run_hgs(const Command& c, Report& r) {
  const FiniteGroup g = build_group(parse_group_spec(c.get("group")));
  const HgsInventory inv = enumerate_hgs(g, type_arg(c));
  const auto orbits = rho_partition(inv);
  r.complete = inv.complete;
  std::ostringstream out;

  if (c.action == "enumerate") {
    const auto ids = orbit_ids(orbits);
    std::map<std::string, std::size_t> by_type;
    Json list = Json::array();
    std::vector<std::vector<std::string>> rows{
        {"#", "hash", "type", "rho-orbit", "self-opposite"}};
    for (std::size_t i = 0; i < inv.size(); ++i) {
      const auto& n = inv.structures[i];
      Json j = to_json(n);
      const bool self_opp = opposite(n) == n;
      j["orbit"] = ids.at(n.hash());
      j["self_opposite"] = self_opp;
      ++by_type[j["type"].get<std::string>()];
      rows.push_back({std::to_string(i), n.hash(), j["type"].get<std::string>(),
                      ids.at(n.hash()), yes_no(self_opp)});
      list.push_back(std::move(j));
    }
    r.schema = schema_id("hgs-inventory");
    r.result = {{"type_filter", c.has("type") ? Json(c.get("type")) : Json(nullptr)},
                {"count", inv.size()},
                {"by_type", by_type},
                {"orbit_count", orbits.size()},
                {"structures", std::move(list)}};
    out << "G-stable regular subgroups of " << g.spec().to_string();
    if (c.has("type")) out << " of type " << c.get("type");
    out << ": " << inv.size() << (inv.complete ? "" : " (incomplete)") << "\n";
    for (const auto& [type, count] : by_type) out << "  " << type << ": " << count << "\n";
    out << render_table(rows);
  } else {
    std::vector<std::size_t> sizes;
    Json list = Json::array();
    std::vector<std::vector<std::string>> rows{
        {"orbit", "size", "type", "|stabilizer|", "stabilizer"}};
    for (const auto& o : orbits) {
      sizes.push_back(o.size());
      list.push_back(to_json(o));
      rows.push_back({o.id(), std::to_string(o.size()), type_string(o.base),
                      std::to_string(o.stabilizer.order()),
                      join(names_of(g, o.stabilizer.generators), ", ")});
    }
    std::sort(sizes.begin(), sizes.end());
    r.schema = schema_id("rho-orbits");
    r.result = {{"type_filter", c.has("type") ? Json(c.get("type")) : Json(nullptr)},
                {"structure_count", inv.size()},
                {"orbit_count", orbits.size()},
                {"orbit_sizes", sizes},
                {"orbits", std::move(list)}};
    std::vector<std::string> size_text;
    for (auto s : sizes) size_text.push_back(std::to_string(s));
    out << "rho-orbits on " << inv.size() << " structures of "
        << g.spec().to_string() << ": " << orbits.size() << " orbits, sizes "
        << join(size_text, " ") << "\n"
        << "orbit size = |G| / |stabilizer|\n";
    out << render_table(rows);
  }
  r.text = out.str();
}

std::string render_square(const std::vector<ElementId>& table, std::size_t n) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::string> row;
    for (std::size_t b = 0; b < n; ++b) row.push_back(std::to_string(table[a * n + b]));
    rows.push_back(std::move(row));
  }
  return render_table(rows);
}

void run_brace(const Command& c, Report& r) {
  const FiniteGroup g = build_group(parse_group_spec(c.get("group")));
  const RegularSubgroup n = parse_structure(g, c.get("structure"));
  const SkewBrace b = brace_from_subgroup(n);
  const std::size_t size = g.order();
  std::ostringstream out;
  out << "structure " << n.hash() << " (" << type_string(n) << ") on "
      << g.spec().to_string() << "\n";
  r.result = {{"structure", to_json(n)}};

  if (c.action == "extract") {
    std::vector<ElementId> all(size);
    for (ElementId a = 0; a < size; ++a) all[a] = a;
    r.schema = schema_id("brace");
    r.result["elements"] = element_names(g, all);
    r.result["brace"] = to_json(b);
    out << "star (x * y = (eta_x eta_y)[e]), by index:\n" << render_square(b.star, size);
    out << "circ (the group law of G), by index:\n" << render_square(b.circ, size);
    out << "index: name\n";
    for (ElementId a = 0; a < size; ++a) out << "  " << a << ": " << g.name(a) << "\n";
  } else if (c.action == "check") {
    const bool axioms = brace_axioms_hold(b);
    const bool two_sided = is_two_sided(b);
    const bool gv = gv_identity_check(b);
    bool agree = true;
    std::size_t rho_normalizers = 0;
    for (ElementId x = 0; x < size; ++x) {
      const auto cond = normalizer_conditions(n, b, x);
      agree = agree && cond.agree();
      if (cond.rho_normalizes) ++rho_normalizers;
    }
    const Subgroup gp = g_prime(b);
    const RhoOrbit orbit = rho_orbit(n);
    const YbeMap ybe = ybe_map_unchecked(b);
    const bool ybe_ok = is_bijective(ybe) && satisfies_braid_relation(ybe);
    const bool orbit_ok = orbit.size() * gp.order() == size;
    const bool two_sided_ok = two_sided == (rho_normalizers == size);
    const bool passed = axioms && gv && agree && ybe_ok && orbit_ok && two_sided_ok &&
                        gp.order() == rho_normalizers;
    r.schema = schema_id("brace-check");
    r.result["checks"] = {
        {"brace_relation", axioms},
        {"normalizer_conditions_agree", agree},
        {"orbit_size_is_index_of_gprime", orbit_ok},
        {"two_sided_iff_rho_normalizes", two_sided_ok},
        {"gv_identity", gv},
        {"ybe_solution", ybe_ok}};
    r.result["two_sided"] = two_sided;
    r.result["gprime_order"] = gp.order();
    r.result["orbit_size"] = orbit.size();
    r.result["passed"] = passed;
    if (!passed) r.exit_code = 3;
    out << render_table(
        {{"brace relation x o (y * z) = (x o y) * x^-1 * (x o z)", yes_no(axioms)},
         {"rho(g) normalizes N <=> phi_g is a brace map <=> right relation at g",
          yes_no(agree)},
         {"|rho-orbit| = |G| / |G'|  (" + std::to_string(orbit.size()) + " = " +
              std::to_string(size) + " / " + std::to_string(gp.order()) + ")",
          yes_no(orbit_ok)},
         {std::string("two-sided (") + yes_no(two_sided) +
              ") <=> rho(G) normalizes N",
          yes_no(two_sided_ok)},
         {"gv identity for every g", yes_no(gv)},
         {"r(x, y) is a bijective braided solution", yes_no(ybe_ok)}});
    out << (passed ? "all checks passed\n" : "CHECK FAILED\n");
  } else if (c.action == "aut") {
    const auto auts = brace_automorphisms(b);
    Json list = Json::array();
    for (const auto& a : auts) list.push_back(to_json(a));
    r.schema = schema_id("brace-automorphisms");
    r.result["count"] = auts.size();
    r.result["automorphisms"] = std::move(list);
    out << "brace automorphisms: " << auts.size() << "\n";
    for (const auto& a : auts) out << "  " << join(names_of(g, a.images), " ") << "\n";
  } else if (c.action == "gprime") {
    const Subgroup gp = g_prime(b);
    r.schema = schema_id("brace-gprime");
    r.result["gprime"] = to_json(gp);
    r.result["orbit_size"] = size / gp.order();
    out << "G' = {g : conjugation by g preserves star}, order " << gp.order()
        << "\n  " << join(names_of(g, gp.elements), ", ") << "\n"
        << "rho-orbit size |G| / |G'| = " << size / gp.order() << "\n";
  } else {
    const YbeMap ybe = ybe_map_unchecked(b);
    const bool bij = is_bijective(ybe);
    const bool braid = satisfies_braid_relation(ybe);
    r.schema = schema_id("ybe");
    r.result["bijective"] = bij;
    r.result["braid_relation"] = braid;
    r.result["map"] = to_json(ybe);
    if (!(bij && braid)) r.exit_code = 3;
    out << "r(x, y) = (x^-1 * (x o y), u' o x o y)\n"
        << "bijective: " << yes_no(bij) << "\nbraid relation: " << yes_no(braid)
        << "\n";
    for (ElementId x = 0; x < size; ++x) {
      for (ElementId y = 0; y < size; ++y) {
        const auto [u, v] = ybe(x, y);
        out << "  r(" << g.name(x) << ", " << g.name(y) << ") = (" << g.name(u)
            << ", " << g.name(v) << ")\n";
      }
    }
  }
  r.text = out.str();
}

Json structure_with_orbit(const RegularSubgroup& n) {
  Json j = to_json(n);
  const RhoOrbit o = rho_orbit(n);
  j["orbit"] = o.id();
  j["orbit_size"] = o.size();
  return j;
}

void run_construct(const Command& c, Report& r) {
  const FiniteGroup g = build_group(parse_group_spec(c.get("group")));
  std::ostringstream out;

  if (c.action == "fpf") {
    const FiniteGroup m = build_group(parse_group_spec(c.get("target")));
    const GroupHom f1 = parse_hom(g, m, c.get("f1"));
    const GroupHom f2 = parse_hom(g, m, c.get("f2"));
    const RegularSubgroup n = hgs_from_fpf(f1, f2);
    bool transport = true;
    for (ElementId x = 0; x < g.order(); ++x) {
      transport = transport && fpf_conjugation_check(f1, f2, x);
    }
    r.schema = schema_id("fpf");
    r.result = {{"f1", to_json(f1)},
                {"f2", to_json(f2)},
                {"structure", structure_with_orbit(n)},
                {"conjugation_transport", transport}};
    if (!transport) r.exit_code = 3;
    out << "h -> lambda(f1(h)) rho(f2(h)) gives structure " << n.hash() << " ("
        << type_string(n) << ")\n"
        << "rho-orbit " << r.result["structure"]["orbit"].get<std::string>()
        << ", size " << r.result["structure"]["orbit_size"].get<std::size_t>() << "\n"
        << "(f1 phi_g^-1, f2 phi_g^-1) gives N_g for all g: " << yes_no(transport)
        << "\n";
  } else if (c.action == "abelian-maps") {
    const auto maps = abelian_maps(g);
    std::vector<RegularSubgroup> structures;
    Json list = Json::array();
    std::vector<std::vector<std::string>> rows{{"#", "image", "structure"}};
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const RegularSubgroup n = hgs_from_abelian_map(maps[i]);
      std::set<ElementId> image(maps[i].psi.images.begin(), maps[i].psi.images.end());
      const std::vector<ElementId> img(image.begin(), image.end());
      list.push_back({{"images", to_json(maps[i].psi)},
                      {"image", element_names(g, img)},
                      {"structure", n.hash()}});
      rows.push_back({std::to_string(i), join(names_of(g, img), ","), n.hash()});
      structures.push_back(n);
    }
    std::sort(structures.begin(), structures.end());
    structures.erase(std::unique(structures.begin(), structures.end()), structures.end());
    r.schema = schema_id("abelian-maps");
    r.result = {{"count", maps.size()},
                {"distinct_structures", structures.size()},
                {"maps", std::move(list)}};
    out << "abelian maps on " << g.spec().to_string() << ": " << maps.size()
        << ", distinct structures: " << structures.size() << "\n"
        << render_table(rows);
    if (c.has("orbits")) {
      const auto orbits = rho_partition(structures);
      std::vector<std::size_t> sizes;
      Json ol = Json::array();
      for (const auto& o : orbits) {
        sizes.push_back(o.size());
        ol.push_back(to_json(o));
      }
      std::sort(sizes.begin(), sizes.end());
      r.result["orbit_sizes"] = sizes;
      r.result["orbits"] = std::move(ol);
      std::vector<std::string> st;
      for (auto s : sizes) st.push_back(std::to_string(s));
      out << "rho-orbit sizes: " << join(st, " ") << "\n";
    }
  } else {
    std::vector<RegularSubgroup> structures;
    Json t_json = nullptr;
    if (c.has("search")) {
      structures = induced_structures_search(g);
    } else {
      const auto gens = parse_elements(g, c.get("t"));
      const Subgroup t = subgroup_closure(g, gens);
      t_json = to_json(t);
      const auto as = coset_stable_regular_subgroups(g, t);
      const auto bs = subgroup_stable_regular_subgroups(t);
      for (const auto& a : as) {
        for (const auto& b : bs) {
          structures.push_back(induced_hgs(make_induced_input(g, t, a, b)));
        }
      }
      std::sort(structures.begin(), structures.end());
      structures.erase(std::unique(structures.begin(), structures.end()),
                       structures.end());
    }
    Json list = Json::array();
    std::vector<std::vector<std::string>> rows{{"hash", "type", "rho-orbit", "size"}};
    for (const auto& n : structures) {
      Json j = structure_with_orbit(n);
      rows.push_back({n.hash(), j["type"].get<std::string>(),
                      j["orbit"].get<std::string>(),
                      std::to_string(j["orbit_size"].get<std::size_t>())});
      list.push_back(std::move(j));
    }
    r.schema = schema_id("induced");
    r.result = {{"t", t_json}, {"count", structures.size()}, {"structures", std::move(list)}};
    out << "induced structures eta(a, b)[st] = a[s] b[t]: " << structures.size() << "\n"
        << render_table(rows);
  }
  r.text = out.str();
}

std::string render_lattice(const RealizableLattice& lat) {
  const FiniteGroup& g = lat.structure.group();
  std::vector<std::vector<std::string>> rows{{"|P|", "P", "|U|", "U"}};
  for (const auto& e : lat.entries) {
    rows.push_back({std::to_string(e.p.order()), e.p.canonical_hash(),
                    std::to_string(e.u.order()),
                    join(names_of(g, e.u.elements), ", ")});
  }
  return render_table(rows);
}

void run_correspondence(const Command& c, Report& r) {
  const FiniteGroup g = build_group(parse_group_spec(c.get("group")));
  const RegularSubgroup n = parse_structure(g, c.get("structure"));
  const RealizableLattice lat = realizable_lattice(n);
  std::ostringstream out;
  r.schema = schema_id("correspondence");
  r.result = {{"lattice", to_json(lat)}};
  out << "G-stable subgroups P of N = " << n.hash() << " and realized U (|U| = |P|)\n"
      << render_lattice(lat) << "injective: " << yes_no(lat.injective())
      << ", inclusion preserving: " << yes_no(lat.inclusion_preserving()) << "\n";
  bool ok = lat.injective() && lat.inclusion_preserving();
  if (c.has("transport")) {
    const ElementId x = parse_element(g, c.get("transport"));
    const bool transport = realizable_transport_check(n, x);
    const RealizableLattice moved = realizable_lattice(rho_conjugate(n, x));
    r.result["transport"] = {{"g", g.name(x)},
                             {"holds", transport},
                             {"lattice", to_json(moved)}};
    ok = ok && transport;
    out << "rho-conjugate by " << g.name(x) << ": P -> rho(g) P rho(g)^-1, U -> g U g^-1 "
        << (transport ? "holds" : "FAILS") << "\n"
        << render_lattice(moved);
  }
  if (!ok) r.exit_code = 3;
  r.text = out.str();
}

void run_verify(const Command& c, Report& r) {
  const auto results = run_reference_checks(c.has("only") ? c.get("only") : "");
  std::size_t pass = 0, disc = 0, fail = 0;
  Json list = Json::array();
  std::vector<std::vector<std::string>> rows{{"check", "family", "status", "claim"}};
  for (const auto& res : results) {
    switch (res.status) {
      case CheckStatus::kPass: ++pass; break;
      case CheckStatus::kDiscrepancy: ++disc; break;
      case CheckStatus::kFail: ++fail; break;
    }
    list.push_back(to_json(res));
    rows.push_back({res.id, res.tag, to_string(res.status), res.claim});
  }
  r.schema = schema_id("verify");
  r.result = {{"pass", pass}, {"discrepancy", disc}, {"fail", fail}, {"checks", list}};
  if (fail > 0) r.exit_code = 3;
  std::ostringstream out;
  out << render_table(rows);
  for (const auto& res : results) {
    if (!res.detail.empty()) out << "\n[" << res.id << "] " << res.detail << "\n";
  }
  out << "\n" << pass << " pass, " << disc << " discrepancy, " << fail << " fail\n";
  r.text = out.str();
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::kUsage ? 1 : 2;
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  Parser parser;
  return parser.parse(args);
}

Report execute(const Command& command) {
  Report r;
  r.command = command_echo(command);
  if (command.has("group")) r.group = command.get("group");
  if (command.verb == "group") {
    run_group(command, r);
  } else if (command.verb == "hgs") {
    run_hgs(command, r);
  } else if (command.verb == "brace") {
    run_brace(command, r);
  } else if (command.verb == "construct") {
    run_construct(command, r);
  } else if (command.verb == "correspondence") {
    run_correspondence(command, r);
  } else if (command.verb == "verify-paper") {
    run_verify(command, r);
  } else {
    throw Error(ErrorKind::kUsage, "unknown verb '" + command.verb + "'");
  }
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    const Command command = parse_command(args);
    if (command.verb == "help") {
      out << command.get("text");
      return 0;
    }
    if (command.verb == "version") {
      out << "hgslab " << kVersion << "\n";
      return 0;
    }
    const Report report = execute(command);
    if (command.output == OutputMode::kJson) {
      out << report.to_json().dump(2) << "\n";
    } else {
      out << report.text;
    }
    return report.exit_code;
  } catch (const Error& e) {
    err << "hgslab: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "hgslab: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hgslab
