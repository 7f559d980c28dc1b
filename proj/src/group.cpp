#include "hgslab/group.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "hgslab/error.hpp"

namespace hgslab {

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::cyclic(int n) { return {Kind::kCyclic, {n}, {}, {}}; }
GroupSpec GroupSpec::dihedral(int n) { return {Kind::kDihedral, {n}, {}, {}}; }
GroupSpec GroupSpec::metacyclic(int p, int q, int d) {
  return {Kind::kMetacyclic, {p, q, d}, {}, {}};
}
GroupSpec GroupSpec::symmetric(int n) {
  return {Kind::kSymmetric, {n}, {}, {}};
}
GroupSpec GroupSpec::alternating(int n) {
  return {Kind::kAlternating, {n}, {}, {}};
}
GroupSpec GroupSpec::quaternion() { return {Kind::kQuaternion, {8}, {}, {}}; }
GroupSpec GroupSpec::dicyclic(int order) {
  return {Kind::kDicyclic, {order}, {}, {}};
}
GroupSpec GroupSpec::elementary_abelian(int p, int k) {
  return {Kind::kElementaryAbelian, {p, k}, {}, {}};
}
GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  return {Kind::kProduct, {}, std::move(factors), {}};
}
GroupSpec GroupSpec::custom(std::string label) {
  return {Kind::kCustom, {}, {}, std::move(label)};
}

namespace {

std::string join_params(const char* head, const std::vector<int>& params) {
  std::string out = head;
  for (int p : params) out += ":" + std::to_string(p);
  return out;
}

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::kCyclic: return join_params("cyclic", params);
    case Kind::kDihedral: return join_params("dihedral", params);
    case Kind::kMetacyclic: return join_params("metacyclic", params);
    case Kind::kSymmetric: return join_params("sym", params);
    case Kind::kAlternating: return join_params("alt", params);
    case Kind::kQuaternion: return join_params("quaternion", params);
    case Kind::kDicyclic: return join_params("dicyclic", params);
    case Kind::kElementaryAbelian:
      return join_params("elementary-abelian", params);
    case Kind::kCustom: return "custom:" + label;
    case Kind::kProduct: {
      std::string out = "product:";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += ",";
        const std::string inner = factors[i].to_string();
        if (factors[i].kind == Kind::kProduct) {
          out += "(" + inner + ")";
        } else {
          out += inner;
        }
      }
      return out;
    }
  }
  return "?";
}

namespace {

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::kInvalidSpec,
              "'" + std::string(text) + "': " + why);
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip_parens(std::string s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  const std::string body = strip_parens(std::string(text));
  const auto colon = body.find(':');
  const std::string head = body.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? std::string() : body.substr(colon + 1);

  if (head == "product") {
    std::vector<GroupSpec> factors;
    for (const auto& part : split_top_level(rest, ',')) {
      if (part.empty()) bad_spec(text, "empty product factor");
      factors.push_back(parse_group_spec(strip_parens(part)));
    }
    if (factors.size() < 2) bad_spec(text, "product needs two factors");
    return GroupSpec::product(std::move(factors));
  }

  std::vector<int> params;
  if (!rest.empty()) {
    for (const auto& tok : split_top_level(rest, ':')) {
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        bad_spec(text, "expected an integer, got '" + tok + "'");
      }
      params.push_back(value);
    }
  }
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      bad_spec(text, "expected " + std::to_string(count) + " parameter(s)");
    }
  };

  if (head == "cyclic") {
    expect(1);
    return GroupSpec::cyclic(params[0]);
  }
  if (head == "dihedral") {
    expect(1);
    return GroupSpec::dihedral(params[0]);
  }
  if (head == "metacyclic") {
    expect(3);
    return GroupSpec::metacyclic(params[0], params[1], params[2]);
  }
  if (head == "sym") {
    expect(1);
    return GroupSpec::symmetric(params[0]);
  }
  if (head == "alt") {
    expect(1);
    return GroupSpec::alternating(params[0]);
  }
  if (head == "quaternion") {
    if (!params.empty()) expect(1);
    return GroupSpec::quaternion();
  }
  if (head == "dicyclic") {
    expect(1);
    return GroupSpec::dicyclic(params[0]);
  }
  if (head == "elementary-abelian" || head == "elemab") {
    expect(2);
    return GroupSpec::elementary_abelian(params[0], params[1]);
  }
  bad_spec(text, "unknown group family '" + head + "'");
}

// ---------------------------------------------------------------------------
// FiniteGroup

struct FiniteGroup::Data {
  std::size_t n = 1;
  std::vector<ElementId> table{0};
  std::vector<ElementId> inverse{0};
  std::vector<std::size_t> orders{1};
  std::vector<std::string> names{"e"};
  GroupSpec spec = GroupSpec::cyclic(1);
  bool abelian = true;
};

FiniteGroup::FiniteGroup() : FiniteGroup(std::make_shared<const Data>()) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> data)
    : data_(std::move(data)), n_(data_->n), table_(data_->table.data()) {}

FiniteGroup FiniteGroup::from_table(std::size_t n,
                                    std::vector<ElementId> table,
                                    std::vector<std::string> names,
                                    GroupSpec spec, Validation validation) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::kInvalidSpec,
                spec.to_string() + ": not a group table (" + why + ")");
  };
  if (n == 0) fail("empty");
  if (table.size() != n * n) fail("wrong table size");
  for (ElementId a = 0; a < n; ++a) {
    if (table[a] != a || table[a * n] != a) fail("0 is not the identity");
  }
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      const ElementId v = table[r * n + c];
      if (v >= n || seen[v]) fail("row " + std::to_string(r) + " repeats");
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      const ElementId v = table[r * n + c];
      if (seen[v]) fail("column " + std::to_string(c) + " repeats");
      seen[v] = 1;
    }
  }
  if (validation == Validation::kFull) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const ElementId ab = table[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
            fail("not associative");
          }
        }
      }
    }
  }

  auto data = std::make_shared<Data>();
  data->n = n;
  data->table = std::move(table);
  data->spec = std::move(spec);
  data->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (data->table[a * n + b] == 0) {
        data->inverse[a] = static_cast<ElementId>(b);
        break;
      }
    }
  }
  data->orders.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    ElementId x = static_cast<ElementId>(a);
    std::size_t k = 1;
    while (x != 0) {
      x = data->table[x * n + a];
      ++k;
    }
    data->orders[a] = k;
  }
  data->abelian = true;
  for (std::size_t a = 0; a < n && data->abelian; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (data->table[a * n + b] != data->table[b * n + a]) {
        data->abelian = false;
        break;
      }
    }
  }
  if (names.size() != n) {
    names.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (names[a].empty()) names[a] = a == 0 ? "e" : "g" + std::to_string(a);
    }
  }
  data->names = std::move(names);
  return FiniteGroup(std::move(data));
}

ElementId FiniteGroup::inv(ElementId a) const { return data_->inverse[a]; }

ElementId FiniteGroup::pow(ElementId a, long long k) const {
  const auto ord = static_cast<long long>(element_order(a));
  k %= ord;
  if (k < 0) k += ord;
  ElementId x = 0;
  for (long long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

std::size_t FiniteGroup::element_order(ElementId a) const {
  return data_->orders[a];
}

bool FiniteGroup::is_abelian() const { return data_->abelian; }

const std::string& FiniteGroup::name(ElementId a) const {
  return data_->names[a];
}

const std::vector<std::string>& FiniteGroup::names() const {
  return data_->names;
}

const GroupSpec& FiniteGroup::spec() const { return data_->spec; }

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return data_ == other.data_ || data_->table == other.data_->table;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

using MulRule = std::function<ElementId(ElementId, ElementId)>;

FiniteGroup from_rule(std::size_t n, const MulRule& rule,
                      std::vector<std::string> names, GroupSpec spec) {
  std::vector<ElementId> table(n * n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) table[a * n + b] = rule(a, b);
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(names),
                                 std::move(spec),
                                 n <= 128 ? FiniteGroup::Validation::kFull
                                          : FiniteGroup::Validation::
                                                kSkipAssociativity);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::string power_name(const char* sym, int k) {
  if (k == 0) return "";
  if (k == 1) return sym;
  return std::string(sym) + "^" + std::to_string(k);
}

std::string word_name(const char* a, int i, const char* b, int j) {
  std::string out = power_name(a, i) + power_name(b, j);
  return out.empty() ? "e" : out;
}

FiniteGroup build_cyclic(const GroupSpec& spec) {
  const int n = spec.params[0];
  if (n < 1) throw Error(ErrorKind::kInvalidSpec, "cyclic order must be >= 1");
  std::vector<std::string> names(n);
  for (int k = 0; k < n; ++k) names[k] = word_name("a", k, "", 0);
  return from_rule(
      n, [n](ElementId a, ElementId b) { return (a + b) % n; },
      std::move(names), spec);
}

// r^i s^j has index 2i + j.
FiniteGroup build_dihedral(const GroupSpec& spec) {
  const int n = spec.params[0];
  if (n < 1) {
    throw Error(ErrorKind::kInvalidSpec, "dihedral parameter must be >= 1");
  }
  std::vector<std::string> names(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 2; ++j) names[2 * i + j] = word_name("r", i, "s", j);
  }
  return from_rule(
      2 * n,
      [n](ElementId a, ElementId b) {
        const int i = a / 2, j = a % 2, k = b / 2, l = b % 2;
        const int exp = mod(i + (j == 0 ? k : -k), n);
        return static_cast<ElementId>(2 * exp + (j + l) % 2);
      },
      std::move(names), spec);
}

int multiplicative_order(int d, int p) {
  int x = mod(d, p);
  if (x == 0) return 0;
  int k = 1;
  while (x != 1) {
    x = static_cast<int>((1LL * x * d) % p);
    ++k;
  }
  return k;
}

// s^i t^j has index q*i + j; t s t^-1 = s^d.
FiniteGroup build_metacyclic(const GroupSpec& spec) {
  const int p = spec.params[0], q = spec.params[1], d = spec.params[2];
  if (!is_prime(p) || !is_prime(q)) {
    throw Error(ErrorKind::kInvalidSpec,
                spec.to_string() + ": p and q must be prime");
  }
  const int ord = d > 0 ? multiplicative_order(d, p) : 0;
  if (ord != q) {
    throw Error(ErrorKind::kInvalidSpec,
                spec.to_string() + ": " + std::to_string(d) +
                    " has multiplicative order " + std::to_string(ord) +
                    " mod " + std::to_string(p) + ", expected " +
                    std::to_string(q));
  }
  std::vector<int> dpow(q);
  dpow[0] = 1;
  for (int j = 1; j < q; ++j) dpow[j] = mod(1LL * dpow[j - 1] * d, p);
  std::vector<std::string> names(p * q);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) names[q * i + j] = word_name("s", i, "t", j);
  }
  return from_rule(
      p * q,
      [p, q, dpow](ElementId a, ElementId b) {
        const int i = a / q, j = a % q, k = b / q, l = b % q;
        // s^i t^j s^k t^l = s^(i + k d^j) t^(j + l)
        const int si = mod(i + 1LL * k * dpow[j], p);
        return static_cast<ElementId>(q * si + (j + l) % q);
      },
      std::move(names), spec);
}

std::string cycle_name(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> done(n, 0);
  std::string out;
  for (int x = 0; x < n; ++x) {
    if (done[x] || perm[x] == x) continue;
    out += "(";
    int y = x;
    bool first = true;
    while (!done[y]) {
      done[y] = 1;
      if (!first) out += " ";
      out += std::to_string(y + 1);
      first = false;
      y = perm[y];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

bool is_even(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 == 0;
}

// Permutations of {0..n-1} in lexicographic order; composition (ab)(x) =
// a(b(x)).
FiniteGroup build_permutation_group(const GroupSpec& spec, bool even_only) {
  const int n = spec.params[0];
  const int limit = even_only ? 7 : 6;
  if (n < 1 || n > limit) {
    throw Error(ErrorKind::kInvalidSpec,
                spec.to_string() + ": degree must be in [1, " +
                    std::to_string(limit) + "]");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& perm : perms) names.push_back(cycle_name(perm));
  auto index_of = [&perms](const std::vector<int>& perm) {
    return static_cast<ElementId>(
        std::lower_bound(perms.begin(), perms.end(), perm) - perms.begin());
  };
  std::vector<int> prod(n);
  return from_rule(
      perms.size(),
      [&](ElementId a, ElementId b) {
        for (int x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];
        return index_of(prod);
      },
      std::move(names), spec);
}

// a^i x^j has index 2i + j; a has order 2m, x^2 = a^m, x a x^-1 = a^-1.
FiniteGroup build_dicyclic(const GroupSpec& spec, int order) {
  if (order < 4 || order % 4 != 0) {
    throw Error(ErrorKind::kInvalidSpec,
                spec.to_string() + ": order must be a positive multiple of 4");
  }
  const int m = order / 4;
  std::vector<std::string> names(order);
  for (int i = 0; i < 2 * m; ++i) {
    for (int j = 0; j < 2; ++j) names[2 * i + j] = word_name("a", i, "x", j);
  }
  return from_rule(
      order,
      [m](ElementId a, ElementId b) {
        const int i = a / 2, j = a % 2, k = b / 2, l = b % 2;
        int exp = j == 0 ? i + k : i - k;
        int xs = j + l;
        if (xs == 2) {
          exp += m;
          xs = 0;
        }
        return static_cast<ElementId>(2 * mod(exp, 2 * m) + xs);
      },
      std::move(names), spec);
}

FiniteGroup build_elementary_abelian(const GroupSpec& spec) {
  const int p = spec.params[0], k = spec.params[1];
  if (!is_prime(p) || k < 1) {
    throw Error(ErrorKind::kInvalidSpec,
                spec.to_string() + ": need p prime and k >= 1");
  }
  long long n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  if (n > 1024) {
    throw Error(ErrorKind::kInvalidSpec, spec.to_string() + ": too large");
  }
  std::vector<std::string> names(n);
  for (long long a = 0; a < n; ++a) {
    std::string s = "(";
    long long x = a;
    for (int i = 0; i < k; ++i) {
      if (i > 0) s += ",";
      s += std::to_string(x % p);
      x /= p;
    }
    names[a] = s + ")";
  }
  return from_rule(
      static_cast<std::size_t>(n),
      [p, k](ElementId a, ElementId b) {
        ElementId out = 0, scale = 1;
        for (int i = 0; i < k; ++i) {
          out += scale * ((a % p + b % p) % p);
          a /= p;
          b /= p;
          scale *= p;
        }
        return out;
      },
      std::move(names), spec);
}

FiniteGroup build_product(const GroupSpec& spec) {
  if (spec.factors.size() < 2) {
    throw Error(ErrorKind::kInvalidSpec, "product needs two factors");
  }
  FiniteGroup acc = build_group(spec.factors[0]);
  for (std::size_t f = 1; f < spec.factors.size(); ++f) {
    const FiniteGroup rhs = build_group(spec.factors[f]);
    const std::size_t nb = rhs.order();
    const std::size_t n = acc.order() * nb;
    if (n > 1024) {
      throw Error(ErrorKind::kInvalidSpec, spec.to_string() + ": too large");
    }
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < acc.order(); ++a) {
      for (std::size_t b = 0; b < nb; ++b) {
        names[a * nb + b] = "(" + acc.name(a) + "," + rhs.name(b) + ")";
      }
    }
    const bool last = f + 1 == spec.factors.size();
    acc = from_rule(
        n,
        [&acc, &rhs, nb](ElementId x, ElementId y) {
          return static_cast<ElementId>(
              acc.mul(x / nb, y / nb) * nb + rhs.mul(x % nb, y % nb));
        },
        std::move(names),
        last ? spec : GroupSpec::custom("partial-product"));
  }
  return acc;
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec) {
  using Kind = GroupSpec::Kind;
  auto need = [&](std::size_t count) {
    if (spec.params.size() != count) {
      throw Error(ErrorKind::kInvalidSpec,
                  spec.to_string() + ": wrong parameter count");
    }
  };
  switch (spec.kind) {
    case Kind::kCyclic: need(1); return build_cyclic(spec);
    case Kind::kDihedral: need(1); return build_dihedral(spec);
    case Kind::kMetacyclic: need(3); return build_metacyclic(spec);
    case Kind::kSymmetric: need(1); return build_permutation_group(spec, false);
    case Kind::kAlternating: need(1); return build_permutation_group(spec, true);
    case Kind::kQuaternion:
      if (!spec.params.empty() && spec.params != std::vector<int>{8}) {
        throw Error(ErrorKind::kInvalidSpec, "quaternion group has order 8");
      }
      return build_dicyclic(spec, 8);
    case Kind::kDicyclic: need(1); return build_dicyclic(spec, spec.params[0]);
    case Kind::kElementaryAbelian: need(2); return build_elementary_abelian(spec);
    case Kind::kProduct: return build_product(spec);
    case Kind::kCustom: break;
  }
  throw Error(ErrorKind::kInvalidSpec,
              spec.to_string() + ": custom groups cannot be built from a spec");
}

// ---------------------------------------------------------------------------
// Catalog

bool catalog_complete(std::size_t order) {
  return (order >= 1 && order <= 15) || order == 21;
}

std::vector<GroupSpec> catalog_types(std::size_t order) {
  using G = GroupSpec;
  auto c = [](int n) { return G::cyclic(n); };
  switch (order) {
    case 1: return {c(1)};
    case 2: return {c(2)};
    case 3: return {c(3)};
    case 4: return {c(4), G::elementary_abelian(2, 2)};
    case 5: return {c(5)};
    case 6: return {c(6), G::dihedral(3)};
    case 7: return {c(7)};
    case 8:
      return {c(8), G::product({c(2), c(4)}), G::elementary_abelian(2, 3),
              G::dihedral(4), G::quaternion()};
    case 9: return {c(9), G::elementary_abelian(3, 2)};
    case 10: return {c(10), G::dihedral(5)};
    case 11: return {c(11)};
    case 12:
      return {c(12), G::product({c(2), c(6)}), G::alternating(4),
              G::dihedral(6), G::dicyclic(12)};
    case 13: return {c(13)};
    case 14: return {c(14), G::dihedral(7)};
    case 15: return {c(15)};
    case 21: return {c(21), G::metacyclic(7, 3, 2)};
    default: return {};
  }
}

std::vector<GroupSpec> catalog_up_to(std::size_t max_order) {
  std::vector<GroupSpec> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (auto& spec : catalog_types(n)) out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace hgslab
