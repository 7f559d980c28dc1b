#pragma once

// Test-side reference computations. They work on raw Cayley tables and raw
// image vectors and share no algorithm with the library beyond the table
// itself.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "hgslab/group.hpp"
#include "hgslab/perm.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;
using RawPerm = std::vector<int>;
using PermSet = std::set<RawPerm>;

inline Table table_of(const hgslab::FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = static_cast<int>(g.mul(a, b));
  }
  return t;
}

inline int identity(const Table& t) {
  for (int e = 0; e < static_cast<int>(t.size()); ++e) {
    bool ok = true;
    for (int x = 0; x < static_cast<int>(t.size()) && ok; ++x) ok = t[e][x] == x;
    if (ok) return e;
  }
  return -1;
}

inline int inverse(const Table& t, int a) {
  const int e = identity(t);
  for (int b = 0; b < static_cast<int>(t.size()); ++b) {
    if (t[a][b] == e) return b;
  }
  return -1;
}

inline int element_order(const Table& t, int a) {
  const int e = identity(t);
  int k = 1;
  for (int y = a; y != e; y = t[y][a]) ++k;
  return k;
}

inline std::vector<int> profile(const Table& t) {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(t.size()); ++a) out.push_back(element_order(t, a));
  std::sort(out.begin(), out.end());
  return out;
}

inline RawPerm compose(const RawPerm& p, const RawPerm& q) {
  RawPerm out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

inline RawPerm invert(const RawPerm& p) {
  RawPerm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

inline RawPerm left(const Table& t, int g) {
  RawPerm out(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) out[x] = t[g][x];
  return out;
}

// x -> x g^-1
inline RawPerm right(const Table& t, int g) {
  const int gi = inverse(t, g);
  RawPerm out(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) out[x] = t[x][gi];
  return out;
}

inline RawPerm raw(const hgslab::Perm& p) {
  return RawPerm(p.images().begin(), p.images().end());
}

inline PermSet raw_set(const hgslab::PermGroup& g) {
  PermSet out;
  for (const auto& p : g.elements()) out.insert(raw(p));
  return out;
}

inline PermSet conjugate_set(const PermSet& s, const RawPerm& q) {
  const RawPerm qi = invert(q);
  PermSet out;
  for (const auto& p : s) out.insert(compose(compose(q, p), qi));
  return out;
}

inline PermSet rho_conjugate(const Table& t, const PermSet& n, int g) {
  return conjugate_set(n, right(t, g));
}

inline bool normalized_by(const PermSet& n, const RawPerm& q) {
  return conjugate_set(n, q) == n;
}

inline bool is_regular(const PermSet& n, std::size_t degree) {
  if (n.size() != degree) return false;
  std::set<int> images;
  for (const auto& p : n) images.insert(p[0]);
  return images.size() == degree;
}

inline bool lambda_stable(const Table& t, const PermSet& n) {
  for (int g = 0; g < static_cast<int>(t.size()); ++g) {
    if (!normalized_by(n, left(t, g))) return false;
  }
  return true;
}

// Orbit of n under rho-conjugation, by breadth-first search over sets.
inline std::set<PermSet> rho_orbit(const Table& t, const PermSet& n) {
  std::set<PermSet> seen{n};
  std::vector<PermSet> queue{n};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int g = 0; g < static_cast<int>(t.size()); ++g) {
      PermSet next = rho_conjugate(t, queue[head], g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

// Centralizer of n inside Sym(degree) by direct commutation against the
// candidates c determined by c[0].
inline PermSet centralizer_regular(const PermSet& n) {
  const std::size_t deg = n.begin()->size();
  std::map<int, RawPerm> by_zero;
  for (const auto& p : n) by_zero[p[0]] = p;
  PermSet out;
  for (int x = 0; x < static_cast<int>(deg); ++x) {
    RawPerm c(deg);
    for (int a = 0; a < static_cast<int>(deg); ++a) c[a] = by_zero[a][x];
    bool commutes = true;
    for (const auto& p : n) commutes = commutes && compose(c, p) == compose(p, c);
    if (commutes) out.insert(c);
  }
  return out;
}

inline std::set<int> closure(const Table& t, const std::vector<int>& gens) {
  const int e = identity(t);
  std::set<int> s{e};
  std::vector<int> queue{e};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int g : gens) {
      const int v = t[queue[head]][g];
      if (s.insert(v).second) queue.push_back(v);
    }
  }
  return s;
}

// Automorphisms as image vectors, by extending generator images.
inline std::vector<std::vector<int>> automorphisms(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> gens;
  while (closure(t, gens).size() < static_cast<std::size_t>(n)) {
    const auto cur = closure(t, gens);
    int best = -1;
    std::size_t best_size = 0;
    for (int a = 0; a < n; ++a) {
      if (cur.count(a)) continue;
      auto g2 = gens;
      g2.push_back(a);
      const auto sz = closure(t, g2).size();
      if (sz > best_size) best = a, best_size = sz;
    }
    gens.push_back(best);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> images(gens.size());
  auto extend = [&]() -> std::vector<int> {
    const int e = identity(t);
    std::vector<int> f(n, -1);
    f[e] = e;
    std::vector<int> queue{e};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const int v = t[u][gens[k]];
        const int w = t[f[u]][images[k]];
        if (f[v] < 0) {
          f[v] = w;
          queue.push_back(v);
        } else if (f[v] != w) {
          return {};
        }
      }
    }
    std::set<int> img(f.begin(), f.end());
    if (static_cast<int>(img.size()) != n) return {};
    return f;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      auto f = extend();
      if (!f.empty()) out.push_back(std::move(f));
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (element_order(t, y) != element_order(t, gens[k])) continue;
      images[k] = y;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Permutation group closure, abandoned once it exceeds `cap` elements.
inline PermSet perm_closure(const std::vector<RawPerm>& gens, std::size_t cap) {
  RawPerm id(gens.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  PermSet s{id};
  std::vector<RawPerm> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      RawPerm v = compose(queue[head], g);
      if (s.insert(v).second) {
        if (s.size() > cap) return {};
        queue.push_back(std::move(v));
      }
    }
  }
  return s;
}

inline bool semiregular(const PermSet& s) {
  for (const auto& p : s) {
    bool id = true;
    for (std::size_t i = 0; i < p.size(); ++i) id = id && p[i] == static_cast<int>(i);
    if (id) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == static_cast<int>(i)) return false;
    }
  }
  return true;
}

// Regular subgroups of Hol(M) = {x -> m theta(x)}, grown one fixed-point-free
// generator at a time.
inline std::vector<PermSet> regular_subgroups_of_holomorph(const Table& m) {
  const int n = static_cast<int>(m.size());
  const auto auts = automorphisms(m);
  std::set<RawPerm> hol;
  for (int a = 0; a < n; ++a) {
    for (const auto& th : auts) {
      RawPerm p(n);
      for (int x = 0; x < n; ++x) p[x] = m[a][th[x]];
      hol.insert(p);
    }
  }
  std::vector<RawPerm> fpf;
  for (const auto& p : hol) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = p[i] != i;
    if (ok) fpf.push_back(p);
  }
  std::set<PermSet> seen;
  std::vector<PermSet> layer;
  for (const auto& p : fpf) {
    PermSet s = perm_closure({p}, n);
    if (!s.empty() && semiregular(s) && seen.insert(s).second) layer.push_back(s);
  }
  std::vector<PermSet> regular;
  while (!layer.empty()) {
    std::vector<PermSet> next;
    for (const auto& s : layer) {
      if (static_cast<int>(s.size()) == n) {
        regular.push_back(s);
        continue;
      }
      for (const auto& p : fpf) {
        if (s.count(p)) continue;
        std::vector<RawPerm> gens(s.begin(), s.end());
        gens.push_back(p);
        PermSet t = perm_closure(gens, n);
        if (!t.empty() && semiregular(t) && seen.insert(t).second) next.push_back(t);
      }
    }
    layer = std::move(next);
  }
  return regular;
}

inline Table table_of_set(const PermSet& s) {
  const std::vector<RawPerm> elems(s.begin(), s.end());
  std::map<RawPerm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  Table t(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      t[a][b] = index.at(compose(elems[a], elems[b]));
    }
  }
  return t;
}

// Number of Hopf-Galois structures on G of type M,
// |Aut G| / |Aut M| * #{regular subgroups of Hol(M) isomorphic to G},
// with isomorphism decided by order profile (sufficient for |G| <= 12).
inline std::size_t structure_count(const Table& g, const Table& m) {
  const auto target = profile(g);
  std::size_t count = 0;
  for (const auto& s : regular_subgroups_of_holomorph(m)) {
    if (profile(table_of_set(s)) == target) ++count;
  }
  return automorphisms(g).size() * count / automorphisms(m).size();
}

}  // namespace oracle
