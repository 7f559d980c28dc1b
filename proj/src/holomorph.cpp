#include "hgslab/holomorph.hpp"

#include <map>

#include "hgslab/error.hpp"

namespace hgslab {

Holomorph holomorph(const FiniteGroup& m) {
  Holomorph hol;
  hol.base = m;
  hol.automorphisms = automorphisms(m);
  const std::size_t n = m.order();
  const std::size_t a = hol.automorphisms.size();
  const std::size_t order = n * a;
  if (order > 4096) {
    throw Error(ErrorKind::kOrderTooLarge,
                "holomorph of " + m.spec().to_string() + " has order " +
                    std::to_string(order));
  }

  std::map<std::vector<ElementId>, std::size_t> aut_index;
  for (std::size_t k = 0; k < a; ++k) {
    aut_index[hol.automorphisms[k].images] = k;
  }
  std::vector<std::size_t> aut_mul(a * a);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      aut_mul[i * a + j] = aut_index.at(
          compose(hol.automorphisms[i], hol.automorphisms[j]).images);
    }
  }

  // (m1, t1)(m2, t2) = (m1 t1(m2), t1 t2)
  std::vector<ElementId> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const ElementId m1 = static_cast<ElementId>(x / a);
    const std::size_t t1 = x % a;
    for (std::size_t y = 0; y < order; ++y) {
      const ElementId m2 = static_cast<ElementId>(y / a);
      const std::size_t t2 = y % a;
      const ElementId mm = m.mul(m1, hol.automorphisms[t1](m2));
      table[x * order + y] =
          static_cast<ElementId>(mm * a + aut_mul[t1 * a + t2]);
    }
  }

  std::vector<std::string> names(order);
  hol.perms.reserve(order);
  for (std::size_t x = 0; x < order; ++x) {
    const ElementId mx = static_cast<ElementId>(x / a);
    const GroupHom& theta = hol.automorphisms[x % a];
    std::vector<Point> img(n);
    for (ElementId p = 0; p < n; ++p) img[p] = m.mul(mx, theta(p));
    hol.perms.push_back(Perm::from_images_unchecked(std::move(img)));
    names[x] = "(" + m.name(mx) + ",aut" + std::to_string(x % a) + ")";
  }
  hol.group = FiniteGroup::from_table(
      order, std::move(table), std::move(names),
      GroupSpec::custom("Hol(" + m.spec().to_string() + ")"),
      FiniteGroup::Validation::kSkipAssociativity);
  return hol;
}

bool factor_in_holomorph(const FiniteGroup& m, const Perm& p,
                         ElementId* translation, GroupHom* automorphism) {
  const std::size_t n = m.order();
  if (p.size() != n) return false;
  const ElementId t = p[0];
  // theta = lambda(t)^-1 p
  const ElementId ti = m.inv(t);
  GroupHom theta{m, m, std::vector<ElementId>(n)};
  for (ElementId x = 0; x < n; ++x) theta.images[x] = m.mul(ti, p[x]);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (theta(m.mul(x, y)) != m.mul(theta(x), theta(y))) return false;
    }
  }
  if (translation) *translation = t;
  if (automorphism) *automorphism = std::move(theta);
  return true;
}

}  // namespace hgslab
