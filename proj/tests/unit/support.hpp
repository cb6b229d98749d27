#pragma once

#include "centext/cohomology.hpp"
#include "centext/group.hpp"

namespace support {

using namespace centext;

// g as a central extension of g/Z(g) by its center (or by a given central
// subgroup).
inline CentralExtension extension_over(const Subgroup& z) {
  const auto& g = z.parent();
  auto q = quotient(z);
  auto zs = abelian_structure(z.as_group());
  std::vector<Elem> emb(std::size_t(zs.abelian.order()));
  for (Elem i = 0; i < z.size(); ++i) emb[zs.abelian.index_of(zs.coordinates[i])] = z.members()[i];
  return CentralExtension{g, q.projection, zs.abelian, emb};
}

inline CentralExtension extension_over_center(const GroupPtr& g) { return extension_over(center(g)); }

// (a, b) -> [s(a), s(b)] for the minimal-index section of an extension.
inline std::vector<std::vector<Elem>> commutator_lift(const CentralExtension& e) {
  const auto& g = e.base();
  std::vector<Elem> section(g->order(), 0);
  for (Elem x = e.total->order(); x-- > 0;) section[e.projection(x)] = x;
  std::vector<std::vector<Elem>> lift(g->order(), std::vector<Elem>(g->order()));
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = 0; b < g->order(); ++b) lift[a][b] = e.total->commutator(section[a], section[b]);
  return lift;
}

}  // namespace support
