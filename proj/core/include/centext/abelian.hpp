#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "centext/group.hpp"

namespace centext {

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k,
/// every d_i >= 2. The empty list is the trivial group. Elements are residue
/// tuples; as a FiniteGroup they are numbered row-major (last factor fastest).
class FiniteAbelian {
 public:
  FiniteAbelian() = default;
  /// Requires the divisibility chain; throws InvalidInput otherwise.
  explicit FiniteAbelian(std::vector<std::int64_t> invariant_factors);

  /// Normalizes an arbitrary list of cyclic orders (1s allowed) via Smith form.
  static FiniteAbelian from_cyclic_orders(const std::vector<std::int64_t>& orders);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const;
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_trivial() const { return factors_.empty(); }

  using Element = std::vector<std::int64_t>;
  Element zero() const { return Element(factors_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element normalize(Element a) const;
  std::int64_t element_order(const Element& a) const;

  std::size_t index_of(const Element& a) const;
  Element element_at(std::size_t index) const;
  std::vector<Element> elements() const;

  GroupPtr to_group(const Limits& limits = {}) const;

  std::string to_string() const;

  friend bool operator==(const FiniteAbelian&, const FiniteAbelian&) = default;

 private:
  std::vector<std::int64_t> factors_;
};

/// |Hom(a, b)| = prod gcd(d_i, e_j).
std::int64_t hom_count(const FiniteAbelian& a, const FiniteAbelian& b);

/// |Ext(a, b)| for finite abelian groups; equals hom_count.
std::int64_t ext_count(const FiniteAbelian& a, const FiniteAbelian& b);

/// Whether a is isomorphic to a subgroup of b.
bool embeds_in(const FiniteAbelian& a, const FiniteAbelian& b);

/// Invariant factors of the abelian group generated by `generators` inside
/// Z/m_1 + ... + Z/m_k (coordinates taken modulo the given moduli).
FiniteAbelian generated_abelian_subgroup(
    const std::vector<std::int64_t>& moduli,
    const std::vector<std::vector<std::int64_t>>& generators);

/// The same subgroup together with elements b_j of order d_j (one per
/// invariant factor) that decompose it as the direct sum of the <b_j>.
struct SubgroupBasis {
  FiniteAbelian structure;
  std::vector<std::vector<std::int64_t>> basis;
};

SubgroupBasis subgroup_basis(const std::vector<std::int64_t>& moduli,
                             const std::vector<std::vector<std::int64_t>>& generators);

/// Structure of an abelian FiniteGroup together with coordinates of every
/// element in the invariant-factor decomposition.
struct AbelianStructure {
  FiniteAbelian abelian;
  std::vector<FiniteAbelian::Element> coordinates;  // per element of the group
};

AbelianStructure abelian_structure(const GroupPtr& abelian_group);

struct Abelianization {
  FiniteAbelian abelian;
  GroupHom projection;  // G -> abelian.to_group()
  std::vector<FiniteAbelian::Element> coordinates;  // per element of G
};

Abelianization abelianization(const GroupPtr& g);

}  // namespace centext
