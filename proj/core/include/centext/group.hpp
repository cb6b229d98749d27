#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centext/config.hpp"

namespace centext {

using Elem = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group stored as a dense Cayley table over indices 0..n-1.
/// The identity is always index 0. Values are immutable once built.
class FiniteGroup {
 public:
  /// Validates closure, identity at 0, inverses and associativity
  /// (exhaustive up to order 256, 10^4 seeded random triples above).
  static GroupPtr from_table(std::vector<std::vector<Elem>> table,
                             std::vector<std::string> labels = {},
                             const Limits& limits = {});

  std::size_t order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// [a,b] = a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  /// h^g = g^-1 h g
  Elem conj(Elem h, Elem g) const { return mul(mul(inv(g), h), g); }
  Elem power(Elem a, std::int64_t k) const;

  std::span<const Elem> row(Elem a) const {
    return {table_.data() + std::size_t(a) * n_, n_};
  }
  std::vector<std::vector<Elem>> table() const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;

  std::size_t element_order(Elem a) const { return orders_[a]; }
  bool is_abelian() const { return abelian_; }

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<std::string> labels_;
  bool abelian_ = false;
};

/// A subgroup given by its sorted member list. members()[0] is always 0.
class Subgroup {
 public:
  /// Checks identity, closure and inverses.
  Subgroup(GroupPtr parent, std::vector<Elem> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem g) const { return mask_[g]; }
  /// Position of g inside members(); only valid when contains(g).
  Elem index_of(Elem g) const { return position_[g]; }

  bool is_normal() const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }

  /// The subgroup as a group in its own right (member i becomes element i).
  GroupPtr as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
  std::vector<Elem> position_;
};

/// Homomorphism between two finite groups, stored as an image table.
class GroupHom {
 public:
  /// Validates image[0] = 0 and the homomorphism identity on all pairs.
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> image);

  static GroupHom identity(const GroupPtr& g);
  /// Inclusion of a subgroup's own group (Subgroup::as_group) into its parent.
  static GroupHom inclusion(const Subgroup& s, const GroupPtr& sub_group);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<Elem>& images() const { return image_; }
  Elem operator()(Elem g) const { return image_[g]; }

  Subgroup kernel() const;
  Subgroup image() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// (other ∘ this): source -> other.target
  GroupHom then(const GroupHom& other) const;

 private:
  struct Unchecked {};
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> image, Unchecked);
  friend GroupHom make_hom_unchecked(GroupPtr, GroupPtr, std::vector<Elem>);

  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> image_;
};

/// Skips the O(n^2) homomorphism check. For internal constructions whose
/// correctness is established by construction.
GroupHom make_hom_unchecked(GroupPtr source, GroupPtr target,
                            std::vector<Elem> image);

// ---------------------------------------------------------------------------
// Construction
//
// Catalog element orderings (all with identity at index 0):
//   cyclic n        : i = x^i
//   dihedral n      : order 2n, r^i s^j at index i + n*j, s r s = r^-1
//   symmetric n     : permutations of 0..n-1 in lexicographic image order
//   alternating n   : even permutations, lexicographic
//   quaternion8     : 1, -1, i, -i, j, -j, k, -k
//   heisenberg p    : (a,b,c) at a + p*b + p^2*c, (a,b,c)(a',b',c') =
//                     (a+a', b+b', c+c'+a*b')
//   sl2 p           : [[a,b],[c,d]] with det 1 over Z/p, identity first,
//                     the rest lexicographic in (a,b,c,d)
//   direct product  : (g,h) at g*|H| + h
// Permutation products compose left to right: (g*h)(x) = h(g(x)).
// ---------------------------------------------------------------------------

GroupPtr trivial_group();
GroupPtr cyclic(std::size_t n);
GroupPtr dihedral(std::size_t n);
GroupPtr symmetric(std::size_t n);
GroupPtr alternating(std::size_t n);
GroupPtr quaternion8();
GroupPtr klein_four();
GroupPtr heisenberg(std::size_t p);
GroupPtr sl2(std::size_t p);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                        const Limits& limits = {});

using Permutation = std::vector<std::uint32_t>;

/// Parses disjoint-cycle notation over 0-based points, e.g. "(0 1)(2 3)".
/// "()" is the identity.
Permutation parse_permutation(const std::string& text, std::size_t points);
std::string format_permutation(const Permutation& p);

/// Closure of permutation generators. Elements are numbered breadth-first
/// over generator words (right multiplication, generator index order).
GroupPtr from_permutations(const std::vector<Permutation>& generators,
                           std::size_t points, const Limits& limits = {});

/// Catalog lookup: "cyclic", "dihedral", "symmetric", "alternating",
/// "quaternion8", "klein4", "heisenberg", "sl2", "trivial".
GroupPtr catalog(const std::string& name, const std::vector<std::size_t>& params,
                 const Limits& limits = {});

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

Subgroup generated_subgroup(const GroupPtr& g, std::span<const Elem> generators);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup commutator_subgroup(const GroupPtr& g);
Subgroup center(const GroupPtr& g);

/// Deterministic small generating set: greedily adds the lowest-index element
/// that enlarges the generated subgroup the most.
std::vector<Elem> generating_set(const GroupPtr& g);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
  std::vector<Elem> representatives;  // minimal element index per coset
};

/// G/N; cosets are numbered by increasing minimal representative.
Quotient quotient(const Subgroup& normal);

std::size_t commutator_width(const GroupPtr& g);
bool is_perfect(const GroupPtr& g);

/// Multiset of element orders, sorted.
std::vector<std::size_t> order_statistics(const GroupPtr& g);

struct HomSearchOptions {
  bool injective = false;
  bool surjective = false;
  Deadline deadline{};
};

/// Backtracking search over images of generating_set(source). `candidates`
/// lists allowed images for each generator. The first homomorphism found in
/// candidate order is returned.
std::optional<GroupHom> find_homomorphism(
    const GroupPtr& source, const GroupPtr& target,
    const std::function<std::vector<Elem>(Elem)>& candidates,
    const HomSearchOptions& options = {});

/// An isomorphism if one exists. Throws CapExceeded above the isomorphism cap.
std::optional<GroupHom> find_isomorphism(const GroupPtr& a, const GroupPtr& b,
                                         const Limits& limits = {});

}  // namespace centext
