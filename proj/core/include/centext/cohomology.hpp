#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "centext/abelian.hpp"
#include "centext/config.hpp"
#include "centext/group.hpp"

namespace centext {

using Coeff = FiniteAbelian::Element;

/// Normalized 2-cocycle G x G -> A with trivial action.
/// Identity: f(g,h) + f(gh,k) = f(h,k) + f(g,hk); f(1,g) = f(g,1) = 0.
class Cocycle2 {
 public:
  /// Validates shape, coefficient ranges and normalization. The cocycle
  /// identity itself is checked by cocycle_violation().
  Cocycle2(GroupPtr group, FiniteAbelian coefficients, std::vector<Coeff> values);

  static Cocycle2 zero(GroupPtr group, FiniteAbelian coefficients);
  /// f = d(beta): f(g,h) = beta(g) + beta(h) - beta(gh); beta(1) must be 0.
  static Cocycle2 coboundary(GroupPtr group, FiniteAbelian coefficients,
                             const std::vector<Coeff>& beta);

  const GroupPtr& group() const { return group_; }
  const FiniteAbelian& coefficients() const { return coeffs_; }
  const Coeff& operator()(Elem g, Elem h) const { return values_[g * group_->order() + h]; }
  const std::vector<Coeff>& values() const { return values_; }

  /// First triple (lexicographic) violating the cocycle identity.
  std::optional<std::array<Elem, 3>> cocycle_violation() const;
  bool is_cocycle() const { return !cocycle_violation(); }

  Cocycle2 operator+(const Cocycle2& other) const;
  Cocycle2 operator-(const Cocycle2& other) const;
  Cocycle2 scaled(std::int64_t k) const;

  /// Restriction to a subgroup, indexed like s.as_group().
  Cocycle2 restrict_to(const Subgroup& s, const GroupPtr& sub_group) const;
  /// Pullback along a homomorphism into group(): (x, y) -> f(phi x, phi y).
  Cocycle2 pullback(const GroupHom& phi) const;

  friend bool operator==(const Cocycle2& a, const Cocycle2& b) {
    return a.group_->order() == b.group_->order() && a.coeffs_ == b.coeffs_ &&
           a.values_ == b.values_;
  }

 private:
  GroupPtr group_;
  FiniteAbelian coeffs_;
  std::vector<Coeff> values_;
};

/// 1 -> A -> total -> base -> 1 with A central.
struct CentralExtension {
  GroupPtr total;
  GroupHom projection;               // total -> base
  FiniteAbelian kernel;              // A
  std::vector<Elem> kernel_embedding;  // A.index_of(a) -> element of total

  const GroupPtr& base() const { return projection.target(); }
};

struct ExtensionCheck {
  bool surjective = false;
  bool injective_kernel = false;
  bool exact = false;
  bool central = false;
  bool embedding_is_hom = false;
  bool ok() const { return surjective && injective_kernel && exact && central && embedding_is_hom; }
};

ExtensionCheck check_extension(const CentralExtension& e);

namespace detail {
class H2Engine;
class QZEngine;
}  // namespace detail

/// H^2(G, A) with trivial action, given by invariant factors and one
/// representative cocycle per factor.
class CohomologyGroup {
 public:
  const GroupPtr& group() const;
  const FiniteAbelian& coefficients() const;
  const FiniteAbelian& invariants() const { return invariants_; }
  std::int64_t order() const { return invariants_.order(); }
  const std::vector<Cocycle2>& basis() const { return basis_; }

  /// Coordinates of the class of f in the basis (entry i taken mod the i-th
  /// invariant factor). f must be a cocycle: only violations visible on the
  /// reduced (generator) columns raise InvalidInput, so callers holding an
  /// unverified table should test is_cocycle() first.
  std::vector<std::int64_t> class_of(const Cocycle2& f) const;
  bool is_coboundary(const Cocycle2& f) const;
  /// beta with f = d(beta) when f is a coboundary.
  std::optional<std::vector<Coeff>> coboundary_witness(const Cocycle2& f) const;
  std::int64_t class_order(const Cocycle2& f) const;
  /// Canonical cocycle of a class: the lexicographically minimal table under
  /// the solver's column ordering.
  Cocycle2 canonical(const Cocycle2& f) const;
  Cocycle2 cocycle_for(const std::vector<std::int64_t>& coordinates) const;
  std::vector<std::vector<std::int64_t>> all_classes() const;

 private:
  friend CohomologyGroup second_cohomology(const GroupPtr&, const FiniteAbelian&, const Limits&);
  std::shared_ptr<const detail::H2Engine> engine_;
  FiniteAbelian invariants_;
  std::vector<Cocycle2> basis_;
};

CohomologyGroup second_cohomology(const GroupPtr& g, const FiniteAbelian& a,
                                  const Limits& limits = {});

/// Total group A x G, element (a, g) at index g*|A| + A.index_of(a), with
/// (a,g)(b,h) = (a + b + f(g,h), gh).
CentralExtension extension_from_cocycle(const Cocycle2& f, const Limits& limits = {});

/// Section = minimal-index preimage; f(g,h) = s(g)s(h)s(gh)^-1 in the kernel.
Cocycle2 cocycle_from_extension(const CentralExtension& e);

/// Matrix of H^2(G,A) -> H^2(S,A) in the two bases; row i holds the
/// coordinates of the restricted i-th basis class.
struct RestrictionMatrix {
  CohomologyGroup source;
  CohomologyGroup target;
  std::vector<std::vector<std::int64_t>> rows;
  /// Invariant factors of the image subgroup.
  FiniteAbelian image() const;
};

RestrictionMatrix restriction_map(const CohomologyGroup& h2, const Subgroup& s,
                                  const Limits& limits = {});

/// H^2(G, Q/Z) realized as H^2(G, Z/N) / delta Hom(G, Z/N) for a modulus N
/// that is a multiple of |G| (default N = |G|). Cocycles carry coefficients
/// Z/N with a read as a/N in Q/Z.
class QZCohomology {
 public:
  const GroupPtr& group() const;
  std::int64_t modulus() const;
  const FiniteAbelian& invariants() const { return invariants_; }
  const std::vector<Cocycle2>& basis() const { return basis_; }

  /// Coordinates of a Z/N-valued cocycle viewed in Q/Z.
  std::vector<std::int64_t> class_of(const Cocycle2& f) const;

 private:
  friend QZCohomology qz_cohomology(const GroupPtr&, const Limits&, std::optional<std::int64_t>);
  std::shared_ptr<const detail::QZEngine> engine_;
  FiniteAbelian invariants_;
  std::vector<Cocycle2> basis_;
};

QZCohomology qz_cohomology(const GroupPtr& g, const Limits& limits = {},
                           std::optional<std::int64_t> modulus = std::nullopt);

/// H_2(G, Z), read off as the dual of H^2(G, Q/Z).
FiniteAbelian schur_multiplier(const GroupPtr& g, const Limits& limits = {});

struct DualityReport {
  std::int64_t h2_order = 0;
  std::int64_t hom_order = 0;
  FiniteAbelian multiplier;
  bool holds() const { return h2_order == hom_order; }
};

/// For perfect G: |H^2(G,A)| = |Hom(H_2(G), A)|. Throws PreconditionFailed
/// when G is not perfect.
DualityReport perfect_duality_check(const GroupPtr& g, const FiniteAbelian& a,
                                    const Limits& limits = {});

}  // namespace centext
