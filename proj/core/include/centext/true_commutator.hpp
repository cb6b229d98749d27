#pragma once

#include <optional>
#include <string>
#include <vector>

#include "centext/abelian.hpp"
#include "centext/cohomology.hpp"
#include "centext/config.hpp"
#include "centext/crossed_module.hpp"
#include "centext/group.hpp"

namespace centext {

struct TrueCommutatorOptions {
  Limits limits{};
  Deadline deadline{};
  /// verify_p3 enumerates coefficient groups B with |B| <= |H_2(G)| * slack.
  std::size_t b_slack = 4;
  /// Upper bound on the number of H^2(G, B) classes tried per B.
  std::size_t max_classes = 4096;
};

/// Image of restriction H^2(G, Q/Z) -> H^2(D, Q/Z), D = [G,G], computed with
/// the common modulus |G|. A^un is its Pontryagin dual.
struct AunResult {
  Subgroup derived;
  GroupPtr derived_group;  // derived.as_group()
  QZCohomology qz_group;
  QZCohomology qz_derived;
  /// Row i: coordinates in qz_derived of the restricted i-th basis class.
  std::vector<std::vector<std::int64_t>> restriction_rows;
  FiniteAbelian aun;
  /// chi_j (coordinates in qz_derived) of order aun.invariant_factors()[j];
  /// the image is the direct sum of the <chi_j>.
  std::vector<std::vector<std::int64_t>> image_basis;
};

AunResult aun(const GroupPtr& g, const TrueCommutatorOptions& options = {});

struct TrueCommutatorResult {
  AunResult witness;
  /// Q/Z-valued representatives (over Z/|G|) of the chi_j on [G,G].
  std::vector<Cocycle2> witness_classes;
  /// Central extension of [G,G] by A^un. Present when [G,G] is perfect, and
  /// also when A^un is trivial (then it is [G,G] itself).
  std::optional<CentralExtension> cover;
  bool requires_splitting_choice = false;

  const Subgroup& base() const { return witness.derived; }
  const FiniteAbelian& aun() const { return witness.aun; }
};

TrueCommutatorResult true_commutator(const GroupPtr& g, const TrueCommutatorOptions& options = {});

/// Pull every basis class of H^2(G, A) back to the cover (restrict to
/// [G,G], then along the projection) and certify it is a coboundary. One
/// verdict per coefficient group; the counterexample is the basis index.
CheckReport verify_p1(const GroupPtr& g, const TrueCommutatorResult& t,
                      const std::vector<FiniteAbelian>& coefficients,
                      const TrueCommutatorOptions& options = {});

struct P3Result {
  bool found = false;
  std::string stage;  // "trivial", "cover", "search" or "exhausted"
  std::size_t candidates = 0;
  std::optional<CentralExtension> extension;  // E -> G by B
  /// G x G -> cover.total with delta(lift(a, b)) = [a, b].
  std::vector<std::vector<Elem>> lift;
  std::optional<GroupHom> delta;  // cover.total -> G
  std::optional<StableFromLift> stable;
};

/// Requires a cover. Throws DeadlineExceeded when the deadline passes.
P3Result verify_p3(const GroupPtr& g, const TrueCommutatorResult& t,
                   const TrueCommutatorOptions& options = {});

struct StackyAbelianization {
  TrueCommutatorResult true_commutator;
  QuotientGroupoid groupoid;
  StableBracket bracket;
  CheckReport checks;  // pi0 = G^ab, pi1 = A^un, bracket axioms
};

/// Throws PreconditionFailed when there is no cover or no lift was found.
StackyAbelianization stacky_abelianization(const GroupPtr& g, const TrueCommutatorOptions& options = {});

struct UniversalFactorization {
  FirstIso first;
  /// Morphism of crossed modules (cover -> G) => (K -> G) over G.
  std::optional<GroupHom> phi;
  CheckReport checks;
};

/// f: G -> base of a crossed module carrying a valid stable bracket.
UniversalFactorization universal_factorization(const GroupHom& f, const StableBracket& target,
                                               const StackyAbelianization& stacky,
                                               const TrueCommutatorOptions& options = {});

}  // namespace centext
