#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centext/abelian.hpp"
#include "centext/cohomology.hpp"
#include "centext/group.hpp"

namespace centext {

/// One named verdict; on failure `counterexample` holds the lexicographically
/// first offending tuple of element indices.
struct AxiomVerdict {
  std::string name;
  bool pass = true;
  std::vector<Elem> counterexample;
};

struct CheckReport {
  std::vector<AxiomVerdict> verdicts;

  bool ok() const;
  const AxiomVerdict* first_failure() const;
  const AxiomVerdict& operator[](const std::string& name) const;
  void add(std::string name, std::optional<std::vector<Elem>> counterexample);
  void append(const CheckReport& other);
};

/// delta: H -> G with a right action of G on H, action(h, g) = h^g.
class CrossedModule {
 public:
  /// action[g][h] = h^g. Only the shape is validated here; the axioms are
  /// the business of check_crossed_module.
  CrossedModule(GroupHom delta, std::vector<std::vector<Elem>> action);

  /// N -> G for a normal subgroup, acting by conjugation.
  static CrossedModule normal_inclusion(const Subgroup& n);
  /// delta with the trivial action (a crossed module iff H is abelian and
  /// the image of delta is central).
  static CrossedModule trivial_action(GroupHom delta);
  /// Central extension total -> base, acting by conjugation with lifts.
  static CrossedModule from_extension(const CentralExtension& e);

  const GroupPtr& source() const { return delta_.source(); }  // H
  const GroupPtr& target() const { return delta_.target(); }  // G
  const GroupHom& delta() const { return delta_; }
  Elem act(Elem h, Elem g) const { return action_[std::size_t(g) * source()->order() + h]; }
  std::vector<std::vector<Elem>> action_table() const;

 private:
  GroupHom delta_;
  std::vector<Elem> action_;
};

/// Right action, action by automorphisms, and both Peiffer identities.
CheckReport check_crossed_module(const CrossedModule& xm);

/// {g1, g2} in H for a crossed module H -> G.
class StableBracket {
 public:
  StableBracket(CrossedModule parent, std::vector<std::vector<Elem>> bracket);

  const CrossedModule& parent() const { return parent_; }
  Elem operator()(Elem g1, Elem g2) const { return table_[std::size_t(g1) * parent_.target()->order() + g2]; }
  std::vector<std::vector<Elem>> table() const;

 private:
  CrossedModule parent_;
  std::vector<Elem> table_;
};

/// Axioms axiom_1 .. axiom_8 of a strictly stable crossed module:
///   1 d{g1,g2} = [g1,g2]            5 {g0,g1g2} = {g0,g2}{g0,g1}^g2
///   2 {dh1,dh2} = [h1,h2]           6 {g0g1,g2} = {g0,g2}^g1 {g1,g2}
///   3 {dh,g} = h^-1 h^g             7 {g1,g2}{g2,g1} = 1
///   4 {g,dh} = (h^g)^-1 h           8 {g,g} = 1
CheckReport check_strictly_stable(const StableBracket& sb);

struct StableFromLift {
  CheckReport crossed;
  CheckReport stable;
  std::optional<StableBracket> bracket;  // set only when both reports pass
};

/// Action h^g := h * lift(delta(h), g), bracket := lift. Throws InvalidInput
/// when delta o lift is not the commutator map, lift(1,1) != 1 or ker delta
/// is not central.
StableFromLift stable_from_lift(const GroupHom& delta, const std::vector<std::vector<Elem>>& lift);

/// The preimage of S in an extension of G, as an extension of S. When S is
/// the commutator subgroup, also the commutator lift G x G -> preimage,
/// (g, g') -> [s(g), s(g')] for any section s.
struct RestrictedExtension {
  Subgroup preimage;  // inside the original total group
  CentralExtension full;
  std::optional<std::vector<std::vector<Elem>>> lift;  // indices in full.total
};

RestrictedExtension restriction_of_extension(const CentralExtension& e, const Subgroup& s);

/// [G/H]: objects G, arrows g -> g delta(h).
class QuotientGroupoid {
 public:
  explicit QuotientGroupoid(CrossedModule xm);

  const CrossedModule& presentation() const { return xm_; }
  const GroupPtr& pi0() const { return pi0_.group; }
  const GroupHom& to_pi0() const { return pi0_.projection; }
  const FiniteAbelian& pi1() const { return pi1_; }
  const Subgroup& kernel() const { return kernel_; }

  struct Arrow {
    Elem source;
    Elem label;  // h in H
  };
  Elem target(const Arrow& a) const;
  /// Labels h with g * delta(h) = g2.
  std::vector<Elem> arrows(Elem g, Elem g2) const;
  /// a then b (requires target(a) = b.source).
  Arrow compose(const Arrow& a, const Arrow& b) const;
  /// (g, h) (x) (g', h') = (g g', h^{g'} h')
  Arrow tensor(const Arrow& a, const Arrow& b) const;

 private:
  CrossedModule xm_;
  Quotient pi0_;
  Subgroup kernel_;
  FiniteAbelian pi1_;
};

/// Throws InvalidInput when the crossed-module axioms fail.
QuotientGroupoid quotient_groupoid(const CrossedModule& xm);

/// Factorization of a homomorphism f: Gamma -> G through the quotient
/// functor G -> [G/H]: K = {(x, h) : delta(h) = f(x)} with (x,h)(y,h') =
/// (xy, hh'), K -> Gamma the projection, and the functor [Gamma/K] -> [G/H],
/// x -> f(x), (x, (y,h)) -> (f(x), h).
struct FirstIso {
  std::vector<std::pair<Elem, Elem>> pairs;  // element i of K
  CrossedModule k;                           // K -> Gamma
  GroupHom to_h;                             // K -> H, (x,h) -> h
  CheckReport checks;  // crossed module axioms, functor laws, full faithfulness
};

FirstIso first_iso(const GroupHom& f, const CrossedModule& target, const Limits& limits = {});

}  // namespace centext
