#pragma once

// Internal solver for H^2(G, Z/p^k) on the generator-reduced cochain model.
//
// A normalized cocycle is determined by its values f(g, x) for g != 1 and x
// in a fixed generating set X: along a breadth-first spanning tree of the
// Cayley graph, f(g, h'x) = f(g, h') + f(gh', x) - f(h', x). Those values
// extend to a cocycle iff the same recursion is consistent on every
// non-tree edge, which gives (|G|-1) * (#non-tree edges) linear equations
// in (|G|-1) * |X| unknowns.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "centext/abelian.hpp"
#include "centext/cohomology.hpp"
#include "centext/group.hpp"
#include "centext/modular.hpp"

namespace centext::detail {

using modular::Mat;
using modular::Vec;
using modular::Word;

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::int64_t n);
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
/// x = r_i mod m_i, moduli pairwise coprime.
std::int64_t crt(const std::vector<std::int64_t>& residues, const std::vector<std::int64_t>& moduli);

class PrimePowerSolver {
 public:
  PrimePowerSolver(GroupPtr g, std::uint32_t p, std::uint32_t k);

  const GroupPtr& group() const { return group_; }
  const modular::PrimePowerRing& ring() const { return ring_; }
  std::size_t unknowns() const { return unknowns_; }
  /// H^2(G, Z/q) = Z/p^{c_0} + ... with c ascending.
  const std::vector<std::uint32_t>& exponents() const { return quotient_.exponents(); }

  Vec restrict_table(const std::function<Word(Elem, Elem)>& f) const;
  /// Full n*n table (row-major) from an unknown vector.
  std::vector<Word> expand(const Vec& v) const;
  /// nullopt when v violates the cocycle equations.
  std::optional<std::vector<std::uint32_t>> coordinates(const Vec& v) const;
  Vec generator(std::size_t j) const;
  Vec canonical(const Vec& v) const;
  /// beta (indexed by element, beta[0] = 0) with v = d(beta), if any.
  std::optional<std::vector<Word>> witness(const Vec& v) const;
  Vec coboundary_of(const std::vector<Word>& beta) const;

 private:
  std::size_t index(Elem g, std::size_t j) const { return (std::size_t(g) - 1) * gens_.size() + j; }
  Vec lift_ambient(const Vec& z) const;

  GroupPtr group_;
  modular::PrimePowerRing ring_;
  std::vector<Elem> gens_;
  std::vector<std::pair<Elem, std::size_t>> tree_;  // child -> (parent, generator)
  std::vector<Elem> bfs_order_;
  std::size_t unknowns_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::uint32_t> pivot_vals_;
  std::vector<std::uint32_t> ambient_;
  Mat v_, v_inverse_;
  modular::ModuleQuotient quotient_;
  std::unique_ptr<modular::HowellForm> coboundaries_;
};

/// Groups primary cyclic pieces Z/p^e into invariant factors.
class PrimaryAssembly {
 public:
  PrimaryAssembly() = default;
  explicit PrimaryAssembly(std::vector<std::pair<std::uint32_t, std::uint32_t>> pieces);

  const FiniteAbelian& group() const { return group_; }
  std::size_t factor_of(std::size_t piece) const { return factor_[piece]; }
  std::int64_t modulus(std::size_t piece) const { return modulus_[piece]; }
  std::vector<std::int64_t> assemble(const std::vector<std::int64_t>& piece_coords) const;
  std::vector<std::int64_t> split(const std::vector<std::int64_t>& coords) const;

 private:
  FiniteAbelian group_;
  std::vector<std::size_t> factor_;
  std::vector<std::int64_t> modulus_;
};

class H2Engine {
 public:
  H2Engine(GroupPtr g, FiniteAbelian a);

  const GroupPtr& group() const { return group_; }
  const FiniteAbelian& coefficients() const { return coeffs_; }
  const FiniteAbelian& invariants() const { return assembly_.group(); }

  std::vector<std::int64_t> class_of(const Cocycle2& f) const;
  std::optional<std::vector<Coeff>> witness(const Cocycle2& f) const;
  Cocycle2 canonical(const Cocycle2& f) const;
  std::vector<Cocycle2> basis() const;

 private:
  struct Component {
    std::size_t factor;
    std::int64_t q;
    std::int64_t idempotent;  // 1 mod q, 0 mod d/q
    std::shared_ptr<const PrimePowerSolver> solver;
  };
  Vec component_vector(const Cocycle2& f, const Component& c, bool validate) const;
  void embed(std::vector<Coeff>& table, const Component& c, const Vec& v) const;

  GroupPtr group_;
  FiniteAbelian coeffs_;
  std::vector<Component> components_;
  std::vector<std::pair<std::size_t, std::size_t>> pieces_;  // (component, j)
  PrimaryAssembly assembly_;
};

class QZEngine {
 public:
  QZEngine(GroupPtr g, std::int64_t modulus);

  const GroupPtr& group() const { return group_; }
  std::int64_t modulus() const { return modulus_; }
  const FiniteAbelian& invariants() const { return assembly_.group(); }
  std::vector<std::int64_t> class_of(const Cocycle2& f) const;
  std::vector<Cocycle2> basis() const;

 private:
  struct Prime {
    std::int64_t q;
    std::int64_t cofactor_inverse;  // (N/q)^-1 mod q
    std::shared_ptr<const PrimePowerSolver> solver;
    modular::ModuleQuotient quotient;
  };
  GroupPtr group_;
  std::int64_t modulus_;
  FiniteAbelian coeffs_;
  std::vector<Prime> primes_;
  std::vector<std::pair<std::size_t, std::size_t>> pieces_;  // (prime, l)
  PrimaryAssembly assembly_;
};

}  // namespace centext::detail
