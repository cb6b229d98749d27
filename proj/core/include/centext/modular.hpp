#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace centext::modular {

using Word = std::uint32_t;
using Vec = std::vector<Word>;
using Mat = std::vector<Vec>;

/// Arithmetic in the chain ring Z/p^k (q = p^k < 2^31).
class PrimePowerRing {
 public:
  PrimePowerRing() : PrimePowerRing(2, 1) {}
  PrimePowerRing(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// p^e for 0 <= e <= k
  std::uint32_t pow_p(std::uint32_t e) const { return powers_[e]; }

  Word reduce(std::int64_t a) const {
    auto r = a % std::int64_t(q_);
    return Word(r < 0 ? r + q_ : r);
  }
  Word add(Word a, Word b) const { return Word((std::uint64_t(a) + b) % q_); }
  Word sub(Word a, Word b) const { return Word((std::uint64_t(a) + q_ - b) % q_); }
  Word mul(Word a, Word b) const { return Word((std::uint64_t(a) * b) % q_); }
  Word neg(Word a) const { return a == 0 ? 0 : q_ - a; }

  /// p-adic valuation, k for zero.
  std::uint32_t valuation(Word a) const;
  /// Inverse of a unit.
  Word unit_inverse(Word u) const;
  /// For a with valuation v: the unit u with a = p^v * u (mod q).
  Word unit_part(Word a) const;

  /// dst -= t * src on [from, size)
  void axpy_sub(Vec& dst, const Vec& src, Word t, std::size_t from = 0) const;
  void scale(Vec& v, Word t) const;

 private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> powers_;
};

/// Incremental echelon form of a row module: rows are reduced on arrival so
/// that at most one stored row leads at each column. Preserves the module.
class RowModule {
 public:
  RowModule(const PrimePowerRing& ring, std::size_t cols);
  void add(Vec row);
  Mat rows() const;
  std::size_t cols() const { return cols_; }

 private:
  PrimePowerRing ring_;
  std::size_t cols_;
  Mat rows_;
  std::vector<long> pivot_of_col_;
};

/// Smith form over Z/p^k tracking only the column transform:
/// U * M * V = diag(p^{v_0}, ..., p^{v_{rank-1}}, 0, ...), v ascending.
struct ColumnSNF {
  std::size_t cols = 0;
  std::vector<std::uint32_t> valuations;  // one per pivot (rank entries)
  Mat v;                                   // cols x cols
  Mat v_inverse;                           // cols x cols
};

ColumnSNF column_snf(Mat rows, std::size_t cols, const PrimePowerRing& ring);

/// (Z/p^{a_0} + ... + Z/p^{a_{m-1}}) / span(relations), decomposed as
/// Z/p^{c_0} + ... with c ascending and all c_j >= 1.
class ModuleQuotient {
 public:
  ModuleQuotient() = default;
  ModuleQuotient(const PrimePowerRing& ring, std::vector<std::uint32_t> ambient_exponents,
                 const Mat& relations);

  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::size_t rank() const { return exps_.size(); }
  /// Coordinates of an ambient vector x (each entry reduced mod p^{c_j}).
  std::vector<std::uint32_t> coordinates(const Vec& x) const;
  /// An ambient vector whose class is the j-th generator.
  Vec generator(std::size_t j) const;

 private:
  PrimePowerRing ring_;
  std::vector<std::uint32_t> exps_;
  std::vector<std::size_t> columns_;  // columns of the transform kept
  std::vector<std::uint32_t> ambient_;
  Mat q_, q_inverse_;
};

/// Howell form of a row module over Z/p^k, optionally tracking how every row
/// is expressed in the original generators. Reduction against it yields a
/// canonical (lexicographically minimal) representative of a coset.
class HowellForm {
 public:
  HowellForm(const PrimePowerRing& ring, const Mat& generators, std::size_t cols,
             bool track = false);

  struct Reduction {
    Vec residue;
    Vec combination;  // only when tracking: vector = residue + sum c_i gen_i
  };
  Reduction reduce(Vec v) const;
  bool contains(const Vec& v) const;

 private:
  PrimePowerRing ring_;
  std::size_t cols_;
  std::size_t gens_;
  bool track_;
  Mat rows_;  // each row: cols_ entries, then gens_ tracking entries
  std::vector<std::size_t> pivot_col_;
  std::vector<std::uint32_t> pivot_val_;
};

}  // namespace centext::modular
