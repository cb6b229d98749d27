#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace centext {

/// F_q with q = p^e. Elements are integers 0..q-1 read as base-p digit
/// vectors, digit i being the coefficient of t^i, where t is a root of the
/// modulus. Prime-field elements are therefore 0..p-1.
class Fq {
 public:
  using Elt = std::uint32_t;

  /// p prime <= 13, 1 <= e <= 4. The modulus is the lexicographically
  /// smallest monic irreducible of degree e, coefficient tuples
  /// (c_0, ..., c_{e-1}) compared from c_0 on. Throws InvalidInput.
  static Fq create(std::uint32_t p, std::uint32_t e);
  /// Same construction without the parameter caps, for q <= max_size.
  static Fq create_unchecked(std::uint32_t p, std::uint32_t e, std::uint32_t max_size = 1u << 20);

  std::uint32_t p() const { return d_->p; }
  std::uint32_t e() const { return d_->e; }
  std::uint32_t q() const { return d_->q; }
  /// Coefficients c_0..c_e (c_e = 1). Empty for the prime field.
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  /// A generator of the multiplicative group (smallest index).
  Elt primitive_element() const { return d_->exp[1 % (d_->q - 1)]; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const { return sub(0, a); }
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;  // throws InvalidInput on 0
  Elt pow(Elt a, std::uint64_t k) const;
  Elt frobenius(Elt a) const { return pow(a, p()); }
  /// The unique b with b^p = a.
  Elt pth_root(Elt a) const { return pow(a, q() / p()); }
  /// Tr_{F_q/F_p}, a value in 0..p-1.
  Elt trace(Elt a) const;
  /// n * 1
  Elt scalar(std::int64_t n) const;

  std::vector<std::uint32_t> digits(Elt a) const;
  Elt from_digits(const std::vector<std::uint32_t>& d) const;

  /// Polynomial in t: "2t^2+t+1", "t", "0". Throws InvalidInput.
  Elt parse(const std::string& text) const;
  std::string format(Elt a) const;

  friend bool operator==(const Fq& a, const Fq& b) { return a.p() == b.p() && a.e() == b.e(); }

 private:
  struct Data {
    std::uint32_t p = 2, e = 1, q = 2;
    std::vector<std::uint32_t> modulus;
    std::vector<Elt> exp;                // exp[i] = g^i, i < q-1
    std::vector<std::uint32_t> log;      // log[a] for a != 0
  };
  explicit Fq(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static Fq build(std::uint32_t p, std::uint32_t e);
  std::shared_ptr<const Data> d_;
};

bool is_prime(std::uint64_t n);

/// Monic polynomial over F_p (coefficients low first) is irreducible, by trial
/// division over all monic divisors of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace centext
