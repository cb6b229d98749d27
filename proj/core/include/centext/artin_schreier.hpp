#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "centext/finite_field.hpp"

namespace centext {

/// Sparse polynomial in x over F_q; zero coefficients are never stored.
using FqPolynomial = std::map<std::uint32_t, Fq::Elt>;
/// Sparse polynomial in x, y keyed by (deg_x, deg_y).
using BivariatePolynomial = std::map<std::pair<std::uint32_t, std::uint32_t>, Fq::Elt>;

FqPolynomial poly_add(const Fq& k, const FqPolynomial& a, const FqPolynomial& b);
FqPolynomial poly_sub(const Fq& k, const FqPolynomial& a, const FqPolynomial& b);
FqPolynomial poly_scale(const Fq& k, const FqPolynomial& a, Fq::Elt c);
FqPolynomial poly_mul(const Fq& k, const FqPolynomial& a, const FqPolynomial& b);
/// A(u) = u^p - u
FqPolynomial artin_schreier_map(const Fq& k, const FqPolynomial& u);
BivariatePolynomial artin_schreier_map(const Fq& k, const BivariatePolynomial& u);
BivariatePolynomial poly_add(const Fq& k, const BivariatePolynomial& a, const BivariatePolynomial& b);

/// "(t+1)x^3+x", "0"
std::string format_poly(const Fq& k, const FqPolynomial& f);
std::string format_poly(const Fq& k, const BivariatePolynomial& f);

/// Reduced representative: zero constant term, every exponent prime to p.
struct ASClass {
  FqPolynomial representative;
  friend bool operator==(const ASClass&, const ASClass&) = default;
};

bool is_reduced(const Fq& k, const FqPolynomial& f);

struct ASReduction {
  ASClass reduced;
  FqPolynomial witness;  // f = reduced + A(witness)
};

/// Throws InvalidInput on a nonzero constant term.
ASReduction as_reduce(const Fq& k, const FqPolynomial& f);

enum class BivariateOrder { lex, graded_lex };

struct PrimitivityResult {
  bool primitive = false;
  BivariatePolynomial t;        // sum c_i [(x+y)^i - x^i - y^i]
  BivariatePolynomial residue;  // t = residue + A(witness)
  BivariatePolynomial witness;
};

/// Throws InvalidInput when h is not reduced.
PrimitivityResult is_primitive(const Fq& k, const ASClass& h,
                               BivariateOrder order = BivariateOrder::lex);

/// All primitive classes with at most two terms and degree <= max_degree.
/// Throws CapExceeded when the scan set is larger than max_candidates.
std::vector<ASClass> classify_primitive(const Fq& k, std::uint32_t max_degree,
                                        std::size_t max_candidates = std::size_t(1) << 22);

/// g -> Fr_q(u) - u for a root u of u^p - u = c g, as a value in 0..p-1.
std::vector<std::uint32_t> frobenius_character(const Fq& k, Fq::Elt c);

struct PdiscReport {
  std::size_t characters = 0;   // distinct characters c -> chi_c
  std::size_t hom_order = 0;    // |Hom((F_q,+), F_p)| = q
  bool additive_in_g = true;
  bool additive_in_c = true;
  bool injective = true;
  bool bijective() const { return injective && characters == hom_order; }
  bool ok() const { return additive_in_g && additive_in_c && bijective(); }
};

PdiscReport pdisc_check(const Fq& k);

}  // namespace centext
