#pragma once
// Frobenius characters by direct root solving in F_{q^p}.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "centext/finite_field.hpp"

namespace oracle {

using centext::Fq;

// Embedding F_q -> L (L an extension of degree divisible by e): send t to
// the smallest root in L of the modulus of F_q.
inline std::vector<Fq::Elt> embed(const Fq& k, const Fq& big) {
  std::vector<Fq::Elt> img(k.q());
  Fq::Elt root = 0;
  if (k.e() > 1) {
    const auto& mod = k.modulus();
    bool found = false;
    for (Fq::Elt x = 0; x < big.q() && !found; ++x) {
      Fq::Elt v = 0, xp = 1;
      for (auto c : mod) {
        v = big.add(v, big.mul(big.scalar(c), xp));
        xp = big.mul(xp, x);
      }
      if (v == 0) {
        root = x;
        found = true;
      }
    }
    if (!found) throw std::logic_error("modulus has no root in the extension");
  }
  for (Fq::Elt a = 0; a < k.q(); ++a) {
    auto d = k.digits(a);
    Fq::Elt v = 0, rp = 1;
    for (auto c : d) {
      v = big.add(v, big.mul(big.scalar(c), rp));
      rp = big.mul(rp, root);
    }
    img[a] = v;
  }
  return img;
}

// chi_c(g) = Fr_q(u) - u for a root u of u^p - u = c g in F_{q^p}.
inline std::vector<std::uint32_t> frobenius_character(const Fq& k, Fq::Elt c) {
  const Fq big = Fq::create_unchecked(k.p(), k.e() * k.p());
  const auto img = embed(k, big);
  std::vector<std::uint32_t> out(k.q());
  for (Fq::Elt g = 0; g < k.q(); ++g) {
    const Fq::Elt target = img[k.mul(c, g)];
    bool found = false;
    for (Fq::Elt u = 0; u < big.q() && !found; ++u) {
      if (big.sub(big.frobenius(u), u) != target) continue;
      const Fq::Elt diff = big.sub(big.pow(u, k.q()), u);
      if (diff >= k.p()) throw std::logic_error("Frobenius difference outside the prime field");
      out[g] = diff;
      found = true;
    }
    if (!found) throw std::logic_error("no Artin-Schreier root in the degree-p extension");
  }
  return out;
}

}  // namespace oracle
