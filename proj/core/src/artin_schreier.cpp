#include "centext/artin_schreier.hpp"

#include <algorithm>
#include <set>

#include "centext/error.hpp"

namespace centext {

namespace {

template <class Map>
void put(const Fq& k, Map& m, const typename Map::key_type& key, Fq::Elt c) {
  if (c == 0) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
    return;
  }
  it->second = k.add(it->second, c);
  if (it->second == 0) m.erase(it);
}

// binomial(i, j) mod p by Lucas
std::uint32_t binom_mod(std::uint32_t i, std::uint32_t j, std::uint32_t p) {
  std::uint64_t r = 1;
  while (i || j) {
    const std::uint32_t a = i % p, b = j % p;
    if (b > a) return 0;
    std::uint64_t c = 1;
    for (std::uint32_t t = 0; t < b; ++t) c = c * (a - t) / (t + 1);
    r = r * (c % p) % p;
    i /= p;
    j /= p;
  }
  return std::uint32_t(r);
}

std::string coeff_str(const Fq& k, Fq::Elt c, bool bare) {
  if (c == 1 && !bare) return "";
  std::string s = k.format(c);
  if (!bare && s.find('+') != std::string::npos) return "(" + s + ")";
  if (!bare && s.find('t') != std::string::npos) return "(" + s + ")";
  return s;
}

std::string power_str(char v, std::uint32_t e) {
  if (e == 0) return "";
  std::string s(1, v);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

FqPolynomial poly_add(const Fq& k, const FqPolynomial& a, const FqPolynomial& b) {
  FqPolynomial r = a;
  for (const auto& [e, c] : b) put(k, r, e, c);
  return r;
}

FqPolynomial poly_sub(const Fq& k, const FqPolynomial& a, const FqPolynomial& b) {
  FqPolynomial r = a;
  for (const auto& [e, c] : b) put(k, r, e, k.neg(c));
  return r;
}

FqPolynomial poly_scale(const Fq& k, const FqPolynomial& a, Fq::Elt c) {
  FqPolynomial r;
  if (c == 0) return r;
  for (const auto& [e, v] : a) r.emplace(e, k.mul(v, c));
  return r;
}

FqPolynomial poly_mul(const Fq& k, const FqPolynomial& a, const FqPolynomial& b) {
  FqPolynomial r;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) put(k, r, e1 + e2, k.mul(c1, c2));
  return r;
}

FqPolynomial artin_schreier_map(const Fq& k, const FqPolynomial& u) {
  FqPolynomial r;
  for (const auto& [e, c] : u) put(k, r, e * k.p(), k.frobenius(c));
  for (const auto& [e, c] : u) put(k, r, e, k.neg(c));
  return r;
}

BivariatePolynomial artin_schreier_map(const Fq& k, const BivariatePolynomial& u) {
  BivariatePolynomial r;
  for (const auto& [e, c] : u) put(k, r, {e.first * k.p(), e.second * k.p()}, k.frobenius(c));
  for (const auto& [e, c] : u) put(k, r, e, k.neg(c));
  return r;
}

BivariatePolynomial poly_add(const Fq& k, const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r = a;
  for (const auto& [e, c] : b) put(k, r, e, c);
  return r;
}

std::string format_poly(const Fq& k, const FqPolynomial& f) {
  if (f.empty()) return "0";
  std::string out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (!out.empty()) out += "+";
    out += coeff_str(k, it->second, it->first == 0) + power_str('x', it->first);
  }
  return out;
}

std::string format_poly(const Fq& k, const BivariatePolynomial& f) {
  if (f.empty()) return "0";
  std::string out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (!out.empty()) out += "+";
    const auto [ex, ey] = it->first;
    out += coeff_str(k, it->second, ex == 0 && ey == 0) + power_str('x', ex) + power_str('y', ey);
  }
  return out;
}

bool is_reduced(const Fq& k, const FqPolynomial& f) {
  for (const auto& [e, c] : f)
    if (e % k.p() == 0) return false;  // includes the constant term
  return true;
}

ASReduction as_reduce(const Fq& k, const FqPolynomial& f) {
  if (f.count(0)) throw InvalidInput("polynomial has a nonzero constant term");
  ASReduction out;
  FqPolynomial g = f;
  const std::uint32_t p = k.p();
  for (;;) {
    auto it = std::find_if(g.rbegin(), g.rend(), [p](const auto& t) { return t.first % p == 0; });
    if (it == g.rend()) break;
    const std::uint32_t m = it->first / p;
    const Fq::Elt r = k.pth_root(it->second);
    // g -= A(r x^m)
    g = poly_sub(k, g, artin_schreier_map(k, FqPolynomial{{m, r}}));
    put(k, out.witness, m, r);
  }
  out.reduced.representative = std::move(g);
  return out;
}

PrimitivityResult is_primitive(const Fq& k, const ASClass& h, BivariateOrder order) {
  if (!is_reduced(k, h.representative)) throw InvalidInput("class representative is not reduced");
  const std::uint32_t p = k.p();
  PrimitivityResult out;
  for (const auto& [i, c] : h.representative)
    for (std::uint32_t j = 1; j < i; ++j) put(k, out.t, {j, i - j}, k.mul(c, k.scalar(binom_mod(i, j, p))));

  using Key = std::pair<std::uint32_t, std::uint32_t>;
  auto less = [order](const Key& a, const Key& b) {
    if (order == BivariateOrder::graded_lex && a.first + a.second != b.first + b.second)
      return a.first + a.second < b.first + b.second;
    return a < b;
  };
  BivariatePolynomial g = out.t;
  for (;;) {
    const Key* best = nullptr;
    for (const auto& [e, c] : g)
      if (e.first % p == 0 && e.second % p == 0 && (!best || less(*best, e))) best = &e;
    if (!best) break;
    const Key m{best->first / p, best->second / p};
    const Fq::Elt r = k.pth_root(g.at(*best));
    BivariatePolynomial a = artin_schreier_map(k, BivariatePolynomial{{m, r}});
    for (auto& [e, c] : a) c = k.neg(c);
    g = poly_add(k, g, a);
    put(k, out.witness, m, r);
  }
  out.residue = std::move(g);
  out.primitive = out.residue.empty();
  return out;
}

std::vector<ASClass> classify_primitive(const Fq& k, std::uint32_t max_degree, std::size_t max_candidates) {
  std::vector<std::uint32_t> exps;
  for (std::uint32_t i = 1; i <= max_degree; ++i)
    if (i % k.p() != 0) exps.push_back(i);
  const std::size_t units = k.q() - 1;
  const std::size_t n = exps.size();
  const std::size_t total = 1 + n * units + n * (n ? n - 1 : 0) / 2 * units * units;
  if (total > max_candidates) throw CapExceeded("Artin-Schreier scan set exceeds the cap");

  std::vector<ASClass> found;
  found.push_back({});
  auto test = [&](const FqPolynomial& f) {
    ASClass h{f};
    if (is_primitive(k, h).primitive) found.push_back(std::move(h));
  };
  for (std::size_t a = 0; a < n; ++a)
    for (Fq::Elt c = 1; c < k.q(); ++c) test({{exps[a], c}});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (Fq::Elt c = 1; c < k.q(); ++c)
        for (Fq::Elt d = 1; d < k.q(); ++d) test({{exps[a], c}, {exps[b], d}});
  std::sort(found.begin(), found.end(), [](const ASClass& x, const ASClass& y) {
    const auto& a = x.representative;
    const auto& b = y.representative;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return found;
}

std::vector<std::uint32_t> frobenius_character(const Fq& k, Fq::Elt c) {
  // In R = F_q[X]/(X^p - X - a) the class of X is a root u; X^q reduces to
  // X + (constant), and that constant is Fr_q(u) - u.
  const std::uint32_t p = k.p();
  std::vector<std::uint32_t> out(k.q());
  for (Fq::Elt g = 0; g < k.q(); ++g) {
    const Fq::Elt a = k.mul(c, g);
    using Vec = std::vector<Fq::Elt>;  // dense, length p
    auto mulmod = [&](const Vec& x, const Vec& y) {
      Vec r(2 * p - 1, 0);
      for (std::uint32_t i = 0; i < p; ++i)
        if (x[i])
          for (std::uint32_t j = 0; j < p; ++j) r[i + j] = k.add(r[i + j], k.mul(x[i], y[j]));
      // X^{p+s} = X^{s+1} + a X^s
      for (std::uint32_t d = 2 * p - 2; d >= p; --d) {
        const Fq::Elt v = r[d];
        if (!v) continue;
        r[d] = 0;
        r[d - p + 1] = k.add(r[d - p + 1], v);
        r[d - p] = k.add(r[d - p], k.mul(v, a));
      }
      r.resize(p);
      return r;
    };
    Vec base(p, 0), acc(p, 0);
    base[1] = 1;
    acc[0] = 1;
    std::uint64_t e = k.q();
    while (e) {
      if (e & 1) acc = mulmod(acc, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    acc[1] = k.sub(acc[1], 1);
    for (std::uint32_t i = 1; i < p; ++i)
      if (acc[i] != 0) throw Error("Frobenius difference is not constant");
    if (acc[0] >= p) throw Error("Frobenius difference is not in the prime field");
    out[g] = acc[0];
  }
  return out;
}

PdiscReport pdisc_check(const Fq& k) {
  PdiscReport r;
  const std::uint32_t q = k.q(), p = k.p();
  r.hom_order = q;
  std::vector<std::vector<std::uint32_t>> chi(q);
  for (Fq::Elt c = 0; c < q; ++c) chi[c] = frobenius_character(k, c);
  for (Fq::Elt c = 0; c < q && r.additive_in_g; ++c)
    for (Fq::Elt g = 0; g < q && r.additive_in_g; ++g)
      for (Fq::Elt h = 0; h < q; ++h)
        if (chi[c][k.add(g, h)] != (chi[c][g] + chi[c][h]) % p) {
          r.additive_in_g = false;
          break;
        }
  for (Fq::Elt c = 0; c < q && r.additive_in_c; ++c)
    for (Fq::Elt d = 0; d < q && r.additive_in_c; ++d) {
      const auto& s = chi[k.add(c, d)];
      for (Fq::Elt g = 0; g < q; ++g)
        if (s[g] != (chi[c][g] + chi[d][g]) % p) {
          r.additive_in_c = false;
          break;
        }
    }
  std::set<std::vector<std::uint32_t>> distinct(chi.begin(), chi.end());
  r.characters = distinct.size();
  r.injective = distinct.size() == q;
  return r;
}

}  // namespace centext
