#include "centext/finite_field.hpp"

#include <cctype>

#include "centext/error.hpp"

namespace centext {

namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic b over F_p
Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

Digits to_digits(std::uint32_t v, std::uint32_t p, std::uint32_t e) {
  Digits d(e);
  for (auto& x : d) {
    x = v % p;
    v /= p;
  }
  return d;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Digits f = poly;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Digits g = to_digits(std::uint32_t(v), p, std::uint32_t(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Fq Fq::create(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p) || p > 13) throw InvalidInput("field characteristic must be a prime <= 13");
  if (e < 1 || e > 4) throw InvalidInput("field degree must be in 1..4");
  return build(p, e);
}

Fq Fq::create_unchecked(std::uint32_t p, std::uint32_t e, std::uint32_t max_size) {
  if (!is_prime(p)) throw InvalidInput("field characteristic must be prime");
  if (e < 1) throw InvalidInput("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > max_size) throw CapExceeded("field too large");
  }
  return build(p, e);
}

Fq Fq::build(std::uint32_t p, std::uint32_t e) {
  auto d = std::make_shared<Data>();
  d->p = p;
  d->e = e;
  d->q = 1;
  for (std::uint32_t i = 0; i < e; ++i) d->q *= p;
  const std::uint32_t q = d->q;

  Digits m;
  if (e == 1) {
    m = {0, 1};  // arithmetic mod t, used only internally
  } else {
    // tuples (c_0, ..., c_{e-1}) in lex order with c_0 most significant
    for (std::uint32_t v = 0; v < q; ++v) {
      Digits c(e);
      std::uint32_t x = v;
      for (std::uint32_t i = e; i-- > 0;) {
        c[i] = x % p;
        x /= p;
      }
      c.push_back(1);
      if (is_irreducible_mod_p(c, p)) {
        m = c;
        break;
      }
    }
    d->modulus = m;
  }

  // smallest generator of the multiplicative group
  std::vector<std::uint32_t> primes;
  {
    std::uint32_t n = q - 1;
    for (std::uint32_t r = 2; r * r <= n; ++r)
      if (n % r == 0) {
        primes.push_back(r);
        while (n % r == 0) n /= r;
      }
    if (n > 1) primes.push_back(n);
  }
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    if (e == 1) return std::uint32_t((std::uint64_t(a) * b) % p);
    Digits r = poly_mulmod(to_digits(a, p, e), to_digits(b, p, e), m, p);
    std::uint32_t v = 0;
    for (std::size_t i = r.size(); i-- > 0;) v = v * p + r[i];
    return v;
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t k) {
    std::uint32_t r = 1;
    while (k) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };
  std::uint32_t gen = 1;
  if (q > 2) {
    for (gen = 2; gen < q; ++gen) {
      bool ok = true;
      for (auto r : primes)
        if (slow_pow(gen, (q - 1) / r) == 1) {
          ok = false;
          break;
        }
      if (ok) break;
    }
  }
  d->exp.resize(q - 1);
  d->log.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    d->exp[i] = x;
    d->log[x] = i;
    x = slow_mul(x, gen);
  }
  return Fq(std::move(d));
}

Fq::Elt Fq::add(Elt a, Elt b) const {
  const auto p = d_->p;
  if (d_->e == 1) return (a + b) % p;
  Elt r = 0, w = 1;
  while (a || b) {
    r += ((a % p + b % p) % p) * w;
    a /= p;
    b /= p;
    w *= p;
  }
  return r;
}

Fq::Elt Fq::sub(Elt a, Elt b) const {
  const auto p = d_->p;
  if (d_->e == 1) return (a + p - b) % p;
  Elt r = 0, w = 1;
  while (a || b) {
    r += ((a % p + p - b % p) % p) * w;
    a /= p;
    b /= p;
    w *= p;
  }
  return r;
}

Fq::Elt Fq::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t n = d_->q - 1;
  return d_->exp[(d_->log[a] + d_->log[b]) % n];
}

Fq::Elt Fq::inv(Elt a) const {
  if (a == 0) throw InvalidInput("division by zero in finite field");
  const std::uint32_t n = d_->q - 1;
  return d_->exp[(n - d_->log[a]) % n];
}

Fq::Elt Fq::pow(Elt a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = d_->q - 1;
  return d_->exp[(std::uint64_t(d_->log[a]) * (k % n)) % n];
}

Fq::Elt Fq::trace(Elt a) const {
  Elt s = 0, x = a;
  for (std::uint32_t i = 0; i < d_->e; ++i) {
    s = add(s, x);
    x = frobenius(x);
  }
  return s;
}

Fq::Elt Fq::scalar(std::int64_t n) const {
  const std::int64_t p = d_->p;
  return Elt(((n % p) + p) % p);
}

std::vector<std::uint32_t> Fq::digits(Elt a) const { return to_digits(a, d_->p, d_->e); }

Fq::Elt Fq::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() > d_->e) throw InvalidInput("too many digits for field element");
  Elt v = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= d_->p) throw InvalidInput("digit out of range");
    v = v * d_->p + d[i];
  }
  return v;
}

Fq::Elt Fq::parse(const std::string& text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidInput("empty field element");
  std::vector<std::uint32_t> dig(d_->e, 0);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '+') {
      if (i == 0) throw InvalidInput("bad field element " + text);
      ++i;
    }
    std::uint64_t c = 1;
    bool have_c = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        c = c * 10 + std::uint64_t(s[i++] - '0');
        if (c > 1000000) throw InvalidInput("coefficient too large in " + text);
      }
      have_c = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    std::uint32_t k = 0;
    if (i < s.size() && s[i] == 't') {
      if (d_->e == 1) throw InvalidInput("prime field elements have no t: " + text);
      ++i;
      k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw InvalidInput("bad exponent in " + text);
        k = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          k = k * 10 + std::uint32_t(s[i++] - '0');
          if (k > 64) throw InvalidInput("exponent too large in " + text);
        }
      }
    } else if (!have_c) {
      throw InvalidInput("bad field element " + text);
    }
    if (i < s.size() && s[i] != '+') throw InvalidInput("bad field element " + text);
    // reduce t^k through the modulus
    Elt term = pow(d_->p, k);  // t is the element with digits (0, 1)
    term = mul(term, scalar(std::int64_t(c % d_->p)));
    Elt acc = from_digits(dig);
    dig = digits(add(acc, term));
  }
  return from_digits(dig);
}

std::string Fq::format(Elt a) const {
  if (a == 0) return "0";
  auto d = digits(a);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]);
      out += 't';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

}  // namespace centext
