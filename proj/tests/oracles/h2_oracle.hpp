#pragma once
// Brute-force references for H^2(G, Z/p^k) on the full normalized bar
// complex. Nothing here calls into the library's solver.

#include <cstdint>
#include <map>
#include <vector>

#include "centext/abelian.hpp"
#include "centext/group.hpp"

namespace oracle {

using centext::Elem;
using centext::GroupPtr;

// |{x in (Z/q)^cols : M x = 0}| as a power of p, q = p^k, by elimination
// over the chain ring (pivot on minimal valuation).
inline std::uint32_t kernel_log(std::vector<std::vector<std::int64_t>> m, std::size_t cols, std::int64_t p,
                                std::uint32_t k) {
  std::int64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  auto val = [&](std::int64_t a) {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) return k;
    std::uint32_t v = 0;
    while (a % p == 0) {
      a /= p;
      ++v;
    }
    return v;
  };
  auto inv_unit = [&](std::int64_t u) {
    u %= q;
    if (u < 0) u += q;
    for (std::int64_t x = 1; x < q; ++x)
      if ((u * x) % q == 1) return x;
    return std::int64_t(0);
  };
  for (auto& row : m)
    for (auto& x : row) x = ((x % q) + q) % q;
  std::uint32_t log = 0;
  std::size_t rank = 0;
  std::vector<bool> used_col(cols, false);
  std::size_t r0 = 0;
  while (true) {
    // smallest-valuation entry in the remaining block
    std::uint32_t best = k;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = r0; i < m.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (!used_col[j] && m[i][j] != 0 && val(m[i][j]) < best) {
          best = val(m[i][j]);
          bi = i;
          bj = j;
        }
    if (best == k) break;
    std::swap(m[r0], m[bi]);
    const std::int64_t piv = m[r0][bj];
    std::int64_t pv = 1;
    for (std::uint32_t i = 0; i < best; ++i) pv *= p;
    const std::int64_t unit = inv_unit(piv / pv);
    // clear the column below and above
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r0 || m[i][bj] == 0) continue;
      const std::int64_t f = ((m[i][bj] / pv) % q * unit) % q;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r0][j]) % q + q) % q;
    }
    // clear the row (column operations): other columns -= c * pivot column
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == bj || used_col[j] || m[r0][j] == 0) continue;
      const std::int64_t f = ((m[r0][j] / pv) % q * unit) % q;
      for (std::size_t i = 0; i < m.size(); ++i) m[i][j] = ((m[i][j] - f * m[i][bj]) % q + q) % q;
    }
    used_col[bj] = true;
    log += best;  // p^best x = 0 has p^best solutions
    ++rank;
    ++r0;
  }
  return log + std::uint32_t(cols - rank) * k;
}

// Invariant factors of H^2(G, Z/p^k) from |H^2[p^j]|, j = 0..k.
inline std::vector<std::int64_t> h2_prime_power(const GroupPtr& g, std::int64_t p, std::uint32_t k) {
  const std::size_t n = g->order(), m = n - 1;
  const std::size_t nz = m * m, nb = m;
  auto zi = [&](Elem a, Elem b) -> long { return (a == 0 || b == 0) ? -1 : long((a - 1) * m + (b - 1)); };
  auto bi = [&](Elem a) -> long { return a == 0 ? -1 : long(a - 1); };
  // cocycle identity rows: z(b,c) - z(ab,c) + z(a,bc) - z(a,b) = 0
  std::vector<std::vector<std::int64_t>> cocycle;
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b)
      for (Elem c = 1; c < n; ++c) {
        std::vector<std::int64_t> row(nz + nb, 0);
        auto put = [&](long idx, std::int64_t s) {
          if (idx >= 0) row[std::size_t(idx)] += s;
        };
        put(zi(b, c), 1);
        put(zi(g->mul(a, b), c), -1);
        put(zi(a, g->mul(b, c)), 1);
        put(zi(a, b), -1);
        cocycle.push_back(row);
      }
  // delta beta (a,b) = beta(a) + beta(b) - beta(ab)
  auto hom_rows = [&](std::size_t offset, std::size_t width) {
    std::vector<std::vector<std::int64_t>> rows;
    for (Elem a = 1; a < n; ++a)
      for (Elem b = 1; b < n; ++b) {
        std::vector<std::int64_t> row(width, 0);
        row[offset + std::size_t(bi(a))] += 1;
        row[offset + std::size_t(bi(b))] += 1;
        if (bi(g->mul(a, b)) >= 0) row[offset + std::size_t(bi(g->mul(a, b)))] -= 1;
        rows.push_back(row);
      }
    return rows;
  };
  const std::uint32_t z1 = kernel_log(hom_rows(0, nb), nb, p, k);
  const std::uint32_t b2 = std::uint32_t(nb) * k - z1;
  std::vector<std::uint32_t> torsion;  // log_p |H^2[p^j]|
  for (std::uint32_t j = 0; j <= k; ++j) {
    std::int64_t pj = 1;
    for (std::uint32_t i = 0; i < j; ++i) pj *= p;
    auto rows = cocycle;
    // p^j z(a,b) - delta beta(a,b) = 0
    auto d = hom_rows(nz, nz + nb);
    for (Elem a = 1; a < n; ++a)
      for (Elem b = 1; b < n; ++b) {
        auto& row = d[(a - 1) * m + (b - 1)];
        for (std::size_t t = nz; t < nz + nb; ++t) row[t] = -row[t];
        row[std::size_t(zi(a, b))] += pj;
        rows.push_back(row);
      }
    const std::uint32_t s = kernel_log(rows, nz + nb, p, k);
    torsion.push_back(s - z1 - b2);
  }
  std::vector<std::int64_t> orders;
  for (std::uint32_t j = 1; j <= k; ++j) {
    const std::uint32_t at_least = torsion[j] - torsion[j - 1];  // factors of order >= p^j
    const std::uint32_t next = j < k ? torsion[j + 1] - torsion[j] : 0;
    std::int64_t pj = 1;
    for (std::uint32_t i = 0; i < j; ++i) pj *= p;
    for (std::uint32_t c = 0; c < at_least - next; ++c) orders.push_back(pj);
  }
  return orders;
}

// Literal enumeration of every normalized 2-cochain with values in the
// product of cyclic groups `mods`; returns the cyclic orders of Z^2/B^2.
inline std::vector<std::int64_t> h2_enumerate(const GroupPtr& g, const std::vector<std::int64_t>& mods) {
  const std::size_t n = g->order(), m = n - 1;
  std::int64_t a_order = 1;
  for (auto d : mods) a_order *= d;
  auto decode = [&](std::int64_t v) {
    std::vector<std::int64_t> t(mods.size());
    for (std::size_t i = mods.size(); i-- > 0;) {
      t[i] = v % mods[i];
      v /= mods[i];
    }
    return t;
  };
  auto encode = [&](const std::vector<std::int64_t>& t) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < mods.size(); ++i) v = v * mods[i] + ((t[i] % mods[i]) + mods[i]) % mods[i];
    return v;
  };
  auto addv = [&](std::int64_t x, std::int64_t y, int sy) {
    auto a = decode(x), b = decode(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += sy * b[i];
    return encode(a);
  };
  const std::size_t cells = m * m;
  std::vector<std::int64_t> f(n * n, 0);
  auto at = [&](Elem a, Elem b) -> std::int64_t& { return f[a * n + b]; };
  std::vector<std::vector<std::int64_t>> cocycles;
  std::vector<std::int64_t> digits(cells, 0);
  for (;;) {
    for (std::size_t c = 0; c < cells; ++c) at(Elem(c / m + 1), Elem(c % m + 1)) = digits[c];
    bool ok = true;
    for (Elem a = 1; a < n && ok; ++a)
      for (Elem b = 1; b < n && ok; ++b)
        for (Elem c = 1; c < n && ok; ++c) {
          auto lhs = addv(at(a, b), at(g->mul(a, b), c), 1);
          auto rhs = addv(at(b, c), at(a, g->mul(b, c)), 1);
          ok = lhs == rhs;
        }
    if (ok) cocycles.push_back(f);
    std::size_t i = 0;
    while (i < cells && ++digits[i] == a_order) digits[i++] = 0;
    if (i == cells) break;
  }
  // coboundaries
  std::vector<std::vector<std::int64_t>> cobs;
  std::vector<std::int64_t> beta(n, 0);
  for (;;) {
    std::vector<std::int64_t> d(n * n, 0);
    for (Elem a = 1; a < n; ++a)
      for (Elem b = 1; b < n; ++b) d[a * n + b] = addv(addv(beta[a], beta[b], 1), beta[g->mul(a, b)], -1);
    cobs.push_back(d);
    std::size_t i = 1;
    while (i < n && ++beta[i] == a_order) beta[i++] = 0;
    if (i == n) break;
  }
  std::sort(cobs.begin(), cobs.end());
  cobs.erase(std::unique(cobs.begin(), cobs.end()), cobs.end());
  // |H[r]| for every r dividing the exponent, then read off the structure
  auto scale = [&](const std::vector<std::int64_t>& x, std::int64_t r) {
    std::vector<std::int64_t> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto t = decode(x[i]);
      for (auto& v : t) v *= r;
      y[i] = encode(t);
    }
    return y;
  };
  const std::int64_t h = std::int64_t(cocycles.size() / cobs.size());
  std::int64_t expo = 1;
  for (auto d : mods) expo = std::max(expo, d);
  std::map<std::int64_t, std::int64_t> killed;  // r -> |H[r]|
  for (std::int64_t r = 1; r <= expo * expo; ++r) {
    std::int64_t c = 0;
    for (const auto& z : cocycles)
      if (std::binary_search(cobs.begin(), cobs.end(), scale(z, r))) ++c;
    killed[r] = c / std::int64_t(cobs.size());
  }
  // group with these kernel sizes: per prime, counts of factors of order >= p^j
  std::vector<std::int64_t> cyclic;
  std::int64_t rest = h;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    std::vector<std::int64_t> lg;  // log_p |H[p^j]|
    for (std::int64_t pj = 1; pj <= expo * expo; pj *= p) {
      std::int64_t s = killed[pj], l = 0;
      while (s % p == 0 && s > 1) {
        s /= p;
        ++l;
      }
      lg.push_back(l);
    }
    std::int64_t pj = 1;
    for (std::size_t j = 1; j < lg.size(); ++j) {
      pj *= p;
      const std::int64_t ge = lg[j] - lg[j - 1];
      const std::int64_t gn = j + 1 < lg.size() ? lg[j + 1] - lg[j] : 0;
      for (std::int64_t c = 0; c < ge - gn; ++c) {
        cyclic.push_back(pj);
      }
    }
    while (rest % p == 0) rest /= p;
  }
  return cyclic;
}

// H^2(G, A) for A given by invariant factors, via its primary pieces; uses
// literal enumeration when the cochain space is small enough.
inline centext::FiniteAbelian h2_oracle(const GroupPtr& g, const centext::FiniteAbelian& a,
                                        std::int64_t enumerate_limit = std::int64_t(1) << 22) {
  const std::size_t m = g->order() - 1;
  double space = 1;
  for (std::size_t i = 0; i < m * m; ++i) space *= double(a.order());
  if (space <= double(enumerate_limit)) return centext::FiniteAbelian::from_cyclic_orders(h2_enumerate(g, a.invariant_factors()));
  std::vector<std::int64_t> orders;
  for (auto d : a.invariant_factors()) {
    std::int64_t rest = d;
    for (std::int64_t p = 2; rest > 1; ++p) {
      if (rest % p) continue;
      std::uint32_t k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      for (auto o : h2_prime_power(g, p, k)) orders.push_back(o);
    }
  }
  return centext::FiniteAbelian::from_cyclic_orders(orders);
}

}  // namespace oracle
