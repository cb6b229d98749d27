#pragma once
// Invariant factors as ratios of determinantal divisors: d_k = gcd of all
// k x k minors. Exponential, but fine for rank <= 8.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline std::int64_t det_small(std::vector<std::vector<std::int64_t>> a) {
  // Bareiss fraction-free elimination; exact for small entries
  const std::size_t n = a.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Nontrivial invariant factors (entries != 1) of a square matrix's cokernel;
// a zero factor is reported as 0.
inline std::vector<std::int64_t> cokernel_factors(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> d{1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, sets);
    std::int64_t g = 0;
    for (const auto& rows : sets)
      for (const auto& cols : sets) {
        std::vector<std::vector<std::int64_t>> sub(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rows[i]][cols[j]];
        g = std::gcd(g, det_small(sub));
      }
    d.push_back(g);
  }
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::int64_t f = d[k - 1] == 0 ? 0 : d[k] / d[k - 1];
    if (f != 1) out.push_back(f < 0 ? -f : f);
  }
  return out;
}

}  // namespace oracle
