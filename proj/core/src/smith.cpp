#include "centext/smith.hpp"

#include <utility>

#include "centext/error.hpp"

namespace centext {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

class Reducer {
 public:
  Reducer(IntMatrix m, const SNFOptions& opt)
      : a_(std::move(m)),
        rows_(a_.size()),
        cols_(rows_ ? a_[0].size() : 0),
        want_left_(opt.want_left),
        want_right_(opt.want_right) {
    if (want_left_) left_ = identity_matrix(rows_);
    if (want_right_) right_ = identity_matrix(cols_);
  }

  void run() {
    const std::size_t r = std::min(rows_, cols_);
    for (std::size_t t = 0; t < r; ++t) {
      if (!move_min_to(t)) break;
      for (;;) {
        const BigInt& p = a_[t][t];
        bool remainder = false;
        for (std::size_t i = t + 1; i < rows_; ++i)
          if (a_[i][t] != 0) {
            add_row(i, t, -floor_div(a_[i][t], p));
            remainder = remainder || a_[i][t] != 0;
          }
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (a_[t][j] != 0) {
            add_col(j, t, -floor_div(a_[t][j], p));
            remainder = remainder || a_[t][j] != 0;
          }
        if (remainder) {
          // a nonzero remainder is smaller than the pivot, so this terminates
          move_min_to(t);
          continue;
        }
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows_ && !fixed; ++i)
          for (std::size_t j = t + 1; j < cols_; ++j)
            if (a_[i][j] % a_[t][t] != 0) {
              add_row(t, i, 1);
              fixed = true;
              break;
            }
        if (!fixed) break;
      }
      if (a_[t][t] < 0) negate_row(t);
    }
  }

  SNFResult result() {
    SNFResult res;
    const std::size_t r = std::min(rows_, cols_);
    for (std::size_t t = 0; t < r; ++t) res.invariants.push_back(a_[t][t]);
    res.diagonal = std::move(a_);
    res.left = std::move(left_);
    res.right = std::move(right_);
    return res;
  }

 private:
  // Moves the nonzero entry of least absolute value in the block [t.., t..]
  // to (t, t). False when the block is zero.
  bool move_min_to(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    BigInt best;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j)
        if (a_[i][j] != 0) {
          BigInt v = abs(a_[i][j]);
          if (bi == rows_ || v < best) {
            best = v;
            bi = i;
            bj = j;
          }
        }
    if (bi == rows_) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a_[i], a_[j]);
    if (want_left_) std::swap(left_[i], left_[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a_) std::swap(row[i], row[j]);
    if (want_right_)
      for (auto& row : right_) std::swap(row[i], row[j]);
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_[src][j] != 0) a_[dst][j] += k * a_[src][j];
    if (want_left_)
      for (std::size_t j = 0; j < rows_; ++j)
        if (left_[src][j] != 0) left_[dst][j] += k * left_[src][j];
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t i = 0; i < rows_; ++i)
      if (a_[i][src] != 0) a_[i][dst] += k * a_[i][src];
    if (want_right_)
      for (std::size_t i = 0; i < cols_; ++i)
        if (right_[i][src] != 0) right_[i][dst] += k * right_[i][src];
  }
  void negate_row(std::size_t i) {
    for (auto& v : a_[i]) v = -v;
    if (want_left_)
      for (auto& v : left_[i]) v = -v;
  }

  IntMatrix a_;
  std::size_t rows_, cols_;
  bool want_left_, want_right_;
  IntMatrix left_, right_;
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m, const SNFOptions& options) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  if (rows > options.max_dimension || cols > options.max_dimension)
    throw CapExceeded("smith_normal_form: dimension exceeds " +
                      std::to_string(options.max_dimension));
  for (const auto& row : m)
    if (row.size() != cols) throw InvalidInput("smith_normal_form: ragged matrix");
  Reducer r(m, options);
  r.run();
  return r.result();
}

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) out[i].emplace_back(v);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k ? b[0].size() : 0;
  IntMatrix c(n, std::vector<BigInt>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// Fraction-free Bareiss elimination.
BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace centext
