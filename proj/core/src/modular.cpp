#include "centext/modular.hpp"

#include <algorithm>
#include <utility>

#include "centext/error.hpp"

namespace centext::modular {

PrimePowerRing::PrimePowerRing(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1) {
  if (p < 2 || k < 1) throw InvalidInput("PrimePowerRing: need p >= 2 and k >= 1");
  powers_.push_back(1);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (std::uint64_t(q_) * p >= (1ull << 31)) throw CapExceeded("PrimePowerRing: modulus too large");
    q_ *= p;
    powers_.push_back(q_);
  }
}

std::uint32_t PrimePowerRing::valuation(Word a) const {
  if (a == 0) return k_;
  std::uint32_t v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

Word PrimePowerRing::unit_inverse(Word u) const {
  std::int64_t r0 = q_, r1 = u, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t t = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
  }
  if (r0 != 1) throw InvalidInput("unit_inverse: not a unit");
  return reduce(s0);
}

Word PrimePowerRing::unit_part(Word a) const {
  if (a == 0) return 1;
  return a / powers_[valuation(a)];
}

void PrimePowerRing::axpy_sub(Vec& dst, const Vec& src, Word t, std::size_t from) const {
  if (t == 0) return;
  const std::uint64_t nt = q_ - t;
  for (std::size_t i = from; i < dst.size(); ++i)
    if (src[i] != 0) dst[i] = Word((dst[i] + nt * src[i]) % q_);
}

void PrimePowerRing::scale(Vec& v, Word t) const {
  for (auto& x : v) x = mul(x, t);
}

// ---------------------------------------------------------------------------

RowModule::RowModule(const PrimePowerRing& ring, std::size_t cols)
    : ring_(ring), cols_(cols), pivot_of_col_(cols, -1) {}

void RowModule::add(Vec row) {
  std::size_t c = 0;
  for (;;) {
    while (c < cols_ && row[c] == 0) ++c;
    if (c == cols_) return;
    const long pr = pivot_of_col_[c];
    const auto v = ring_.valuation(row[c]);
    if (pr < 0) {
      ring_.scale(row, ring_.unit_inverse(ring_.unit_part(row[c])));
      pivot_of_col_[c] = long(rows_.size());
      rows_.push_back(std::move(row));
      return;
    }
    Vec& pivot = rows_[std::size_t(pr)];
    if (ring_.valuation(pivot[c]) > v) {
      ring_.scale(row, ring_.unit_inverse(ring_.unit_part(row[c])));
      std::swap(row, pivot);
    }
    const Word lead = pivot[c];  // p^w with w <= valuation(row[c])
    ring_.axpy_sub(row, pivot, row[c] / lead, c);
  }
}

Mat RowModule::rows() const { return rows_; }

// ---------------------------------------------------------------------------

ColumnSNF column_snf(Mat a, std::size_t cols, const PrimePowerRing& ring) {
  ColumnSNF out;
  out.cols = cols;
  out.v.assign(cols, Vec(cols, 0));
  out.v_inverse.assign(cols, Vec(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) out.v[i][i] = out.v_inverse[i][i] = 1;
  const std::size_t rows = a.size();
  const std::size_t limit = std::min(rows, cols);

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : out.v) std::swap(r[i], r[j]);
    std::swap(out.v_inverse[i], out.v_inverse[j]);
  };

  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t bi = rows, bj = cols;
    std::uint32_t best = ring.k();
    for (std::size_t i = t; i < rows && best > 0; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          auto v = ring.valuation(a[i][j]);
          if (v < best) {
            best = v;
            bi = i;
            bj = j;
            if (v == 0) break;
          }
        }
    if (bi == rows) break;
    std::swap(a[t], a[bi]);
    swap_cols(t, bj);
    ring.scale(a[t], ring.unit_inverse(ring.unit_part(a[t][t])));
    const Word pivot = a[t][t];
    for (std::size_t i = t + 1; i < rows; ++i)
      if (a[i][t] != 0) ring.axpy_sub(a[i], a[t], a[i][t] / pivot, t);
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      const Word c = a[t][j] / pivot;
      a[t][j] = 0;
      // col_j -= c col_t in V; row_t += c row_j in V^-1
      for (auto& r : out.v) r[j] = ring.sub(r[j], ring.mul(c, r[t]));
      auto& vt = out.v_inverse[t];
      const auto& vj = out.v_inverse[j];
      for (std::size_t l = 0; l < cols; ++l)
        if (vj[l] != 0) vt[l] = ring.add(vt[l], ring.mul(c, vj[l]));
    }
    out.valuations.push_back(best);
  }
  return out;
}

// ---------------------------------------------------------------------------

ModuleQuotient::ModuleQuotient(const PrimePowerRing& ring, std::vector<std::uint32_t> ambient,
                               const Mat& relations)
    : ring_(ring), ambient_(std::move(ambient)) {
  const std::size_t m = ambient_.size();
  Mat rows;
  for (const auto& r : relations) {
    if (r.size() != m) throw InvalidInput("ModuleQuotient: relation has wrong length");
    rows.push_back(r);
  }
  for (std::size_t i = 0; i < m; ++i)
    if (ambient_[i] < ring.k()) {
      Vec r(m, 0);
      r[i] = ring.pow_p(ambient_[i]);
      rows.push_back(std::move(r));
    }
  auto snf = column_snf(std::move(rows), m, ring);
  for (std::size_t t = 0; t < m; ++t) {
    const std::uint32_t c = t < snf.valuations.size() ? snf.valuations[t] : ring.k();
    if (c >= 1) {
      exps_.push_back(c);
      columns_.push_back(t);
    }
  }
  q_ = std::move(snf.v);
  q_inverse_ = std::move(snf.v_inverse);
}

std::vector<std::uint32_t> ModuleQuotient::coordinates(const Vec& x) const {
  std::vector<std::uint32_t> out(exps_.size(), 0);
  for (std::size_t idx = 0; idx < columns_.size(); ++idx) {
    const std::size_t t = columns_[idx];
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) acc = (acc + std::uint64_t(x[i]) * q_[i][t]) % ring_.q();
    out[idx] = std::uint32_t(acc % ring_.pow_p(exps_[idx]));
  }
  return out;
}

Vec ModuleQuotient::generator(std::size_t j) const { return q_inverse_[columns_.at(j)]; }

// ---------------------------------------------------------------------------

HowellForm::HowellForm(const PrimePowerRing& ring, const Mat& generators, std::size_t cols,
                       bool track)
    : ring_(ring), cols_(cols), gens_(generators.size()), track_(track) {
  const std::size_t width = cols_ + (track_ ? gens_ : 0);
  Mat work;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    Vec r(width, 0);
    std::copy(generators[i].begin(), generators[i].end(), r.begin());
    if (track_) r[cols_ + i] = 1;
    work.push_back(std::move(r));
  }
  auto zero_head = [&](const Vec& r) {
    return std::all_of(r.begin(), r.begin() + std::ptrdiff_t(cols_), [](Word x) { return x == 0; });
  };
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t best = work.size();
    std::uint32_t bv = ring_.k();
    for (std::size_t i = 0; i < work.size(); ++i)
      if (work[i][c] != 0) {
        auto v = ring_.valuation(work[i][c]);
        if (v < bv) {
          bv = v;
          best = i;
        }
      }
    if (best == work.size()) continue;
    Vec pivot = std::move(work[best]);
    work.erase(work.begin() + std::ptrdiff_t(best));
    ring_.scale(pivot, ring_.unit_inverse(ring_.unit_part(pivot[c])));
    for (auto& w : work)
      if (w[c] != 0) ring_.axpy_sub(w, pivot, w[c] / pivot[c]);
    if (bv > 0) {
      Vec extra = pivot;
      ring_.scale(extra, ring_.pow_p(ring_.k() - bv));
      work.push_back(std::move(extra));
    }
    work.erase(std::remove_if(work.begin(), work.end(), zero_head), work.end());
    pivot_col_.push_back(c);
    pivot_val_.push_back(bv);
    rows_.push_back(std::move(pivot));
  }
  // reduce entries above each pivot into [0, p^v)
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivot_col_[i];
    const Word pv = ring_.pow_p(pivot_val_[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (rows_[j][c] >= pv) ring_.axpy_sub(rows_[j], rows_[i], rows_[j][c] / pv);
  }
}

HowellForm::Reduction HowellForm::reduce(Vec v) const {
  const std::size_t width = cols_ + (track_ ? gens_ : 0);
  v.resize(width, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivot_col_[i];
    const Word pv = ring_.pow_p(pivot_val_[i]);
    if (v[c] >= pv) ring_.axpy_sub(v, rows_[i], v[c] / pv);
  }
  Reduction r;
  r.residue.assign(v.begin(), v.begin() + std::ptrdiff_t(cols_));
  if (track_) {
    r.combination.assign(v.begin() + std::ptrdiff_t(cols_), v.end());
    for (auto& x : r.combination) x = ring_.neg(x);
  }
  return r;
}

bool HowellForm::contains(const Vec& v) const {
  auto r = reduce(v);
  return std::all_of(r.residue.begin(), r.residue.end(), [](Word x) { return x == 0; });
}

}  // namespace centext::modular
