#include "centext/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "centext/error.hpp"
#include "h2_engine.hpp"

namespace centext {

namespace detail {

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::int64_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(std::uint32_t(p), e);
  }
  if (n > 1) out.emplace_back(std::uint32_t(n), 1);
  return out;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t t = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
  }
  if (r0 != 1) throw InvalidInput("mod_inverse: not invertible");
  return ((s0 % m) + m) % m;
}

std::int64_t crt(const std::vector<std::int64_t>& residues, const std::vector<std::int64_t>& moduli) {
  std::int64_t x = 0, m = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::int64_t mi = moduli[i];
    const std::int64_t ri = ((residues[i] % mi) + mi) % mi;
    // x + m * t = ri (mod mi)
    const std::int64_t t = (__int128(((ri - x) % mi + mi) % mi) * mod_inverse(m % mi, mi)) % mi;
    x += m * t;
    m *= mi;
  }
  return m == 0 ? 0 : x % m;
}

// ---------------------------------------------------------------------------

PrimePowerSolver::PrimePowerSolver(GroupPtr g, std::uint32_t p, std::uint32_t k)
    : group_(std::move(g)), ring_(p, k) {
  const std::size_t n = group_->order();
  if (n > 1) gens_ = generating_set(group_);
  const std::size_t r = gens_.size();
  unknowns_ = (n - 1) * r;

  tree_.assign(n, {0, 0});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  bfs_order_ = {0};
  std::vector<std::pair<Elem, std::size_t>> non_tree;
  for (std::size_t head = 0; head < bfs_order_.size(); ++head) {
    const Elem h = bfs_order_[head];
    for (std::size_t j = 0; j < r; ++j) {
      const Elem y = group_->mul(h, gens_[j]);
      if (!seen[y]) {
        seen[y] = true;
        tree_[y] = {h, j};
        bfs_order_.push_back(y);
      } else {
        non_tree.emplace_back(h, j);
      }
    }
  }
  // tree path of y: the (w_{i-1}, x_i) steps from the identity
  std::vector<std::vector<std::pair<Elem, std::size_t>>> path(n);
  for (std::size_t i = 1; i < bfs_order_.size(); ++i) {
    const Elem y = bfs_order_[i];
    path[y] = path[tree_[y].first];
    path[y].push_back(tree_[y]);
  }

  const std::size_t cols = unknowns_;
  modular::RowModule module(ring_, cols);
  Vec row(cols, 0);
  auto bump = [&](Elem a, std::size_t j, int sign) {
    if (a == 0) return;
    auto& x = row[index(a, j)];
    x = sign > 0 ? ring_.add(x, 1) : ring_.sub(x, 1);
  };
  // F(g,h) = sum over path(h) of e(g w, x) - e(w, x)
  auto add_f = [&](Elem g, Elem h, int sign) {
    for (const auto& [w, j] : path[h]) {
      bump(group_->mul(g, w), j, sign);
      bump(w, j, -sign);
    }
  };
  for (Elem g = 1; g < n; ++g) {
    for (const auto& [h, j] : non_tree) {
      std::fill(row.begin(), row.end(), 0);
      const Elem y = group_->mul(h, gens_[j]);
      add_f(g, h, +1);
      bump(group_->mul(g, h), j, +1);
      bump(h, j, -1);
      add_f(g, y, -1);
      if (std::any_of(row.begin(), row.end(), [](Word x) { return x != 0; })) module.add(row);
    }
  }

  auto snf = modular::column_snf(module.rows(), cols, ring_);
  rank_ = snf.valuations.size();
  pivot_vals_ = snf.valuations;
  v_ = std::move(snf.v);
  v_inverse_ = std::move(snf.v_inverse);
  ambient_.assign(cols, k);
  for (std::size_t i = 0; i < rank_; ++i) ambient_[i] = pivot_vals_[i];

  Mat cob_vectors, relations;
  for (Elem t = 1; t < n; ++t) {
    std::vector<Word> beta(n, 0);
    beta[t] = 1;
    cob_vectors.push_back(coboundary_of(beta));
  }
  for (const auto& b : cob_vectors) {
    Vec y(cols, 0);
    for (std::size_t i = 0; i < cols; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < cols; ++l)
        if (b[l]) acc = (acc + std::uint64_t(v_inverse_[i][l]) * b[l]) % ring_.q();
      y[i] = Word(acc);
      if (i < rank_) y[i] /= ring_.pow_p(k - pivot_vals_[i]);
    }
    relations.push_back(std::move(y));
  }
  quotient_ = modular::ModuleQuotient(ring_, ambient_, relations);
  coboundaries_ = std::make_unique<modular::HowellForm>(ring_, cob_vectors, cols, true);
}

Vec PrimePowerSolver::restrict_table(const std::function<Word(Elem, Elem)>& f) const {
  Vec v(unknowns_, 0);
  for (Elem g = 1; g < group_->order(); ++g)
    for (std::size_t j = 0; j < gens_.size(); ++j) v[index(g, j)] = ring_.reduce(f(g, gens_[j]));
  return v;
}

std::vector<Word> PrimePowerSolver::expand(const Vec& v) const {
  const std::size_t n = group_->order();
  std::vector<Word> t(n * n, 0);
  auto val = [&](Elem a, std::size_t j) -> Word { return a == 0 ? 0 : v[index(a, j)]; };
  for (Elem g = 1; g < n; ++g) {
    Word* row = t.data() + std::size_t(g) * n;
    for (std::size_t i = 1; i < bfs_order_.size(); ++i) {
      const Elem y = bfs_order_[i];
      const auto [h, j] = tree_[y];
      row[y] = ring_.sub(ring_.add(row[h], val(group_->mul(g, h), j)), val(h, j));
    }
  }
  return t;
}

std::optional<std::vector<std::uint32_t>> PrimePowerSolver::coordinates(const Vec& v) const {
  const std::size_t cols = unknowns_;
  Vec z(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t l = 0; l < cols; ++l)
      if (v[l]) acc = (acc + std::uint64_t(v_inverse_[i][l]) * v[l]) % ring_.q();
    Word y = Word(acc);
    if (i < rank_) {
      const Word s = ring_.pow_p(ring_.k() - pivot_vals_[i]);
      if (y % s != 0) return std::nullopt;
      y /= s;
    }
    z[i] = y;
  }
  return quotient_.coordinates(z);
}

Vec PrimePowerSolver::lift_ambient(const Vec& z) const {
  const std::size_t cols = unknowns_;
  Vec y(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    y[i] = i < rank_ ? ring_.mul(z[i], ring_.pow_p(ring_.k() - pivot_vals_[i])) : z[i];
  Vec x(cols, 0);
  for (std::size_t l = 0; l < cols; ++l) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < cols; ++i)
      if (y[i]) acc = (acc + std::uint64_t(v_[l][i]) * y[i]) % ring_.q();
    x[l] = Word(acc);
  }
  return x;
}

Vec PrimePowerSolver::generator(std::size_t j) const {
  return canonical(lift_ambient(quotient_.generator(j)));
}

Vec PrimePowerSolver::canonical(const Vec& v) const {
  if (unknowns_ == 0) return v;
  return coboundaries_->reduce(v).residue;
}

std::optional<std::vector<Word>> PrimePowerSolver::witness(const Vec& v) const {
  const std::size_t n = group_->order();
  std::vector<Word> beta(n, 0);
  if (unknowns_ == 0) return beta;
  auto r = coboundaries_->reduce(v);
  if (std::any_of(r.residue.begin(), r.residue.end(), [](Word x) { return x != 0; }))
    return std::nullopt;
  for (Elem t = 1; t < n; ++t) beta[t] = r.combination[t - 1];
  return beta;
}

Vec PrimePowerSolver::coboundary_of(const std::vector<Word>& beta) const {
  Vec v(unknowns_, 0);
  for (Elem g = 1; g < group_->order(); ++g)
    for (std::size_t j = 0; j < gens_.size(); ++j)
      v[index(g, j)] = ring_.sub(ring_.add(beta[g], beta[gens_[j]]), beta[group_->mul(g, gens_[j])]);
  return v;
}

// ---------------------------------------------------------------------------

PrimaryAssembly::PrimaryAssembly(std::vector<std::pair<std::uint32_t, std::uint32_t>> pieces) {
  // per prime, pieces sorted by exponent descending; the t-th largest of
  // every prime goes into the t-th largest invariant factor
  std::map<std::uint32_t, std::vector<std::size_t>> by_prime;
  for (std::size_t i = 0; i < pieces.size(); ++i) by_prime[pieces[i].first].push_back(i);
  std::size_t r = 0;
  for (auto& [p, idx] : by_prime) {
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return pieces[a].second > pieces[b].second; });
    r = std::max(r, idx.size());
  }
  std::vector<std::int64_t> factors(r, 1);
  factor_.assign(pieces.size(), 0);
  modulus_.assign(pieces.size(), 1);
  for (auto& [p, idx] : by_prime)
    for (std::size_t t = 0; t < idx.size(); ++t) {
      std::int64_t m = 1;
      for (std::uint32_t e = 0; e < pieces[idx[t]].second; ++e) m *= p;
      factor_[idx[t]] = r - 1 - t;
      modulus_[idx[t]] = m;
      factors[r - 1 - t] *= m;
    }
  group_ = FiniteAbelian(factors);
}

std::vector<std::int64_t> PrimaryAssembly::assemble(const std::vector<std::int64_t>& piece_coords) const {
  const std::size_t r = group_.rank();
  std::vector<std::vector<std::int64_t>> res(r), mods(r);
  for (std::size_t i = 0; i < piece_coords.size(); ++i) {
    res[factor_[i]].push_back(piece_coords[i]);
    mods[factor_[i]].push_back(modulus_[i]);
  }
  std::vector<std::int64_t> out(r);
  for (std::size_t f = 0; f < r; ++f) out[f] = crt(res[f], mods[f]);
  return out;
}

std::vector<std::int64_t> PrimaryAssembly::split(const std::vector<std::int64_t>& coords) const {
  std::vector<std::int64_t> out(factor_.size());
  for (std::size_t i = 0; i < factor_.size(); ++i)
    out[i] = ((coords[factor_[i]] % modulus_[i]) + modulus_[i]) % modulus_[i];
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (a->order() != b->order()) return false;
  for (Elem x = 0; x < a->order(); ++x)
    if (!std::equal(a->row(x).begin(), a->row(x).end(), b->row(x).begin())) return false;
  return true;
}

void check_ambient(const Cocycle2& f, const GroupPtr& g, const FiniteAbelian& a) {
  if (!same_group(f.group(), g)) throw InvalidInput("cocycle lives on a different group");
  if (!(f.coefficients() == a)) throw InvalidInput("cocycle has different coefficients");
}

}  // namespace

H2Engine::H2Engine(GroupPtr g, FiniteAbelian a) : group_(std::move(g)), coeffs_(std::move(a)) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const PrimePowerSolver>> cache;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> specs;
  const auto& factors = coeffs_.invariant_factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::int64_t d = factors[i];
    for (const auto& [p, e] : factorize(d)) {
      std::int64_t q = 1;
      for (std::uint32_t t = 0; t < e; ++t) q *= p;
      auto& solver = cache[{p, e}];
      if (!solver) solver = std::make_shared<PrimePowerSolver>(group_, p, e);
      const std::int64_t m = d / q;
      const std::int64_t idem = (m * mod_inverse(m % q, q)) % d;
      components_.push_back({i, q, q == d ? 1 : idem, solver});
      for (std::size_t j = 0; j < solver->exponents().size(); ++j) {
        pieces_.emplace_back(components_.size() - 1, j);
        specs.emplace_back(p, solver->exponents()[j]);
      }
    }
  }
  assembly_ = PrimaryAssembly(specs);
}

Vec H2Engine::component_vector(const Cocycle2& f, const Component& c, bool validate) const {
  const auto& s = *c.solver;
  auto v = s.restrict_table([&](Elem g, Elem h) { return Word(f(g, h)[c.factor] % c.q); });
  if (validate) {
    const auto t = s.expand(v);
    const std::size_t n = group_->order();
    for (Elem g = 0; g < n; ++g)
      for (Elem h = 0; h < n; ++h)
        if (t[std::size_t(g) * n + h] != Word(f(g, h)[c.factor] % c.q))
          throw InvalidInput("table is not a 2-cocycle");
  }
  return v;
}

void H2Engine::embed(std::vector<Coeff>& table, const Component& c, const Vec& v) const {
  const auto t = c.solver->expand(v);
  const std::int64_t d = coeffs_.invariant_factors()[c.factor];
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto& x = table[i][c.factor];
    x = (x + std::int64_t(t[i]) * c.idempotent) % d;
  }
}

std::vector<std::int64_t> H2Engine::class_of(const Cocycle2& f) const {
  check_ambient(f, group_, coeffs_);
  std::vector<std::vector<std::uint32_t>> per_component;
  for (const auto& c : components_) {
    auto coords = c.solver->coordinates(component_vector(f, c, true));
    if (!coords) throw InvalidInput("table is not a 2-cocycle");
    per_component.push_back(std::move(*coords));
  }
  std::vector<std::int64_t> piece_coords;
  for (const auto& [c, j] : pieces_) piece_coords.push_back(per_component[c][j]);
  return assembly_.assemble(piece_coords);
}

std::optional<std::vector<Coeff>> H2Engine::witness(const Cocycle2& f) const {
  check_ambient(f, group_, coeffs_);
  const std::size_t n = group_->order();
  std::vector<Coeff> beta(n, coeffs_.zero());
  for (const auto& c : components_) {
    auto b = c.solver->witness(component_vector(f, c, true));
    if (!b) return std::nullopt;
    const std::int64_t d = coeffs_.invariant_factors()[c.factor];
    for (Elem g = 0; g < n; ++g) beta[g][c.factor] = (beta[g][c.factor] + std::int64_t((*b)[g]) * c.idempotent) % d;
  }
  return beta;
}

Cocycle2 H2Engine::canonical(const Cocycle2& f) const {
  check_ambient(f, group_, coeffs_);
  const std::size_t n = group_->order();
  std::vector<Coeff> table(n * n, coeffs_.zero());
  for (const auto& c : components_) embed(table, c, c.solver->canonical(component_vector(f, c, true)));
  return Cocycle2(group_, coeffs_, std::move(table));
}

std::vector<Cocycle2> H2Engine::basis() const {
  const std::size_t n = group_->order();
  std::vector<Cocycle2> out;
  for (std::size_t f = 0; f < assembly_.group().rank(); ++f) {
    std::vector<Coeff> table(n * n, coeffs_.zero());
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      if (assembly_.factor_of(i) == f) {
        const auto& c = components_[pieces_[i].first];
        embed(table, c, c.solver->generator(pieces_[i].second));
      }
    out.emplace_back(group_, coeffs_, std::move(table));
  }
  return out;
}

// ---------------------------------------------------------------------------

QZEngine::QZEngine(GroupPtr g, std::int64_t modulus) : group_(std::move(g)), modulus_(modulus) {
  if (modulus_ == 1) return;
  coeffs_ = FiniteAbelian(std::vector<std::int64_t>{modulus_});
  const auto ab = abelianization(group_);
  const std::size_t n = group_->order();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> specs;
  for (const auto& [p, e] : factorize(modulus_)) {
    Prime pr;
    pr.q = 1;
    for (std::uint32_t t = 0; t < e; ++t) pr.q *= p;
    pr.cofactor_inverse = mod_inverse((modulus_ / pr.q) % pr.q, pr.q);
    pr.solver = std::make_shared<PrimePowerSolver>(group_, p, e);
    const auto& s = *pr.solver;
    // connecting image of Hom(G, Z/q)
    Mat relations;
    const auto& d = ab.abelian.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::int64_t step = pr.q / std::gcd(pr.q, d[i]);
      if (step == pr.q) continue;
      std::vector<std::int64_t> phi(n);
      for (Elem x = 0; x < n; ++x) phi[x] = (ab.coordinates[x][i] * step) % pr.q;
      auto v = s.restrict_table([&](Elem a, Elem b) {
        return Word((phi[a] + phi[b] - phi[group_->mul(a, b)]) / pr.q);
      });
      auto coords = s.coordinates(v);
      if (!coords) throw Error("connecting map produced a non-cocycle");
      relations.emplace_back(coords->begin(), coords->end());
    }
    pr.quotient = modular::ModuleQuotient(s.ring(), s.exponents(), relations);
    for (std::size_t l = 0; l < pr.quotient.exponents().size(); ++l) {
      pieces_.emplace_back(primes_.size(), l);
      specs.emplace_back(p, pr.quotient.exponents()[l]);
    }
    primes_.push_back(std::move(pr));
  }
  assembly_ = PrimaryAssembly(specs);
}

std::vector<std::int64_t> QZEngine::class_of(const Cocycle2& f) const {
  check_ambient(f, group_, coeffs_);
  if (modulus_ == 1) return {};
  const std::size_t n = group_->order();
  std::vector<std::vector<std::uint32_t>> per_prime;
  for (const auto& pr : primes_) {
    const auto& s = *pr.solver;
    auto w = [&](Elem a, Elem b) {
      return Word((__int128(f(a, b)[0]) * pr.cofactor_inverse) % pr.q);
    };
    auto v = s.restrict_table(w);
    const auto t = s.expand(v);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (t[std::size_t(a) * n + b] != w(a, b)) throw InvalidInput("table is not a 2-cocycle");
    auto coords = s.coordinates(v);
    if (!coords) throw InvalidInput("table is not a 2-cocycle");
    per_prime.push_back(pr.quotient.coordinates(Vec(coords->begin(), coords->end())));
  }
  std::vector<std::int64_t> piece_coords;
  for (const auto& [i, l] : pieces_) piece_coords.push_back(per_prime[i][l]);
  return assembly_.assemble(piece_coords);
}

std::vector<Cocycle2> QZEngine::basis() const {
  const std::size_t n = group_->order();
  std::vector<Cocycle2> out;
  for (std::size_t f = 0; f < assembly_.group().rank(); ++f) {
    std::vector<Coeff> table(n * n, coeffs_.zero());
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (assembly_.factor_of(i) != f) continue;
      const auto& pr = primes_[pieces_[i].first];
      const auto& s = *pr.solver;
      const auto& ring = s.ring();
      const Vec x = pr.quotient.generator(pieces_[i].second);
      Vec v(s.unknowns(), 0);
      for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j]) {
          const Vec gj = s.generator(j);
          for (std::size_t l = 0; l < v.size(); ++l) v[l] = ring.add(v[l], ring.mul(x[j], gj[l]));
        }
      const auto t = s.expand(s.canonical(v));
      const std::int64_t scale = modulus_ / pr.q;
      for (std::size_t e = 0; e < t.size(); ++e)
        table[e][0] = (table[e][0] + std::int64_t(t[e]) * scale) % modulus_;
    }
    out.emplace_back(group_, coeffs_, std::move(table));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cocycle2

Cocycle2::Cocycle2(GroupPtr group, FiniteAbelian coefficients, std::vector<Coeff> values)
    : group_(std::move(group)), coeffs_(std::move(coefficients)), values_(std::move(values)) {
  const std::size_t n = group_->order();
  if (values_.size() != n * n) throw InvalidInput("cocycle table has wrong size");
  const auto& d = coeffs_.invariant_factors();
  for (const auto& v : values_) {
    if (v.size() != d.size()) throw InvalidInput("cocycle value has wrong number of components");
    for (std::size_t i = 0; i < d.size(); ++i)
      if (v[i] < 0 || v[i] >= d[i]) throw InvalidInput("cocycle value out of range");
  }
  for (Elem g = 0; g < n; ++g) {
    const auto zero = coeffs_.zero();
    if ((*this)(0, g) != zero || (*this)(g, 0) != zero)
      throw InvalidInput("cocycle is not normalized");
  }
}

Cocycle2 Cocycle2::zero(GroupPtr group, FiniteAbelian coefficients) {
  const std::size_t n = group->order();
  auto z = coefficients.zero();
  return Cocycle2(std::move(group), std::move(coefficients), std::vector<Coeff>(n * n, z));
}

Cocycle2 Cocycle2::coboundary(GroupPtr group, FiniteAbelian coefficients,
                              const std::vector<Coeff>& beta) {
  const std::size_t n = group->order();
  if (beta.size() != n) throw InvalidInput("cochain has wrong length");
  if (beta[0] != coefficients.zero()) throw InvalidInput("cochain must vanish at the identity");
  std::vector<Coeff> v(n * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      v[g * n + h] = coefficients.add(coefficients.add(beta[g], beta[h]),
                                      coefficients.negate(beta[group->mul(g, h)]));
  return Cocycle2(std::move(group), std::move(coefficients), std::move(v));
}

std::optional<std::array<Elem, 3>> Cocycle2::cocycle_violation() const {
  const auto& d = coeffs_.invariant_factors();
  const std::size_t n = group_->order();
  for (Elem g = 1; g < n; ++g)
    for (Elem h = 1; h < n; ++h) {
      const Elem gh = group_->mul(g, h);
      for (Elem k = 1; k < n; ++k) {
        const auto& a = (*this)(g, h);
        const auto& b = (*this)(gh, k);
        const auto& c = (*this)(h, k);
        const auto& e = (*this)(g, group_->mul(h, k));
        for (std::size_t i = 0; i < d.size(); ++i)
          if ((a[i] + b[i] - c[i] - e[i]) % d[i] != 0) return std::array<Elem, 3>{g, h, k};
      }
    }
  return std::nullopt;
}

Cocycle2 Cocycle2::operator+(const Cocycle2& other) const {
  if (other.values_.size() != values_.size() || !(other.coeffs_ == coeffs_))
    throw InvalidInput("cocycles live on different ambients");
  std::vector<Coeff> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_.add(values_[i], other.values_[i]);
  return Cocycle2(group_, coeffs_, std::move(v));
}

Cocycle2 Cocycle2::operator-(const Cocycle2& other) const { return *this + other.scaled(-1); }

Cocycle2 Cocycle2::scaled(std::int64_t k) const {
  std::vector<Coeff> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Coeff c = values_[i];
    for (auto& x : c) x *= k;
    v[i] = coeffs_.normalize(std::move(c));
  }
  return Cocycle2(group_, coeffs_, std::move(v));
}

Cocycle2 Cocycle2::restrict_to(const Subgroup& s, const GroupPtr& sub_group) const {
  if (s.parent()->order() != group_->order()) throw InvalidInput("subgroup of a different group");
  const auto& m = s.members();
  const std::size_t k = m.size();
  if (sub_group->order() != k) throw InvalidInput("subgroup group has wrong order");
  std::vector<Coeff> v(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) v[a * k + b] = (*this)(m[a], m[b]);
  return Cocycle2(sub_group, coeffs_, std::move(v));
}

Cocycle2 Cocycle2::pullback(const GroupHom& phi) const {
  if (phi.target()->order() != group_->order()) throw InvalidInput("pullback along a map into another group");
  const std::size_t k = phi.source()->order();
  std::vector<Coeff> v(k * k);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) v[a * k + b] = (*this)(phi(a), phi(b));
  return Cocycle2(phi.source(), coeffs_, std::move(v));
}

// ---------------------------------------------------------------------------
// Extensions

ExtensionCheck check_extension(const CentralExtension& e) {
  ExtensionCheck r;
  const auto& t = e.total;
  const std::size_t m = std::size_t(e.kernel.order());
  r.surjective = e.projection.is_surjective();
  std::vector<bool> in_image(t->order(), false);
  bool injective = e.kernel_embedding.size() == m;
  for (auto x : e.kernel_embedding) {
    if (x >= t->order() || in_image[x]) injective = false;
    else in_image[x] = true;
  }
  r.injective_kernel = injective;
  if (!injective) return r;
  bool exact = true;
  for (Elem x = 0; x < t->order(); ++x) exact = exact && ((e.projection(x) == 0) == in_image[x]);
  r.exact = exact;
  bool central = true;
  for (auto a : e.kernel_embedding)
    for (Elem x = 0; x < t->order() && central; ++x) central = t->mul(a, x) == t->mul(x, a);
  r.central = central;
  bool hom = true;
  const auto elems = e.kernel.elements();
  for (std::size_t i = 0; i < m && hom; ++i)
    for (std::size_t j = 0; j < m && hom; ++j)
      hom = t->mul(e.kernel_embedding[i], e.kernel_embedding[j]) ==
            e.kernel_embedding[e.kernel.index_of(e.kernel.add(elems[i], elems[j]))];
  r.embedding_is_hom = hom;
  return r;
}

CentralExtension extension_from_cocycle(const Cocycle2& f, const Limits& limits) {
  const auto& g = f.group();
  const auto& a = f.coefficients();
  const std::size_t n = g->order();
  const std::size_t m = std::size_t(a.order());
  if (n * m > limits.max_group_order) throw CapExceeded("extension exceeds the group order cap");
  const auto elems = a.elements();
  std::vector<std::size_t> add(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) add[i * m + j] = a.index_of(a.add(elems[i], elems[j]));
  std::vector<std::size_t> fidx(n * n);
  for (std::size_t i = 0; i < n * n; ++i) fidx[i] = a.index_of(f.values()[i]);
  std::vector<std::vector<Elem>> table(n * m, std::vector<Elem>(n * m));
  for (Elem g1 = 0; g1 < n; ++g1)
    for (std::size_t a1 = 0; a1 < m; ++a1)
      for (Elem g2 = 0; g2 < n; ++g2)
        for (std::size_t a2 = 0; a2 < m; ++a2) {
          const std::size_t c = add[add[a1 * m + a2] * m + fidx[g1 * n + g2]];
          table[g1 * m + a1][g2 * m + a2] = Elem(g->mul(g1, g2) * m + c);
        }
  auto total = FiniteGroup::from_table(std::move(table), {}, limits);
  std::vector<Elem> proj(n * m), emb(m);
  for (std::size_t x = 0; x < n * m; ++x) proj[x] = Elem(x / m);
  for (std::size_t i = 0; i < m; ++i) emb[i] = Elem(i);
  return CentralExtension{total, make_hom_unchecked(total, g, std::move(proj)), a, std::move(emb)};
}

Cocycle2 cocycle_from_extension(const CentralExtension& e) {
  const auto& t = e.total;
  const auto& g = e.base();
  const std::size_t n = g->order();
  std::vector<Elem> section(n, Elem(t->order()));
  for (Elem x = t->order(); x-- > 0;) section[e.projection(x)] = x;
  std::vector<long> kernel_index(t->order(), -1);
  for (std::size_t i = 0; i < e.kernel_embedding.size(); ++i) kernel_index[e.kernel_embedding[i]] = long(i);
  std::vector<Coeff> v(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem x = t->mul(t->mul(section[a], section[b]), t->inv(section[g->mul(a, b)]));
      if (kernel_index[x] < 0) throw InvalidInput("extension is not exact");
      v[a * n + b] = e.kernel.element_at(std::size_t(kernel_index[x]));
    }
  return Cocycle2(g, e.kernel, std::move(v));
}

// ---------------------------------------------------------------------------
// CohomologyGroup

const GroupPtr& CohomologyGroup::group() const { return engine_->group(); }
const FiniteAbelian& CohomologyGroup::coefficients() const { return engine_->coefficients(); }

std::vector<std::int64_t> CohomologyGroup::class_of(const Cocycle2& f) const { return engine_->class_of(f); }

bool CohomologyGroup::is_coboundary(const Cocycle2& f) const {
  auto c = class_of(f);
  return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<std::vector<Coeff>> CohomologyGroup::coboundary_witness(const Cocycle2& f) const {
  return engine_->witness(f);
}

std::int64_t CohomologyGroup::class_order(const Cocycle2& f) const {
  return invariants_.element_order(class_of(f));
}

Cocycle2 CohomologyGroup::canonical(const Cocycle2& f) const { return engine_->canonical(f); }

Cocycle2 CohomologyGroup::cocycle_for(const std::vector<std::int64_t>& coordinates) const {
  if (coordinates.size() != basis_.size()) throw InvalidInput("wrong number of class coordinates");
  auto f = Cocycle2::zero(group(), coefficients());
  for (std::size_t i = 0; i < basis_.size(); ++i) f = f + basis_[i].scaled(coordinates[i]);
  return canonical(f);
}

std::vector<std::vector<std::int64_t>> CohomologyGroup::all_classes() const { return invariants_.elements(); }

CohomologyGroup second_cohomology(const GroupPtr& g, const FiniteAbelian& a, const Limits& limits) {
  if (g->order() > limits.max_cohomology_order) throw CapExceeded("group exceeds the cohomology order cap");
  CohomologyGroup h;
  auto engine = std::make_shared<detail::H2Engine>(g, a);
  h.invariants_ = engine->invariants();
  h.basis_ = engine->basis();
  h.engine_ = std::move(engine);
  return h;
}

FiniteAbelian RestrictionMatrix::image() const {
  return generated_abelian_subgroup(target.invariants().invariant_factors(), rows);
}

RestrictionMatrix restriction_map(const CohomologyGroup& h2, const Subgroup& s, const Limits& limits) {
  if (s.parent()->order() != h2.group()->order()) throw InvalidInput("subgroup of a different group");
  auto sub = s.as_group();
  auto target = second_cohomology(sub, h2.coefficients(), limits);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& b : h2.basis()) rows.push_back(target.class_of(b.restrict_to(s, sub)));
  return RestrictionMatrix{h2, std::move(target), std::move(rows)};
}

// ---------------------------------------------------------------------------
// Q/Z coefficients

const GroupPtr& QZCohomology::group() const { return engine_->group(); }
std::int64_t QZCohomology::modulus() const { return engine_->modulus(); }
std::vector<std::int64_t> QZCohomology::class_of(const Cocycle2& f) const { return engine_->class_of(f); }

QZCohomology qz_cohomology(const GroupPtr& g, const Limits& limits, std::optional<std::int64_t> modulus) {
  if (g->order() > limits.max_cohomology_order) throw CapExceeded("group exceeds the cohomology order cap");
  const std::int64_t n = std::int64_t(g->order());
  const std::int64_t m = modulus.value_or(n);
  if (m < 1 || m % n != 0) throw InvalidInput("modulus must be a positive multiple of the group order");
  QZCohomology out;
  auto engine = std::make_shared<detail::QZEngine>(g, m);
  out.invariants_ = engine->invariants();
  out.basis_ = engine->basis();
  out.engine_ = std::move(engine);
  return out;
}

FiniteAbelian schur_multiplier(const GroupPtr& g, const Limits& limits) {
  return qz_cohomology(g, limits).invariants();
}

DualityReport perfect_duality_check(const GroupPtr& g, const FiniteAbelian& a, const Limits& limits) {
  if (!is_perfect(g)) throw PreconditionFailed("perfect_duality_check needs a perfect group");
  DualityReport r;
  r.h2_order = second_cohomology(g, a, limits).order();
  r.multiplier = schur_multiplier(g, limits);
  r.hom_order = hom_count(r.multiplier, a);
  return r;
}

}  // namespace centext
