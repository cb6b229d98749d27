#include "centext/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "centext/error.hpp"
#include "centext/smith.hpp"

namespace centext {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// Nontrivial diagonal entries of the Smith form of `rows` (a relation matrix
// whose rows span the relations of Z^cols).
std::vector<std::int64_t> nontrivial_invariants(const IntMatrix& rows, std::size_t cols) {
  if (rows.empty()) {
    if (cols != 0) throw InvalidInput("relation matrix describes an infinite group");
    return {};
  }
  SNFOptions opt;
  opt.max_dimension = std::max(rows.size(), cols) + 1;
  opt.want_left = false;
  opt.want_right = false;
  auto snf = smith_normal_form(rows, opt);
  std::vector<std::int64_t> out;
  if (snf.invariants.size() < cols)
    throw InvalidInput("relation matrix describes an infinite group");
  for (const auto& d : snf.invariants) {
    if (d == 0) throw InvalidInput("relation matrix describes an infinite group");
    if (d != 1) out.push_back(static_cast<std::int64_t>(d));
  }
  return out;
}

}  // namespace

FiniteAbelian::FiniteAbelian(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw InvalidInput("invariant factors must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw InvalidInput("invariant factors must form a divisibility chain");
  }
}

FiniteAbelian FiniteAbelian::from_cyclic_orders(const std::vector<std::int64_t>& orders) {
  const std::size_t k = orders.size();
  IntMatrix diag(k, std::vector<BigInt>(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (orders[i] < 1) throw InvalidInput("cyclic orders must be positive");
    diag[i][i] = orders[i];
  }
  return FiniteAbelian(nontrivial_invariants(diag, k));
}

std::int64_t FiniteAbelian::order() const {
  std::int64_t n = 1;
  for (auto d : factors_) n *= d;
  return n;
}

FiniteAbelian::Element FiniteAbelian::add(const Element& a, const Element& b) const {
  Element c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(a[i] + b[i], factors_[i]);
  return c;
}

FiniteAbelian::Element FiniteAbelian::negate(const Element& a) const {
  Element c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(-a[i], factors_[i]);
  return c;
}

FiniteAbelian::Element FiniteAbelian::normalize(Element a) const {
  if (a.size() != factors_.size()) throw InvalidInput("element has wrong number of components");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i], factors_[i]);
  return a;
}

std::int64_t FiniteAbelian::element_order(const Element& a) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    o = std::lcm(o, factors_[i] / std::gcd(mod(a[i], factors_[i]), factors_[i]));
  return o;
}

std::size_t FiniteAbelian::index_of(const Element& a) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * std::size_t(factors_[i]) + std::size_t(mod(a[i], factors_[i]));
  return idx;
}

FiniteAbelian::Element FiniteAbelian::element_at(std::size_t index) const {
  Element a(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    a[i] = std::int64_t(index % std::size_t(factors_[i]));
    index /= std::size_t(factors_[i]);
  }
  return a;
}

std::vector<FiniteAbelian::Element> FiniteAbelian::elements() const {
  std::vector<Element> out;
  const auto n = std::size_t(order());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

GroupPtr FiniteAbelian::to_group(const Limits& limits) const {
  const auto n = std::size_t(order());
  if (n > limits.max_group_order) throw CapExceeded("abelian group exceeds order cap");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  auto elems = elements();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = Elem(index_of(add(elems[a], elems[b])));
  return FiniteGroup::from_table(std::move(t), {}, limits);
}

std::string FiniteAbelian::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < factors_.size(); ++i) out << (i ? "," : "") << factors_[i];
  out << ']';
  return out.str();
}

std::int64_t hom_count(const FiniteAbelian& a, const FiniteAbelian& b) {
  std::int64_t n = 1;
  for (auto d : a.invariant_factors())
    for (auto e : b.invariant_factors()) n *= std::gcd(d, e);
  return n;
}

std::int64_t ext_count(const FiniteAbelian& a, const FiniteAbelian& b) { return hom_count(a, b); }

bool embeds_in(const FiniteAbelian& a, const FiniteAbelian& b) {
  const auto& fa = a.invariant_factors();
  const auto& fb = b.invariant_factors();
  if (fa.size() > fb.size()) return false;
  // align from the largest factor down
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (fb[fb.size() - 1 - i] % fa[fa.size() - 1 - i] != 0) return false;
  return true;
}

SubgroupBasis subgroup_basis(const std::vector<std::int64_t>& moduli,
                             const std::vector<std::vector<std::int64_t>>& generators) {
  // S = Z^r / K with K = {x : sum x_j g_j = 0 in (+)Z/m_i}. K is the
  // projection to the first r coordinates of the integer kernel of
  // B = [g_1 ... g_r | diag(m)].
  const std::size_t k = moduli.size();
  const std::size_t r = generators.size();
  if (k == 0 || r == 0) return {};
  IntMatrix b(k, std::vector<BigInt>(r + k));
  for (std::size_t j = 0; j < r; ++j) {
    if (generators[j].size() != k) throw InvalidInput("generator has wrong number of components");
    for (std::size_t i = 0; i < k; ++i) b[i][j] = mod(generators[j][i], moduli[i]);
  }
  for (std::size_t i = 0; i < k; ++i) b[i][r + i] = moduli[i];
  SNFOptions opt;
  opt.max_dimension = r + k + 1;
  opt.want_left = false;
  auto snf = smith_normal_form(b, opt);
  std::size_t rank = 0;
  while (rank < snf.invariants.size() && snf.invariants[rank] != 0) ++rank;
  IntMatrix kernel;
  for (std::size_t c = rank; c < r + k; ++c) {
    std::vector<BigInt> v(r);
    for (std::size_t j = 0; j < r; ++j) v[j] = snf.right[j][c];
    kernel.push_back(std::move(v));
  }
  // K * V = U^-1 D: in coordinates y = x V the relations are y_j in d_j Z,
  // so the j-th summand is generated by e_j V^-1
  SNFOptions kopt;
  kopt.max_dimension = std::max(kernel.size(), r) + 1;
  auto ksnf = smith_normal_form(kernel, kopt);
  SNFOptions vopt;
  vopt.max_dimension = r + 1;
  auto vsnf = smith_normal_form(ksnf.right, vopt);
  const IntMatrix v_inverse = multiply(vsnf.right, vsnf.left);
  SubgroupBasis out;
  std::vector<std::int64_t> factors;
  for (std::size_t j = 0; j < r; ++j) {
    const auto& d = ksnf.invariants.at(j);
    if (d == 0) throw InvalidInput("generated subgroup is infinite");
    if (d == 1) continue;
    factors.push_back(static_cast<std::int64_t>(d));
    std::vector<std::int64_t> e(k);
    for (std::size_t i = 0; i < k; ++i) {
      BigInt acc = 0;
      for (std::size_t l = 0; l < r; ++l) acc += v_inverse[j][l] * mod(generators[l][i], moduli[i]);
      BigInt m = acc % moduli[i];
      if (m < 0) m += moduli[i];
      e[i] = static_cast<std::int64_t>(m);
    }
    out.basis.push_back(std::move(e));
  }
  out.structure = FiniteAbelian(factors);
  return out;
}

FiniteAbelian generated_abelian_subgroup(const std::vector<std::int64_t>& moduli,
                                         const std::vector<std::vector<std::int64_t>>& generators) {
  return subgroup_basis(moduli, generators).structure;
}

AbelianStructure abelian_structure(const GroupPtr& g) {
  if (!g->is_abelian()) throw InvalidInput("abelian_structure: group is not abelian");
  const auto gens = generating_set(g);
  const std::size_t r = gens.size();
  const std::size_t n = g->order();
  // exponent vectors along a breadth-first spanning tree
  std::vector<std::vector<std::int64_t>> vec(n);
  std::vector<bool> seen(n, false);
  std::vector<Elem> queue{0};
  vec[0].assign(r, 0);
  seen[0] = true;
  IntMatrix relations;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem u = queue[head];
    for (std::size_t j = 0; j < r; ++j) {
      Elem v = g->mul(u, gens[j]);
      auto step = vec[u];
      step[j] += 1;
      if (!seen[v]) {
        seen[v] = true;
        vec[v] = std::move(step);
        queue.push_back(v);
      } else {
        std::vector<BigInt> rel(r);
        bool nonzero = false;
        for (std::size_t i = 0; i < r; ++i) {
          rel[i] = step[i] - vec[v][i];
          nonzero = nonzero || rel[i] != 0;
        }
        if (nonzero) relations.push_back(std::move(rel));
      }
    }
  }
  AbelianStructure out;
  out.coordinates.assign(n, {});
  if (r == 0) return out;
  SNFOptions opt;
  opt.max_dimension = std::max(relations.size(), r) + 1;
  opt.want_left = false;
  auto snf = smith_normal_form(relations, opt);
  // coordinates of x are (x * right)_j mod d_j, dropping unit factors
  std::vector<std::size_t> keep;
  std::vector<std::int64_t> factors;
  for (std::size_t j = 0; j < r; ++j) {
    const auto& d = snf.invariants.at(j);
    if (d == 0) throw InvalidInput("abelian_structure: infinite relation lattice");
    if (d != 1) {
      keep.push_back(j);
      factors.push_back(static_cast<std::int64_t>(d));
    }
  }
  out.abelian = FiniteAbelian(factors);
  for (std::size_t e = 0; e < n; ++e) {
    FiniteAbelian::Element c;
    for (std::size_t idx = 0; idx < keep.size(); ++idx) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc += BigInt(vec[e][i]) * snf.right[i][keep[idx]];
      BigInt m = acc % factors[idx];
      if (m < 0) m += factors[idx];
      c.push_back(static_cast<std::int64_t>(m));
    }
    out.coordinates[e] = std::move(c);
  }
  return out;
}

Abelianization abelianization(const GroupPtr& g) {
  auto q = quotient(commutator_subgroup(g));
  auto s = abelian_structure(q.group);
  auto target = s.abelian.to_group();
  std::vector<Elem> img(g->order());
  std::vector<FiniteAbelian::Element> coords(g->order());
  for (Elem x = 0; x < g->order(); ++x) {
    coords[x] = s.coordinates[q.projection(x)];
    img[x] = Elem(s.abelian.index_of(coords[x]));
  }
  return Abelianization{s.abelian, make_hom_unchecked(g, target, std::move(img)),
                        std::move(coords)};
}

}  // namespace centext
