#include "centext/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "centext/error.hpp"

namespace centext {

void Deadline::check(const char* what) const {
  if (expired()) throw DeadlineExceeded(std::string("deadline exceeded during ") + what);
}

// ---------------------------------------------------------------------------
// FiniteGroup
// ---------------------------------------------------------------------------

GroupPtr FiniteGroup::from_table(std::vector<std::vector<Elem>> table,
                                 std::vector<std::string> labels,
                                 const Limits& limits) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidInput("group table is empty");
  if (n > limits.max_group_order)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(limits.max_group_order));
  if (!labels.empty() && labels.size() != n)
    throw InvalidInput("label count does not match group order");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw InvalidInput("group table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n)
        throw InvalidInput("table entry out of range at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
      g->table_[a * n + b] = table[a][b];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g->mul(0, Elem(a)) != a || g->mul(Elem(a), 0) != a)
      throw InvalidInput("element 0 is not the identity");
  }
  g->inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    auto r = g->row(Elem(a));
    auto it = std::find(r.begin(), r.end(), Elem(0));
    if (it == r.end()) throw InvalidInput("element " + std::to_string(a) + " has no inverse");
    Elem b = Elem(it - r.begin());
    if (g->mul(b, Elem(a)) != 0)
      throw InvalidInput("left and right inverses differ for element " + std::to_string(a));
    g->inverse_[a] = b;
  }
  // Latin square property
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      Elem c = g->mul(Elem(a), Elem(b));
      if (seen[c]) throw InvalidInput("table row " + std::to_string(a) + " repeats an entry");
      seen[c] = true;
    }
  }
  auto assoc_fails = [&](std::size_t a, std::size_t b, std::size_t c) {
    return g->mul(g->mul(Elem(a), Elem(b)), Elem(c)) != g->mul(Elem(a), g->mul(Elem(b), Elem(c)));
  };
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (assoc_fails(a, b, c))
            throw InvalidInput("table is not associative at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 10000; ++i) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (assoc_fails(a, b, c))
        throw InvalidInput("table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }

  g->orders_.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    std::size_t k = 1;
    Elem x = Elem(a);
    while (x != 0) {
      x = g->mul(x, Elem(a));
      ++k;
    }
    g->orders_[a] = k;
  }
  g->abelian_ = true;
  for (std::size_t a = 0; a < n && g->abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g->mul(Elem(a), Elem(b)) != g->mul(Elem(b), Elem(a))) {
        g->abelian_ = false;
        break;
      }
  g->labels_ = std::move(labels);
  return g;
}

Elem FiniteGroup::power(Elem a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> t(n_);
  for (std::size_t a = 0; a < n_; ++a) t[a].assign(row(Elem(a)).begin(), row(Elem(a)).end());
  return t;
}

std::string FiniteGroup::label(Elem a) const {
  if (!labels_.empty()) return labels_[a];
  return std::to_string(a);
}

// ---------------------------------------------------------------------------
// Subgroup
// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const std::size_t n = parent_->order();
  mask_.assign(n, false);
  position_.assign(n, 0);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= n) throw InvalidInput("subgroup member out of range");
    mask_[members_[i]] = true;
    position_[members_[i]] = Elem(i);
  }
  if (members_.empty() || members_[0] != 0) throw InvalidInput("subgroup lacks the identity");
  for (Elem a : members_) {
    if (!mask_[parent_->inv(a)]) throw InvalidInput("subgroup not closed under inverses");
    for (Elem b : members_)
      if (!mask_[parent_->mul(a, b)]) throw InvalidInput("subgroup not closed under products");
  }
}

bool Subgroup::is_normal() const {
  const auto& g = *parent_;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem m : members_)
      if (!mask_[g.conj(m, x)]) return false;
  return true;
}

GroupPtr Subgroup::as_group() const {
  const std::size_t k = members_.size();
  std::vector<std::vector<Elem>> t(k, std::vector<Elem>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      t[i][j] = position_[parent_->mul(members_[i], members_[j])];
  std::vector<std::string> labels;
  if (!parent_->labels().empty())
    for (Elem m : members_) labels.push_back(parent_->labels()[m]);
  Limits lim;
  lim.max_group_order = std::max(lim.max_group_order, k);
  return FiniteGroup::from_table(std::move(t), std::move(labels), lim);
}

// ---------------------------------------------------------------------------
// GroupHom
// ---------------------------------------------------------------------------

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> image, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> image)
    : GroupHom(std::move(source), std::move(target), std::move(image), Unchecked{}) {
  if (image_.size() != source_->order()) throw InvalidInput("homomorphism image has wrong size");
  for (Elem x : image_)
    if (x >= target_->order()) throw InvalidInput("homomorphism image out of range");
  if (image_[0] != 0) throw InvalidInput("homomorphism does not fix the identity");
  for (Elem a = 0; a < source_->order(); ++a)
    for (Elem b = 0; b < source_->order(); ++b)
      if (image_[source_->mul(a, b)] != target_->mul(image_[a], image_[b]))
        throw InvalidInput("map is not a homomorphism at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
}

GroupHom make_hom_unchecked(GroupPtr source, GroupPtr target, std::vector<Elem> image) {
  return GroupHom(std::move(source), std::move(target), std::move(image), GroupHom::Unchecked{});
}

GroupHom GroupHom::identity(const GroupPtr& g) {
  std::vector<Elem> img(g->order());
  std::iota(img.begin(), img.end(), Elem(0));
  return make_hom_unchecked(g, g, std::move(img));
}

GroupHom GroupHom::inclusion(const Subgroup& s, const GroupPtr& sub_group) {
  if (sub_group->order() != s.size()) throw InvalidInput("inclusion: order mismatch");
  return make_hom_unchecked(sub_group, s.parent(), s.members());
}

Subgroup GroupHom::kernel() const {
  std::vector<Elem> k;
  for (Elem a = 0; a < source_->order(); ++a)
    if (image_[a] == 0) k.push_back(a);
  return Subgroup(source_, std::move(k));
}

Subgroup GroupHom::image() const {
  std::vector<Elem> im(image_.begin(), image_.end());
  return Subgroup(target_, std::move(im));
}

bool GroupHom::is_injective() const {
  std::vector<bool> seen(target_->order(), false);
  for (Elem x : image_) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<bool> seen(target_->order(), false);
  std::size_t count = 0;
  for (Elem x : image_)
    if (!seen[x]) {
      seen[x] = true;
      ++count;
    }
  return count == target_->order();
}

GroupHom GroupHom::then(const GroupHom& other) const {
  if (other.source_ != target_ && other.source_->order() != target_->order())
    throw InvalidInput("composition: incompatible groups");
  std::vector<Elem> img(image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = other.image_[image_[i]];
  return make_hom_unchecked(source_, other.target_, std::move(img));
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

GroupPtr build(std::size_t n, const std::function<Elem(Elem, Elem)>& mul,
               std::vector<std::string> labels = {}, const Limits& limits = {}) {
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = mul(Elem(a), Elem(b));
  return FiniteGroup::from_table(std::move(t), std::move(labels), limits);
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

bool is_even(const Permutation& p) {
  std::size_t transpositions = 0;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

GroupPtr permutation_list_group(std::vector<Permutation> perms, const Limits& limits) {
  std::map<Permutation, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = Elem(i);
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(format_permutation(p));
  const std::size_t m = perms.empty() ? 0 : perms[0].size();
  return build(
      perms.size(),
      [&](Elem a, Elem b) {
        Permutation c(m);
        for (std::size_t x = 0; x < m; ++x) c[x] = perms[b][perms[a][x]];
        return index.at(c);
      },
      std::move(labels), limits);
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

GroupPtr trivial_group() { return cyclic(1); }

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group needs n >= 1");
  Limits lim;
  lim.max_group_order = std::max(lim.max_group_order, n);
  return build(n, [n](Elem a, Elem b) { return Elem((a + b) % n); }, {}, lim);
}

GroupPtr dihedral(std::size_t n) {
  if (n == 0) throw InvalidInput("dihedral group needs n >= 1");
  return build(2 * n, [n](Elem x, Elem y) {
    std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
    std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
    return Elem(rot + n * ((b + d) % 2));
  });
}

GroupPtr symmetric(std::size_t n) {
  if (n == 0) throw InvalidInput("symmetric group needs n >= 1");
  if (factorial(n) > Limits{}.max_group_order)
    throw CapExceeded("symmetric group of degree " + std::to_string(n) + " exceeds order cap");
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Permutation> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return permutation_list_group(std::move(perms), {});
}

GroupPtr alternating(std::size_t n) {
  if (n == 0) throw InvalidInput("alternating group needs n >= 1");
  if (factorial(n) / 2 > Limits{}.max_group_order)
    throw CapExceeded("alternating group of degree " + std::to_string(n) + " exceeds order cap");
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Permutation> perms;
  do
    if (is_even(p)) perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return permutation_list_group(std::move(perms), {});
}

GroupPtr quaternion8() {
  // unit u in {1,i,j,k} as 0..3, sign s; index = 2u + s.
  // i*j = k, j*k = i, k*i = j, i^2 = j^2 = k^2 = -1
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return build(
      8,
      [](Elem x, Elem y) {
        int u = int(x) / 2, s = int(x) % 2, v = int(y) / 2, t = int(y) % 2;
        return Elem(2 * unit_mul[u][v] + ((s + t + sign_mul[u][v]) % 2));
      },
      {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

GroupPtr klein_four() { return direct_product(cyclic(2), cyclic(2)); }

GroupPtr heisenberg(std::size_t p) {
  if (!is_prime(p)) throw InvalidInput("heisenberg group needs a prime p");
  const std::size_t n = p * p * p;
  if (n > Limits{}.max_group_order) throw CapExceeded("heisenberg group exceeds order cap");
  return build(n, [p](Elem x, Elem y) {
    std::size_t a = x % p, b = (x / p) % p, c = x / (p * p);
    std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
    std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
    return Elem(ra + p * rb + p * p * rc);
  });
}

GroupPtr sl2(std::size_t p) {
  if (!is_prime(p) || p > 5) throw InvalidInput("sl2 catalog supports primes p <= 5");
  using M = std::array<std::size_t, 4>;
  std::vector<M> mats{{1, 0, 0, 1}};
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t d = 0; d < p; ++d) {
          M m{a, b, c, d};
          if ((a * d + p * p - b * c) % p == 1 && m != M{1, 0, 0, 1}) mats.push_back(m);
        }
  std::map<M, Elem> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    index[mats[i]] = Elem(i);
    const auto& m = mats[i];
    labels.push_back("[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
                     std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]");
  }
  return build(
      mats.size(),
      [&](Elem x, Elem y) {
        const M& l = mats[x];
        const M& r = mats[y];
        M prod{(l[0] * r[0] + l[1] * r[2]) % p, (l[0] * r[1] + l[1] * r[3]) % p,
               (l[2] * r[0] + l[3] * r[2]) % p, (l[2] * r[1] + l[3] * r[3]) % p};
        return index.at(prod);
      },
      std::move(labels));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Limits& limits) {
  const std::size_t m = b->order();
  const std::size_t n = a->order() * m;
  if (n > limits.max_group_order) throw CapExceeded("direct product exceeds order cap");
  std::vector<std::string> labels;
  if (!a->labels().empty() || !b->labels().empty())
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back("(" + a->label(Elem(i / m)) + "," + b->label(Elem(i % m)) + ")");
  return build(
      n,
      [&](Elem x, Elem y) {
        return Elem(a->mul(Elem(x / m), Elem(y / m)) * m + b->mul(Elem(x % m), Elem(y % m)));
      },
      std::move(labels), limits);
}

Permutation parse_permutation(const std::string& text, std::size_t points) {
  Permutation p(points);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> used(points, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidInput("permutation '" + text + "': expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw InvalidInput("permutation '" + text + "': expected a point");
      std::size_t pt = std::stoul(text.substr(start, i - start));
      if (pt >= points)
        throw InvalidInput("permutation '" + text + "': point " + std::to_string(pt) +
                           " out of range");
      if (used[pt]) throw InvalidInput("permutation '" + text + "': cycles are not disjoint");
      used[pt] = true;
      cycle.push_back(std::uint32_t(pt));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      if (j != i) out << ' ';
      out << j;
      seen[j] = true;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

GroupPtr from_permutations(const std::vector<Permutation>& generators, std::size_t points,
                           const Limits& limits) {
  for (const auto& g : generators) {
    if (g.size() != points) throw InvalidInput("generator has wrong degree");
    std::vector<bool> seen(points, false);
    for (auto x : g) {
      if (x >= points || seen[x]) throw InvalidInput("generator is not a permutation");
      seen[x] = true;
    }
  }
  Permutation id(points);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elems{id};
  std::map<Permutation, Elem> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation c(points);
      for (std::size_t x = 0; x < points; ++x) c[x] = gen[elems[head][x]];
      if (index.emplace(c, Elem(elems.size())).second) {
        elems.push_back(std::move(c));
        if (elems.size() > limits.max_group_order)
          throw CapExceeded("generator closure exceeds cap " +
                            std::to_string(limits.max_group_order));
      }
    }
  }
  return permutation_list_group(std::move(elems), limits);
}

GroupPtr catalog(const std::string& name, const std::vector<std::size_t>& params,
                 const Limits& limits) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidInput("catalog '" + name + "' expects " + std::to_string(k) + " parameter(s)");
  };
  GroupPtr g;
  if (name == "trivial") {
    need(0);
    g = trivial_group();
  } else if (name == "cyclic") {
    need(1);
    g = cyclic(params[0]);
  } else if (name == "dihedral") {
    need(1);
    g = dihedral(params[0]);
  } else if (name == "symmetric") {
    need(1);
    g = symmetric(params[0]);
  } else if (name == "alternating") {
    need(1);
    g = alternating(params[0]);
  } else if (name == "quaternion8") {
    need(0);
    g = quaternion8();
  } else if (name == "klein4") {
    need(0);
    g = klein_four();
  } else if (name == "heisenberg") {
    need(1);
    g = heisenberg(params[0]);
  } else if (name == "sl2") {
    need(1);
    g = sl2(params[0]);
  } else {
    throw InvalidInput("unknown catalog name '" + name + "'");
  }
  if (g->order() > limits.max_group_order) throw CapExceeded("catalog group exceeds order cap");
  return g;
}

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

namespace {

std::vector<bool> closure_mask(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> mask(g.order(), false);
  std::vector<Elem> queue{0};
  mask[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Elem x : gens) {
      Elem y = g.mul(queue[head], x);
      if (!mask[y]) {
        mask[y] = true;
        queue.push_back(y);
      }
    }
  return mask;
}

std::vector<Elem> mask_members(const std::vector<bool>& mask) {
  std::vector<Elem> m;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) m.push_back(Elem(i));
  return m;
}

}  // namespace

Subgroup generated_subgroup(const GroupPtr& g, std::span<const Elem> generators) {
  return Subgroup(g, mask_members(closure_mask(*g, generators)));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Elem> all(g->order());
  std::iota(all.begin(), all.end(), Elem(0));
  return Subgroup(g, std::move(all));
}

Subgroup commutator_subgroup(const GroupPtr& g) {
  std::vector<bool> is_comm(g->order(), false);
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = 0; b < g->order(); ++b) is_comm[g->commutator(a, b)] = true;
  auto comms = mask_members(is_comm);
  return generated_subgroup(g, comms);
}

Subgroup center(const GroupPtr& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g->order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g->order() && central; ++b) central = g->mul(a, b) == g->mul(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup(g, std::move(z));
}

std::vector<Elem> generating_set(const GroupPtr& g) {
  std::vector<Elem> gens;
  std::vector<bool> current = closure_mask(*g, gens);
  std::size_t size = 1;
  while (size < g->order()) {
    Elem best = 0;
    std::size_t best_size = 0;
    std::vector<bool> best_mask;
    for (Elem x = 1; x < g->order(); ++x) {
      if (current[x]) continue;
      gens.push_back(x);
      auto m = closure_mask(*g, gens);
      gens.pop_back();
      std::size_t s = std::size_t(std::count(m.begin(), m.end(), true));
      if (s > best_size) {
        best = x;
        best_size = s;
        best_mask = std::move(m);
        if (s == g->order()) break;
      }
    }
    gens.push_back(best);
    current = std::move(best_mask);
    size = best_size;
  }
  return gens;
}

Quotient quotient(const Subgroup& normal) {
  if (!normal.is_normal()) throw InvalidInput("quotient: subgroup is not normal");
  const auto& g = normal.parent();
  const std::size_t n = g->order();
  std::vector<Elem> coset(n, Elem(-1));
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (coset[a] != Elem(-1)) continue;
    Elem id = Elem(reps.size());
    reps.push_back(a);
    for (Elem m : normal.members()) coset[g->mul(a, m)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<Elem>> t(k, std::vector<Elem>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t[i][j] = coset[g->mul(reps[i], reps[j])];
  auto q = FiniteGroup::from_table(std::move(t));
  return Quotient{q, make_hom_unchecked(g, q, std::move(coset)), std::move(reps)};
}

std::size_t commutator_width(const GroupPtr& g) {
  if (g->is_abelian()) return 0;
  const std::size_t n = g->order();
  std::vector<bool> comm(n, false);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) comm[g->commutator(a, b)] = true;
  const auto derived = commutator_subgroup(g);
  std::vector<Elem> comm_list = mask_members(comm);
  std::vector<bool> current = comm;
  std::size_t width = 1;
  auto covers = [&] {
    for (Elem d : derived.members())
      if (!current[d]) return false;
    return true;
  };
  while (!covers()) {
    std::vector<bool> next(n, false);
    for (Elem a = 0; a < n; ++a)
      if (current[a])
        for (Elem c : comm_list) next[g->mul(a, c)] = true;
    current = std::move(next);
    ++width;
  }
  return width;
}

bool is_perfect(const GroupPtr& g) { return commutator_subgroup(g).is_whole(); }

std::vector<std::size_t> order_statistics(const GroupPtr& g) {
  std::vector<std::size_t> s(g->order());
  for (Elem a = 0; a < g->order(); ++a) s[a] = g->element_order(a);
  std::sort(s.begin(), s.end());
  return s;
}

std::optional<GroupHom> find_homomorphism(
    const GroupPtr& source, const GroupPtr& target,
    const std::function<std::vector<Elem>(Elem)>& candidates,
    const HomSearchOptions& options) {
  const auto gens = generating_set(source);
  const std::size_t n = source->order();
  if (options.injective && n > target->order()) return std::nullopt;
  if (options.surjective && n < target->order()) return std::nullopt;

  std::vector<std::vector<Elem>> cands;
  for (Elem x : gens) cands.push_back(candidates(x));
  std::vector<Elem> images(gens.size());
  std::vector<Elem> map(n);
  std::vector<bool> mapped(n);

  // Extends the assignment on gens[0..depth] to the subgroup they generate;
  // false on inconsistency.
  auto extend = [&](std::size_t depth) {
    std::fill(mapped.begin(), mapped.end(), false);
    std::vector<bool> hit(options.injective ? target->order() : 0, false);
    std::vector<Elem> queue{0};
    mapped[0] = true;
    map[0] = 0;
    if (options.injective) hit[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Elem u = queue[head];
      for (std::size_t j = 0; j <= depth; ++j) {
        Elem v = source->mul(u, gens[j]);
        Elem expected = target->mul(map[u], images[j]);
        if (mapped[v]) {
          if (map[v] != expected) return false;
        } else {
          if (options.injective) {
            if (hit[expected]) return false;
            hit[expected] = true;
          }
          mapped[v] = true;
          map[v] = expected;
          queue.push_back(v);
        }
      }
    }
    return true;
  };

  std::optional<GroupHom> found;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) {
      if (options.surjective) {
        std::vector<bool> hit(target->order(), false);
        std::size_t c = 0;
        for (Elem a = 0; a < n; ++a)
          if (!hit[map[a]]) {
            hit[map[a]] = true;
            ++c;
          }
        if (c != target->order()) return false;
      }
      found = make_hom_unchecked(source, target, map);
      return true;
    }
    for (Elem c : cands[depth]) {
      options.deadline.check("homomorphism search");
      images[depth] = c;
      if (extend(depth) && search(depth + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) {
    map.assign(n, 0);
    if (options.surjective && target->order() != 1) return std::nullopt;
    return make_hom_unchecked(source, target, map);
  }
  search(0);
  return found;
}

std::optional<GroupHom> find_isomorphism(const GroupPtr& a, const GroupPtr& b,
                                         const Limits& limits) {
  if (a->order() > limits.max_isomorphism_order || b->order() > limits.max_isomorphism_order)
    throw CapExceeded("find_isomorphism: order exceeds cap");
  if (a->order() != b->order()) return std::nullopt;
  if (a->is_abelian() != b->is_abelian()) return std::nullopt;
  if (order_statistics(a) != order_statistics(b)) return std::nullopt;
  std::map<std::size_t, std::vector<Elem>> by_order;
  for (Elem x = 0; x < b->order(); ++x) by_order[b->element_order(x)].push_back(x);
  HomSearchOptions opts;
  opts.injective = true;
  opts.surjective = true;
  return find_homomorphism(
      a, b, [&](Elem g) { return by_order[a->element_order(g)]; }, opts);
}

}  // namespace centext
