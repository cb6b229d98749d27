#include "centext/crossed_module.hpp"

#include <algorithm>
#include <random>

#include "centext/error.hpp"

namespace centext {

bool CheckReport::ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) { return v.pass; });
}

const AxiomVerdict* CheckReport::first_failure() const {
  for (const auto& v : verdicts)
    if (!v.pass) return &v;
  return nullptr;
}

const AxiomVerdict& CheckReport::operator[](const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return v;
  throw InvalidInput("no verdict named " + name);
}

void CheckReport::add(std::string name, std::optional<std::vector<Elem>> counterexample) {
  AxiomVerdict v;
  v.name = std::move(name);
  v.pass = !counterexample;
  if (counterexample) v.counterexample = std::move(*counterexample);
  verdicts.push_back(std::move(v));
}

void CheckReport::append(const CheckReport& other) {
  verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
}

// ---------------------------------------------------------------------------

CrossedModule::CrossedModule(GroupHom delta, std::vector<std::vector<Elem>> action)
    : delta_(std::move(delta)) {
  const std::size_t nh = source()->order(), ng = target()->order();
  if (action.size() != ng) throw InvalidInput("action table needs one row per element of G");
  action_.reserve(ng * nh);
  for (const auto& row : action) {
    if (row.size() != nh) throw InvalidInput("action row needs one entry per element of H");
    for (auto x : row) {
      if (x >= nh) throw InvalidInput("action entry out of range");
      action_.push_back(x);
    }
  }
}

CrossedModule CrossedModule::normal_inclusion(const Subgroup& n) {
  if (!n.is_normal()) throw InvalidInput("normal_inclusion: subgroup is not normal");
  const auto& g = n.parent();
  auto h = n.as_group();
  std::vector<std::vector<Elem>> action(g->order(), std::vector<Elem>(n.size()));
  for (Elem x = 0; x < g->order(); ++x)
    for (Elem i = 0; i < n.size(); ++i) action[x][i] = n.index_of(g->conj(n.members()[i], x));
  return CrossedModule(GroupHom::inclusion(n, h), std::move(action));
}

CrossedModule CrossedModule::trivial_action(GroupHom delta) {
  const std::size_t nh = delta.source()->order(), ng = delta.target()->order();
  std::vector<Elem> row(nh);
  for (Elem i = 0; i < nh; ++i) row[i] = i;
  return CrossedModule(std::move(delta), std::vector<std::vector<Elem>>(ng, row));
}

CrossedModule CrossedModule::from_extension(const CentralExtension& e) {
  const auto& t = e.total;
  const auto& g = e.base();
  std::vector<Elem> section(g->order(), 0);
  for (Elem x = t->order(); x-- > 0;) section[e.projection(x)] = x;
  std::vector<std::vector<Elem>> action(g->order(), std::vector<Elem>(t->order()));
  for (Elem x = 0; x < g->order(); ++x)
    for (Elem h = 0; h < t->order(); ++h) action[x][h] = t->conj(h, section[x]);
  return CrossedModule(e.projection, std::move(action));
}

std::vector<std::vector<Elem>> CrossedModule::action_table() const {
  const std::size_t nh = source()->order(), ng = target()->order();
  std::vector<std::vector<Elem>> out(ng);
  for (std::size_t g = 0; g < ng; ++g)
    out[g].assign(action_.begin() + std::ptrdiff_t(g * nh), action_.begin() + std::ptrdiff_t((g + 1) * nh));
  return out;
}

CheckReport check_crossed_module(const CrossedModule& xm) {
  const auto& H = *xm.source();
  const auto& G = *xm.target();
  const auto& d = xm.delta();
  const Elem nh = Elem(H.order()), ng = Elem(G.order());
  CheckReport r;

  std::optional<std::vector<Elem>> bad;
  for (Elem h = 0; h < nh && !bad; ++h)
    if (xm.act(h, 0) != h) bad = std::vector<Elem>{h, 0, 0};
  for (Elem h = 0; h < nh && !bad; ++h)
    for (Elem g = 0; g < ng && !bad; ++g)
      for (Elem g2 = 0; g2 < ng && !bad; ++g2)
        if (xm.act(xm.act(h, g), g2) != xm.act(h, G.mul(g, g2))) bad = std::vector<Elem>{h, g, g2};
  r.add("right_action", bad);

  bad.reset();
  for (Elem h1 = 0; h1 < nh && !bad; ++h1)
    for (Elem h2 = 0; h2 < nh && !bad; ++h2)
      for (Elem g = 0; g < ng && !bad; ++g)
        if (xm.act(H.mul(h1, h2), g) != H.mul(xm.act(h1, g), xm.act(h2, g))) bad = std::vector<Elem>{h1, h2, g};
  r.add("automorphism", bad);

  bad.reset();
  for (Elem h1 = 0; h1 < nh && !bad; ++h1)
    for (Elem h2 = 0; h2 < nh && !bad; ++h2)
      if (xm.act(h2, d(h1)) != H.conj(h2, h1)) bad = std::vector<Elem>{h1, h2};
  r.add("peiffer_1", bad);

  bad.reset();
  for (Elem h = 0; h < nh && !bad; ++h)
    for (Elem g = 0; g < ng && !bad; ++g)
      if (d(xm.act(h, g)) != G.conj(d(h), g)) bad = std::vector<Elem>{h, g};
  r.add("peiffer_2", bad);
  return r;
}

// ---------------------------------------------------------------------------

StableBracket::StableBracket(CrossedModule parent, std::vector<std::vector<Elem>> bracket)
    : parent_(std::move(parent)) {
  const std::size_t ng = parent_.target()->order(), nh = parent_.source()->order();
  if (bracket.size() != ng) throw InvalidInput("bracket table needs one row per element of G");
  for (const auto& row : bracket) {
    if (row.size() != ng) throw InvalidInput("bracket table must be square");
    for (auto x : row) {
      if (x >= nh) throw InvalidInput("bracket entry out of range");
      table_.push_back(x);
    }
  }
}

std::vector<std::vector<Elem>> StableBracket::table() const {
  const std::size_t ng = parent_.target()->order();
  std::vector<std::vector<Elem>> out(ng);
  for (std::size_t g = 0; g < ng; ++g)
    out[g].assign(table_.begin() + std::ptrdiff_t(g * ng), table_.begin() + std::ptrdiff_t((g + 1) * ng));
  return out;
}

CheckReport check_strictly_stable(const StableBracket& sb) {
  const auto& xm = sb.parent();
  const auto& H = *xm.source();
  const auto& G = *xm.target();
  const auto& d = xm.delta();
  const Elem nh = Elem(H.order()), ng = Elem(G.order());
  CheckReport r;
  std::optional<std::vector<Elem>> bad;

  for (Elem a = 0; a < ng && !bad; ++a)
    for (Elem b = 0; b < ng && !bad; ++b)
      if (d(sb(a, b)) != G.commutator(a, b)) bad = std::vector<Elem>{a, b};
  r.add("axiom_1", bad);

  bad.reset();
  for (Elem h1 = 0; h1 < nh && !bad; ++h1)
    for (Elem h2 = 0; h2 < nh && !bad; ++h2)
      if (sb(d(h1), d(h2)) != H.commutator(h1, h2)) bad = std::vector<Elem>{h1, h2};
  r.add("axiom_2", bad);

  bad.reset();
  for (Elem h = 0; h < nh && !bad; ++h)
    for (Elem g = 0; g < ng && !bad; ++g)
      if (sb(d(h), g) != H.mul(H.inv(h), xm.act(h, g))) bad = std::vector<Elem>{h, g};
  r.add("axiom_3", bad);

  bad.reset();
  for (Elem h = 0; h < nh && !bad; ++h)
    for (Elem g = 0; g < ng && !bad; ++g)
      if (sb(g, d(h)) != H.mul(H.inv(xm.act(h, g)), h)) bad = std::vector<Elem>{h, g};
  r.add("axiom_4", bad);

  bad.reset();
  for (Elem g0 = 0; g0 < ng && !bad; ++g0)
    for (Elem g1 = 0; g1 < ng && !bad; ++g1)
      for (Elem g2 = 0; g2 < ng && !bad; ++g2)
        if (sb(g0, G.mul(g1, g2)) != H.mul(sb(g0, g2), xm.act(sb(g0, g1), g2)))
          bad = std::vector<Elem>{g0, g1, g2};
  r.add("axiom_5", bad);

  bad.reset();
  for (Elem g0 = 0; g0 < ng && !bad; ++g0)
    for (Elem g1 = 0; g1 < ng && !bad; ++g1)
      for (Elem g2 = 0; g2 < ng && !bad; ++g2)
        if (sb(G.mul(g0, g1), g2) != H.mul(xm.act(sb(g0, g2), g1), sb(g1, g2)))
          bad = std::vector<Elem>{g0, g1, g2};
  r.add("axiom_6", bad);

  bad.reset();
  for (Elem a = 0; a < ng && !bad; ++a)
    for (Elem b = 0; b < ng && !bad; ++b)
      if (H.mul(sb(a, b), sb(b, a)) != 0) bad = std::vector<Elem>{a, b};
  r.add("axiom_7", bad);

  bad.reset();
  for (Elem a = 0; a < ng && !bad; ++a)
    if (sb(a, a) != 0) bad = std::vector<Elem>{a};
  r.add("axiom_8", bad);
  return r;
}

StableFromLift stable_from_lift(const GroupHom& delta, const std::vector<std::vector<Elem>>& lift) {
  const auto& H = *delta.source();
  const auto& G = *delta.target();
  const Elem nh = Elem(H.order()), ng = Elem(G.order());
  if (lift.size() != ng) throw InvalidInput("lift table needs one row per element of G");
  for (Elem a = 0; a < ng; ++a) {
    if (lift[a].size() != ng) throw InvalidInput("lift table must be square");
    for (Elem b = 0; b < ng; ++b) {
      if (lift[a][b] >= nh) throw InvalidInput("lift entry out of range");
      if (delta(lift[a][b]) != G.commutator(a, b)) throw InvalidInput("lift does not cover the commutator map");
    }
  }
  if (lift[0][0] != 0) throw InvalidInput("lift(1,1) must be 1");
  for (Elem h = 0; h < nh; ++h)
    if (delta(h) == 0)
      for (Elem x = 0; x < nh; ++x)
        if (H.mul(h, x) != H.mul(x, h)) throw InvalidInput("kernel of delta is not central");

  std::vector<std::vector<Elem>> action(ng, std::vector<Elem>(nh));
  for (Elem g = 0; g < ng; ++g)
    for (Elem h = 0; h < nh; ++h) action[g][h] = H.mul(h, lift[delta(h)][g]);
  StableFromLift out;
  CrossedModule xm(delta, std::move(action));
  out.crossed = check_crossed_module(xm);
  StableBracket sb(std::move(xm), lift);
  if (out.crossed.ok()) out.stable = check_strictly_stable(sb);
  if (out.crossed.ok() && out.stable.ok()) out.bracket = std::move(sb);
  return out;
}

// ---------------------------------------------------------------------------

RestrictedExtension restriction_of_extension(const CentralExtension& e, const Subgroup& s) {
  const auto& t = e.total;
  const auto& g = e.base();
  if (s.parent()->order() != g->order()) throw InvalidInput("subgroup of a different group");
  std::vector<Elem> members;
  for (Elem x = 0; x < t->order(); ++x)
    if (s.contains(e.projection(x))) members.push_back(x);
  Subgroup pre(t, members);
  auto total = pre.as_group();
  auto base = s.as_group();
  std::vector<Elem> proj(pre.size());
  for (Elem i = 0; i < pre.size(); ++i) proj[i] = s.index_of(e.projection(pre.members()[i]));
  std::vector<Elem> emb;
  for (auto a : e.kernel_embedding) emb.push_back(pre.index_of(a));
  CentralExtension full{total, make_hom_unchecked(total, base, std::move(proj)), e.kernel, std::move(emb)};

  std::optional<std::vector<std::vector<Elem>>> lift;
  if (s == commutator_subgroup(g)) {
    std::vector<Elem> section(g->order(), 0);
    for (Elem x = t->order(); x-- > 0;) section[e.projection(x)] = x;
    lift.emplace(g->order(), std::vector<Elem>(g->order()));
    for (Elem a = 0; a < g->order(); ++a)
      for (Elem b = 0; b < g->order(); ++b)
        (*lift)[a][b] = pre.index_of(t->commutator(section[a], section[b]));
  }
  return RestrictedExtension{std::move(pre), std::move(full), std::move(lift)};
}

// ---------------------------------------------------------------------------

namespace {

Subgroup checked_image(const CrossedModule& xm) {
  auto r = check_crossed_module(xm);
  if (!r.ok()) throw InvalidInput("not a crossed module: " + r.first_failure()->name + " fails");
  return xm.delta().image();
}

}  // namespace

QuotientGroupoid::QuotientGroupoid(CrossedModule xm)
    : xm_(std::move(xm)),
      pi0_(quotient(checked_image(xm_))),
      kernel_(xm_.delta().kernel()),
      pi1_(abelian_structure(kernel_.as_group()).abelian) {}

Elem QuotientGroupoid::target(const Arrow& a) const {
  return xm_.target()->mul(a.source, xm_.delta()(a.label));
}

std::vector<Elem> QuotientGroupoid::arrows(Elem g, Elem g2) const {
  const auto& G = *xm_.target();
  const Elem want = G.mul(G.inv(g), g2);
  std::vector<Elem> out;
  for (Elem h = 0; h < xm_.source()->order(); ++h)
    if (xm_.delta()(h) == want) out.push_back(h);
  return out;
}

QuotientGroupoid::Arrow QuotientGroupoid::compose(const Arrow& a, const Arrow& b) const {
  if (target(a) != b.source) throw InvalidInput("arrows are not composable");
  return Arrow{a.source, xm_.source()->mul(a.label, b.label)};
}

QuotientGroupoid::Arrow QuotientGroupoid::tensor(const Arrow& a, const Arrow& b) const {
  return Arrow{xm_.target()->mul(a.source, b.source),
               xm_.source()->mul(xm_.act(a.label, b.source), b.label)};
}

QuotientGroupoid quotient_groupoid(const CrossedModule& xm) { return QuotientGroupoid(xm); }

// ---------------------------------------------------------------------------

FirstIso first_iso(const GroupHom& f, const CrossedModule& target, const Limits& limits) {
  const auto& gamma = f.source();
  const auto& H = *target.source();
  const auto& G = *target.target();
  const auto& d = target.delta();
  if (f.target()->order() != G.order()) throw InvalidInput("first_iso: f must land in the base of the target");
  {
    auto r = check_crossed_module(target);
    if (!r.ok()) throw InvalidInput("first_iso: target is not a crossed module");
  }
  const Elem nx = Elem(gamma->order()), nh = Elem(H.order());

  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < nx; ++x)
    for (Elem h = 0; h < nh; ++h)
      if (d(h) == f(x)) pairs.emplace_back(x, h);
  const std::size_t nk = pairs.size();
  if (nk > limits.max_group_order) throw CapExceeded("first_iso: fiber product exceeds the order cap");
  std::vector<std::size_t> index(std::size_t(nx) * nh, nk);
  for (std::size_t i = 0; i < nk; ++i) index[pairs[i].first * nh + pairs[i].second] = i;
  auto idx = [&](Elem x, Elem h) { return Elem(index[std::size_t(x) * nh + h]); };

  std::vector<std::vector<Elem>> table(nk, std::vector<Elem>(nk));
  for (std::size_t i = 0; i < nk; ++i)
    for (std::size_t j = 0; j < nk; ++j)
      table[i][j] = idx(gamma->mul(pairs[i].first, pairs[j].first), H.mul(pairs[i].second, pairs[j].second));
  auto kgroup = FiniteGroup::from_table(std::move(table), {}, limits);

  std::vector<Elem> proj(nk), to_h(nk);
  for (std::size_t i = 0; i < nk; ++i) {
    proj[i] = pairs[i].first;
    to_h[i] = pairs[i].second;
  }
  std::vector<std::vector<Elem>> action(nx, std::vector<Elem>(nk));
  for (Elem c = 0; c < nx; ++c)
    for (std::size_t i = 0; i < nk; ++i)
      action[c][i] = idx(gamma->conj(pairs[i].first, c), target.act(pairs[i].second, f(c)));

  FirstIso out{pairs, CrossedModule(make_hom_unchecked(kgroup, gamma, std::move(proj)), std::move(action)),
               make_hom_unchecked(kgroup, target.source(), std::move(to_h)), {}};
  const auto& K = *kgroup;
  const auto& dk = out.k.delta();

  // K -> Gamma and K -> H are homomorphisms by construction; record it
  std::optional<std::vector<Elem>> bad;
  for (Elem i = 0; i < nk && !bad; ++i)
    for (Elem j = 0; j < nk && !bad; ++j)
      if (dk(K.mul(i, j)) != gamma->mul(dk(i), dk(j)) || out.to_h(K.mul(i, j)) != H.mul(out.to_h(i), out.to_h(j)))
        bad = std::vector<Elem>{i, j};
  out.checks.add("projections_are_homomorphisms", bad);

  for (auto v : check_crossed_module(out.k).verdicts) {
    v.name = "k_" + v.name;
    out.checks.verdicts.push_back(std::move(v));
  }

  // objects: the image of k's source object commutes with f
  bad.reset();
  for (Elem i = 0; i < nk && !bad; ++i)
    if (d(out.to_h(i)) != f(dk(i))) bad = std::vector<Elem>{i};
  out.checks.add("commutes_objectwise", bad);

  // arrows compose: (x, k) then (x dk(k), k') is (x, kk'); images compose in [G/H]
  bad.reset();
  for (Elem i = 0; i < nk && !bad; ++i)
    for (Elem j = 0; j < nk && !bad; ++j)
      if (out.to_h(K.mul(i, j)) != H.mul(out.to_h(i), out.to_h(j))) bad = std::vector<Elem>{i, j};
  out.checks.add("functor_composition", bad);

  // tensor: ((x,k) (x) (x',k')) -> (f(x) f(x'), h^{f(x')} h')
  bad.reset();
  const std::uint64_t arrows = std::uint64_t(nx) * nk;
  auto check_tensor = [&](Elem x, Elem i, Elem x2, Elem j) {
    const Elem src = out.k.act(i, x2);
    const Elem label = K.mul(src, j);
    const Elem image = H.mul(target.act(out.to_h(i), f(x2)), out.to_h(j));
    if (out.to_h(label) != image || f(gamma->mul(x, x2)) != G.mul(f(x), f(x2)))
      bad = std::vector<Elem>{x, i, x2, j};
  };
  if (arrows * arrows <= 4'000'000) {
    for (Elem x = 0; x < nx && !bad; ++x)
      for (Elem i = 0; i < nk && !bad; ++i)
        for (Elem x2 = 0; x2 < nx && !bad; ++x2)
          for (Elem j = 0; j < nk && !bad; ++j) check_tensor(x, i, x2, j);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 200'000 && !bad; ++t)
      check_tensor(Elem(rng() % nx), Elem(rng() % nk), Elem(rng() % nx), Elem(rng() % nk));
  }
  out.checks.add("functor_tensor", bad);

  // fully faithful: per hom-set x -> x2, k -> to_h(k) is a bijection onto
  // the arrows f(x) -> f(x2)
  bad.reset();
  std::vector<std::vector<Elem>> by_image(nx);
  for (Elem i = 0; i < nk; ++i) by_image[dk(i)].push_back(i);
  std::vector<Elem> count_h(nh, 0);
  for (Elem x = 0; x < nx && !bad; ++x)
    for (Elem x2 = 0; x2 < nx && !bad; ++x2) {
      const Elem y = gamma->mul(gamma->inv(x), x2);
      const Elem want = G.mul(G.inv(f(x)), f(x2));
      std::size_t hits = 0;
      bool injective = true;
      for (Elem i : by_image[y]) {
        const Elem h = out.to_h(i);
        if (d(h) != want) injective = false;
        if (count_h[h]++) injective = false;
        ++hits;
      }
      std::size_t size = 0;
      for (Elem h = 0; h < nh; ++h) size += d(h) == want;
      for (Elem i : by_image[y]) count_h[out.to_h(i)] = 0;
      if (!injective || hits != size) bad = std::vector<Elem>{x, x2};
    }
  out.checks.add("fully_faithful", bad);
  return out;
}

}  // namespace centext
