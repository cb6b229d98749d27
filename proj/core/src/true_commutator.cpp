#include "centext/true_commutator.hpp"

#include <algorithm>
#include <functional>

#include "centext/error.hpp"

namespace centext {

namespace {

FiniteAbelian cyclic_coefficients(std::int64_t n) {
  return n == 1 ? FiniteAbelian() : FiniteAbelian(std::vector<std::int64_t>{n});
}

// Invariant-factor chains d_1 | ... | d_k with product <= bound, ordered by
// group order and then lexicographically.
std::vector<FiniteAbelian> abelian_groups_up_to(std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> chains;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t last, std::int64_t room) {
    for (std::int64_t d = last; d <= room; d += last) {
      if (d < 2) continue;
      cur.push_back(d);
      chains.push_back(cur);
      rec(d, room / d);
      cur.pop_back();
    }
  };
  rec(1, bound);
  std::vector<FiniteAbelian> out;
  for (auto& c : chains) out.emplace_back(c);
  std::stable_sort(out.begin(), out.end(), [](const FiniteAbelian& a, const FiniteAbelian& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.invariant_factors() < b.invariant_factors();
  });
  return out;
}

std::vector<Elem> minimal_section(const GroupHom& projection) {
  std::vector<Elem> s(projection.target()->order(), 0);
  for (Elem x = Elem(projection.source()->order()); x-- > 0;) s[projection(x)] = x;
  return s;
}

}  // namespace

AunResult aun(const GroupPtr& g, const TrueCommutatorOptions& options) {
  const auto& limits = options.limits;
  auto derived = commutator_subgroup(g);
  auto dg = derived.as_group();
  const auto n = std::int64_t(g->order());
  auto qz_g = qz_cohomology(g, limits);
  options.deadline.check("aun");
  auto qz_d = qz_cohomology(dg, limits, n);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& b : qz_g.basis()) rows.push_back(qz_d.class_of(b.restrict_to(derived, dg)));
  auto sb = subgroup_basis(qz_d.invariants().invariant_factors(), rows);
  return AunResult{std::move(derived), std::move(dg), std::move(qz_g), std::move(qz_d),
                   std::move(rows), std::move(sb.structure), std::move(sb.basis)};
}

TrueCommutatorResult true_commutator(const GroupPtr& g, const TrueCommutatorOptions& options) {
  TrueCommutatorResult out{aun(g, options), {}, std::nullopt, false};
  const auto& w = out.witness;
  const auto& dg = w.derived_group;
  const auto n = std::int64_t(g->order());

  for (const auto& chi : w.image_basis) {
    auto f = Cocycle2::zero(dg, cyclic_coefficients(n));
    for (std::size_t i = 0; i < chi.size(); ++i) f = f + w.qz_derived.basis()[i].scaled(chi[i]);
    out.witness_classes.push_back(std::move(f));
  }

  const bool perfect = is_perfect(dg);
  if (w.aun.is_trivial()) {
    out.cover = extension_from_cocycle(Cocycle2::zero(dg, FiniteAbelian()), options.limits);
    return out;
  }
  if (!perfect) {
    out.requires_splitting_choice = true;
    return out;
  }
  // component j: the Z/e_j class whose image in Q/Z is chi_j
  const std::size_t dn = dg->order();
  const auto& e = w.aun.invariant_factors();
  std::vector<Coeff> values(dn * dn, w.aun.zero());
  for (std::size_t j = 0; j < e.size(); ++j) {
    auto h2 = second_cohomology(dg, cyclic_coefficients(e[j]), options.limits);
    std::optional<Cocycle2> match;
    for (const auto& c : h2.all_classes()) {
      options.deadline.check("true_commutator");
      auto f = h2.cocycle_for(c);
      std::vector<Coeff> up(dn * dn);
      for (std::size_t i = 0; i < dn * dn; ++i) up[i] = {f.values()[i][0] * (n / e[j])};
      if (w.qz_derived.class_of(Cocycle2(dg, cyclic_coefficients(n), std::move(up))) == w.image_basis[j]) {
        match = std::move(f);
        break;
      }
    }
    if (!match) throw Error("true_commutator: no finite-coefficient class matches the image basis");
    for (std::size_t i = 0; i < dn * dn; ++i) values[i][j] = match->values()[i][0];
  }
  out.cover = extension_from_cocycle(Cocycle2(dg, w.aun, std::move(values)), options.limits);
  return out;
}

CheckReport verify_p1(const GroupPtr& g, const TrueCommutatorResult& t,
                      const std::vector<FiniteAbelian>& coefficients, const TrueCommutatorOptions& options) {
  if (!t.cover) throw PreconditionFailed("verify_p1 needs a cover");
  const auto& cover = *t.cover;
  CheckReport r;
  for (const auto& a : coefficients) {
    options.deadline.check("verify_p1");
    auto h2 = second_cohomology(g, a, options.limits);
    auto h2_cover = second_cohomology(cover.total, a, options.limits);
    std::optional<std::vector<Elem>> bad;
    for (std::size_t i = 0; i < h2.basis().size() && !bad; ++i) {
      auto pulled = h2.basis()[i].restrict_to(t.base(), t.witness.derived_group).pullback(cover.projection);
      auto beta = h2_cover.coboundary_witness(pulled);
      if (!beta || !(Cocycle2::coboundary(cover.total, a, *beta) == pulled)) bad = std::vector<Elem>{Elem(i)};
    }
    r.add("p1 " + a.to_string(), bad);
  }
  return r;
}

P3Result verify_p3(const GroupPtr& g, const TrueCommutatorResult& t, const TrueCommutatorOptions& options) {
  if (!t.cover) throw PreconditionFailed("verify_p3 needs a cover");
  const auto& cover = *t.cover;
  const auto& d = t.base();
  const auto& tot = cover.total;
  const auto& pt = cover.projection;

  std::vector<Elem> dimg(tot->order());
  for (Elem x = 0; x < tot->order(); ++x) dimg[x] = d.members()[pt(x)];
  P3Result out;
  out.delta = make_hom_unchecked(tot, g, std::move(dimg));
  std::vector<std::vector<Elem>> fiber(d.size());
  for (Elem x = 0; x < tot->order(); ++x) fiber[pt(x)].push_back(x);

  // E -> G central; a homomorphism [E,E] -> cover over [G,G] descends the
  // commutator map of E to the wanted lift
  auto attempt = [&](const CentralExtension& e) -> bool {
    ++out.candidates;
    const auto& et = e.total;
    auto de = commutator_subgroup(et);
    if (de.size() < tot->order()) return false;
    auto deg = de.as_group();
    HomSearchOptions ho;
    ho.surjective = true;
    ho.deadline = options.deadline;
    auto psi = find_homomorphism(
        deg, tot, [&](Elem y) { return fiber[d.index_of(e.projection(de.members()[y]))]; }, ho);
    if (!psi) return false;
    const auto s = minimal_section(e.projection);
    const Elem n = Elem(g->order());
    out.lift.assign(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) out.lift[a][b] = (*psi)(de.index_of(et->commutator(s[a], s[b])));
    out.extension = e;
    return true;
  };

  auto finish = [&](std::string stage) {
    out.found = true;
    out.stage = std::move(stage);
    out.stable = stable_from_lift(*out.delta, out.lift);
    return out;
  };

  if (attempt(extension_from_cocycle(Cocycle2::zero(g, FiniteAbelian()), options.limits))) return finish("trivial");
  if (d.is_whole()) {
    std::vector<Elem> proj(tot->order());
    for (Elem x = 0; x < tot->order(); ++x) proj[x] = d.members()[pt(x)];
    CentralExtension e{tot, make_hom_unchecked(tot, g, std::move(proj)), cover.kernel, cover.kernel_embedding};
    if (attempt(e)) return finish("cover");
  }

  const auto& m = t.witness.qz_group.invariants();
  const auto bound = m.order() * std::int64_t(options.b_slack);
  for (const auto& b : abelian_groups_up_to(bound)) {
    if (!embeds_in(t.aun(), b)) continue;
    if (std::size_t(b.order()) * g->order() > options.limits.max_group_order) continue;
    options.deadline.check("verify_p3");
    auto h2 = second_cohomology(g, b, options.limits);
    std::size_t tried = 0;
    for (const auto& c : h2.all_classes()) {
      if (std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; })) continue;
      if (++tried > options.max_classes) break;
      options.deadline.check("verify_p3");
      if (attempt(extension_from_cocycle(h2.cocycle_for(c), options.limits))) return finish("search");
    }
  }
  out.stage = "exhausted";
  return out;
}

StackyAbelianization stacky_abelianization(const GroupPtr& g, const TrueCommutatorOptions& options) {
  auto tc = true_commutator(g, options);
  if (!tc.cover) throw PreconditionFailed("stacky_abelianization: no cover (derived subgroup not perfect)");
  auto p3 = verify_p3(g, tc, options);
  if (!p3.found) throw PreconditionFailed("stacky_abelianization: no commutator lift found");
  if (!p3.stable->bracket) {
    const auto* bad = p3.stable->crossed.ok() ? p3.stable->stable.first_failure() : p3.stable->crossed.first_failure();
    throw PreconditionFailed("stacky_abelianization: lift fails " + bad->name);
  }
  StableBracket bracket = *p3.stable->bracket;
  QuotientGroupoid groupoid(bracket.parent());
  CheckReport checks;
  const bool pi0_ok = abelian_structure(groupoid.pi0()).abelian == abelianization(g).abelian;
  checks.add("pi0_is_abelianization", pi0_ok ? std::nullopt : std::optional<std::vector<Elem>>(std::vector<Elem>{}));
  const bool pi1_ok = groupoid.pi1() == tc.aun();
  checks.add("pi1_is_aun", pi1_ok ? std::nullopt : std::optional<std::vector<Elem>>(std::vector<Elem>{}));
  checks.append(p3.stable->crossed);
  checks.append(p3.stable->stable);
  return StackyAbelianization{std::move(tc), std::move(groupoid), std::move(bracket), std::move(checks)};
}

UniversalFactorization universal_factorization(const GroupHom& f, const StableBracket& target,
                                               const StackyAbelianization& stacky,
                                               const TrueCommutatorOptions& options) {
  const auto& xm = target.parent();
  const auto& g = f.source();
  const auto& cover_xm = stacky.bracket.parent();
  if (cover_xm.target()->order() != g->order()) throw InvalidInput("universal_factorization: f starts at another group");

  UniversalFactorization out{first_iso(f, xm, options.limits), std::nullopt, {}};
  {
    auto c = check_crossed_module(xm);
    auto s = c.ok() ? check_strictly_stable(target) : CheckReport{};
    const bool ok = c.ok() && s.ok();
    out.checks.add("target_strictly_stable", ok ? std::nullopt : std::optional<std::vector<Elem>>(std::vector<Elem>{}));
  }
  out.checks.append(out.first.checks);

  const auto& k = out.first.k;
  const auto& dk = k.delta();
  auto derived = commutator_subgroup(g);
  auto image = dk.image();
  std::optional<std::vector<Elem>> bad;
  for (auto x : derived.members())
    if (!image.contains(x)) {
      bad = std::vector<Elem>{x};
      break;
    }
  out.checks.add("image_contains_derived", bad);

  const auto& tot = cover_xm.source();
  const auto& dt = cover_xm.delta();
  std::vector<std::vector<Elem>> fiber(g->order());
  for (Elem x = 0; x < k.source()->order(); ++x) fiber[dk(x)].push_back(x);
  HomSearchOptions ho;
  ho.deadline = options.deadline;
  out.phi = find_homomorphism(tot, k.source(), [&](Elem t) { return fiber[dt(t)]; }, ho);
  out.checks.add("morphism_found", out.phi ? std::nullopt : std::optional<std::vector<Elem>>(std::vector<Elem>{}));
  if (!out.phi) return out;
  const auto& phi = *out.phi;

  bad.reset();
  for (Elem t = 0; t < tot->order() && !bad; ++t)
    for (Elem x = 0; x < g->order() && !bad; ++x)
      if (phi(cover_xm.act(t, x)) != k.act(phi(t), x)) bad = std::vector<Elem>{t, x};
  out.checks.add("equivariant", bad);

  // arrows (x, t) of [G/cover] go to (f(x), h(phi(t))) in the target groupoid
  bad.reset();
  for (Elem t = 0; t < tot->order() && !bad; ++t)
    if (dk(phi(t)) != dt(t) || xm.delta()(out.first.to_h(phi(t))) != f(dt(t))) bad = std::vector<Elem>{t};
  out.checks.add("arrows_agree", bad);

  bad.reset();
  for (Elem a = 0; a < g->order() && !bad; ++a)
    for (Elem b = 0; b < g->order() && !bad; ++b)
      if (out.first.to_h(phi(stacky.bracket(a, b))) != target(f(a), f(b))) bad = std::vector<Elem>{a, b};
  out.checks.add("bracket_compatible", bad);
  return out;
}

}  // namespace centext
