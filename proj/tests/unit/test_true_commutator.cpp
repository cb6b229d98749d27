#include "centext/error.hpp"
#include "centext/true_commutator.hpp"
#include "doctest.h"
#include "../oracles/groups.hpp"

using namespace centext;

namespace {

using V = std::vector<std::int64_t>;

std::vector<FiniteAbelian> coefficients_for(const GroupPtr& g) {
  std::vector<FiniteAbelian> out;
  for (const V& a : {V{2}, V{3}, V{4}, V{2, 2}, V{6}})
    if (g->order() % std::size_t(FiniteAbelian(a).exponent()) == 0) out.emplace_back(a);
  return out;
}

void check_cover(const GroupPtr& g, const TrueCommutatorResult& t) {
  REQUIRE(t.cover);
  const auto& c = *t.cover;
  CHECK(check_extension(c).ok());
  CHECK(c.kernel == t.aun());
  CHECK(c.base()->order() == t.base().size());
  if (is_perfect(t.base().as_group())) CHECK(is_perfect(c.total));
  (void)g;
}

}  // namespace

TEST_CASE("aun examples") {
  CHECK(aun(cyclic(6)).aun.is_trivial());
  CHECK(aun(klein_four()).aun.is_trivial());
  CHECK(aun(symmetric(3)).aun.is_trivial());
  CHECK(aun(quaternion8()).aun.is_trivial());
  CHECK(aun(alternating(5)).aun.invariant_factors() == V{2});
  CHECK(aun(alternating(4)).aun.invariant_factors() == V{2});
}

TEST_CASE("aun bounded by the multiplier of the derived subgroup") {
  for (const auto& g : {symmetric(3), dihedral(4), quaternion8(), alternating(4), symmetric(4), alternating(5),
                        direct_product(alternating(4), cyclic(2)), sl2(3)}) {
    auto a = aun(g);
    auto m = schur_multiplier(a.derived_group);
    CHECK(m.order() % a.aun.order() == 0);
    if (m.is_trivial()) CHECK(a.aun.is_trivial());
    if (a.derived.is_whole()) CHECK(a.aun == m);
  }
}

TEST_CASE("true commutator covers") {
  auto ab = true_commutator(cyclic(4));
  check_cover(cyclic(4), ab);
  CHECK(ab.cover->total->order() == 1);

  auto q8 = true_commutator(quaternion8());
  check_cover(quaternion8(), q8);
  CHECK(q8.cover->total->order() == 2);

  auto a5 = true_commutator(alternating(5));
  check_cover(alternating(5), a5);
  CHECK(a5.cover->total->order() == 120);
  CHECK(find_isomorphism(a5.cover->total, oracle::sl2_from_matrices(5)));

  auto a4 = true_commutator(alternating(4));
  CHECK_FALSE(a4.cover);
  CHECK(a4.requires_splitting_choice);
  CHECK(a4.aun().invariant_factors() == V{2});
}

TEST_CASE("P1 on the test list") {
  for (const auto& g : {cyclic(4), klein_four(), direct_product(cyclic(2), cyclic(6)), symmetric(3), quaternion8(),
                        alternating(5)}) {
    auto t = true_commutator(g);
    auto r = verify_p1(g, t, coefficients_for(g));
    INFO(g->order());
    CHECK(r.ok());
  }
  // all of H^2(S3, Z/6) dies on the order-3 subgroup
  auto s3 = symmetric(3);
  auto r = verify_p1(s3, true_commutator(s3), {FiniteAbelian(V{6})});
  CHECK(r.ok());
}

TEST_CASE("P1 for a non-perfect derived subgroup with trivial aun") {
  // D4: [G,G] = C2, aun trivial, and the Ext part of H^2(C2, Z/2) is hit by
  // restriction (the cyclic 8 cover of D4's rotation subgroup). The pullback
  // along the identity cover is therefore not trivial for every class.
  auto g = dihedral(4);
  auto t = true_commutator(g);
  REQUIRE(t.cover);
  auto r = verify_p1(g, t, {FiniteAbelian(V{2})});
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->counterexample.size() == 1);
}

TEST_CASE("P3 and stable brackets") {
  auto ab = verify_p3(cyclic(6), true_commutator(cyclic(6)));
  CHECK(ab.found);
  CHECK(ab.stage == "trivial");
  for (const auto& row : ab.lift)
    for (auto x : row) CHECK(x == 0);

  auto q = verify_p3(quaternion8(), true_commutator(quaternion8()));
  REQUIRE(q.found);
  REQUIRE(q.stable);
  CHECK(q.stable->bracket);
  auto q8 = quaternion8();
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) CHECK(q.delta->operator()(q.lift[a][b]) == q8->commutator(a, b));

  auto a5 = alternating(5);
  auto p = verify_p3(a5, true_commutator(a5));
  REQUIRE(p.found);
  CHECK(p.stage == "cover");
  REQUIRE(p.stable);
  CHECK(p.stable->crossed.ok());
  CHECK(p.stable->stable.ok());
  CHECK(p.stable->stable.verdicts.size() == 8);
}

TEST_CASE("P3 requires a cover") {
  auto a4 = alternating(4);
  CHECK_THROWS_AS(verify_p3(a4, true_commutator(a4)), PreconditionFailed);
  CHECK_THROWS_AS(stacky_abelianization(a4), PreconditionFailed);
}

TEST_CASE("deadline") {
  TrueCommutatorOptions o;
  o.deadline = Deadline(Clock::now() - std::chrono::seconds(1));
  CHECK_THROWS_AS(true_commutator(alternating(5), o), DeadlineExceeded);
}

TEST_CASE("stacky abelianization") {
  auto abel = stacky_abelianization(cyclic(6));
  CHECK(abel.checks.ok());
  CHECK(abel.groupoid.pi0()->order() == 6);
  CHECK(abel.groupoid.pi1().is_trivial());

  auto s3 = stacky_abelianization(symmetric(3));
  CHECK(s3.checks.ok());
  CHECK(s3.groupoid.pi0()->order() == 2);
  CHECK(s3.groupoid.pi1().is_trivial());

  auto a5 = stacky_abelianization(alternating(5));
  CHECK(a5.checks.ok());
  CHECK(a5.groupoid.pi0()->order() == 1);
  CHECK(a5.groupoid.pi1().invariant_factors() == V{2});
  const auto& g = a5.bracket.parent().target();
  for (Elem x = 0; x < g->order(); ++x) CHECK(a5.bracket(x, x) == 0);
}

TEST_CASE("universal factorization") {
  // abelianization into the discrete presentation 1 -> G^ab
  auto s3 = symmetric(3);
  auto stacky = stacky_abelianization(s3);
  auto ab = abelianization(s3);
  auto gab = ab.projection.target();
  auto discrete = CrossedModule::trivial_action(GroupHom(trivial_group(), gab, {0}));
  StableBracket zero(discrete, std::vector<std::vector<Elem>>(gab->order(), std::vector<Elem>(gab->order(), 0)));
  auto u = universal_factorization(ab.projection, zero, stacky);
  CHECK(u.checks.ok());
  CHECK(u.phi);
  CHECK(u.first.k.source()->order() == 3);  // the kernel of the sign

  // trivial map from A5 into the presentation C2 -> 1
  auto a5 = alternating(5);
  auto st5 = stacky_abelianization(a5);
  auto c2 = cyclic(2);
  auto to_point = CrossedModule::trivial_action(GroupHom(c2, trivial_group(), {0, 0}));
  StableBracket zero5(to_point, {{0}});
  auto u5 = universal_factorization(GroupHom(a5, trivial_group(), std::vector<Elem>(60, 0)), zero5, st5);
  CHECK(u5.checks.ok());
  CHECK(u5.first.k.source()->order() == 120);
  CHECK(find_isomorphism(u5.first.k.source(), direct_product(a5, c2)));
}
