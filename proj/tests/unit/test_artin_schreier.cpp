#include <random>

#include "centext/artin_schreier.hpp"
#include "centext/error.hpp"
#include "doctest.h"
#include "../oracles/field_oracle.hpp"

using namespace centext;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kFields{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}};

FqPolynomial random_poly(const Fq& k, std::mt19937& rng, std::uint32_t max_deg, bool constant = false) {
  FqPolynomial f;
  std::uniform_int_distribution<std::uint32_t> c(0, k.q() - 1), d(constant ? 0 : 1, max_deg);
  for (int i = 0; i < 4; ++i) {
    const auto e = d(rng);
    const auto v = c(rng);
    f = poly_add(k, f, v ? FqPolynomial{{e, v}} : FqPolynomial{});
  }
  return f;
}

BivariatePolynomial product_t(const Fq& k, const FqPolynomial& h) {
  // sum c_i [(x+y)^i - x^i - y^i] by expanding with repeated multiplication
  BivariatePolynomial t;
  for (const auto& [i, c] : h) {
    BivariatePolynomial pw{{{0, 0}, 1}};
    for (std::uint32_t j = 0; j < i; ++j) {
      BivariatePolynomial next;
      for (const auto& [e, v] : pw) {
        next = poly_add(k, next, BivariatePolynomial{{{e.first + 1, e.second}, v}});
        next = poly_add(k, next, BivariatePolynomial{{{e.first, e.second + 1}, v}});
      }
      pw = next;
    }
    BivariatePolynomial term;
    for (const auto& [e, v] : pw)
      if (e.first != 0 && e.second != 0) term = poly_add(k, term, BivariatePolynomial{{e, k.mul(v, c)}});
    t = poly_add(k, t, term);
  }
  return t;
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(Fq::create(2, 1).modulus().empty());
  CHECK(Fq::create(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Fq::create(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK_THROWS_AS(Fq::create(4, 1), InvalidInput);
  CHECK_THROWS_AS(Fq::create(17, 1), InvalidInput);
  CHECK_THROWS_AS(Fq::create(2, 5), InvalidInput);
  CHECK_THROWS_AS(Fq::create(2, 0), InvalidInput);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t e = 1; e <= 4; ++e) {
      auto k = Fq::create(p, e);
      if (e > 1) CHECK(is_irreducible_mod_p(k.modulus(), p));
      if (k.q() > 3000) continue;
      // field axioms on all pairs for small fields, Frobenius bijective
      std::vector<bool> hit(k.q(), false);
      for (Fq::Elt a = 0; a < k.q(); ++a) {
        hit[k.frobenius(a)] = true;
        CHECK(k.frobenius(k.pth_root(a)) == a);
        if (a) CHECK(k.mul(a, k.inv(a)) == 1);
        CHECK(k.trace(a) < p);
      }
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  auto k = Fq::create(3, 2);
  for (Fq::Elt a = 0; a < 9; ++a)
    for (Fq::Elt b = 0; b < 9; ++b)
      for (Fq::Elt c = 0; c < 9; ++c) REQUIRE(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
}

TEST_CASE("field element text") {
  auto k = Fq::create(3, 2);
  for (Fq::Elt a = 0; a < 9; ++a) CHECK(k.parse(k.format(a)) == a);
  CHECK(k.parse("t^2") == k.parse("2"));  // t^2 = -1
  CHECK(k.format(k.parse("t+1")) == "t+1");
  CHECK_THROWS_AS(k.parse("x"), InvalidInput);
  CHECK_THROWS_AS(k.parse(""), InvalidInput);
  CHECK_THROWS_AS(Fq::create(5, 1).parse("t"), InvalidInput);
  CHECK(Fq::create(5, 1).parse("7") == 2);
}

TEST_CASE("as_reduce examples") {
  auto f2 = Fq::create(2, 1);
  CHECK(as_reduce(f2, {{1, 1}}).reduced.representative == FqPolynomial{{1, 1}});
  CHECK(as_reduce(f2, {{2, 1}}).reduced.representative == FqPolynomial{{1, 1}});
  CHECK(as_reduce(f2, {{4, 1}, {2, 1}}).reduced.representative.empty());
  CHECK_THROWS_AS(as_reduce(f2, {{0, 1}}), InvalidInput);
}

TEST_CASE("as_reduce properties") {
  std::mt19937 rng(11);
  for (auto [p, e] : kFields) {
    auto k = Fq::create(p, e);
    for (int trial = 0; trial < 200; ++trial) {
      auto f = random_poly(k, rng, 20);
      auto u = random_poly(k, rng, 6);
      auto r = as_reduce(k, f);
      CHECK(is_reduced(k, r.reduced.representative));
      // certificate: f = reduced + A(u)
      CHECK(poly_add(k, r.reduced.representative, artin_schreier_map(k, r.witness)) == f);
      // idempotent, and constant on classes
      CHECK(as_reduce(k, r.reduced.representative).reduced == r.reduced);
      CHECK(as_reduce(k, poly_add(k, f, artin_schreier_map(k, u))).reduced == r.reduced);
    }
  }
}

TEST_CASE("primitivity") {
  auto f2 = Fq::create(2, 1);
  CHECK(is_primitive(f2, {{{1, 1}}}).primitive);
  CHECK(is_primitive(f2, {}).primitive);
  auto x3 = is_primitive(f2, {{{3, 1}}});
  CHECK_FALSE(x3.primitive);
  CHECK(x3.t == BivariatePolynomial{{{1, 2}, 1}, {{2, 1}, 1}});
  CHECK_FALSE(x3.residue.empty());
  CHECK_THROWS_AS(is_primitive(f2, {{{2, 1}}}), InvalidInput);

  std::mt19937 rng(5);
  for (auto [p, e] : kFields) {
    auto k = Fq::create(p, e);
    for (int trial = 0; trial < 100; ++trial) {
      auto h = as_reduce(k, random_poly(k, rng, 12)).reduced;
      auto lex = is_primitive(k, h);
      auto graded = is_primitive(k, h, BivariateOrder::graded_lex);
      CHECK(lex.t == product_t(k, h.representative));
      CHECK(poly_add(k, lex.residue, artin_schreier_map(k, lex.witness)) == lex.t);
      CHECK(lex.primitive == graded.primitive);
      CHECK(lex.residue == graded.residue);
      // class invariance: reduce f + A(u) first
      auto u = random_poly(k, rng, 4);
      auto again = as_reduce(k, poly_add(k, h.representative, artin_schreier_map(k, u))).reduced;
      CHECK(is_primitive(k, again).primitive == lex.primitive);
    }
  }
}

TEST_CASE("classification of primitive classes") {
  auto check_linear = [](const Fq& k, std::uint32_t d) {
    auto cls = classify_primitive(k, d);
    CHECK(cls.size() == k.q());
    for (const auto& c : cls) {
      if (c.representative.empty()) continue;
      CHECK(c.representative.size() == 1);
      CHECK(c.representative.begin()->first == 1);
    }
    // closed under addition and F_p scaling
    for (const auto& a : cls)
      for (const auto& b : cls) {
        ASClass s{poly_add(k, a.representative, b.representative)};
        CHECK(std::find(cls.begin(), cls.end(), s) != cls.end());
      }
    for (const auto& a : cls)
      for (std::uint32_t m = 0; m < k.p(); ++m) {
        ASClass s{poly_scale(k, a.representative, k.scalar(m))};
        CHECK(std::find(cls.begin(), cls.end(), s) != cls.end());
      }
  };
  check_linear(Fq::create(2, 1), 5);
  check_linear(Fq::create(3, 1), 4);
  check_linear(Fq::create(2, 2), 4);
  CHECK_THROWS_AS(classify_primitive(Fq::create(13, 4), 64, 1000), CapExceeded);
}

TEST_CASE("Frobenius characters") {
  for (auto [p, e] : kFields) {
    auto k = Fq::create(p, e);
    CHECK(frobenius_character(k, 0) == std::vector<std::uint32_t>(k.q(), 0));
    for (Fq::Elt c = 0; c < k.q(); ++c) {
      auto chi = frobenius_character(k, c);
      CHECK(chi == oracle::frobenius_character(k, c));
      for (Fq::Elt g = 0; g < k.q(); ++g) CHECK(chi[g] == k.trace(k.mul(c, g)));
    }
  }
  auto f5 = Fq::create(5, 1);
  for (Fq::Elt c = 0; c < 5; ++c)
    for (Fq::Elt g = 0; g < 5; ++g) CHECK(frobenius_character(f5, c)[g] == (c * g) % 5);
  auto f4 = Fq::create(2, 2);
  auto chi = frobenius_character(f4, 1);
  for (Fq::Elt g = 0; g < 4; ++g) CHECK(chi[g] == f4.add(g, f4.mul(g, g)));
}

TEST_CASE("pdisc") {
  for (auto [p, e] : kFields) {
    auto k = Fq::create(p, e);
    auto r = pdisc_check(k);
    CHECK(r.ok());
    CHECK(r.characters == k.q());
  }
  CHECK(pdisc_check(Fq::create(2, 3)).ok());
}
