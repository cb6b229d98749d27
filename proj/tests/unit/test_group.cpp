#include <algorithm>
#include <random>

#include "centext/abelian.hpp"
#include "centext/error.hpp"
#include "centext/group.hpp"
#include "doctest.h"
#include "../oracles/groups.hpp"

using namespace centext;

namespace {

std::vector<GroupPtr> sample_groups() {
  return {cyclic(1), cyclic(6), klein_four(), symmetric(3), dihedral(4), quaternion8(), alternating(4),
          symmetric(4), heisenberg(3), sl2(3), direct_product(symmetric(3), cyclic(2)), alternating(5)};
}

std::size_t count_order(const GroupPtr& g, std::size_t k) {
  std::size_t c = 0;
  for (Elem x = 0; x < g->order(); ++x) c += g->element_order(x) == k;
  return c;
}

}  // namespace

TEST_CASE("catalog construction") {
  auto c4 = catalog("cyclic", {4});
  CHECK(c4->order() == 4);
  CHECK(c4->mul(1, 1) == 2);

  auto q8 = catalog("quaternion8", {});
  CHECK(q8->order() == 8);
  CHECK(count_order(q8, 2) == 1);

  CHECK(catalog("dihedral", {4})->order() == 8);
  CHECK(catalog("heisenberg", {3})->order() == 27);
  CHECK(catalog("sl2", {5})->order() == 120);
  CHECK(catalog("alternating", {5})->order() == 60);
  CHECK_THROWS_AS(catalog("monster", {}), InvalidInput);
  CHECK_THROWS_AS(catalog("sl2", {7}), InvalidInput);
}

TEST_CASE("permutation closure") {
  auto g = from_permutations({parse_permutation("(0 1)", 3), parse_permutation("(0 1 2)", 3)}, 3);
  CHECK(g->order() == 6);
  CHECK(find_isomorphism(g, symmetric(3)).has_value());
  CHECK(format_permutation(parse_permutation("(2 0)(1 3)", 4)) == "(0 2)(1 3)");
  CHECK_THROWS_AS(parse_permutation("(0 0)", 3), InvalidInput);
  CHECK_THROWS_AS(parse_permutation("(0 5)", 3), InvalidInput);

  Limits small;
  small.max_group_order = 10;
  CHECK_THROWS_AS(from_permutations({parse_permutation("(0 1 2 3)", 4), parse_permutation("(0 1)", 4)}, 4, small),
                  CapExceeded);
}

TEST_CASE("cayley validation") {
  // identity not at 0
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), InvalidInput);
  // a latin square with identity 0 that is not associative (order 5 loop)
  std::vector<std::vector<Elem>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop), InvalidInput);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 2}}), InvalidInput);
}

TEST_CASE("table axioms for every sample group") {
  for (const auto& g : sample_groups()) {
    for (Elem a = 0; a < g->order(); ++a) {
      CHECK(g->mul(0, a) == a);
      CHECK(g->mul(a, 0) == a);
      CHECK(g->mul(a, g->inv(a)) == 0);
    }
  }
}

TEST_CASE("commutator subgroup and center") {
  CHECK(commutator_subgroup(cyclic(6)).is_trivial());
  CHECK(commutator_subgroup(symmetric(3)).size() == 3);
  CHECK(commutator_subgroup(quaternion8()).size() == 2);
  CHECK(center(cyclic(5)).is_whole());
  CHECK(center(symmetric(3)).is_trivial());
  CHECK(center(quaternion8()).size() == 2);

  for (const auto& g : sample_groups()) {
    auto d = commutator_subgroup(g);
    for (auto n : d.members())
      for (Elem x = 0; x < g->order(); ++x) REQUIRE(d.contains(g->conj(n, x)));
  }
}

TEST_CASE("quotients") {
  auto s3 = symmetric(3);
  auto trivial = quotient(trivial_subgroup(s3));
  CHECK(trivial.group->order() == 6);
  CHECK(trivial.projection.is_bijective());

  CHECK(quotient(commutator_subgroup(s3)).group->order() == 2);

  auto q = quotient(center(quaternion8()));
  CHECK(q.group->order() == 4);
  for (Elem x = 1; x < 4; ++x) CHECK(q.group->element_order(x) == 2);
  // representatives are minimal per coset
  for (std::size_t i = 0; i < q.representatives.size(); ++i)
    for (Elem x = 0; x < 8; ++x)
      if (q.projection(x) == i) CHECK(q.representatives[i] <= x);

  Subgroup not_normal(s3, {0, 1});
  if (!not_normal.is_normal()) CHECK_THROWS_AS(quotient(not_normal), InvalidInput);
}

TEST_CASE("abelianization") {
  CHECK(abelianization(cyclic(6)).abelian.invariant_factors() == std::vector<std::int64_t>{6});
  CHECK(abelianization(symmetric(4)).abelian.invariant_factors() == std::vector<std::int64_t>{2});
  CHECK(abelianization(quaternion8()).abelian.invariant_factors() == std::vector<std::int64_t>{2, 2});
  for (const auto& g : sample_groups()) {
    auto ab = abelianization(g);
    auto q = quotient(commutator_subgroup(g));
    CHECK(abelian_structure(q.group).abelian == ab.abelian);
    CHECK(ab.projection.is_surjective());
  }
}

TEST_CASE("commutator width and perfectness") {
  CHECK(commutator_width(cyclic(4)) == 0);
  CHECK(commutator_width(symmetric(3)) == 1);
  CHECK(commutator_width(alternating(5)) == 1);
  for (const auto& g : sample_groups()) CHECK((commutator_width(g) == 0) == g->is_abelian());
  CHECK(is_perfect(alternating(5)));
  CHECK_FALSE(is_perfect(cyclic(2)));
  CHECK_FALSE(is_perfect(symmetric(5)));
  CHECK(is_perfect(trivial_group()));
}

TEST_CASE("isomorphism search") {
  auto iso = find_isomorphism(cyclic(4), cyclic(4));
  REQUIRE(iso);
  CHECK(iso->is_bijective());
  CHECK_FALSE(find_isomorphism(cyclic(4), klein_four()));
  CHECK_FALSE(find_isomorphism(quaternion8(), dihedral(4)));
  CHECK(find_isomorphism(sl2(5), oracle::sl2_from_matrices(5)));

  // relabel a group by a random permutation fixing 0 and recover it
  std::mt19937 rng(7);
  for (const auto& g : sample_groups()) {
    const std::size_t n = g->order();
    std::vector<Elem> perm(n);
    for (Elem i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<Elem> back(n);
    for (Elem i = 0; i < n; ++i) back[perm[i]] = i;
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) t[a][b] = perm[g->mul(back[a], back[b])];
    auto h = FiniteGroup::from_table(t);
    auto f = find_isomorphism(g, h);
    REQUIRE(f);
    CHECK(f->is_bijective());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) REQUIRE((*f)(g->mul(a, b)) == h->mul((*f)(a), (*f)(b)));
  }

  Limits tiny;
  tiny.max_isomorphism_order = 4;
  CHECK_THROWS_AS(find_isomorphism(symmetric(3), symmetric(3), tiny), CapExceeded);
}

TEST_CASE("homomorphism validation") {
  auto c4 = cyclic(4), c2 = cyclic(2);
  CHECK_NOTHROW(GroupHom(c4, c2, {0, 1, 0, 1}));
  CHECK_THROWS_AS(GroupHom(c4, c2, {0, 1, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(GroupHom(c4, c2, {1, 0, 1, 0}), InvalidInput);
}

TEST_CASE("finite abelian groups") {
  CHECK_THROWS_AS(FiniteAbelian({2, 3}), InvalidInput);
  CHECK(FiniteAbelian::from_cyclic_orders({2, 3}).invariant_factors() == std::vector<std::int64_t>{6});
  CHECK(FiniteAbelian::from_cyclic_orders({4, 6, 1}).invariant_factors() == std::vector<std::int64_t>{2, 12});
  CHECK(hom_count(FiniteAbelian({2}), FiniteAbelian({4})) == 2);
  CHECK(hom_count(FiniteAbelian({2, 2}), FiniteAbelian({2, 4})) == 16);
  CHECK(embeds_in(FiniteAbelian({2}), FiniteAbelian({4})));
  CHECK_FALSE(embeds_in(FiniteAbelian({2, 2}), FiniteAbelian({4})));
  FiniteAbelian a({2, 6});
  for (std::size_t i = 0; i < std::size_t(a.order()); ++i) CHECK(a.index_of(a.element_at(i)) == i);
  CHECK(abelian_structure(a.to_group()).abelian == a);
}
