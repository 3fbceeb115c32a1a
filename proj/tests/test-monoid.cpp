//
// actlat - finite monoid acts, congruence lattices and chain conditions
// Copyright (C) 2026 actlat contributors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//
#include <catch_amalgamated.hpp>

#include "actlat/actlat.hpp"
#include "oracles.hpp"

using namespace actlat;

namespace {
  // Componentwise multiplication on {0,1}^2, indexed as 2 * x + y; the
  // identity (1,1) is index 3.
  Monoid boolean_square() {
    std::vector<std::vector<index_type>> t(4, std::vector<index_type>(4));
    for (index_type a = 0; a < 4; ++a) {
      for (index_type b = 0; b < 4; ++b) {
        t[a][b] = ((a >> 1) & (b >> 1)) << 1 | (a & b & 1);
      }
    }
    return monoid_from_table(t, 3);
  }

  Monoid z4() {
    return cyclic_group(4);
  }
}  // namespace

TEST_CASE("monoid_from_table validates", "[monoid]") {
  SECTION("trivial monoid") {
    auto S = monoid_from_table({{0}}, 0);
    REQUIRE(S.size() == 1);
    REQUIRE(S.zero() == index_type(0));
    REQUIRE(classify(S).has_zero);
  }
  SECTION("Z/3") {
    auto S = monoid_from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0);
    auto c = classify(S);
    REQUIRE(c.is_group);
    REQUIRE_FALSE(c.is_local);
    REQUIRE(c.left_cancellative);
    REQUIRE(c.units == element_set{0, 1, 2});
  }
  SECTION("Z/2 with a zero") {
    auto c = classify(adjoin_zero(cyclic_group(2)));
    REQUIRE(c.is_0group);
    REQUIRE(c.left_cancellative);
    // 1 * 1 = 0 = 1 * 0: the non-zero element 1 does not cancel
    auto n = classify(monoid_from_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0));
    REQUIRE_FALSE(n.left_cancellative);
    REQUIRE_FALSE(n.is_0group);
  }
  SECTION("broken tables") {
    // 1*1 = 2, 1*2 = 1, 2*1 = 2, 2*2 = 2: (1*1)*2 = 2 but 1*(1*2) = 1
    REQUIRE_THROWS_MATCHES(monoid_from_table({{0, 1, 2}, {1, 2, 1}, {2, 2, 2}}, 0),
                           Error,
                           Catch::Matchers::Predicate<Error>(
                               [](Error const& e) { return e.kind() == ErrorKind::NotAssociative; }));
    try {
      monoid_from_table({{0, 1}, {0, 1}}, 0);
      FAIL("expected BadIdentity");
    } catch (Error const& e) {
      REQUIRE(e.kind() == ErrorKind::BadIdentity);
    }
    try {
      monoid_from_table({{0, 1}, {1}}, 0);
      FAIL("expected InvalidInput");
    } catch (Error const& e) {
      REQUIRE(e.kind() == ErrorKind::InvalidInput);
    }
    try {
      monoid_from_table({{0, 5}, {1, 1}}, 0);
      FAIL("expected InvalidInput");
    } catch (Error const& e) {
      REQUIRE(e.kind() == ErrorKind::InvalidInput);
    }
  }
}

TEST_CASE("monoid_from_transformations", "[monoid]") {
  auto trivial = monoid_from_transformations(2, {});
  REQUIRE(trivial.size() == 1);

  auto constant = monoid_from_transformations(2, {{0, 0}});
  REQUIRE(constant.size() == 2);
  REQUIRE(constant.identity() == 0);
  REQUIRE(constant.product(1, 1) == 1);

  auto cycle = monoid_from_transformations(3, {{1, 2, 0}});
  REQUIRE(cycle.size() == 3);
  REQUIRE(classify(cycle).is_group);

  // the full transformation monoid on three points has 27 elements
  auto full = monoid_from_transformations(3, {{1, 0, 2}, {1, 2, 0}, {0, 0, 2}});
  REQUIRE(full.size() == 27);
  REQUIRE_THROWS_AS(monoid_from_transformations(3, {{1, 0, 2}, {1, 2, 0}, {0, 0, 2}}, 10), Error);
}

TEST_CASE("min monoid", "[monoid]") {
  auto S1 = min_monoid_with_identity(1);
  REQUIRE(S1.size() == 2);
  REQUIRE(S1.zero() == index_type(1));

  auto S3 = min_monoid_with_identity(3);
  auto c3 = classify(S3);
  REQUIRE(c3.commutative);
  REQUIRE_FALSE(c3.is_group);
  REQUIRE(right_ideals(S3)
          == std::vector<element_set>{{1}, {1, 2}, {1, 2, 3}, {0, 1, 2, 3}});
  REQUIRE(ideal_power(S3, {1, 2, 3}, 2) == element_set{1, 2, 3});

  auto c4 = classify(min_monoid_with_identity(4));
  REQUIRE(c4.is_local);
  REQUIRE(c4.maximal_right_ideals == std::vector<element_set>{{1, 2, 3, 4}});
}

TEST_CASE("classification examples", "[monoid]") {
  auto z20 = adjoin_zero(cyclic_group(2));
  REQUIRE(classify(z20).is_0group);
  REQUIRE(classify(z20).has_zero);

  auto B = boolean_square();
  auto c = classify(B);
  REQUIRE(c.commutative);
  REQUIRE(c.is_local);
  REQUIRE(c.maximal_right_ideals == std::vector<element_set>{{0, 1, 2}});
  REQUIRE(minimum_ideal(B) == element_set{0});

  auto S3 = monoid_from_transformations(3, {{1, 0, 2}, {1, 2, 0}});
  REQUIRE_THROWS_AS(minimum_ideal(S3), Error);
}

TEST_CASE("classify agrees with brute-force right ideals", "[monoid][oracle]") {
  for (auto const& [name, S] : corpus_monoids()) {
    INFO(name);
    auto const ideals = oracle::right_ideals(S);
    // maximal proper right ideals straight from the definition
    std::vector<element_set> maximal;
    for (auto const& I : ideals) {
      if (I.size() == S.size()) {
        continue;
      }
      bool is_max = true;
      for (auto const& J : ideals) {
        if (J.size() > I.size() && J.size() < S.size()
            && std::includes(J.begin(), J.end(), I.begin(), I.end())) {
          is_max = false;
        }
      }
      if (is_max) {
        maximal.push_back(I);
      }
    }
    auto c = classify(S);
    REQUIRE(c.maximal_right_ideals == maximal);
    auto mine = right_ideals(S);
    REQUIRE(std::set<element_set>(mine.begin(), mine.end()) == ideals);
    REQUIRE(std::is_sorted(mine.begin(), mine.end(), shortlex_less));
  }
}

TEST_CASE("monoid census", "[monoid][oracle]") {
  auto census = monoid_census(4);
  std::vector<size_t> counts(5, 0);
  for (auto const& S : census) {
    ++counts[S.size()];
  }
  // brute-force counts from the definition
  for (size_t n = 1; n <= 4; ++n) {
    REQUIRE(counts[n] == oracle::monoid_count(n));
  }
  REQUIRE(counts == std::vector<size_t>{0, 1, 2, 7, 35});
  // pairwise non-isomorphic: canonical forms are distinct and stable
  std::set<std::vector<index_type>> forms;
  for (auto const& S : census) {
    REQUIRE(canonical_form(S) == S);
    forms.insert(S.flat_table());
  }
  REQUIRE(forms.size() == census.size());
}

TEST_CASE("quotient monoids", "[monoid]") {
  auto S  = z4();
  auto SS = regular_act(S);
  REQUIRE(quotient_monoid(S, delta(SS)).monoid.size() == 4);
  REQUIRE(canonical_form(quotient_monoid(S, delta(SS)).monoid) == canonical_form(S));
  REQUIRE(quotient_monoid(S, nabla(SS)).monoid.size() == 1);
  auto q = quotient_monoid(S, congruence_from_blocks(SS, {{0, 2}, {1, 3}}));
  REQUIRE(canonical_form(q.monoid) == canonical_form(cyclic_group(2)));
  REQUIRE(q.hom.map == std::vector<index_type>{0, 1, 0, 1});

  // a right congruence on S_S that is not two-sided: over the
  // transformation monoid on two points, collapse the two constants
  // with the identity but not the swap
  auto T   = monoid_from_transformations(2, {{1, 0}, {0, 0}});
  auto TT  = regular_act(T);
  bool any = false;
  for (auto const& rho : all_congruences(TT)) {
    try {
      quotient_monoid(T, rho);
    } catch (Error const& e) {
      REQUIRE(e.kind() == ErrorKind::NotTwoSided);
      any = true;
    }
  }
  REQUIRE(any);
}

TEST_CASE("monoid homomorphisms", "[monoid]") {
  auto Z4 = z4(), Z2 = cyclic_group(2);
  REQUIRE_NOTHROW(monoid_hom(Z4, Z2, {0, 1, 0, 1}));
  REQUIRE_THROWS_AS(monoid_hom(Z4, Z2, {0, 1, 1, 1}), Error);
  REQUIRE_THROWS_AS(monoid_hom(Z4, Z2, {1, 0, 1, 0}), Error);
}

TEST_CASE("random monoids honour their filters", "[monoid][random]") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomConfig c;
    c.seed = seed;
    c.size = 6;
    auto S = random_monoid(c);
    REQUIRE(S.size() <= 6);
    REQUIRE(random_monoid(c) == S);
    c.commutative = true;
    REQUIRE(classify(random_monoid(c)).commutative);
    c.commutative = false;
    c.with_zero   = true;
    REQUIRE(classify(random_monoid(c)).has_zero);
  }
}

TEST_CASE("commutative and cancellative facts on random monoids", "[monoid][property]") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    RandomConfig c;
    c.seed        = seed;
    c.size        = 8;
    c.commutative = seed % 2 == 0;
    auto S        = random_monoid(c);
    auto k        = classify(S);
    INFO("seed " << seed);
    if (k.left_cancellative) {
      REQUIRE((k.is_group || k.is_0group));
    }
    if (k.commutative) {
      REQUIRE((k.is_group || k.is_local));
      REQUIRE(minimum_ideal(S).has_value());
    }
    REQUIRE(k.is_local == !k.is_group);
  }
}
