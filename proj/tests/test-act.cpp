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
  ErrorKind kind_of(auto&& f) {
    auto k = oracle::error_kind(f);
    REQUIRE(k.has_value());
    return *k;
  }

  std::vector<element_set> sets(std::vector<Subact> const& xs) {
    std::vector<element_set> out;
    for (auto const& x : xs) {
      out.push_back(x.elements);
    }
    return out;
  }

  Monoid trivial() {
    return cyclic_group(1);
  }
}  // namespace

TEST_CASE("act_from_table", "[act]") {
  auto S  = cyclic_group(3);
  auto SS = act_from_table(S, S.table());
  REQUIRE(SS == regular_act(S));

  auto two = act_from_table(trivial(), {{0}, {1}});
  REQUIRE(two.size() == 2);
  REQUIRE_FALSE(two.zero().has_value());

  REQUIRE(kind_of([&] { act_from_table(S, {{1, 1, 2}, {0, 2, 0}, {2, 0, 1}}); })
          == ErrorKind::UnitLawViolated);
  // unit law holds but (0 * 1) * 1 = 2 while 0 * (1 + 1) = 0
  REQUIRE(kind_of([&] { act_from_table(S, {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}}); })
          == ErrorKind::ActionNotAssociative);
  REQUIRE(kind_of([&] { act_from_table(S, {{0, 1}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("zero elements", "[act]") {
  auto S = min_monoid_with_identity(3);
  auto K = min_monoid_ideal_act(3);
  REQUIRE(K.zero() == index_type(0));  // the number 1
  REQUIRE(regular_act(S).zero() == index_type(1));
  REQUIRE_FALSE(trivial_act(S, 2).zero().has_value());
}

TEST_CASE("subacts", "[act]") {
  auto K = min_monoid_ideal_act(3);
  REQUIRE(sets(all_subacts(K)) == std::vector<element_set>{{0}, {0, 1}, {0, 1, 2}});
  REQUIRE(subact_generated(K, {0, 1, 2}).elements == element_set{0, 1, 2});
  REQUIRE(subact_generated(K, {1}).elements == element_set{0, 1});
  REQUIRE(kind_of([&] { subact_generated(K, {}); }) == ErrorKind::EmptyGeneratingSet);
  REQUIRE(kind_of([&] { make_subact(K, {1}); }) == ErrorKind::NotASubact);

  auto two = trivial_act(trivial(), 2);
  REQUIRE(sets(maximal_subacts(two)) == std::vector<element_set>{{0}, {1}});
}

TEST_CASE("subacts agree with brute force", "[act][oracle]") {
  for (auto const& [name, A] : corpus_acts(4, 5)) {
    INFO(name);
    auto mine = sets(all_subacts(A));
    REQUIRE(std::set<element_set>(mine.begin(), mine.end()) == oracle::subacts(A));
    REQUIRE(std::is_sorted(mine.begin(), mine.end(), shortlex_less));
  }
}

TEST_CASE("Rees quotients", "[act]") {
  auto K = min_monoid_ideal_act(3);
  auto q = rees_quotient(K, make_subact(K, {0, 1}));
  REQUIRE(q.act.size() == 2);
  // survivors first: the number 3 is element 0, the class [B] is element 1
  REQUIRE(q.epi.map == std::vector<index_type>{1, 1, 0});
  REQUIRE(q.act.act(0, 1) == 1);  // 3 * 1 = [B]
  REQUIRE(q.act.act(0, 2) == 1);  // 3 * 2 = [B]
  REQUIRE(q.act.act(0, 3) == 0);  // 3 * 3 = 3
  REQUIRE(q.act.zero() == index_type(1));

  auto whole = rees_quotient(K, make_subact(K, {0, 1, 2}));
  REQUIRE(whole.act.size() == 1);

  auto single = rees_quotient(K, make_subact(K, {0}));
  REQUIRE(is_isomorphic(single.act, K));
}

TEST_CASE("products and coproducts", "[act]") {
  auto S = cyclic_group(2);
  auto A = trivial_act(S, 2);
  auto B = coproduct({regular_act(S), trivial_act(S, 1)});
  REQUIRE(product({A, B}).size() == 6);
  auto C = coproduct({A, B});
  REQUIRE(C.size() == 5);
  REQUIRE(decompose_indecomposable(C).size() == 4);

  auto Z  = adjoin_zero(S);
  auto za = rees_quotient(regular_act(Z), make_subact(regular_act(Z), {2})).act;
  // the zero-amalgamated sum needs a zero
  REQUIRE(kind_of([&] { coproduct({A, A}, CoproductMode::zero_amalgamated); })
          == ErrorKind::MissingZero);
  REQUIRE(kind_of([&] { coproduct({regular_act(Z), trivial_act(Z, 2)},
                                  CoproductMode::zero_amalgamated); })
          == ErrorKind::MissingZero);
  REQUIRE(kind_of([&] { coproduct({A, regular_act(Z)}); }) == ErrorKind::MixedMonoids);

  // a two element zero act {z, a}
  auto zero2 = act_from_table(adjoin_zero(trivial()), {{0, 1}, {1, 1}});
  REQUIRE(zero2.zero() == index_type(1));
  REQUIRE(coproduct({zero2, zero2}, CoproductMode::zero_amalgamated).size() == 3);
  REQUIRE(za.size() == 3);
}

TEST_CASE("decompositions recompose", "[act][property]") {
  for (auto const& [name, A] : corpus_acts(4, 5)) {
    INFO(name);
    auto comps = decompose_indecomposable(A);
    // a partition of the carrier
    std::vector<int> hits(A.size(), 0);
    std::vector<RightAct> parts;
    for (auto const& c : comps) {
      REQUIRE(is_subact(A, c.elements));
      for (auto x : c.elements) {
        ++hits[x];
      }
      parts.push_back(as_act(c));
      REQUIRE(decompose_indecomposable(parts.back()).size() == 1);
    }
    REQUIRE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    REQUIRE(is_isomorphic(coproduct(parts), A));
  }
  auto three = trivial_act(trivial(), 3);
  REQUIRE(decompose_indecomposable(three).size() == 3);
  REQUIRE(decompose_indecomposable(trivial_act(trivial(), 1)).size() == 1);
}

TEST_CASE("act classification", "[act]") {
  auto S  = min_monoid_with_identity(2);
  auto SS = regular_act(S);
  auto c  = classify_act(SS);
  REQUIRE(c.cyclic);
  REQUIRE(c.generator);
  REQUIRE(c.projective);
  for (auto e : idempotents(S)) {
    REQUIRE(classify_act(idempotent_right_ideal(S, e)).projective);
  }
  // over a group every act is completely reducible with orbits as components
  auto G = monoid_from_transformations(3, {{1, 0, 2}, {1, 2, 0}});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RandomConfig rc;
    rc.seed = seed;
    rc.size = 2 + seed % 6;
    auto A  = random_act(G, rc);
    REQUIRE(classify_act(A).completely_reducible);
    REQUIRE_FALSE(classify_act(A).semisimple.has_value());
  }
  REQUIRE(kind_of([&] { semisimple_by_summands(trivial_act(G, 1)); })
          == ErrorKind::MissingZero);
}

TEST_CASE("random acts", "[act][random]") {
  for (auto const& [name, S] : corpus_monoids()) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      RandomConfig rc;
      rc.seed = seed;
      rc.size = 1 + seed * 2;
      INFO(name << " seed " << seed);
      auto A  = random_act(S, rc);
      REQUIRE(A.size() == rc.size);
      REQUIRE(random_act(S, rc) == A);
      REQUIRE_NOTHROW(act_from_table(S, A.table()));
      if (S.zero()) {
        rc.with_zero = true;
        if (S.size() == 1) {
          // every point is fixed, so only the one-point act has a zero
          rc.max_attempts = 50;
          REQUIRE(kind_of([&] { random_act(S, rc); }) == ErrorKind::SizeLimitExceeded);
        } else {
          REQUIRE(random_act(S, rc).zero().has_value());
        }
      }
    }
  }
}
