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
#include <bit>

#include <catch_amalgamated.hpp>

#include "actlat/actlat.hpp"
#include "oracles.hpp"

using namespace actlat;

namespace {
  RightAct points(size_t n) {
    return trivial_act(cyclic_group(1), n);
  }

  Congruence blocks(RightAct const& A, std::vector<element_set> const& b) {
    return congruence_from_blocks(A, b);
  }
}  // namespace

TEST_CASE("delta, nabla and Rees congruences", "[congruence]") {
  auto K = min_monoid_ideal_act(3);
  REQUIRE(rees_congruence(K, make_subact(K, {0})) == delta(K));
  REQUIRE(rees_congruence(K, make_subact(K, {0, 1, 2})) == nabla(K));
  REQUIRE(to_string(rees_congruence(K, make_subact(K, {0, 1}))) == "0,1|2");
  REQUIRE_THROWS_AS(rees_congruence(K, Subact{K, {1}}), Error);
  REQUIRE_THROWS_AS(blocks(K, {{0, 2}, {1}}), Error);
}

TEST_CASE("generated congruences", "[congruence]") {
  auto A = points(3);
  REQUIRE(congruence_generated(A, {}) == delta(A));
  REQUIRE(to_string(principal_congruence(A, 0, 1)) == "0,1|2");
  auto j = join(principal_congruence(A, 0, 1), principal_congruence(A, 1, 2));
  REQUIRE(j.related(0, 2));
  REQUIRE(join(blocks(A, {{0, 1}, {2}}), blocks(A, {{0}, {1, 2}})) == nabla(A));

  // in S_S for min(2), identifying the numbers 1 and 2 gives the Rees
  // congruence of the ideal {1, 2}
  auto S = regular_act(min_monoid_with_identity(2));
  REQUIRE(principal_congruence(S, 1, 2) == rees_congruence(S, make_subact(S, {1, 2})));
}

TEST_CASE("meet and join identities", "[congruence][property]") {
  for (auto const& [name, A] : corpus_acts(3, 4)) {
    INFO(name);
    auto con = all_congruences(A);
    for (auto const& r : con) {
      REQUIRE(join(r, delta(A)) == r);
      REQUIRE(meet(r, nabla(A)) == r);
      for (auto const& s : con) {
        auto j = join(r, s), m = meet(r, s);
        REQUIRE(std::find(con.begin(), con.end(), j) != con.end());
        REQUIRE(std::find(con.begin(), con.end(), m) != con.end());
        REQUIRE(r.is_subset_of(j));
        REQUIRE(m.is_subset_of(s));
        // least upper bound and greatest lower bound in the enumerated lattice
        for (auto const& t : con) {
          if (r.is_subset_of(t) && s.is_subset_of(t)) {
            REQUIRE(j.is_subset_of(t));
          }
          if (t.is_subset_of(r) && t.is_subset_of(s)) {
            REQUIRE(t.is_subset_of(m));
          }
        }
      }
    }
    REQUIRE(con.front() == delta(A));
    REQUIRE(con.back() == nabla(A));
  }
}

TEST_CASE("meets of Rees congruences", "[congruence]") {
  for (auto const& [name, A] : corpus_acts(3, 5)) {
    auto subs = all_subacts(A);
    for (auto const& B1 : subs) {
      for (auto const& B2 : subs) {
        element_set both;
        std::set_intersection(B1.elements.begin(), B1.elements.end(), B2.elements.begin(),
                              B2.elements.end(), std::back_inserter(both));
        if (!both.empty()) {
          INFO(name);
          REQUIRE(meet(rees_congruence(A, B1), rees_congruence(A, B2))
                  == rees_congruence(A, make_subact(A, both)));
        }
      }
    }
  }
}

TEST_CASE("lattice enumeration against the partition oracle", "[congruence][oracle]") {
  SECTION("point sets give Bell numbers") {
    for (size_t n = 1; n <= 6; ++n) {
      auto A = points(n);
      REQUIRE(all_congruences(A).size() == oracle::bell(n));
      REQUIRE(all_congruences(A, CongruenceMethod::oracle).size() == oracle::bell(n));
    }
    REQUIRE(all_congruences(points(2)).size() == 2);
    REQUIRE(all_congruences(points(3)).size() == 5);
  }
  SECTION("corpus acts") {
    for (auto const& [name, A] : corpus_acts(4, 5)) {
      INFO(name);
      std::set<std::vector<index_type>> mine;
      for (auto const& rho : all_congruences(A)) {
        mine.insert(rho.representatives());
      }
      REQUIRE(mine == oracle::congruences(A));
    }
  }
  SECTION("size guard") {
    REQUIRE_THROWS_AS(all_congruences(points(8), CongruenceMethod::oracle), Error);
    Limits tight;
    tight.lattice = 10;
    REQUIRE_THROWS_AS(all_congruences(points(5), CongruenceMethod::saturate, tight), Error);
  }
}

TEST_CASE("minimal generating pairs", "[congruence]") {
  auto A = points(3);
  REQUIRE(minimal_generating_pairs(delta(A)).empty());
  REQUIRE(minimal_generating_pairs(principal_congruence(A, 0, 2)).size() == 1);
  REQUIRE(minimal_generating_pairs(nabla(A)) == std::vector<index_pair>{{0, 1}, {0, 2}});

  // exhaustive lower bound: no smaller set of related pairs generates rho
  for (auto const& [name, B] : corpus_acts(3, 4)) {
    for (auto const& rho : all_congruences(B)) {
      auto pairs = minimal_generating_pairs(rho);
      INFO(name << " " << to_string(rho));
      REQUIRE(congruence_generated(B, pairs) == rho);
      std::vector<index_pair> related;
      for (index_type a = 0; a < B.size(); ++a) {
        for (index_type b = a + 1; b < B.size(); ++b) {
          if (rho.related(a, b)) {
            related.emplace_back(a, b);
          }
        }
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << related.size()); ++mask) {
        if (static_cast<size_t>(std::popcount(mask)) >= pairs.size()) {
          continue;
        }
        std::vector<index_pair> sub;
        for (size_t i = 0; i < related.size(); ++i) {
          if (mask >> i & 1) {
            sub.push_back(related[i]);
          }
        }
        REQUIRE(congruence_generated(B, sub) != rho);
      }
    }
  }
}

TEST_CASE("meet reduction", "[congruence]") {
  auto A  = points(3);
  auto r1 = blocks(A, {{0, 1}, {2}}), r2 = blocks(A, {{0}, {1, 2}}),
       r3 = blocks(A, {{0, 2}, {1}});
  REQUIRE(meet_reduction(A, r1, {r1}) == std::vector<Congruence>{r1});
  REQUIRE(meet_reduction(A, r1, {r1, nabla(A)}) == std::vector<Congruence>{r1});
  auto red = meet_reduction(A, delta(A), {r1, r2, r3});
  REQUIRE(red.size() == 2);
  REQUIRE(meet_family(A, red) == delta(A));
  REQUIRE(oracle::error_kind([&] { meet_reduction(A, delta(A), {r1}); })
          == ErrorKind::MeetMismatch);
  REQUIRE(oracle::error_kind([&] { meet_reduction(A, delta(A), {}); })
          == ErrorKind::EmptySet);
}

TEST_CASE("direct sums", "[congruence]") {
  auto A   = points(3);
  auto rho = blocks(A, {{0, 1}, {2}});
  REQUIRE(direct_sum_check(delta(A), rho) == rho);
  REQUIRE_FALSE(direct_sum_check(rho, rho).has_value());
  REQUIRE(direct_sum_check(rho, blocks(A, {{0}, {1, 2}})) == nabla(A));
}

TEST_CASE("extension and restriction", "[congruence]") {
  auto K = min_monoid_ideal_act(3);
  auto B = make_subact(K, {0, 1});
  auto b = as_act(B);
  REQUIRE(extend_congruence(K, B, delta(b)) == delta(K));
  REQUIRE(extend_congruence(K, B, nabla(b)) == rees_congruence(K, B));
  REQUIRE(to_string(extend_congruence(K, B, nabla(b))) == "0,1|2");
  for (auto const& rho : all_congruences(b)) {
    REQUIRE(restrict_congruence(extend_congruence(K, B, rho), B) == rho);
  }
  REQUIRE_THROWS_AS(extend_congruence(K, Subact{K, {1}}, delta(b)), Error);
}

TEST_CASE("lattice extrema", "[congruence]") {
  auto A = points(3);
  auto e = lattice_extrema({delta(A), nabla(A)});
  REQUIRE(e.minimal == std::vector<Congruence>{delta(A)});
  REQUIRE(e.maximal == std::vector<Congruence>{nabla(A)});
  std::vector<Congruence> atoms{blocks(A, {{0, 1}, {2}}), blocks(A, {{0}, {1, 2}}),
                                blocks(A, {{0, 2}, {1}})};
  auto ea = lattice_extrema(atoms);
  REQUIRE(ea.minimal.size() == 3);
  REQUIRE(ea.maximal.size() == 3);
  REQUIRE_THROWS_AS(lattice_extrema({}), Error);
  REQUIRE_THROWS_AS(join(delta(A), delta(points(2))), Error);
}

TEST_CASE("first isomorphism property", "[congruence][morphism]") {
  for (auto const& [name, A] : corpus_acts(3, 4)) {
    for (auto const& B : corpus_acts(3, 3)) {
      if (B.act.monoid() != A.monoid()) {
        continue;
      }
      for (auto const& f : enumerate_homs(A, B.act)) {
        INFO(name << " -> " << B.name);
        auto ker = kernel(f);
        REQUIRE(oracle::compatible(A, ker.representatives()));
        REQUIRE(is_isomorphic(act_quotient(ker).act, as_act(image(f))));
      }
    }
  }
}
