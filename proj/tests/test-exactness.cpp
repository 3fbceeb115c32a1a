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

TEST_CASE("Rees sequences from subacts", "[exactness]") {
  auto K = min_monoid_ideal_act(3);

  auto whole = rees_ses_from_subact(K, make_subact(K, {0, 1, 2}));
  REQUIRE(whole.g.target.size() == 1);
  REQUIRE(verify_rees_ses(whole.f, whole.g).ok);

  auto single = rees_ses_from_subact(K, make_subact(K, {0}));
  REQUIRE(is_mono(single.g));
  REQUIRE(is_isomorphic(single.g.target, K));

  auto mid = rees_ses_from_subact(K, make_subact(K, {0, 1}));
  REQUIRE(mid.g.target.size() == 2);
  REQUIRE(kernel(mid.g) == image_congruence(mid.f));
  REQUIRE(verify_rees_ses(mid.f, mid.g).ok);
}

TEST_CASE("broken sequences are diagnosed", "[exactness]") {
  auto K   = min_monoid_ideal_act(3);
  auto B   = make_subact(K, {0, 1});
  auto inc = inclusion(B);

  // g injective while Im f has two elements: ker g = Delta != K_Im f
  auto d = verify_rees_ses(inc, identity_hom(K));
  REQUIRE_FALSE(d.ok);
  REQUIRE(d.failing_condition == "ker g = K_Im f");

  // f not injective
  auto theta = trivial_act(K.monoid(), 2);
  auto f     = ActHom{theta, K, {0, 0}};
  auto g     = rees_quotient(K, make_subact(K, {0})).epi;
  auto d2    = verify_rees_ses(f, g);
  REQUIRE_FALSE(d2.ok);
  REQUIRE(d2.failing_condition == "f mono");
  REQUIRE_FALSE(d2.witness.empty());

  auto d3 = verify_rees_ses(inc, rees_quotient(regular_act(K.monoid()), make_subact(regular_act(K.monoid()), {1})).epi);
  REQUIRE(d3.failing_condition == "composable");
}

TEST_CASE("determination check", "[exactness]") {
  auto K   = min_monoid_ideal_act(3);
  auto ses = rees_ses_from_subact(K, make_subact(K, {0, 1}));
  auto rho = rees_congruence(K, make_subact(K, {0, 1}));
  REQUIRE(determination_check(ses, rho, rho));
  REQUIRE(determination_check(ses, nabla(K), delta(K)));
  REQUIRE(oracle::error_kind([&] { determination_check(ses, delta(K), nabla(K)); })
          == ErrorKind::NotNested);

}

TEST_CASE("determination sweep on the corpus", "[exactness][property]") {
  size_t pairs = 0;
  for (auto const& [name, B] : corpus_acts(3, 4)) {
    auto con = all_congruences(B);
    for (auto const& sub : all_subacts(B)) {
      auto ses = rees_ses_from_subact(B, sub);
      REQUIRE(verify_rees_ses(ses.f, ses.g).ok);
      for (auto const& r : con) {
        for (auto const& rp : con) {
          if (rp.is_subset_of(r)) {
            INFO(name << " " << to_string(sub.elements) << " " << to_string(r) << " "
                      << to_string(rp));
            REQUIRE(determination_check(ses, r, rp));
            ++pairs;
          }
        }
      }
    }
  }
  REQUIRE(pairs > 1000);
}

TEST_CASE("series", "[exactness]") {
  auto K     = min_monoid_ideal_act(3);
  auto steps = series_report(K, {{0}, {0, 1}, {0, 1, 2}});
  REQUIRE(steps.size() == 2);
  for (auto const& s : steps) {
    REQUIRE(s.factor.size() == 2);
    REQUIRE(s.verified);
  }
  REQUIRE(series_report(K, {{0, 1, 2}}).empty());
  REQUIRE(oracle::error_kind([&] { series_report(K, {{1}, {0, 1, 2}}); })
          == ErrorKind::NotAChain);
  REQUIRE(oracle::error_kind([&] { series_report(K, {{0, 1}, {0}}); })
          == ErrorKind::NotAChain);
  REQUIRE(oracle::error_kind([&] { series_report(K, {{0}, {0, 1}}); })
          == ErrorKind::NotAChain);
}

TEST_CASE("Fitting analysis", "[exactness]") {
  auto G = cyclic_group(1);
  auto A = trivial_act(G, 3);

  auto id = fitting_analysis(A, identity_hom(A));
  REQUIRE(id.n_image_stable == 1);
  REQUIRE(id.k_meet_trivial == 1);
  REQUIRE(id.kernel_at_l->is_delta());
  REQUIRE(id.image_congruence_at_l->is_nabla());
  REQUIRE(id.direct_sum_holds);

  auto c = fitting_analysis(A, act_hom(A, A, {1, 1, 1}));
  REQUIRE(c.n_image_stable == 1);
  REQUIRE(c.kernel_at_l->is_nabla());
  REQUIRE(c.image_congruence_at_l->is_delta());
  REQUIRE(c.direct_sum_holds);

  // a nilpotent-like chain 2 -> 1 -> 0 -> 0 over the trivial monoid
  auto B   = trivial_act(G, 4);
  auto nil = fitting_analysis(B, act_hom(B, B, {0, 0, 1, 2}));
  REQUIRE(nil.n_image_stable == 3);
  REQUIRE(nil.l == 3);
  REQUIRE(nil.direct_sum_holds);
  REQUIRE_THROWS_AS(fitting_analysis(A, identity_hom(B)), Error);
}

TEST_CASE("Fitting and cohopfian sweep", "[exactness][property]") {
  for (auto const& [name, A] : corpus_acts(3, 5)) {
    INFO(name);
    for (auto const& f : enumerate_homs(A, A)) {
      auto r = fitting_analysis(A, f);
      REQUIRE(r.direct_sum_holds);
      REQUIRE(r.n_image_stable <= A.size());
      REQUIRE(r.k_meet_trivial <= A.size());
      // image sizes never grow again past the stable exponent
      REQUIRE(image(power(f, r.l)).size() == image(power(f, r.l + 1)).size());
    }
    auto co = cohopfian_check(A);
    REQUIRE(co.cohopfian);
    REQUIRE_FALSE(co.injective_endomorphisms.empty());
  }
  REQUIRE(cohopfian_check(trivial_act(cyclic_group(2), 1)).cohopfian);
}
