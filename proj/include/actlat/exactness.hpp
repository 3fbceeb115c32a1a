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
// This file contains Rees short exact sequences A -> B -> C, the check that
// a nested pair of congruences on B is determined by its meet and join with
// ker g, series of subacts with their Rees factors, and the Fitting analysis
// of an endomorphism.

#ifndef ACTLAT_EXACTNESS_HPP_
#define ACTLAT_EXACTNESS_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "act.hpp"
#include "config.hpp"
#include "congruence.hpp"
#include "morphism.hpp"

namespace actlat {

  //! f mono, g epi, ker g = K_Im f.
  struct ReesSES {
    ActHom f;
    ActHom g;
  };

  struct SesDiagnosis {
    bool        ok = true;
    std::string failing_condition;  // "composable", "f mono", "g epi", "ker g = K_Im f"
    std::string witness;
  };

  inline SesDiagnosis verify_rees_ses(ActHom const& f, ActHom const& g) {
    SesDiagnosis d;
    auto         bad = [&](std::string cond, std::string witness) {
      d.ok                = false;
      d.failing_condition = std::move(cond);
      d.witness           = std::move(witness);
      return d;
    };
    if (f.target != g.source) {
      return bad("composable", "target of f is not the source of g");
    }
    std::vector<index_type> seen(f.target.size(), UNDEFINED);
    for (index_type a = 0; a < f.map.size(); ++a) {
      if (seen[f.map[a]] != UNDEFINED) {
        return bad("f mono",
                   "f(" + std::to_string(seen[f.map[a]]) + ") = f("
                       + std::to_string(a) + ")");
      }
      seen[f.map[a]] = a;
    }
    if (!is_epi(g)) {
      for (index_type c = 0; c < g.target.size(); ++c) {
        if (std::find(g.map.begin(), g.map.end(), c) == g.map.end()) {
          return bad("g epi", std::to_string(c) + " is not in the image of g");
        }
      }
    }
    auto ker = kernel(g);
    auto kim = image_congruence(f);
    for (index_type a = 0; a < ker.act().size(); ++a) {
      for (index_type b = a + 1; b < ker.act().size(); ++b) {
        if (ker.related(a, b) != kim.related(a, b)) {
          return bad("ker g = K_Im f",
                     "(" + std::to_string(a) + "," + std::to_string(b) + ") "
                         + (ker.related(a, b) ? "in ker g only" : "in K_Im f only"));
        }
      }
    }
    return d;
  }

  //! B' -> B -> B / B' with the inclusion and the Rees quotient map.
  inline ReesSES rees_ses_from_subact(RightAct const& B, Subact const& sub) {
    auto q = rees_quotient(B, sub);
    return ReesSES{inclusion(sub), q.epi};
  }

  //! Evaluates: if rho and rho' have the same meet and the same join with
  //! ker g, then rho = rho'.  False only on a counterexample.
  inline bool determination_check(ReesSES const&    ses,
                                  Congruence const& rho,
                                  Congruence const& rho_prime) {
    if (!rho_prime.is_subset_of(rho)) {
      fail(ErrorKind::NotNested, "rho' is not contained in rho");
    }
    auto const ker = kernel(ses.g);
    if (meet(rho, ker) == meet(rho_prime, ker) && join(rho, ker) == join(rho_prime, ker)) {
      return rho == rho_prime;
    }
    return true;
  }

  struct SeriesStep {
    RightAct factor;  // A_{i+1} / A_i
    ReesSES  ses;     // A_i -> A_{i+1} -> A_{i+1} / A_i
    bool     verified = false;
  };

  //! For A_1 inside ... inside A_n = A, the Rees sequence of every
  //! consecutive pair.  Each A_{i+1} is taken as an act in its own right.
  inline std::vector<SeriesStep> series_report(RightAct const&                 A,
                                               std::vector<element_set> const& chain) {
    if (chain.empty()) {
      fail(ErrorKind::NotAChain, "empty chain");
    }
    for (size_t i = 0; i < chain.size(); ++i) {
      auto x = chain[i];
      std::sort(x.begin(), x.end());
      if (x != chain[i] || !is_subact(A, x)) {
        fail(ErrorKind::NotAChain, to_string(chain[i]) + " is not a subact");
      }
      if (i > 0
          && !Bitset::from(A.size(), chain[i - 1])
                  .is_subset_of(Bitset::from(A.size(), chain[i]))) {
        fail(ErrorKind::NotAChain,
             to_string(chain[i - 1]) + " is not inside " + to_string(chain[i]));
      }
    }
    if (chain.back().size() != A.size()) {
      fail(ErrorKind::NotAChain, "the last member is not the whole act");
    }
    std::vector<SeriesStep> out;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      auto const& big   = chain[i + 1];
      auto        outer = as_act(Subact{A, big});
      element_set inner;
      for (auto x : chain[i]) {
        inner.push_back(static_cast<index_type>(
            std::lower_bound(big.begin(), big.end(), x) - big.begin()));
      }
      auto ses = rees_ses_from_subact(outer, Subact{outer, inner});
      bool ok  = verify_rees_ses(ses.f, ses.g).ok;
      out.push_back(SeriesStep{ses.g.target, ses, ok});
    }
    return out;
  }

  struct FittingReport {
    size_t n_image_stable  = 0;  // least n with Im f^n = Im f^2n
    size_t k_meet_trivial  = 0;  // least k with ker f^k meet K_Im f^k = Delta
    size_t l               = 0;  // max(n, k)
    bool   join_is_nabla   = false;
    bool   meet_is_delta   = false;
    bool   direct_sum_holds = false;
    std::optional<Congruence> kernel_at_l;
    std::optional<Congruence> image_congruence_at_l;
  };

  //! The exponent searches are bounded by |A|: image sizes strictly
  //! decrease until they stabilise.  A zero exponent in the report means the
  //! bound was hit, which is a counterexample.
  inline FittingReport fitting_analysis(RightAct const& A, ActHom const& f) {
    if (f.source != A || f.target != A || !is_act_hom(A, A, f.map)) {
      fail(ErrorKind::NotAHomomorphism, "f is not an endomorphism of the act");
    }
    FittingReport r;
    size_t const  bound = std::max<size_t>(A.size(), 1);
    for (size_t n = 1; n <= bound && r.n_image_stable == 0; ++n) {
      if (image(power(f, n)).elements == image(power(f, 2 * n)).elements) {
        r.n_image_stable = n;
      }
    }
    for (size_t k = 1; k <= bound && r.k_meet_trivial == 0; ++k) {
      auto fk = power(f, k);
      if (meet(kernel(fk), image_congruence(fk)).is_delta()) {
        r.k_meet_trivial = k;
      }
    }
    if (r.n_image_stable == 0 || r.k_meet_trivial == 0) {
      return r;
    }
    r.l                     = std::max(r.n_image_stable, r.k_meet_trivial);
    auto fl                 = power(f, r.l);
    r.kernel_at_l           = kernel(fl);
    r.image_congruence_at_l = image_congruence(fl);
    r.join_is_nabla    = join(*r.kernel_at_l, *r.image_congruence_at_l).is_nabla();
    r.meet_is_delta    = meet(*r.kernel_at_l, *r.image_congruence_at_l).is_delta();
    r.direct_sum_holds = r.join_is_nabla && r.meet_is_delta;
    return r;
  }

  struct CohopfianReport {
    bool                                 cohopfian = true;
    std::vector<std::vector<index_type>> injective_endomorphisms;
  };

  //! Every injective endomorphism is bijective.
  inline CohopfianReport cohopfian_check(RightAct const& A, Limits const& limits = {}) {
    CohopfianReport r;
    for (auto const& f : enumerate_homs(A, A, limits)) {
      if (is_mono(f)) {
        r.injective_endomorphisms.push_back(f.map);
        r.cohopfian = r.cohopfian && is_epi(f);
      }
    }
    return r;
  }

}  // namespace actlat

#endif  // ACTLAT_EXACTNESS_HPP_
