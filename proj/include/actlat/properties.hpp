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
// This file contains structural predicates on finite acts that need the
// homomorphism search: generators, projectivity, semisimplicity and
// complete reducibility, collected by classify_act.

#ifndef ACTLAT_PROPERTIES_HPP_
#define ACTLAT_PROPERTIES_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "act.hpp"
#include "config.hpp"
#include "morphism.hpp"

namespace actlat {

  struct ActClassification {
    bool                simple               = false;
    bool                theta_simple         = false;
    bool                cyclic               = false;
    bool                generator            = false;
    bool                projective           = false;
    std::optional<bool> semisimple;  // only over monoids with a zero
    bool                completely_reducible = false;
  };

  //! Some homomorphism A -> S_S is onto.  Exponential in |A|.
  inline bool is_generator(RightAct const& A, Limits const& limits = {}) {
    RightAct const S    = regular_act(A.monoid());
    bool           onto = false;
    for_each_hom(
        A,
        S,
        [](index_type, index_type) { return true; },
        [&](auto const& map) {
          onto = is_epi(ActHom{A, S, map});
          return !onto;
        },
        HomSearch{false, limits.homs});
    return onto;
  }

  //! S_S is a retract of A: some a with s -> a * s injective is sent to the
  //! identity by a homomorphism A -> S_S.
  inline bool is_generator_by_retract(RightAct const& A, Limits const& limits = {}) {
    Monoid const&  S  = A.monoid();
    RightAct const SS = regular_act(S);
    element_set    free;
    for (index_type a = 0; a < A.size(); ++a) {
      if (cyclic_subact_bits(A, a).count() == S.size()) {
        free.push_back(a);
      }
    }
    if (free.empty()) {
      return false;
    }
    bool found = false;
    for_each_hom(
        A,
        SS,
        [](index_type, index_type) { return true; },
        [&](auto const& map) {
          for (auto a : free) {
            if (map[a] == S.identity()) {
              found = true;
            }
          }
          return !found;
        },
        HomSearch{false, limits.homs});
    return found;
  }

  //! eS for an idempotent e, as an act.
  inline RightAct idempotent_right_ideal(Monoid const& S, index_type e) {
    if (!is_idempotent(S, e)) {
      fail(ErrorKind::InvalidInput, std::to_string(e) + " is not idempotent");
    }
    return as_act(Subact{regular_act(S), principal_right_ideal(S, e).elements()});
  }

  //! Every indecomposable component is isomorphic to eS for an idempotent e.
  inline bool is_projective(RightAct const& A, Limits const& limits = {}) {
    std::vector<RightAct> candidates;
    for (auto e : idempotents(A.monoid())) {
      candidates.push_back(idempotent_right_ideal(A.monoid(), e));
    }
    for (auto const& C : decompose_indecomposable(A)) {
      auto CA = as_act(C);
      bool ok = false;
      for (auto const& E : candidates) {
        if (is_isomorphic(CA, E, limits)) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  //! Semisimple by summands: the pieces of decompose_zero are theta-simple.
  inline bool semisimple_by_summands(RightAct const& A) {
    if (!A.monoid().zero()) {
      fail(ErrorKind::MissingZero, "semisimplicity needs a monoid with zero");
    }
    if (!A.zero()) {
      return false;
    }
    for (auto const& piece : decompose_zero(A)) {
      if (!is_theta_simple(as_act(piece))) {
        return false;
      }
    }
    return true;
  }

  //! Semisimple by subacts: every subact B has (A \ B) u {0} as a subact,
  //! so that B is a 0-direct summand.
  inline bool semisimple_by_subacts(RightAct const& A, Limits const& limits = {}) {
    if (!A.monoid().zero()) {
      fail(ErrorKind::MissingZero, "semisimplicity needs a monoid with zero");
    }
    if (!A.zero()) {
      return false;
    }
    index_type const z = *A.zero();
    for (auto const& B : all_subacts(A, limits.lattice)) {
      auto const  in = Bitset::from(A.size(), B.elements);
      element_set rest{z};
      for (index_type a = 0; a < A.size(); ++a) {
        if (!in.test(a)) {
          rest.push_back(a);
        }
      }
      std::sort(rest.begin(), rest.end());
      if (!is_subact(A, rest)) {
        return false;
      }
    }
    return true;
  }

  inline bool is_semisimple(RightAct const& A) {
    return semisimple_by_summands(A);
  }

  //! A is a disjoint union of simple subacts.
  inline bool is_completely_reducible(RightAct const& A) {
    for (auto const& C : decompose_indecomposable(A)) {
      if (!is_simple(as_act(C))) {
        return false;
      }
    }
    return true;
  }

  inline ActClassification classify_act(RightAct const& A, Limits const& limits = {}) {
    ActClassification c;
    c.simple               = is_simple(A);
    c.theta_simple         = is_theta_simple(A);
    c.cyclic               = is_cyclic(A);
    c.generator            = is_generator(A, limits);
    c.projective           = is_projective(A, limits);
    c.completely_reducible = is_completely_reducible(A);
    if (A.monoid().zero()) {
      c.semisimple = is_semisimple(A);
    }
    return c;
  }

  //! Whether some h in End(A) has f = g o h.  With assume_projective set the
  //! act is first checked to be projective; fA must lie inside gA.
  inline bool projective_lifting_check(RightAct const&                A,
                                       std::vector<index_type> const& f,
                                       std::vector<index_type> const& g,
                                       bool          assume_projective = true,
                                       Limits const& limits            = {}) {
    if (!is_act_hom(A, A, f) || !is_act_hom(A, A, g)) {
      fail(ErrorKind::NotAHomomorphism, "f and g must be endomorphisms");
    }
    Bitset g_image(A.size());
    for (auto x : g) {
      g_image.set(x);
    }
    for (auto x : f) {
      if (!g_image.test(x)) {
        fail(ErrorKind::InvalidInput, "fA is not contained in gA");
      }
    }
    if (assume_projective && !is_projective(A, limits)) {
      fail(ErrorKind::NotProjective, "the act is not projective");
    }
    return find_lifting(A, f, g, limits).has_value();
  }

}  // namespace actlat

#endif  // ACTLAT_PROPERTIES_HPP_
