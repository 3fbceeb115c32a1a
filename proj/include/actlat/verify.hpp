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
// This file contains the theorem verification suites.  Each suite runs a
// battery of checks over the exhaustive corpus plus seeded random
// instances and collects counterexamples.  A counterexample carries the
// full monoid and act so that it can be replayed on its own.

#ifndef ACTLAT_VERIFY_HPP_
#define ACTLAT_VERIFY_HPP_

#include <algorithm>  // for sort
#include <map>        // for map
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "act.hpp"
#include "config.hpp"
#include "congruence.hpp"
#include "corpus.hpp"
#include "exactness.hpp"
#include "monoid.hpp"
#include "morphism.hpp"
#include "poset.hpp"
#include "properties.hpp"
#include "random.hpp"

namespace actlat {

  struct VerifyConfig {
    std::uint64_t seed       = 1;
    size_t        instances  = 50;  // random instances on top of the corpus
    size_t        max_act    = 5;
    size_t        max_monoid = 4;
  };

  struct Instance {
    std::string             label;
    Monoid                  monoid;
    std::optional<RightAct> act;
  };

  struct Failure {
    std::string check;
    std::string detail;
    Instance    instance;
  };

  struct VerificationReport {
    std::string          suite;
    size_t               instances_tested = 0;
    std::uint64_t        seed             = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;

    bool passed() const noexcept {
      return failures.empty();
    }
  };

  inline std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = {"closure",
                                                   "cyclic",
                                                   "ses",
                                                   "series",
                                                   "prodcoprod",
                                                   "semisimple",
                                                   "maxsubacts",
                                                   "fitting",
                                                   "grouplike",
                                                   "cancellative",
                                                   "commutative",
                                                   "endposet",
                                                   "generator"};
    return names;
  }

  namespace detail {

    using Sink = std::vector<Failure>;

    inline void report(Sink&              out,
                       Instance const&    inst,
                       std::string const& check,
                       std::string const& detail = "") {
      out.push_back(Failure{check, detail, inst});
    }

    inline std::vector<element_set> subact_sets(RightAct const& A) {
      std::vector<element_set> out;
      for (auto const& B : all_subacts(A)) {
        out.push_back(B.elements);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Instance generation
    ////////////////////////////////////////////////////////////////////////

    inline std::vector<Instance> corpus_act_instances(VerifyConfig const& cfg) {
      std::vector<Instance> out;
      for (auto const& A : corpus_acts(cfg.max_monoid, cfg.max_act)) {
        out.push_back({A.name, A.act.monoid(), A.act});
      }
      Rng rng(cfg.seed);
      for (size_t i = 0; i < cfg.instances; ++i) {
        RandomConfig mc;
        mc.seed = rng.next();
        mc.size = std::max<size_t>(1, cfg.max_monoid);
        auto         S = random_monoid(mc);
        RandomConfig ac;
        ac.seed = rng.next();
        ac.size = 1 + rng.below(std::max<size_t>(1, cfg.max_act));
        out.push_back({"random" + std::to_string(i), S, random_act(S, ac)});
      }
      return out;
    }

    inline std::vector<Instance> corpus_monoid_instances(VerifyConfig const& cfg,
                                                         bool commutative = false) {
      std::vector<Instance> out;
      for (auto const& S : corpus_monoids()) {
        out.push_back({S.name, S.monoid, std::nullopt});
      }
      Rng rng(cfg.seed);
      for (size_t i = 0; i < cfg.instances; ++i) {
        RandomConfig mc;
        mc.seed        = rng.next();
        mc.size        = std::max<size_t>(1, 2 * cfg.max_monoid);
        mc.commutative = commutative;
        out.push_back({"random" + std::to_string(i), random_monoid(mc), std::nullopt});
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Checks, one per suite
    ////////////////////////////////////////////////////////////////////////

    // Extension by Delta embeds Con(B) into Con(A) for a subact B and
    // restricts back; congruences above theta correspond to Con(A / theta).
    inline void check_closure(Instance const& inst, Sink& out) {
      auto const& A   = *inst.act;
      auto const  conA = all_congruences(A);
      std::set<std::vector<index_type>> conA_set;
      for (auto const& rho : conA) {
        conA_set.insert(rho.representatives());
      }
      for (auto const& B : all_subacts(A)) {
        auto const              conB = all_congruences(as_act(B));
        std::vector<Congruence> images;
        for (auto const& rho : conB) {
          auto sigma = extend_congruence(A, B, rho);
          if (conA_set.count(sigma.representatives()) == 0) {
            report(out, inst, "extension is a congruence", to_string(B.elements) + ": " + to_string(rho));
          }
          if (restrict_congruence(sigma, B) != rho) {
            report(out, inst, "extension restricts back", to_string(B.elements) + ": " + to_string(rho));
          }
          images.push_back(sigma);
        }
        for (size_t i = 0; i < conB.size(); ++i) {
          for (size_t j = 0; j < conB.size(); ++j) {
            if (conB[i].is_subset_of(conB[j]) != images[i].is_subset_of(images[j])) {
              report(out, inst, "extension is an order embedding", to_string(B.elements));
            }
          }
        }
      }
      for (auto const& theta : conA) {
        size_t above = 0;
        for (auto const& rho : conA) {
          above += theta.is_subset_of(rho);
        }
        auto const q = act_quotient(theta);
        if (all_congruences(q.act).size() != above) {
          report(out, inst, "Con(A/theta) matches congruences above theta", to_string(theta));
        }
      }
    }

    // Every right congruence rho on S gives a cyclic act S / rho whose
    // lattices are finite and computable; the two-sided ones give monoids.
    inline void check_cyclic(Instance const& inst, Sink& out) {
      auto const SS = regular_act(inst.monoid);
      for (auto const& rho : all_congruences(SS)) {
        auto q = act_quotient(rho);
        try {
          act_from_table(inst.monoid, q.act.table());
        } catch (Error const& e) {
          report(out, inst, "S/rho is an act", to_string(rho) + ": " + e.what());
          continue;
        }
        if (!is_cyclic(q.act)) {
          report(out, inst, "S/rho is cyclic", to_string(rho));
        }
        auto cons = all_congruences(q.act);
        auto subs = all_subacts(q.act);
        if (chain_report(cons).height > q.act.size()
            || chain_report(subs).height > q.act.size()) {
          report(out, inst, "lattice height bounded by |S/rho|", to_string(rho));
        }
        try {
          auto mq = quotient_monoid(inst.monoid, rho);
          if (mq.monoid.size() != q.act.size()) {
            report(out, inst, "S/rho monoid size", to_string(rho));
          }
        } catch (Error const& e) {
          if (e.kind() != ErrorKind::NotTwoSided) {
            throw;
          }
        }
      }
    }

    // The determination sweep: every nested pair in Con(B) for every Rees
    // sequence B' -> B -> B / B'.
    inline void check_ses(Instance const& inst, Sink& out) {
      auto const& B    = *inst.act;
      auto const  conB = all_congruences(B);
      for (auto const& sub : all_subacts(B)) {
        auto ses  = rees_ses_from_subact(B, sub);
        auto diag = verify_rees_ses(ses.f, ses.g);
        if (!diag.ok) {
          report(out, inst, "Rees sequence is exact",
                 to_string(sub.elements) + ": " + diag.failing_condition + " " + diag.witness);
          continue;
        }
        auto const ker = kernel(ses.g);
        for (index_type a = 0; a < B.size(); ++a) {
          for (index_type b = 0; b < B.size(); ++b) {
            bool expected = a == b || (sub.contains(a) && sub.contains(b));
            if (ker.related(a, b) != expected) {
              report(out, inst, "ker g is nabla on Im f and delta off it",
                     to_string(sub.elements));
            }
          }
        }
        for (auto const& rho : conB) {
          for (auto const& rho_prime : conB) {
            if (rho_prime.is_subset_of(rho) && !determination_check(ses, rho, rho_prime)) {
              report(out, inst, "determination",
                     to_string(sub.elements) + ": rho=" + to_string(rho)
                         + " rho'=" + to_string(rho_prime));
            }
          }
        }
      }
    }

    // Random chains of subacts: every step is an exact Rees sequence, sizes
    // add up, and collapsing in two stages is collapsing once.
    inline void check_series(Instance const& inst, Sink& out, std::uint64_t seed) {
      auto const& A    = *inst.act;
      auto const  subs = subact_sets(A);
      Rng         rng(seed);
      for (size_t trial = 0; trial < 4; ++trial) {
        std::vector<element_set> chain{subs[rng.below(subs.size())]};
        while (chain.back().size() < A.size()) {
          std::vector<element_set> bigger;
          for (auto const& s : subs) {
            if (s.size() > chain.back().size()
                && std::includes(s.begin(), s.end(), chain.back().begin(), chain.back().end())) {
              bigger.push_back(s);
            }
          }
          chain.push_back(bigger[rng.below(bigger.size())]);
        }
        auto   steps = series_report(A, chain);
        size_t total = chain.front().size();
        for (auto const& st : steps) {
          if (!st.verified) {
            report(out, inst, "series step is exact", to_string(chain.front()));
          }
          total += st.factor.size() - 1;
        }
        if (total != A.size()) {
          report(out, inst, "series sizes add up", std::to_string(total));
        }
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
          auto first = rees_quotient(A, Subact{A, chain[i]});
          element_set mid;
          for (auto x : chain[i + 1]) {
            mid.push_back(first.epi.map[x]);
          }
          std::sort(mid.begin(), mid.end());
          mid.erase(std::unique(mid.begin(), mid.end()), mid.end());
          auto twice = rees_quotient(first.act, Subact{first.act, mid}).act;
          auto once  = rees_quotient(A, Subact{A, chain[i + 1]}).act;
          if (!is_isomorphic(twice, once)) {
            report(out, inst, "(A/A_i)/(A_{i+1}/A_i) is A/A_{i+1}", to_string(chain[i]));
          }
        }
      }
    }

    inline std::vector<Congruence> pullback_lattice(ActHom const& p) {
      std::vector<Congruence> out;
      for (auto const& rho : all_congruences(p.target)) {
        std::vector<index_type> rep(p.source.size());
        std::map<index_type, index_type> first;
        for (index_type x = 0; x < p.source.size(); ++x) {
          rep[x] = first.emplace(rho.representative(p.map[x]), x).first->second;
        }
        out.emplace_back(p.source, std::move(rep));
      }
      return out;
    }

    // Products and coproducts with a second act: projections pull lattices
    // back injectively, coproduct subacts multiply, A + Theta gives a Rees
    // sequence, and zero-amalgamated sums split as Rees sequences.
    inline void check_prodcoprod(Instance const& inst, Sink& out, std::uint64_t seed) {
      auto const&  A = *inst.act;
      RandomConfig rc;
      rc.seed    = seed;
      rc.size    = 1 + (seed % 2);
      auto const B = random_act(inst.monoid, rc);
      {
        std::vector<RightAct> parts{A, B};
        auto const            P = product(parts);
        for (size_t i = 0; i < 2; ++i) {
          auto const p    = product_projection(parts, P, i);
          auto const pull = pullback_lattice(p);
          for (size_t x = 0; x < pull.size(); ++x) {
            try {
              congruence_from_blocks(P, pull[x].blocks());
            } catch (Error const&) {
              report(out, inst, "pullback along a projection is a congruence");
            }
            for (size_t y = 0; y < pull.size(); ++y) {
              if (x != y && pull[x] == pull[y]) {
                report(out, inst, "pullback along a projection is injective");
              }
            }
          }
          if (!is_epi(p) || !is_act_hom(P, parts[i], p.map)) {
            report(out, inst, "projection is an epimorphism");
          }
        }
      }
      {
        std::vector<RightAct> parts{A, B};
        auto const            C   = coproduct(parts);
        size_t const          sub = all_subacts(C).size();
        size_t const          sa = all_subacts(A).size(), sb = all_subacts(B).size();
        if (sub != (sa + 1) * (sb + 1) - 1) {
          report(out, inst, "|Sub(A+B)| = (|Sub A|+1)(|Sub B|+1)-1");
        }
        auto const inj = coproduct_injection(parts, C, 0);
        auto const img = image(inj);
        for (auto const& rho : all_congruences(A)) {
          auto ext = extend_congruence(C, img, Congruence(as_act(img), rho.representatives()));
          if (restrict_congruence(ext, img).representatives() != rho.representatives()) {
            report(out, inst, "Con(A) embeds in Con(A+B)", to_string(rho));
          }
        }
      }
      {
        auto const  T    = trivial_act(inst.monoid, 1);
        auto const  AT   = coproduct({A, T});
        element_set left(A.size());
        std::iota(left.begin(), left.end(), index_type(0));
        auto ses = rees_ses_from_subact(AT, Subact{AT, left});
        if (!verify_rees_ses(ses.f, ses.g).ok || ses.g.target.size() != 2) {
          report(out, inst, "A -> A+Theta -> (A+Theta)/A is exact");
        }
        if (all_subacts(AT).size() != 2 * all_subacts(A).size() + 1) {
          report(out, inst, "|Sub(A+Theta)| = 2|Sub A|+1");
        }
      }
      if (inst.monoid.zero() && A.zero() && B.zero()) {
        auto const  C = coproduct({A, B}, CoproductMode::zero_amalgamated);
        element_set left(A.size());
        std::iota(left.begin(), left.end(), index_type(0));
        auto ses = rees_ses_from_subact(C, Subact{C, left});
        if (!verify_rees_ses(ses.f, ses.g).ok || !is_isomorphic(ses.g.target, B)) {
          report(out, inst, "A -> A u_0 B -> B is exact");
        }
      }
    }

    // Over a monoid with zero: the summand and subact tests for
    // semisimplicity agree, and a semisimple act needs exactly one
    // generator per nontrivial summand.
    inline void check_semisimple(Instance const& inst, Sink& out) {
      auto const& A = *inst.act;
      if (!inst.monoid.zero()) {
        return;
      }
      bool by_summands = semisimple_by_summands(A);
      bool by_subacts  = semisimple_by_subacts(A);
      if (by_summands != by_subacts) {
        report(out, inst, "semisimple decision procedures agree",
               by_summands ? "summands say yes" : "subacts say yes");
      }
      if (by_summands) {
        size_t nontrivial = 0;
        for (auto const& piece : decompose_zero(A)) {
          nontrivial += piece.size() > 1;
        }
        if (act_generators(A).size() != std::max<size_t>(nontrivial, 1)) {
          report(out, inst, "generators of a semisimple act match its summands");
        }
      }
    }

    inline void check_maxsubacts(Instance const& inst, Sink& out) {
      auto const& A    = *inst.act;
      auto const  all  = all_subacts(A);
      auto const  maxs = maximal_subacts(A);
      for (auto const& M : maxs) {
        for (auto const& B : all) {
          if (B.size() > M.size() && B.size() < A.size() && subact_leq(M, B)) {
            report(out, inst, "maximal subact is maximal", to_string(M.elements));
          }
        }
      }
      for (auto const& B : all) {
        if (B.size() == A.size()) {
          continue;
        }
        bool covered = false;
        for (auto const& M : maxs) {
          covered = covered || subact_leq(B, M);
        }
        if (!covered) {
          report(out, inst, "proper subact lies in a maximal one", to_string(B.elements));
        }
      }
    }

    inline void check_fitting(Instance const& inst, Sink& out) {
      auto const& A = *inst.act;
      for (auto const& f : enumerate_homs(A, A)) {
        auto r = fitting_analysis(A, f);
        std::string const which = to_string(f.map);
        if (r.n_image_stable == 0 || r.n_image_stable > A.size()
            || r.k_meet_trivial == 0 || r.k_meet_trivial > A.size()) {
          report(out, inst, "Fitting exponents bounded by |A|", which);
          continue;
        }
        if (!r.direct_sum_holds) {
          report(out, inst, "ker f^l + K_Im f^l = nabla", which);
        }
        auto const fl  = power(f, r.l);
        auto const img = image(fl);
        Bitset     seen(A.size());
        for (auto x : img.elements) {
          if (!img.contains(f.map[x]) || seen.test(f.map[x])) {
            report(out, inst, "f is a bijection of Im f^l", which);
            break;
          }
          seen.set(f.map[x]);
        }
        if (is_mono(f) != is_epi(f)) {
          report(out, inst, "monomorphism iff automorphism", which);
        }
      }
      if (!cohopfian_check(A).cohopfian) {
        report(out, inst, "cohopfian");
      }
    }

    // Over a group: completely reducible, components are orbits, and a
    // series with simple bottom and theta-simple factors exists.  Over a
    // 0-group: every act with zero is semisimple.
    inline void check_grouplike(Instance const& inst, Sink& out) {
      auto const& A = *inst.act;
      auto const  c = classify(inst.monoid);
      if (c.is_group) {
        if (!classify_act(A).completely_reducible) {
          report(out, inst, "act over a group is completely reducible");
        }
        auto const comps = decompose_indecomposable(A);
        for (auto const& C : comps) {
          if (subact_generated(A, {C.elements.front()}).elements != C.elements) {
            report(out, inst, "components are orbits", to_string(C.elements));
          }
        }
        std::vector<element_set> chain;
        element_set              acc;
        for (auto const& C : comps) {
          acc.insert(acc.end(), C.elements.begin(), C.elements.end());
          std::sort(acc.begin(), acc.end());
          chain.push_back(acc);
        }
        if (!is_simple(as_act(Subact{A, chain.front()}))) {
          report(out, inst, "series starts with a simple act");
        }
        auto const steps = series_report(A, chain);
        for (size_t i = 0; i < steps.size(); ++i) {
          auto const orbit = as_act(comps[i + 1]);
          if (!steps[i].verified
              || !is_isomorphic(steps[i].factor,
                                coproduct({orbit, trivial_act(inst.monoid, 1)}))) {
            report(out, inst, "series factor is an orbit with a zero adjoined",
                   to_string(comps[i + 1].elements));
          }
        }
      }
      if (c.is_0group && A.zero()) {
        if (!semisimple_by_summands(A) || !semisimple_by_subacts(A)) {
          report(out, inst, "act with zero over a 0-group is semisimple");
        }
      }
    }

    // Left cancellative implies group or 0-group; the stabilising chain
    // a^n S = a^(n+1) S appears within |S| steps.
    inline void check_cancellative(Instance const& inst, Sink& out) {
      auto const& S = inst.monoid;
      auto const  c = classify(S);
      if (!c.left_cancellative) {
        return;
      }
      if (!c.is_group && !c.is_0group) {
        report(out, inst, "left cancellative is group or 0-group");
      }
      for (index_type a = 0; a < S.size(); ++a) {
        if (S.zero() && a == *S.zero()) {
          continue;
        }
        index_type power = a;
        bool       found = false;
        for (size_t n = 1; n <= S.size() && !found; ++n) {
          auto next = S.product(power, a);
          if (principal_right_ideal(S, power) == principal_right_ideal(S, next)) {
            found = true;
            // a^n = a^(n+1) b gives a b = 1 by cancellation
            bool inverse = false;
            for (index_type b = 0; b < S.size(); ++b) {
              inverse = inverse || S.product(a, b) == S.identity();
            }
            if (!inverse) {
              report(out, inst, "a has a right inverse", std::to_string(a));
            }
          }
          power = next;
        }
        if (!found) {
          report(out, inst, "a^n S stabilises within |S| steps", std::to_string(a));
        }
      }
    }

    inline void check_commutative(Instance const& inst, Sink& out) {
      auto const& S = inst.monoid;
      auto const  c = classify(S);
      if (!c.commutative) {
        return;
      }
      if (!c.is_group && !c.is_local) {
        report(out, inst, "commutative is group or local");
      }
      auto const K = minimum_ideal(S);
      if (!K) {
        report(out, inst, "minimum ideal exists");
        return;
      }
      if (c.is_group) {
        return;
      }
      auto const& M      = c.maximal_right_ideals.front();
      element_set prev   = M;
      size_t      stable = 0;
      for (size_t n = 1; n <= S.size(); ++n) {
        auto Mn = ideal_power(S, M, n);
        if (!std::includes(Mn.begin(), Mn.end(), K->begin(), K->end())) {
          report(out, inst, "K(S) lies in every M^n", std::to_string(n));
        }
        if (n > 1 && Mn == prev && stable == 0) {
          stable = n - 1;
        }
        prev = std::move(Mn);
      }
      if (stable == 0 && ideal_power(S, M, S.size() + 1) != prev) {
        report(out, inst, "M^n stabilises within |S| steps");
      }
      auto SS  = regular_act(S);
      auto rho = rees_congruence(SS, Subact{SS, M});
      auto q   = quotient_monoid(S, rho);
      if (!classify(q.monoid).is_0group) {
        report(out, inst, "S/M is a 0-group");
      }
    }

    // Projective acts S_S, eS and S_S + eS: fA in gA gives a lifting, and
    // fA = gA gives fT = gT in T = End(A).
    inline void check_endposet(Instance const& inst, Sink& out) {
      auto const&           S = inst.monoid;
      std::vector<RightAct> acts{regular_act(S)};
      for (auto e : idempotents(S)) {
        auto eS = idempotent_right_ideal(S, e);
        acts.push_back(eS);
        acts.push_back(coproduct({regular_act(S), eS}));
      }
      for (auto const& A : acts) {
        if (!is_projective(A)) {
          report(out, inst, "S_S, eS and their coproducts are projective");
          continue;
        }
        auto const E = endomorphism_monoid(A);
        auto const P = principal_right_ideal_poset(E.monoid);
        std::vector<Bitset> images;
        for (auto const& f : E.maps) {
          Bitset b(A.size());
          for (auto x : f) {
            b.set(x);
          }
          images.push_back(b);
        }
        for (index_type f = 0; f < E.maps.size(); ++f) {
          for (index_type g = 0; g < E.maps.size(); ++g) {
            if (!images[f].is_subset_of(images[g])) {
              continue;
            }
            if (!projective_lifting_check(A, E.maps[f], E.maps[g], false)) {
              report(out, inst, "lifting f = g h exists",
                     to_string(E.maps[f]) + " via " + to_string(E.maps[g]));
            }
            if (images[f] == images[g] && !(P.leq[f][g] && P.leq[g][f])) {
              report(out, inst, "fA = gA gives fT = gT",
                     to_string(E.maps[f]) + " and " + to_string(E.maps[g]));
            }
          }
        }
      }
    }

    //! The map from |X| copies of S_S onto the subact generated by X, with
    //! copy i sending s to x_i s.
    inline ActHom free_cover(RightAct const& B, element_set const& X) {
      std::vector<RightAct> copies(X.size(), regular_act(B.monoid()));
      auto const            F = coproduct(copies);
      std::vector<index_type> map;
      for (auto x : X) {
        for (index_type s = 0; s < B.monoid().size(); ++s) {
          map.push_back(B.act(x, s));
        }
      }
      return ActHom{F, B, std::move(map)};
    }

    // A generator maps onto S_S, and through the free cover every finitely
    // generated act is an image of finitely many copies of a generator.
    inline void check_generator(Instance const& inst, Sink& out) {
      auto const& A  = *inst.act;
      auto const  SS = regular_act(inst.monoid);
      bool        g1 = is_generator(A), g2 = is_generator_by_retract(A);
      if (g1 != g2) {
        report(out, inst, "generator tests agree");
      }
      if (!is_generator(SS)) {
        report(out, inst, "S_S is a generator");
      }
      auto const AS      = coproduct({A, SS});
      bool const to_free = !enumerate_homs(A, SS).empty();
      if (is_generator(AS) != to_free) {
        report(out, inst, "A + S_S is a generator iff Hom(A, S_S) is nonempty");
      }
      auto const cover = free_cover(A, act_generators(A));
      if (!is_act_hom(cover.source, A, cover.map) || !is_epi(cover)) {
        report(out, inst, "copies of S_S cover A");
      }
      if (g1) {
        // compose the cover with a retraction G -> S_S on every copy
        auto const ret = enumerate_homs(A, SS);
        for (auto const& r : ret) {
          if (is_epi(r)) {
            std::vector<RightAct> gs(cover.source.size() / inst.monoid.size(), A);
            auto const            G = coproduct(gs);
            std::vector<index_type> map;
            for (index_type i = 0; i < gs.size(); ++i) {
              for (index_type a = 0; a < A.size(); ++a) {
                map.push_back(cover.map[i * inst.monoid.size() + r.map[a]]);
              }
            }
            ActHom onto{G, A, std::move(map)};
            if (!is_act_hom(G, A, onto.map) || !is_epi(onto)) {
              report(out, inst, "copies of a generator cover A");
            }
            break;
          }
        }
      }
    }

  }  // namespace detail

  //! Runs the checks of one suite on one instance and returns the failures.
  inline std::vector<Failure> check_instance(std::string const&  suite,
                                             Instance const&     inst,
                                             VerifyConfig const& cfg,
                                             size_t              position = 0) {
    std::vector<Failure> out;
    auto const           needs_act = [&] {
      if (!inst.act) {
        fail(ErrorKind::InvalidInput, "suite " + suite + " needs an act");
      }
    };
    std::uint64_t const local_seed = cfg.seed * 7919 + position;
    if (suite == "closure") {
      needs_act();
      detail::check_closure(inst, out);
    } else if (suite == "cyclic") {
      detail::check_cyclic(inst, out);
    } else if (suite == "ses") {
      needs_act();
      detail::check_ses(inst, out);
    } else if (suite == "series") {
      needs_act();
      detail::check_series(inst, out, local_seed);
    } else if (suite == "prodcoprod") {
      needs_act();
      detail::check_prodcoprod(inst, out, local_seed);
    } else if (suite == "semisimple") {
      needs_act();
      detail::check_semisimple(inst, out);
    } else if (suite == "maxsubacts") {
      needs_act();
      detail::check_maxsubacts(inst, out);
    } else if (suite == "fitting") {
      needs_act();
      detail::check_fitting(inst, out);
    } else if (suite == "grouplike") {
      needs_act();
      detail::check_grouplike(inst, out);
    } else if (suite == "cancellative") {
      detail::check_cancellative(inst, out);
    } else if (suite == "commutative") {
      detail::check_commutative(inst, out);
    } else if (suite == "endposet") {
      detail::check_endposet(inst, out);
    } else if (suite == "generator") {
      needs_act();
      detail::check_generator(inst, out);
    } else {
      fail(ErrorKind::UnknownSuite, suite);
    }
    return out;
  }

  //! The instances a suite runs on: the exhaustive corpus part filtered by
  //! the size caps, followed by cfg.instances seeded random instances.
  inline std::vector<Instance> suite_instances(std::string const&  suite,
                                               VerifyConfig const& cfg) {
    using detail::corpus_act_instances;
    using detail::corpus_monoid_instances;
    auto const known = suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      fail(ErrorKind::UnknownSuite, suite);
    }
    auto small_monoids = [&](std::vector<Instance> v) {
      std::vector<Instance> out;
      for (auto& i : v) {
        if (i.monoid.size() <= std::max<size_t>(cfg.max_monoid, 2 * cfg.max_monoid)) {
          out.push_back(std::move(i));
        }
      }
      return out;
    };
    if (suite == "cancellative" || suite == "cyclic") {
      return small_monoids(corpus_monoid_instances(cfg));
    }
    if (suite == "commutative") {
      return small_monoids(corpus_monoid_instances(cfg, true));
    }
    if (suite == "endposet") {
      std::vector<Instance> out;
      for (auto& i : corpus_monoid_instances(cfg)) {
        if (i.monoid.size() <= cfg.max_monoid) {
          out.push_back(std::move(i));
        }
      }
      return out;
    }
    if (suite == "grouplike") {
      std::vector<Instance> out;
      Rng                   rng(cfg.seed);
      auto                  add_family = [&](NamedMonoid const& G, bool zero_only) {
        auto acts = acts_over(G, cfg.max_act, rng.next());
        for (auto& A : acts) {
          if (!zero_only || A.act.zero()) {
            out.push_back({A.name, G.monoid, A.act});
          }
        }
      };
      for (auto const& G : group_monoids()) {
        add_family(G, false);
      }
      for (auto const& G : zero_group_monoids()) {
        add_family(G, true);
        // zero-amalgamated sums of Rees quotients are the typical semisimple acts
        auto SS = regular_act(G.monoid);
        auto q  = rees_quotient(SS, Subact{SS, {*G.monoid.zero()}}).act;
        out.push_back({G.name + "/regular+0regular", G.monoid,
                       coproduct({SS, q}, CoproductMode::zero_amalgamated)});
      }
      auto const groups = group_monoids();
      for (size_t i = 0; i < cfg.instances; ++i) {
        auto const&  G = groups[rng.below(groups.size())].monoid;
        RandomConfig ac;
        ac.seed = rng.next();
        ac.size = 1 + rng.below(std::max<size_t>(1, cfg.max_act));
        out.push_back({"random" + std::to_string(i), G, random_act(G, ac)});
      }
      return out;
    }
    if (suite == "semisimple") {
      std::vector<Instance> out;
      for (auto& i : corpus_act_instances(cfg)) {
        if (i.monoid.zero() && i.act->zero()) {
          out.push_back(std::move(i));
        }
      }
      Rng rng(cfg.seed + 1);
      for (auto const& G : zero_group_monoids()) {
        for (size_t k = 0; k < 3; ++k) {
          RandomConfig ac;
          ac.seed      = rng.next();
          ac.size      = 1 + rng.below(std::max<size_t>(1, cfg.max_act));
          ac.with_zero = true;
          out.push_back({G.name + "/random-zero" + std::to_string(k), G.monoid,
                         random_act(G.monoid, ac)});
        }
      }
      return out;
    }
    if (suite == "fitting") {
      auto c   = cfg;
      auto out = corpus_act_instances(c);
      // a few six-element acts: products and sums of small ones
      if (cfg.max_act >= 6) {
        for (auto const& S : census_monoids()) {
          if (S.monoid.size() > 2) {
            continue;
          }
          auto two   = trivial_act(S.monoid, 2);
          auto three = coproduct({regular_act(S.monoid), trivial_act(S.monoid, 3 - S.monoid.size())});
          out.push_back({S.name + "/2x3", S.monoid, product({two, three})});
          out.push_back({S.name + "/fixed6", S.monoid, trivial_act(S.monoid, 6)});
        }
      }
      return out;
    }
    return corpus_act_instances(cfg);
  }

  struct TruncationRow {
    size_t        n = 0;
    LatticeReport subacts;
    size_t        congruences = 0;
  };

  //! The subact lattice of K over min_monoid_with_identity(n), and the
  //! number of congruences on K, for n = 1, ..., n_max.  The heights grow
  //! linearly: a finite trace of the infinite ascending chain of ideals.
  inline std::vector<TruncationRow> truncation_family_report(size_t n_max) {
    if (n_max == 0) {
      fail(ErrorKind::InvalidInput, "n_max must be positive");
    }
    std::vector<TruncationRow> out;
    for (size_t n = 1; n <= n_max; ++n) {
      auto K = min_monoid_ideal_act(n);
      out.push_back({n, chain_report(all_subacts(K)), all_congruences(K).size()});
    }
    return out;
  }

  inline void sort_failures(std::vector<Failure>& failures) {
    std::stable_sort(failures.begin(), failures.end(), [](auto const& x, auto const& y) {
      return std::tie(x.instance.label, x.check, x.detail)
             < std::tie(y.instance.label, y.check, y.detail);
    });
  }

  inline std::vector<std::string> suite_notes(std::string const& suite) {
    std::vector<std::string> notes = {
        "finite instances only; statements about infinite acts are not checked"};
    if (suite == "generator") {
      notes.push_back("only the generator construction is checked; for finite monoids "
                      "every finitely generated act is finitely cogenerated");
    }
    if (suite == "commutative") {
      notes.push_back("condition A for commutative artinian semigroups quantifies over "
                      "all acts and is out of scope");
    }
    if (suite == "fitting") {
      notes.push_back("ker f^k meet K_Im f^k = Delta is checked exhaustively, "
                      "not derived");
    }
    return notes;
  }

  inline VerificationReport verify_suite(std::string const& suite, VerifyConfig const& cfg) {
    auto const         instances = suite_instances(suite, cfg);
    VerificationReport r;
    r.suite = suite;
    r.seed  = cfg.seed;
    r.notes = suite_notes(suite);
    for (size_t i = 0; i < instances.size(); ++i) {
      auto f = check_instance(suite, instances[i], cfg, i);
      r.failures.insert(r.failures.end(), f.begin(), f.end());
    }
    r.instances_tested = instances.size();
    sort_failures(r.failures);
    return r;
  }

}  // namespace actlat

#endif  // ACTLAT_VERIFY_HPP_
