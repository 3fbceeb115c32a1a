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
// This file contains homomorphisms between finite right acts: the
// backtracking search over generator images, kernels and image congruences,
// isomorphism testing, endomorphism monoids, restriction of scalars along a
// monoid homomorphism, and the principal right ideal poset of End(A).

#ifndef ACTLAT_MORPHISM_HPP_
#define ACTLAT_MORPHISM_HPP_

#include <map>       // for map
#include <optional>  // for optional
#include <vector>    // for vector

#include "act.hpp"
#include "config.hpp"
#include "congruence.hpp"
#include "monoid.hpp"

namespace actlat {

  //! A least generating set of A: the least element of every class of the
  //! preorder "b in aS" that no other class reaches.
  inline element_set act_generators(RightAct const& A) {
    std::vector<Bitset> reach;
    for (index_type a = 0; a < A.size(); ++a) {
      reach.push_back(cyclic_subact_bits(A, a));
    }
    element_set out;
    for (index_type a = 0; a < A.size(); ++a) {
      bool top = true, least = true;
      for (index_type b = 0; b < A.size() && top; ++b) {
        if (b != a && reach[b].test(a)) {
          if (!reach[a].test(b)) {
            top = false;
          } else if (b < a) {
            least = false;
          }
        }
      }
      if (top && least) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline bool is_act_hom(RightAct const&                A,
                         RightAct const&                B,
                         std::vector<index_type> const& map) {
    if (A.monoid() != B.monoid() || map.size() != A.size()) {
      return false;
    }
    for (auto x : map) {
      if (x >= B.size()) {
        return false;
      }
    }
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < A.monoid().size(); ++s) {
        if (map[A.act(a, s)] != B.act(map[a], s)) {
          return false;
        }
      }
    }
    return true;
  }

  inline ActHom act_hom(RightAct const& A, RightAct const& B, std::vector<index_type> map) {
    check_same_monoid(A, B);
    if (!is_act_hom(A, B, map)) {
      fail(ErrorKind::NotAHomomorphism, "map does not commute with the action");
    }
    return ActHom{A, B, std::move(map)};
  }

  inline bool is_mono(ActHom const& f) {
    std::vector<char> hit(f.target.size(), 0);
    for (auto x : f.map) {
      if (hit[x]) {
        return false;
      }
      hit[x] = 1;
    }
    return true;
  }

  inline bool is_epi(ActHom const& f) {
    std::vector<char> hit(f.target.size(), 0);
    size_t            count = 0;
    for (auto x : f.map) {
      count += hit[x] == 0;
      hit[x] = 1;
    }
    return count == f.target.size();
  }

  struct HomSearch {
    bool   injective = false;
    size_t cap       = Limits{}.homs;
  };

  //! Calls visit(map) for every homomorphism A -> B whose generator images
  //! pass allow(generator, image); stops early when visit returns false.
  //! Images of act_generators(A) are chosen in increasing order and the rest
  //! of the map is forced by the action.
  template <typename Allow, typename Visit>
  void for_each_hom(RightAct const& A,
                    RightAct const& B,
                    Allow&&         allow,
                    Visit&&         visit,
                    HomSearch const& opts = {}) {
    check_same_monoid(A, B);
    if (opts.injective && A.size() > B.size()) {
      return;
    }
    size_t const            m    = A.monoid().size();
    element_set const       gens = act_generators(A);
    std::vector<index_type> map(A.size(), UNDEFINED);
    std::vector<char>       used(B.size(), 0);
    size_t                  nodes = 0;

    auto recurse = [&](auto&& self, size_t i) -> bool {
      if (i == gens.size()) {
        return visit(static_cast<std::vector<index_type> const&>(map));
      }
      index_type const g = gens[i];
      for (index_type b = 0; b < B.size(); ++b) {
        if (!allow(g, b)) {
          continue;
        }
        if (++nodes > opts.cap) {
          fail(ErrorKind::SizeLimitExceeded,
               "homomorphism search exceeded " + std::to_string(opts.cap)
                   + " nodes");
        }
        std::vector<index_type> trail;
        bool                    ok = true;
        for (index_type s = 0; s < m; ++s) {
          auto x = A.act(g, s), y = B.act(b, s);
          if (map[x] == UNDEFINED) {
            if (opts.injective && used[y]) {
              ok = false;
              break;
            }
            map[x]  = y;
            used[y] = 1;
            trail.push_back(x);
          } else if (map[x] != y) {
            ok = false;
            break;
          }
        }
        bool keep_going = !ok || self(self, i + 1);
        for (auto x : trail) {
          used[map[x]] = 0;
          map[x]       = UNDEFINED;
        }
        if (!keep_going) {
          return false;
        }
      }
      return true;
    };
    recurse(recurse, 0);
  }

  //! All homomorphisms A -> B, ordered lexicographically by map.
  inline std::vector<ActHom> enumerate_homs(RightAct const& A,
                                            RightAct const& B,
                                            Limits const&   limits = {}) {
    std::vector<std::vector<index_type>> maps;
    for_each_hom(
        A,
        B,
        [](index_type, index_type) { return true; },
        [&](auto const& map) {
          maps.push_back(map);
          return true;
        },
        HomSearch{false, limits.homs});
    std::sort(maps.begin(), maps.end());
    std::vector<ActHom> out;
    for (auto& map : maps) {
      out.push_back(ActHom{A, B, std::move(map)});
    }
    return out;
  }

  //! A bijective homomorphism A -> B, if there is one.  Generator images
  //! are pruned by orbit size and stabiliser size.
  inline std::optional<std::vector<index_type>>
  find_isomorphism(RightAct const& A, RightAct const& B, Limits const& limits = {}) {
    if (A.monoid() != B.monoid() || A.size() != B.size()) {
      return std::nullopt;
    }
    auto signature = [](RightAct const& X, index_type x) {
      size_t stab = 0;
      for (index_type s = 0; s < X.monoid().size(); ++s) {
        stab += X.act(x, s) == x;
      }
      return std::pair(cyclic_subact_bits(X, x).count(), stab);
    };
    std::vector<std::pair<size_t, size_t>> sigA, sigB;
    for (index_type a = 0; a < A.size(); ++a) {
      sigA.push_back(signature(A, a));
      sigB.push_back(signature(B, a));
    }
    {
      auto x = sigA, y = sigB;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) {
        return std::nullopt;
      }
    }
    std::optional<std::vector<index_type>> found;
    for_each_hom(
        A,
        B,
        [&](index_type g, index_type b) { return sigA[g] == sigB[b]; },
        [&](auto const& map) {
          found = map;
          return false;
        },
        HomSearch{true, limits.homs});
    return found;
  }

  inline bool is_isomorphic(RightAct const& A, RightAct const& B, Limits const& limits = {}) {
    return find_isomorphism(A, B, limits).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernels and images
  ////////////////////////////////////////////////////////////////////////

  //! ker f = {(a, a') : f(a) = f(a')} on the source.
  inline Congruence kernel(ActHom const& f) {
    std::map<index_type, index_type> first;
    std::vector<index_type>          rep(f.source.size());
    for (index_type a = 0; a < f.source.size(); ++a) {
      rep[a] = first.emplace(f.map[a], a).first->second;
    }
    return Congruence(f.source, std::move(rep));
  }

  inline Subact image(ActHom const& f) {
    element_set im(f.map.begin(), f.map.end());
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return Subact{f.target, std::move(im)};
  }

  //! K_Im f = (f(A) x f(A)) u Delta on the target.
  inline Congruence image_congruence(ActHom const& f) {
    return rees_congruence(f.target, image(f));
  }

  inline ActHom compose(ActHom const& g, ActHom const& f) {  // g after f
    std::vector<index_type> map(f.source.size());
    for (index_type a = 0; a < map.size(); ++a) {
      map[a] = g.map[f.map[a]];
    }
    return ActHom{f.source, g.target, std::move(map)};
  }

  inline ActHom identity_hom(RightAct const& A) {
    return ActHom{A, A, detail::identity_reps(A.size())};
  }

  inline ActHom power(ActHom const& f, size_t n) {
    ActHom r = identity_hom(f.source);
    for (size_t i = 0; i < n; ++i) {
      r = compose(f, r);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphism monoid
  ////////////////////////////////////////////////////////////////////////

  struct EndomorphismMonoid {
    Monoid                               monoid;
    std::vector<std::vector<index_type>> maps;  // element i of monoid is maps[i]

    index_type index_of(std::vector<index_type> const& map) const {
      auto it = std::lower_bound(maps.begin(), maps.end(), map);
      if (it == maps.end() || *it != map) {
        fail(ErrorKind::NotAHomomorphism, "not an endomorphism");
      }
      return static_cast<index_type>(it - maps.begin());
    }
  };

  //! End(A) with maps in lexicographic order.  The product f * g is the
  //! composite "g first, then f", so f End(A) = {f o h}.
  inline EndomorphismMonoid endomorphism_monoid(RightAct const& A,
                                                Limits const&   limits = {}) {
    EndomorphismMonoid E{Monoid::make_unchecked(1, {0}, 0), {}};
    for (auto& f : enumerate_homs(A, A, limits)) {
      E.maps.push_back(std::move(f.map));
    }
    size_t const            n = E.maps.size();
    std::vector<index_type> table(n * n);
    std::vector<index_type> comp(A.size());
    for (index_type f = 0; f < n; ++f) {
      for (index_type g = 0; g < n; ++g) {
        for (index_type a = 0; a < A.size(); ++a) {
          comp[a] = E.maps[f][E.maps[g][a]];
        }
        table[f * n + g] = E.index_of(comp);
      }
    }
    E.monoid = Monoid::make_unchecked(
        n, std::move(table), E.index_of(detail::identity_reps(A.size())));
    return E;
  }

  ////////////////////////////////////////////////////////////////////////
  // Restriction of scalars
  ////////////////////////////////////////////////////////////////////////

  struct ScalarRestriction {
    RightAct act;
    // Filled when the act is small enough to enumerate both lattices.
    std::optional<bool> target_lattice_embeds;  // Con_T(A) is inside Con_S(A)
    std::optional<bool> lattices_equal;
  };

  //! A as an S-act via a * s = a * h(s).
  inline ScalarRestriction restrict_scalars(MonoidHom const& h,
                                            RightAct const&  A,
                                            Limits const&    limits = {}) {
    if (A.monoid() != h.target) {
      fail(ErrorKind::MixedMonoids, "the act is not over the target of h");
    }
    size_t const            m = h.source.size();
    std::vector<index_type> table(A.size() * m);
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < m; ++s) {
        table[a * m + s] = A.act(a, h.map[s]);
      }
    }
    ScalarRestriction r{
        RightAct::make_unchecked(h.source, A.size(), std::move(table)), {}, {}};
    if (A.size() <= limits.lattice_compare) {
      auto over_t = all_congruences(A, CongruenceMethod::saturate, limits);
      auto over_s = all_congruences(r.act, CongruenceMethod::saturate, limits);
      std::set<std::vector<index_type>> s_reps;
      for (auto const& rho : over_s) {
        s_reps.insert(rho.representatives());
      }
      bool embeds = true;
      for (auto const& rho : over_t) {
        embeds = embeds && s_reps.count(rho.representatives()) == 1;
      }
      r.target_lattice_embeds = embeds;
      r.lattices_equal        = embeds && over_t.size() == over_s.size();
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Principal right ideals of End(A) and the lifting property
  ////////////////////////////////////////////////////////////////////////

  struct RightIdealPoset {
    Monoid                         monoid;
    std::vector<element_set>       ideals;  // ideals[f] = f T
    std::vector<std::vector<char>> leq;     // leq[f][g] iff f T inside g T
  };

  inline RightIdealPoset principal_right_ideal_poset(Monoid const& T) {
    RightIdealPoset P{T, {}, {}};
    std::vector<Bitset> bits;
    for (index_type f = 0; f < T.size(); ++f) {
      bits.push_back(principal_right_ideal(T, f));
      P.ideals.push_back(bits.back().elements());
    }
    P.leq.assign(T.size(), std::vector<char>(T.size(), 0));
    for (index_type f = 0; f < T.size(); ++f) {
      for (index_type g = 0; g < T.size(); ++g) {
        P.leq[f][g] = bits[f].is_subset_of(bits[g]);
      }
    }
    return P;
  }

  //! An endomorphism h with f = g o h, if one exists.
  inline std::optional<std::vector<index_type>>
  find_lifting(RightAct const&                A,
               std::vector<index_type> const& f,
               std::vector<index_type> const& g,
               Limits const&                  limits = {}) {
    std::optional<std::vector<index_type>> found;
    for_each_hom(
        A,
        A,
        [&](index_type x, index_type b) { return g[b] == f[x]; },
        [&](auto const& h) {
          found = h;
          return false;
        },
        HomSearch{false, limits.homs});
    return found;
  }

}  // namespace actlat

#endif  // ACTLAT_MORPHISM_HPP_
