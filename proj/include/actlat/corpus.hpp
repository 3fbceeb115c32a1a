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
// This file contains the deterministic test corpus: every monoid with at
// most four elements up to isomorphism, small groups and 0-groups, the
// truncated (N, min) monoids, and a family of acts over each of them.

#ifndef ACTLAT_CORPUS_HPP_
#define ACTLAT_CORPUS_HPP_

#include <set>     // for set
#include <string>  // for string
#include <vector>  // for vector

#include "act.hpp"
#include "config.hpp"
#include "monoid.hpp"
#include "random.hpp"

namespace actlat {

  struct NamedMonoid {
    std::string name;
    Monoid      monoid;
  };

  struct NamedAct {
    std::string name;
    RightAct    act;
  };

  //! K = {1, ..., n} as a right ideal of min_monoid_with_identity(n); its
  //! element i - 1 is the number i.
  inline RightAct min_monoid_ideal_act(size_t n) {
    auto        S = min_monoid_with_identity(n);
    element_set K;
    for (index_type i = 1; i <= n; ++i) {
      K.push_back(i);
    }
    return as_act(Subact{regular_act(S), K});
  }

  inline std::vector<NamedMonoid> const& census_monoids() {
    static std::vector<NamedMonoid> const census = [] {
      std::vector<NamedMonoid> out;
      auto                     all = monoid_census(4);
      std::vector<size_t>      count(5, 0);
      for (auto const& S : all) {
        out.push_back({"census" + std::to_string(S.size()) + "_"
                           + std::to_string(count[S.size()]++),
                       S});
      }
      return out;
    }();
    return census;
  }

  //! Z/1 ... Z/6, Z/2 x Z/2 and S_3.
  inline std::vector<NamedMonoid> group_monoids() {
    std::vector<NamedMonoid> out;
    for (size_t n = 1; n <= 6; ++n) {
      out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    }
    out.push_back({"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))});
    out.push_back({"S3", monoid_from_transformations(3, {{1, 0, 2}, {1, 2, 0}})});
    return out;
  }

  //! Groups of order at most four with a zero adjoined.
  inline std::vector<NamedMonoid> zero_group_monoids() {
    std::vector<NamedMonoid> out;
    for (auto const& G : group_monoids()) {
      if (G.monoid.size() <= 4) {
        out.push_back({G.name + "^0", adjoin_zero(G.monoid)});
      }
    }
    return out;
  }

  inline std::vector<NamedMonoid> corpus_monoids() {
    auto out = census_monoids();
    for (auto const& G : group_monoids()) {
      out.push_back(G);
    }
    for (auto const& G : zero_group_monoids()) {
      out.push_back(G);
    }
    for (size_t n = 1; n <= 4; ++n) {
      out.push_back({"min" + std::to_string(n), min_monoid_with_identity(n)});
    }
    return out;
  }

  //! A fixed family of acts over S: S_S, its proper right ideals and their
  //! Rees quotients, one and two fixed points, S_S with a fixed point
  //! added, and seeded random acts of sizes 2 to max_act.  Acts with more
  //! than max_act elements are dropped; duplicates are removed.
  inline std::vector<NamedAct> acts_over(NamedMonoid const& S,
                                         size_t             max_act,
                                         std::uint64_t      seed,
                                         size_t             random_per_size = 2) {
    std::vector<NamedAct>             out;
    std::set<std::vector<index_type>> seen;
    auto                              add = [&](std::string name, RightAct const& A) {
      if (A.size() <= max_act && seen.insert(A.flat_table()).second) {
        out.push_back({S.name + "/" + name, A});
      }
    };
    auto const SS = regular_act(S.monoid);
    add("regular", SS);
    for (auto const& I : all_subacts(SS)) {
      if (I.size() < SS.size()) {
        add("ideal" + to_string(I.elements), as_act(I));
        add("rees" + to_string(I.elements), rees_quotient(SS, I).act);
      }
    }
    add("theta", trivial_act(S.monoid, 1));
    add("fixed2", trivial_act(S.monoid, 2));
    add("regular+theta", coproduct({SS, trivial_act(S.monoid, 1)}));
    for (size_t m = 2; m <= max_act; ++m) {
      for (size_t k = 0; k < random_per_size; ++k) {
        RandomConfig cfg;
        cfg.seed = seed * 1'000'003 + m * 101 + k;
        cfg.size = m;
        add("random" + std::to_string(m) + "_" + std::to_string(k),
            random_act(S.monoid, cfg));
      }
    }
    return out;
  }

  //! Acts over every corpus monoid with at most max_monoid elements.
  inline std::vector<NamedAct> corpus_acts(size_t max_monoid = 4,
                                           size_t max_act    = 5) {
    std::vector<NamedAct> out;
    std::uint64_t         seed = 1;
    for (auto const& S : corpus_monoids()) {
      ++seed;
      if (S.monoid.size() > max_monoid) {
        continue;
      }
      for (auto& A : acts_over(S, max_act, seed)) {
        out.push_back(std::move(A));
      }
    }
    for (size_t n = 1; n <= 8; ++n) {
      if (n <= max_act && n + 1 <= max_monoid) {
        out.push_back({"min" + std::to_string(n) + "/K", min_monoid_ideal_act(n)});
      }
    }
    return out;
  }

}  // namespace actlat

#endif  // ACTLAT_CORPUS_HPP_
