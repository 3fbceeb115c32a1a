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
// This file contains generic algorithms on finite posets given as a list of
// items and an order predicate: extrema, a longest chain, the covering
// relation, and Graphviz output of the Hasse diagram.  They are used for
// congruence lattices, subact lattices and principal right ideal posets.

#ifndef ACTLAT_POSET_HPP_
#define ACTLAT_POSET_HPP_

#include <functional>  // for function
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include "act.hpp"
#include "config.hpp"
#include "congruence.hpp"

namespace actlat {

  struct LatticeReport {
    size_t              element_count = 0;
    size_t              height        = 0;  // number of members of a longest chain
    std::vector<size_t> minimal_elements;   // indices into the input list
    std::vector<size_t> maximal_elements;
    std::vector<size_t> longest_chain;  // from bottom to top
  };

  namespace detail {

    template <typename T, typename Leq>
    std::vector<std::vector<size_t>> strict_up_sets(std::vector<T> const& items, Leq&& leq) {
      std::vector<std::vector<size_t>> up(items.size());
      for (size_t i = 0; i < items.size(); ++i) {
        for (size_t j = 0; j < items.size(); ++j) {
          if (i != j && leq(items[i], items[j]) && !leq(items[j], items[i])) {
            up[i].push_back(j);
          }
        }
      }
      return up;
    }

  }  // namespace detail

  //! Extrema and a longest chain of a finite poset.  The chain is found by
  //! dynamic programming over the strict order (memoised longest path).
  template <typename T, typename Leq>
  LatticeReport poset_report(std::vector<T> const& items, Leq&& leq) {
    if (items.empty()) {
      fail(ErrorKind::EmptySet, "chain report of an empty set");
    }
    size_t const  n  = items.size();
    auto const    up = detail::strict_up_sets(items, leq);
    LatticeReport r;
    r.element_count = n;
    std::vector<char> has_lower(n, 0);
    for (size_t i = 0; i < n; ++i) {
      for (auto j : up[i]) {
        has_lower[j] = 1;
      }
    }
    for (size_t i = 0; i < n; ++i) {
      if (!has_lower[i]) {
        r.minimal_elements.push_back(i);
      }
      if (up[i].empty()) {
        r.maximal_elements.push_back(i);
      }
    }
    // longest[i] = members of a longest chain starting at i
    std::vector<size_t> longest(n, 0), next(n, n);
    auto                solve = [&](auto&& self, size_t i) -> size_t {
      if (longest[i] != 0) {
        return longest[i];
      }
      size_t best = 1;
      for (auto j : up[i]) {
        auto len = 1 + self(self, j);
        if (len > best) {
          best    = len;
          next[i] = j;
        }
      }
      return longest[i] = best;
    };
    size_t start = 0;
    for (size_t i = 0; i < n; ++i) {
      if (solve(solve, i) > longest[start]) {
        start = i;
      }
    }
    r.height = longest[start];
    for (size_t i = start; i != n; i = next[i]) {
      r.longest_chain.push_back(i);
    }
    return r;
  }

  //! Pairs (i, j) with items[i] < items[j] and nothing strictly between.
  template <typename T, typename Leq>
  std::vector<std::pair<size_t, size_t>> covering_pairs(std::vector<T> const& items,
                                                        Leq&&                 leq) {
    auto const                             up = detail::strict_up_sets(items, leq);
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < items.size(); ++i) {
      for (auto j : up[i]) {
        bool cover = true;
        for (auto k : up[i]) {
          if (k != j && leq(items[k], items[j]) && !leq(items[j], items[k])) {
            cover = false;
            break;
          }
        }
        if (cover) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  //! Hasse diagram in the Graphviz dialect, bottom to top.  Node names are
  //! the labels, so output depends only on the poset and its labelling.
  template <typename T, typename Leq>
  std::string hasse_dot(std::vector<T> const&           items,
                        Leq&&                           leq,
                        std::vector<std::string> const& labels,
                        std::string const&              name = "lattice") {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (auto const& l : labels) {
      out << "  \"" << l << "\";\n";
    }
    for (auto [i, j] : covering_pairs(items, leq)) {
      out << "  \"" << labels[i] << "\" -> \"" << labels[j] << "\";\n";
    }
    out << "}\n";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence and subact lattices
  ////////////////////////////////////////////////////////////////////////

  inline LatticeReport chain_report(std::vector<Congruence> const& lattice) {
    return poset_report(lattice, [](Congruence const& x, Congruence const& y) {
      return x.is_subset_of(y);
    });
  }

  inline bool subact_leq(Subact const& x, Subact const& y) {
    return std::includes(
        y.elements.begin(), y.elements.end(), x.elements.begin(), x.elements.end());
  }

  inline LatticeReport chain_report(std::vector<Subact> const& lattice) {
    return poset_report(lattice, subact_leq);
  }

  inline std::string congruence_lattice_dot(std::vector<Congruence> const& lattice) {
    std::vector<std::string> labels;
    for (auto const& rho : lattice) {
      labels.push_back(to_string(rho));
    }
    return hasse_dot(
        lattice,
        [](Congruence const& x, Congruence const& y) { return x.is_subset_of(y); },
        labels,
        "congruences");
  }

  inline std::string subact_lattice_dot(std::vector<Subact> const& lattice) {
    std::vector<std::string> labels;
    for (auto const& B : lattice) {
      labels.push_back(to_string(B.elements));
    }
    return hasse_dot(lattice, subact_leq, labels, "subacts");
  }

}  // namespace actlat

#endif  // ACTLAT_POSET_HPP_
