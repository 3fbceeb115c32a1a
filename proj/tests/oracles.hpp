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
// Brute-force reference implementations used by the tests.  They work
// directly from the definitions (all subsets, all maps, all partitions)
// and share no code with the library beyond the table accessors.

#ifndef ACTLAT_TESTS_ORACLES_HPP_
#define ACTLAT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "actlat/act.hpp"
#include "actlat/monoid.hpp"

namespace oracle {

  using actlat::index_type;
  using actlat::Monoid;
  using actlat::RightAct;
  using Set = std::vector<index_type>;

  inline Set bits_to_set(std::uint64_t mask, size_t n) {
    Set out;
    for (index_type i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        out.push_back(i);
      }
    }
    return out;
  }

  // All nonempty subsets closed under the action.
  inline std::set<Set> subacts(RightAct const& A) {
    std::set<Set> out;
    size_t const  n = A.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      bool closed = true;
      for (index_type a = 0; a < n && closed; ++a) {
        if (mask >> a & 1) {
          for (index_type s = 0; s < A.monoid().size() && closed; ++s) {
            closed = mask >> A.act(a, s) & 1;
          }
        }
      }
      if (closed) {
        out.insert(bits_to_set(mask, n));
      }
    }
    return out;
  }

  // All nonempty I with IS inside I.
  inline std::set<Set> right_ideals(Monoid const& S) {
    std::set<Set> out;
    size_t const  n = S.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      bool closed = true;
      for (index_type a = 0; a < n && closed; ++a) {
        if (mask >> a & 1) {
          for (index_type s = 0; s < n && closed; ++s) {
            closed = mask >> S.product(a, s) & 1;
          }
        }
      }
      if (closed) {
        out.insert(bits_to_set(mask, n));
      }
    }
    return out;
  }

  // Every function {0..n-1} -> {0..m-1}, as an odometer.
  template <typename F>
  void for_each_map(size_t n, size_t m, F&& f) {
    std::vector<index_type> map(n, 0);
    while (true) {
      f(map);
      size_t i = 0;
      while (i < n && ++map[i] == m) {
        map[i++] = 0;
      }
      if (i == n) {
        return;
      }
    }
  }

  inline bool equivariant(RightAct const& A, RightAct const& B, std::vector<index_type> const& f) {
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < A.monoid().size(); ++s) {
        if (f[A.act(a, s)] != B.act(f[a], s)) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<std::vector<index_type>> homs(RightAct const& A, RightAct const& B) {
    std::vector<std::vector<index_type>> out;
    for_each_map(A.size(), B.size(), [&](auto const& f) {
      if (equivariant(A, B, f)) {
        out.push_back(f);
      }
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  // Set partitions as block labels: label[i] <= 1 + max(label[0..i-1]),
  // generated by an odometer over all label vectors and filtered.  Each
  // partition is returned in min-representative form.
  inline std::vector<std::vector<index_type>> partitions(size_t n) {
    std::vector<std::vector<index_type>> out;
    for_each_map(n, n, [&](auto const& label) {
      if (n > 0 && label[0] != 0) {
        return;
      }
      index_type top = 0;
      for (size_t i = 1; i < n; ++i) {
        if (label[i] > top + 1) {
          return;
        }
        top = std::max(top, label[i]);
      }
      std::vector<index_type> first(n, actlat::UNDEFINED), rep(n);
      for (index_type i = 0; i < n; ++i) {
        if (first[label[i]] == actlat::UNDEFINED) {
          first[label[i]] = i;
        }
        rep[i] = first[label[i]];
      }
      out.push_back(rep);
    });
    return out;
  }

  inline bool compatible(RightAct const& A, std::vector<index_type> const& rep) {
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < A.monoid().size(); ++s) {
        if (rep[A.act(a, s)] != rep[A.act(rep[a], s)]) {
          return false;
        }
      }
    }
    return true;
  }

  // Congruences as sorted representative vectors.
  inline std::set<std::vector<index_type>> congruences(RightAct const& A) {
    std::set<std::vector<index_type>> out;
    for (auto const& p : partitions(A.size())) {
      if (compatible(A, p)) {
        out.insert(p);
      }
    }
    return out;
  }

  inline size_t bell(size_t n) {
    // Bell triangle
    std::vector<size_t> row{1};
    for (size_t i = 1; i <= n; ++i) {
      std::vector<size_t> next{row.back()};
      for (auto x : row) {
        next.push_back(next.back() + x);
      }
      row = std::move(next);
    }
    return row.front();
  }

  inline bool associative(std::vector<index_type> const& t, size_t n) {
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        for (size_t c = 0; c < n; ++c) {
          if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Number of monoids of order n up to isomorphism, by filling every table
  // with identity 0 and taking the least relabelling of each.
  inline size_t monoid_count(size_t n) {
    std::set<std::vector<index_type>> classes;
    size_t const                      free_cells = (n - 1) * (n - 1);
    std::vector<index_type>           perm(n);
    for_each_map(free_cells, n, [&](auto const& cells) {
      std::vector<index_type> t(n * n);
      for (index_type s = 0; s < n; ++s) {
        t[s]     = s;
        t[s * n] = s;
      }
      size_t k = 0;
      for (size_t s = 1; s < n; ++s) {
        for (size_t u = 1; u < n; ++u) {
          t[s * n + u] = cells[k++];
        }
      }
      if (!associative(t, n)) {
        return;
      }
      std::vector<index_type> best;
      std::iota(perm.begin(), perm.end(), index_type(0));
      do {
        std::vector<index_type> r(n * n);
        for (size_t s = 0; s < n; ++s) {
          for (size_t u = 0; u < n; ++u) {
            r[perm[s] * n + perm[u]] = perm[t[s * n + u]];
          }
        }
        if (best.empty() || r < best) {
          best = r;
        }
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
      classes.insert(best);
    });
    return classes.size();
  }

  // The kind of the error thrown by f, if any.
  template <typename F>
  std::optional<actlat::ErrorKind> error_kind(F&& f) {
    try {
      f();
    } catch (actlat::Error const& e) {
      return e.kind();
    }
    return std::nullopt;
  }

}  // namespace oracle

#endif  // ACTLAT_TESTS_ORACLES_HPP_
