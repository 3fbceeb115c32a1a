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
// This file contains the Monoid class, the constructions of finite monoids
// used throughout actlat (from tables, from transformations, and the
// truncated (N, min) monoids with an adjoined identity), and the
// classification of a monoid by its units and right ideals.

#ifndef ACTLAT_MONOID_HPP_
#define ACTLAT_MONOID_HPP_

#include <deque>          // for deque
#include <map>            // for map
#include <memory>         // for shared_ptr
#include <optional>       // for optional
#include <set>            // for set
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "config.hpp"

namespace actlat {

  //! A finite monoid given by its multiplication table.  Elements are the
  //! indices 0, ..., size() - 1.  Values are immutable and cheap to copy;
  //! copies share the underlying table.
  class Monoid {
   public:
    size_t size() const noexcept {
      return _data->size;
    }

    index_type identity() const noexcept {
      return _data->identity;
    }

    std::optional<index_type> zero() const noexcept {
      return _data->zero;
    }

    index_type product(index_type s, index_type t) const noexcept {
      return _data->table[s * _data->size + t];
    }

    std::vector<index_type> const& flat_table() const noexcept {
      return _data->table;
    }

    std::vector<std::vector<index_type>> table() const {
      std::vector<std::vector<index_type>> out(size());
      for (index_type s = 0; s < size(); ++s) {
        out[s].assign(_data->table.begin() + s * size(),
                      _data->table.begin() + (s + 1) * size());
      }
      return out;
    }

    bool operator==(Monoid const& that) const noexcept {
      return _data == that._data
             || (_data->identity == that._data->identity
                 && _data->table == that._data->table);
    }

    bool operator!=(Monoid const& that) const noexcept {
      return !(*this == that);
    }

    // No validation: the caller guarantees the monoid axioms.  The zero is
    // detected here.
    static Monoid make_unchecked(size_t                  n,
                                 std::vector<index_type> table,
                                 index_type              identity) {
      auto d      = std::make_shared<Data>();
      d->size     = n;
      d->table    = std::move(table);
      d->identity = identity;
      for (index_type z = 0; z < n; ++z) {
        bool absorbing = true;
        for (index_type s = 0; s < n && absorbing; ++s) {
          absorbing = d->table[z * n + s] == z && d->table[s * n + z] == z;
        }
        if (absorbing) {
          d->zero = z;
          break;
        }
      }
      return Monoid(std::move(d));
    }

   private:
    struct Data {
      size_t                    size = 0;
      std::vector<index_type>   table;
      index_type                identity = 0;
      std::optional<index_type> zero;
    };

    explicit Monoid(std::shared_ptr<Data const> d) : _data(std::move(d)) {}

    std::shared_ptr<Data const> _data;
  };

  struct MonoidClassification {
    bool                     commutative       = false;
    bool                     left_cancellative = false;
    bool                     has_zero          = false;
    bool                     is_group          = false;
    bool                     is_0group         = false;
    bool                     is_local          = false;
    element_set              units;
    std::vector<element_set> maximal_right_ideals;
  };

  struct MonoidHom {
    Monoid                  source;
    Monoid                  target;
    std::vector<index_type> map;
  };

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  //! Validates the table (square, entries in range, associative, identity
  //! two-sided) and detects the zero.
  inline Monoid monoid_from_table(std::vector<std::vector<index_type>> const& t,
                                  index_type identity) {
    size_t const n = t.size();
    if (n == 0) {
      fail(ErrorKind::InvalidInput, "empty multiplication table");
    }
    std::vector<index_type> flat;
    flat.reserve(n * n);
    for (size_t s = 0; s < n; ++s) {
      if (t[s].size() != n) {
        fail(ErrorKind::InvalidInput,
             "row " + std::to_string(s) + " has length "
                 + std::to_string(t[s].size()) + ", expected "
                 + std::to_string(n));
      }
      for (auto x : t[s]) {
        if (x >= n) {
          fail(ErrorKind::InvalidInput,
               "entry " + std::to_string(x) + " out of range in row "
                   + std::to_string(s));
        }
        flat.push_back(x);
      }
    }
    if (identity >= n) {
      fail(ErrorKind::BadIdentity,
           "identity " + std::to_string(identity) + " out of range");
    }
    for (index_type s = 0; s < n; ++s) {
      if (flat[identity * n + s] != s || flat[s * n + identity] != s) {
        fail(ErrorKind::BadIdentity,
             "identity " + std::to_string(identity)
                 + " is not two-sided at element " + std::to_string(s));
      }
    }
    for (index_type s = 0; s < n; ++s) {
      for (index_type u = 0; u < n; ++u) {
        for (index_type v = 0; v < n; ++v) {
          if (flat[flat[s * n + u] * n + v] != flat[s * n + flat[u * n + v]]) {
            fail(ErrorKind::NotAssociative,
                 "(" + std::to_string(s) + "*" + std::to_string(u) + ")*"
                     + std::to_string(v) + " != " + std::to_string(s) + "*("
                     + std::to_string(u) + "*" + std::to_string(v) + ")");
          }
        }
      }
    }
    return Monoid::make_unchecked(n, std::move(flat), identity);
  }

  using Transformation = std::vector<index_type>;

  //! The monoid generated by transformations of {0, ..., degree - 1} and the
  //! identity map.  Elements are numbered breadth-first from the identity,
  //! with generators tried in the order given; s * t means "apply s, then t".
  inline Monoid
  monoid_from_transformations(size_t                             degree,
                              std::vector<Transformation> const& gens,
                              size_t cap = Limits{}.monoid_closure) {
    if (degree == 0) {
      fail(ErrorKind::InvalidInput, "degree must be at least 1");
    }
    for (auto const& g : gens) {
      if (g.size() != degree) {
        fail(ErrorKind::InvalidInput, "generator has the wrong degree");
      }
      for (auto x : g) {
        if (x >= degree) {
          fail(ErrorKind::InvalidInput, "generator value out of range");
        }
      }
    }
    auto compose = [degree](Transformation const& s, Transformation const& t) {
      Transformation r(degree);
      for (size_t i = 0; i < degree; ++i) {
        r[i] = t[s[i]];
      }
      return r;
    };
    Transformation id(degree);
    std::iota(id.begin(), id.end(), index_type(0));

    std::vector<Transformation>                              elts{id};
    std::unordered_map<Transformation, index_type, VectorHash> pos{{id, 0}};
    for (size_t i = 0; i < elts.size(); ++i) {
      for (auto const& g : gens) {
        auto y = compose(elts[i], g);
        if (pos.find(y) == pos.end()) {
          if (elts.size() == cap) {
            fail(ErrorKind::SizeLimitExceeded,
                 "transformation monoid exceeds " + std::to_string(cap)
                     + " elements");
          }
          pos.emplace(y, static_cast<index_type>(elts.size()));
          elts.push_back(std::move(y));
        }
      }
    }
    size_t const            n = elts.size();
    std::vector<index_type> table(n * n);
    for (size_t s = 0; s < n; ++s) {
      for (size_t t = 0; t < n; ++t) {
        table[s * n + t] = pos.at(compose(elts[s], elts[t]));
      }
    }
    return Monoid::make_unchecked(n, std::move(table), 0);
  }

  //! The truncation {1, ..., n} of (N, min) with an externally adjoined
  //! identity.  Index 0 is the identity and index i (1 <= i <= n) is the
  //! number i, so index 1 is the zero.
  inline Monoid min_monoid_with_identity(size_t n) {
    if (n == 0) {
      fail(ErrorKind::InvalidInput, "n must be at least 1");
    }
    size_t const            m = n + 1;
    std::vector<index_type> table(m * m);
    for (index_type s = 0; s < m; ++s) {
      for (index_type t = 0; t < m; ++t) {
        if (s == 0) {
          table[s * m + t] = t;
        } else if (t == 0) {
          table[s * m + t] = s;
        } else {
          table[s * m + t] = std::min(s, t);
        }
      }
    }
    return Monoid::make_unchecked(m, std::move(table), 0);
  }

  //! The cyclic group Z/n under addition.
  inline Monoid cyclic_group(size_t n) {
    std::vector<index_type> table(n * n);
    for (index_type s = 0; s < n; ++s) {
      for (index_type t = 0; t < n; ++t) {
        table[s * n + t] = (s + t) % n;
      }
    }
    return Monoid::make_unchecked(n, std::move(table), 0);
  }

  //! S with a new zero appended as the last index.
  inline Monoid adjoin_zero(Monoid const& S) {
    size_t const            n = S.size(), m = n + 1;
    std::vector<index_type> table(m * m, static_cast<index_type>(n));
    for (index_type s = 0; s < n; ++s) {
      for (index_type t = 0; t < n; ++t) {
        table[s * m + t] = S.product(s, t);
      }
    }
    return Monoid::make_unchecked(m, std::move(table), S.identity());
  }

  //! Direct product S x T; (s, t) has index s * |T| + t.
  inline Monoid direct_product(Monoid const& S, Monoid const& T) {
    size_t const            m = S.size() * T.size();
    std::vector<index_type> table(m * m);
    for (index_type x = 0; x < m; ++x) {
      for (index_type y = 0; y < m; ++y) {
        auto s = S.product(x / T.size(), y / T.size());
        auto t = T.product(x % T.size(), y % T.size());
        table[x * m + y] = static_cast<index_type>(s * T.size() + t);
      }
    }
    return Monoid::make_unchecked(
        m,
        std::move(table),
        static_cast<index_type>(S.identity() * T.size() + T.identity()));
  }

  inline MonoidHom monoid_hom(Monoid const&           S,
                              Monoid const&           T,
                              std::vector<index_type> map) {
    if (map.size() != S.size()) {
      fail(ErrorKind::InvalidInput, "map has the wrong length");
    }
    for (auto x : map) {
      if (x >= T.size()) {
        fail(ErrorKind::InvalidInput, "map value out of range");
      }
    }
    if (map[S.identity()] != T.identity()) {
      fail(ErrorKind::NotAHomomorphism, "identity not preserved");
    }
    for (index_type s = 0; s < S.size(); ++s) {
      for (index_type t = 0; t < S.size(); ++t) {
        if (map[S.product(s, t)] != T.product(map[s], map[t])) {
          fail(ErrorKind::NotAHomomorphism,
               "f(" + std::to_string(s) + "*" + std::to_string(t)
                   + ") != f(" + std::to_string(s) + ")*f("
                   + std::to_string(t) + ")");
        }
      }
    }
    return MonoidHom{S, T, std::move(map)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  //! sS as a bitset.
  inline Bitset principal_right_ideal(Monoid const& S, index_type s) {
    Bitset b(S.size());
    for (index_type t = 0; t < S.size(); ++t) {
      b.set(S.product(s, t));
    }
    return b;
  }

  inline bool is_right_ideal(Monoid const& S, element_set const& I) {
    if (I.empty()) {
      return false;
    }
    auto const b = Bitset::from(S.size(), I);
    for (auto x : I) {
      for (index_type t = 0; t < S.size(); ++t) {
        if (!b.test(S.product(x, t))) {
          return false;
        }
      }
    }
    return true;
  }

  //! Every nonempty I with IS contained in I, in (size, lexicographic)
  //! order.  A right ideal is a union of principal right ideals, so the
  //! enumeration closes the principal ones under union.
  inline std::vector<element_set>
  right_ideals(Monoid const& S, size_t cap = Limits{}.right_ideals) {
    std::vector<Bitset> principal;
    for (index_type s = 0; s < S.size(); ++s) {
      principal.push_back(principal_right_ideal(S, s));
    }
    std::unordered_set<Bitset, BitsetHash> seen;
    std::deque<Bitset>                     queue;
    for (auto const& p : principal) {
      if (seen.insert(p).second) {
        queue.push_back(p);
      }
    }
    while (!queue.empty()) {
      auto x = std::move(queue.front());
      queue.pop_front();
      for (auto const& p : principal) {
        if (p.is_subset_of(x)) {
          continue;
        }
        Bitset y = x;
        y |= p;
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            fail(ErrorKind::SizeLimitExceeded,
                 "more than " + std::to_string(cap) + " right ideals");
          }
          queue.push_back(std::move(y));
        }
      }
    }
    std::vector<element_set> out;
    for (auto const& b : seen) {
      out.push_back(b.elements());
    }
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
  }

  //! All n-fold products x_1 * ... * x_n with every x_i in I.
  inline element_set
  ideal_power(Monoid const& S, element_set const& I, size_t n) {
    if (n == 0) {
      fail(ErrorKind::InvalidInput, "ideal_power exponent must be positive");
    }
    auto current = Bitset::from(S.size(), I);
    auto base    = I;
    for (size_t k = 1; k < n; ++k) {
      Bitset next(S.size());
      for (auto x : current.elements()) {
        for (auto y : base) {
          next.set(S.product(x, y));
        }
      }
      current = std::move(next);
    }
    return current.elements();
  }

  inline bool is_commutative(Monoid const& S) {
    for (index_type s = 0; s < S.size(); ++s) {
      for (index_type t = s + 1; t < S.size(); ++t) {
        if (S.product(s, t) != S.product(t, s)) {
          return false;
        }
      }
    }
    return true;
  }

  //! The minimum ideal K(S) of a commutative monoid: the intersection of all
  //! principal ideals, when it is nonempty.
  inline std::optional<element_set> minimum_ideal(Monoid const& S) {
    if (!is_commutative(S)) {
      fail(ErrorKind::NotCommutative, "minimum_ideal needs a commutative monoid");
    }
    Bitset k = principal_right_ideal(S, 0);
    for (index_type s = 1; s < S.size(); ++s) {
      k &= principal_right_ideal(S, s);
    }
    if (k.none()) {
      return std::nullopt;
    }
    return k.elements();
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  inline bool is_idempotent(Monoid const& S, index_type e) {
    return S.product(e, e) == e;
  }

  inline element_set idempotents(Monoid const& S) {
    element_set out;
    for (index_type e = 0; e < S.size(); ++e) {
      if (is_idempotent(S, e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  inline MonoidClassification classify(Monoid const& S) {
    MonoidClassification c;
    size_t const         n   = S.size();
    index_type const     one = S.identity();
    c.commutative            = is_commutative(S);
    c.has_zero               = S.zero().has_value();

    // cancellation is asked of the non-zero elements only, so that a
    // 0-group counts as left cancellative
    c.left_cancellative = true;
    for (index_type s = 0; s < n && c.left_cancellative; ++s) {
      if (n > 1 && S.zero() == s) {
        continue;
      }
      std::vector<char> hit(n, 0);
      for (index_type t = 0; t < n; ++t) {
        auto& h = hit[S.product(s, t)];
        if (h) {
          c.left_cancellative = false;
          break;
        }
        h = 1;
      }
    }

    Bitset right_invertible(n);
    for (index_type s = 0; s < n; ++s) {
      bool right = false, left = false;
      for (index_type t = 0; t < n; ++t) {
        right = right || S.product(s, t) == one;
        left  = left || S.product(t, s) == one;
      }
      if (right) {
        right_invertible.set(s);
      }
      if (right && left) {
        c.units.push_back(s);
      }
    }
    c.is_group = c.units.size() == n;

    if (c.has_zero && n >= 2) {
      index_type const z  = *S.zero();
      bool             ok = true;
      for (index_type s = 0; s < n && ok; ++s) {
        if (s == z) {
          continue;
        }
        bool inverse = false;
        for (index_type t = 0; t < n && ok; ++t) {
          if (t == z) {
            continue;
          }
          ok      = S.product(s, t) != z;
          inverse = inverse || (S.product(s, t) == one && S.product(t, s) == one);
        }
        ok = ok && inverse;
      }
      c.is_0group = ok;
    }

    // The elements without a right inverse form a right ideal containing
    // every proper right ideal (a right ideal meeting the right invertible
    // elements contains the identity).  So there is at most one maximal
    // proper right ideal.
    element_set non_invertible;
    for (index_type s = 0; s < n; ++s) {
      if (!right_invertible.test(s)) {
        non_invertible.push_back(s);
      }
    }
    if (!non_invertible.empty()) {
      c.maximal_right_ideals.push_back(std::move(non_invertible));
    }
    c.is_local = c.maximal_right_ideals.size() == 1;
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism and canonical forms of small monoids
  ////////////////////////////////////////////////////////////////////////

  //! Relabels S so that the identity is 0 and s becomes perm[s].
  inline Monoid relabel(Monoid const& S, std::vector<index_type> const& perm) {
    size_t const            n = S.size();
    std::vector<index_type> table(n * n);
    for (index_type s = 0; s < n; ++s) {
      for (index_type t = 0; t < n; ++t) {
        table[perm[s] * n + perm[t]] = perm[S.product(s, t)];
      }
    }
    return Monoid::make_unchecked(n, std::move(table), perm[S.identity()]);
  }

  //! The lexicographically least table over all relabellings sending the
  //! identity to 0.  Two monoids are isomorphic iff their canonical forms
  //! are equal.  Exponential in size(); intended for size <= 8.
  inline Monoid canonical_form(Monoid const& S) {
    size_t const            n = S.size();
    std::vector<index_type> others;
    for (index_type s = 0; s < n; ++s) {
      if (s != S.identity()) {
        others.push_back(s);
      }
    }
    std::optional<std::vector<index_type>> best;
    std::vector<index_type>                perm(n);
    do {
      perm[S.identity()] = 0;
      for (size_t i = 0; i < others.size(); ++i) {
        perm[others[i]] = static_cast<index_type>(i + 1);
      }
      std::vector<index_type> table(n * n);
      for (index_type s = 0; s < n; ++s) {
        for (index_type t = 0; t < n; ++t) {
          table[perm[s] * n + perm[t]] = perm[S.product(s, t)];
        }
      }
      if (!best || table < *best) {
        best = std::move(table);
      }
    } while (std::next_permutation(others.begin(), others.end()));
    return Monoid::make_unchecked(n, std::move(*best), 0);
  }

  //! Every monoid with at most max_size elements, up to isomorphism, in
  //! canonical form, sorted by (size, table).  Tables are filled by
  //! backtracking with associativity checked on every completed triple.
  inline std::vector<Monoid> monoid_census(size_t max_size) {
    if (max_size > 5) {
      fail(ErrorKind::SizeLimitExceeded, "monoid census only up to size 5");
    }
    std::vector<Monoid> out;
    for (size_t n = 1; n <= max_size; ++n) {
      std::vector<index_type> table(n * n, UNDEFINED);
      for (index_type s = 0; s < n; ++s) {
        table[s] = s;
        table[s * n] = s;
      }
      // cells of the non-identity part in row-major order
      std::vector<std::pair<index_type, index_type>> cells;
      for (index_type s = 1; s < n; ++s) {
        for (index_type t = 1; t < n; ++t) {
          cells.emplace_back(s, t);
        }
      }
      auto consistent = [&]() {
        for (index_type a = 0; a < n; ++a) {
          for (index_type b = 0; b < n; ++b) {
            auto ab = table[a * n + b];
            if (ab == UNDEFINED) {
              continue;
            }
            for (index_type c = 0; c < n; ++c) {
              auto bc = table[b * n + c];
              if (bc == UNDEFINED) {
                continue;
              }
              auto l = table[ab * n + c];
              auto r = table[a * n + bc];
              if (l != UNDEFINED && r != UNDEFINED && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      };
      std::set<std::vector<index_type>> seen;
      auto                              recurse = [&](auto&& self, size_t i) -> void {
        if (i == cells.size()) {
          auto M = canonical_form(Monoid::make_unchecked(n, table, 0));
          if (seen.insert(M.flat_table()).second) {
            out.push_back(M);
          }
          return;
        }
        auto [s, t] = cells[i];
        for (index_type v = 0; v < n; ++v) {
          table[s * n + t] = v;
          if (consistent()) {
            self(self, i + 1);
          }
        }
        table[s * n + t] = UNDEFINED;
      };
      recurse(recurse, 0);
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      if (x.size() != y.size()) {
        return x.size() < y.size();
      }
      return x.flat_table() < y.flat_table();
    });
    return out;
  }

}  // namespace actlat

#endif  // ACTLAT_MONOID_HPP_
