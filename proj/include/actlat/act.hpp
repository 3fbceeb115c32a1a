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
// This file contains finite right S-acts: the RightAct class, subacts and
// their enumeration, Rees quotients, products and coproducts, and the
// decomposition of an act into indecomposable components.

#ifndef ACTLAT_ACT_HPP_
#define ACTLAT_ACT_HPP_

#include <deque>          // for deque
#include <memory>         // for shared_ptr
#include <optional>       // for optional
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "config.hpp"
#include "monoid.hpp"

namespace actlat {

  //! A finite right act of a Monoid.  act(a, s) is a * s.  Like Monoid, a
  //! RightAct is immutable and copies share their table.
  class RightAct {
   public:
    Monoid const& monoid() const noexcept {
      return _data->monoid;
    }

    size_t size() const noexcept {
      return _data->size;
    }

    index_type act(index_type a, index_type s) const noexcept {
      return _data->table[a * _data->monoid.size() + s];
    }

    std::optional<index_type> zero() const noexcept {
      return _data->zero;
    }

    std::vector<index_type> const& flat_table() const noexcept {
      return _data->table;
    }

    std::vector<std::vector<index_type>> table() const {
      size_t const                         m = monoid().size();
      std::vector<std::vector<index_type>> out(size());
      for (index_type a = 0; a < size(); ++a) {
        out[a].assign(_data->table.begin() + a * m,
                      _data->table.begin() + (a + 1) * m);
      }
      return out;
    }

    bool operator==(RightAct const& that) const noexcept {
      return _data == that._data
             || (_data->monoid == that._data->monoid
                 && _data->table == that._data->table);
    }

    bool operator!=(RightAct const& that) const noexcept {
      return !(*this == that);
    }

    //! No validation.  The zero element is the unique fixed point, if there
    //! is exactly one.  When the monoid has a zero z every a * z is a fixed
    //! point, so a unique fixed point absorbs z.
    static RightAct make_unchecked(Monoid                  S,
                                   size_t                  n,
                                   std::vector<index_type> table) {
      auto d    = std::make_shared<Data>(Data{std::move(S), n, std::move(table), {}});
      size_t const m      = d->monoid.size();
      size_t       fixed  = 0;
      index_type   candidate = 0;
      for (index_type a = 0; a < n; ++a) {
        bool is_fixed = true;
        for (index_type s = 0; s < m && is_fixed; ++s) {
          is_fixed = d->table[a * m + s] == a;
        }
        if (is_fixed) {
          ++fixed;
          candidate = a;
        }
      }
      if (fixed == 1) {
        d->zero = candidate;
      }
      return RightAct(std::move(d));
    }

   private:
    struct Data {
      Monoid                    monoid;
      size_t                    size;
      std::vector<index_type>   table;
      std::optional<index_type> zero;
    };

    explicit RightAct(std::shared_ptr<Data const> d) : _data(std::move(d)) {}

    std::shared_ptr<Data const> _data;
  };

  //! A nonempty subset of an act closed under the action.
  struct Subact {
    RightAct    parent;
    element_set elements;

    size_t size() const noexcept {
      return elements.size();
    }

    bool contains(index_type a) const {
      return std::binary_search(elements.begin(), elements.end(), a);
    }

    bool operator==(Subact const& that) const {
      return parent == that.parent && elements == that.elements;
    }
  };

  //! A map between acts over the same monoid commuting with the action.
  struct ActHom {
    RightAct                source;
    RightAct                target;
    std::vector<index_type> map;
  };

  struct Quotient {
    RightAct act;
    ActHom   epi;
  };

  ////////////////////////////////////////////////////////////////////////
  // Construction and validation
  ////////////////////////////////////////////////////////////////////////

  inline RightAct act_from_table(Monoid const&                               S,
                                 std::vector<std::vector<index_type>> const& t) {
    size_t const n = t.size(), m = S.size();
    if (n == 0) {
      fail(ErrorKind::InvalidInput, "an act needs at least one element");
    }
    std::vector<index_type> flat;
    flat.reserve(n * m);
    for (index_type a = 0; a < n; ++a) {
      if (t[a].size() != m) {
        fail(ErrorKind::InvalidInput,
             "row " + std::to_string(a) + " has length "
                 + std::to_string(t[a].size()) + ", expected "
                 + std::to_string(m));
      }
      for (auto x : t[a]) {
        if (x >= n) {
          fail(ErrorKind::InvalidInput,
               "entry " + std::to_string(x) + " out of range in row "
                   + std::to_string(a));
        }
        flat.push_back(x);
      }
    }
    for (index_type a = 0; a < n; ++a) {
      if (flat[a * m + S.identity()] != a) {
        fail(ErrorKind::UnitLawViolated,
             std::to_string(a) + " * 1 = "
                 + std::to_string(flat[a * m + S.identity()]));
      }
    }
    for (index_type a = 0; a < n; ++a) {
      for (index_type s = 0; s < m; ++s) {
        for (index_type u = 0; u < m; ++u) {
          if (flat[flat[a * m + s] * m + u] != flat[a * m + S.product(s, u)]) {
            fail(ErrorKind::ActionNotAssociative,
                 "(" + std::to_string(a) + "*" + std::to_string(s) + ")*"
                     + std::to_string(u) + " != " + std::to_string(a) + "*("
                     + std::to_string(s) + "*" + std::to_string(u) + ")");
          }
        }
      }
    }
    return RightAct::make_unchecked(S, n, std::move(flat));
  }

  //! S_S: the monoid acting on itself by right multiplication.
  inline RightAct regular_act(Monoid const& S) {
    return RightAct::make_unchecked(S, S.size(), S.flat_table());
  }

  //! n points, each fixed by every element of S.
  inline RightAct trivial_act(Monoid const& S, size_t n) {
    std::vector<index_type> table(n * S.size());
    for (index_type a = 0; a < n; ++a) {
      std::fill(table.begin() + a * S.size(),
                table.begin() + (a + 1) * S.size(),
                a);
    }
    return RightAct::make_unchecked(S, n, std::move(table));
  }

  inline void check_same_monoid(RightAct const& A, RightAct const& B) {
    if (A.monoid() != B.monoid()) {
      fail(ErrorKind::MixedMonoids, "acts are over different monoids");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Subacts
  ////////////////////////////////////////////////////////////////////////

  inline bool is_subact(RightAct const& A, element_set const& X) {
    if (X.empty()) {
      return false;
    }
    auto const in = Bitset::from(A.size(), X);
    for (auto x : X) {
      for (index_type s = 0; s < A.monoid().size(); ++s) {
        if (!in.test(A.act(x, s))) {
          return false;
        }
      }
    }
    return true;
  }

  inline Subact make_subact(RightAct const& A, element_set X) {
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    for (auto x : X) {
      if (x >= A.size()) {
        fail(ErrorKind::NotASubact, "element " + std::to_string(x) + " out of range");
      }
    }
    if (!is_subact(A, X)) {
      fail(ErrorKind::NotASubact, to_string(X) + " is not closed under the action");
    }
    return Subact{A, std::move(X)};
  }

  inline Bitset cyclic_subact_bits(RightAct const& A, index_type a) {
    Bitset b(A.size());
    for (index_type s = 0; s < A.monoid().size(); ++s) {
      b.set(A.act(a, s));
    }
    return b;
  }

  //! X S, the least subact containing X.
  inline Subact subact_generated(RightAct const& A, element_set const& X) {
    if (X.empty()) {
      fail(ErrorKind::EmptyGeneratingSet, "subact_generated needs a nonempty set");
    }
    Bitset b(A.size());
    for (auto x : X) {
      if (x >= A.size()) {
        fail(ErrorKind::InvalidInput, "element " + std::to_string(x) + " out of range");
      }
      b |= cyclic_subact_bits(A, x);
    }
    return Subact{A, b.elements()};
  }

  //! Every subact of A in (size, lexicographic) order.
  inline std::vector<Subact> all_subacts(RightAct const& A,
                                         size_t cap = Limits{}.lattice) {
    std::vector<Bitset> cyclic;
    for (index_type a = 0; a < A.size(); ++a) {
      cyclic.push_back(cyclic_subact_bits(A, a));
    }
    std::unordered_set<Bitset, BitsetHash> seen;
    std::deque<Bitset>                     queue;
    for (auto const& c : cyclic) {
      if (seen.insert(c).second) {
        queue.push_back(c);
      }
    }
    while (!queue.empty()) {
      auto x = std::move(queue.front());
      queue.pop_front();
      for (auto const& c : cyclic) {
        if (c.is_subset_of(x)) {
          continue;
        }
        Bitset y = x;
        y |= c;
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            fail(ErrorKind::SizeLimitExceeded,
                 "more than " + std::to_string(cap) + " subacts");
          }
          queue.push_back(std::move(y));
        }
      }
    }
    std::vector<element_set> sets;
    for (auto const& b : seen) {
      sets.push_back(b.elements());
    }
    std::sort(sets.begin(), sets.end(), shortlex_less);
    std::vector<Subact> out;
    for (auto& x : sets) {
      out.push_back(Subact{A, std::move(x)});
    }
    return out;
  }

  //! The maximal proper subacts of A (empty when A has no proper subact).
  inline std::vector<Subact> maximal_subacts(RightAct const& A,
                                             size_t cap = Limits{}.lattice) {
    auto                all = all_subacts(A, cap);
    std::vector<Subact> out;
    for (size_t i = 0; i < all.size(); ++i) {
      if (all[i].size() == A.size()) {
        continue;
      }
      auto const bi      = Bitset::from(A.size(), all[i].elements);
      bool       maximal = true;
      for (size_t j = 0; j < all.size() && maximal; ++j) {
        if (all[j].size() > all[i].size() && all[j].size() < A.size()) {
          maximal = !bi.is_subset_of(Bitset::from(A.size(), all[j].elements));
        }
      }
      if (maximal) {
        out.push_back(all[i]);
      }
    }
    return out;
  }

  //! The subact B as an act in its own right; element i of the result is
  //! B.elements[i].
  inline RightAct as_act(Subact const& B) {
    auto const&             A = B.parent;
    size_t const            m = A.monoid().size();
    std::vector<index_type> local(A.size(), UNDEFINED);
    for (index_type i = 0; i < B.size(); ++i) {
      local[B.elements[i]] = i;
    }
    std::vector<index_type> table(B.size() * m);
    for (index_type i = 0; i < B.size(); ++i) {
      for (index_type s = 0; s < m; ++s) {
        table[i * m + s] = local[A.act(B.elements[i], s)];
      }
    }
    return RightAct::make_unchecked(A.monoid(), B.size(), std::move(table));
  }

  //! The inclusion B -> A.
  inline ActHom inclusion(Subact const& B) {
    return ActHom{as_act(B), B.parent, B.elements};
  }

  //! A / rho_B.  The elements of A outside B keep their relative order and
  //! the collapsed class [B] is the last element.
  inline Quotient rees_quotient(RightAct const& A, Subact const& B) {
    if (B.parent != A || !is_subact(A, B.elements)) {
      fail(ErrorKind::NotASubact, to_string(B.elements) + " is not a subact");
    }
    size_t const            m = A.monoid().size();
    auto const              in = Bitset::from(A.size(), B.elements);
    std::vector<index_type> image(A.size());
    index_type              next = 0;
    for (index_type a = 0; a < A.size(); ++a) {
      if (!in.test(a)) {
        image[a] = next++;
      }
    }
    index_type const collapsed = next;
    for (auto b : B.elements) {
      image[b] = collapsed;
    }
    size_t const            n = collapsed + 1;
    std::vector<index_type> table(n * m);
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < m; ++s) {
        table[image[a] * m + s] = image[A.act(a, s)];
      }
    }
    auto Q = RightAct::make_unchecked(A.monoid(), n, std::move(table));
    return Quotient{Q, ActHom{A, Q, std::move(image)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Products and coproducts
  ////////////////////////////////////////////////////////////////////////

  enum class CoproductMode { plain, zero_amalgamated };

  //! Disjoint union; the elements of acts[i] follow those of acts[i - 1].
  //! In zero_amalgamated mode the zero elements are glued into the zero of
  //! acts[0] and the other zeros are dropped.
  inline RightAct coproduct(std::vector<RightAct> const& acts,
                            CoproductMode mode = CoproductMode::plain) {
    if (acts.empty()) {
      fail(ErrorKind::InvalidInput, "coproduct of no acts");
    }
    Monoid const& S = acts[0].monoid();
    for (auto const& A : acts) {
      check_same_monoid(acts[0], A);
    }
    if (mode == CoproductMode::zero_amalgamated) {
      if (!S.zero()) {
        fail(ErrorKind::MissingZero, "the monoid has no zero");
      }
      for (auto const& A : acts) {
        if (!A.zero()) {
          fail(ErrorKind::MissingZero, "an act has no zero element");
        }
      }
    }
    size_t const                         m = S.size();
    std::vector<std::vector<index_type>> offsets;
    index_type                           next = 0;
    index_type const                     glued = mode == CoproductMode::zero_amalgamated
                                                     ? *acts[0].zero()
                                                     : UNDEFINED;
    for (size_t i = 0; i < acts.size(); ++i) {
      std::vector<index_type> pos(acts[i].size());
      for (index_type a = 0; a < acts[i].size(); ++a) {
        if (i > 0 && mode == CoproductMode::zero_amalgamated
            && a == *acts[i].zero()) {
          pos[a] = glued;
        } else {
          pos[a] = next++;
        }
      }
      offsets.push_back(std::move(pos));
    }
    std::vector<index_type> table(next * m);
    for (size_t i = 0; i < acts.size(); ++i) {
      for (index_type a = 0; a < acts[i].size(); ++a) {
        for (index_type s = 0; s < m; ++s) {
          table[offsets[i][a] * m + s] = offsets[i][acts[i].act(a, s)];
        }
      }
    }
    return RightAct::make_unchecked(S, next, std::move(table));
  }

  //! The i-th coproduct injection (plain mode).
  inline ActHom coproduct_injection(std::vector<RightAct> const& acts,
                                    RightAct const&              sum,
                                    size_t                       i) {
    index_type offset = 0;
    for (size_t j = 0; j < i; ++j) {
      offset += static_cast<index_type>(acts[j].size());
    }
    std::vector<index_type> map(acts[i].size());
    std::iota(map.begin(), map.end(), offset);
    return ActHom{acts[i], sum, std::move(map)};
  }

  //! Cartesian product with componentwise action.  Tuples are numbered in
  //! mixed radix with the first component most significant.
  inline RightAct product(std::vector<RightAct> const& acts) {
    if (acts.empty()) {
      fail(ErrorKind::InvalidInput, "product of no acts");
    }
    for (auto const& A : acts) {
      check_same_monoid(acts[0], A);
    }
    Monoid const& S = acts[0].monoid();
    size_t        n = 1;
    for (auto const& A : acts) {
      n *= A.size();
    }
    size_t const            m = S.size();
    std::vector<index_type> table(n * m);
    std::vector<index_type> digits(acts.size());
    for (index_type x = 0; x < n; ++x) {
      size_t rest = x;
      for (size_t i = acts.size(); i-- > 0;) {
        digits[i] = static_cast<index_type>(rest % acts[i].size());
        rest /= acts[i].size();
      }
      for (index_type s = 0; s < m; ++s) {
        size_t y = 0;
        for (size_t i = 0; i < acts.size(); ++i) {
          y = y * acts[i].size() + acts[i].act(digits[i], s);
        }
        table[x * m + s] = static_cast<index_type>(y);
      }
    }
    return RightAct::make_unchecked(S, n, std::move(table));
  }

  //! The i-th projection out of product(acts).
  inline ActHom product_projection(std::vector<RightAct> const& acts,
                                   RightAct const&              prod,
                                   size_t                       i) {
    size_t stride = 1;
    for (size_t j = i + 1; j < acts.size(); ++j) {
      stride *= acts[j].size();
    }
    std::vector<index_type> map(prod.size());
    for (index_type x = 0; x < prod.size(); ++x) {
      map[x] = static_cast<index_type>((x / stride) % acts[i].size());
    }
    return ActHom{prod, acts[i], std::move(map)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Decompositions
  ////////////////////////////////////////////////////////////////////////

  //! The connected components of the graph a -- a * s.  Each is an
  //! indecomposable subact; they are listed by least element.
  inline std::vector<Subact> decompose_indecomposable(RightAct const& A) {
    detail::UnionFind uf(A.size());
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < A.monoid().size(); ++s) {
        uf.unite(a, A.act(a, s));
      }
    }
    auto                     rep = uf.representatives();
    std::vector<element_set> blocks(A.size());
    for (index_type a = 0; a < A.size(); ++a) {
      blocks[rep[a]].push_back(a);
    }
    std::vector<Subact> out;
    for (auto& b : blocks) {
      if (!b.empty()) {
        out.push_back(Subact{A, std::move(b)});
      }
    }
    return out;
  }

  //! For an act with a zero: the pieces {0} + C where C runs over the
  //! components of the graph a -- a * s restricted to nonzero values.  A is
  //! the zero-amalgamated coproduct of these pieces.
  inline std::vector<Subact> decompose_zero(RightAct const& A) {
    if (!A.zero()) {
      fail(ErrorKind::MissingZero, "the act has no zero element");
    }
    index_type const  z = *A.zero();
    detail::UnionFind uf(A.size());
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < A.monoid().size(); ++s) {
        auto b = A.act(a, s);
        if (a != z && b != z) {
          uf.unite(a, b);
        }
      }
    }
    auto                     rep = uf.representatives();
    std::vector<element_set> blocks(A.size());
    for (index_type a = 0; a < A.size(); ++a) {
      if (a != z) {
        blocks[rep[a]].push_back(a);
      }
    }
    std::vector<Subact> out;
    for (auto& b : blocks) {
      if (!b.empty()) {
        b.push_back(z);
        std::sort(b.begin(), b.end());
        out.push_back(Subact{A, std::move(b)});
      }
    }
    if (out.empty()) {
      out.push_back(Subact{A, {z}});
    }
    return out;
  }

  inline bool is_cyclic(RightAct const& A) {
    for (index_type a = 0; a < A.size(); ++a) {
      if (cyclic_subact_bits(A, a).count() == A.size()) {
        return true;
      }
    }
    return false;
  }

  //! Only subact is A itself.
  inline bool is_simple(RightAct const& A) {
    for (index_type a = 0; a < A.size(); ++a) {
      if (cyclic_subact_bits(A, a).count() != A.size()) {
        return false;
      }
    }
    return true;
  }

  //! Every subact is A or a one-element subact.  A subact other than A
  //! contains a cyclic one other than A, so cyclic subacts suffice.
  inline bool is_theta_simple(RightAct const& A) {
    for (index_type a = 0; a < A.size(); ++a) {
      auto c = cyclic_subact_bits(A, a).count();
      if (c != A.size() && c != 1) {
        return false;
      }
    }
    // two distinct fixed points generate a two-element proper subact
    size_t fixed = 0;
    for (index_type a = 0; a < A.size(); ++a) {
      fixed += cyclic_subact_bits(A, a).count() == 1;
    }
    return fixed <= 1 || (fixed == 2 && A.size() == 2);
  }

}  // namespace actlat

#endif  // ACTLAT_ACT_HPP_
