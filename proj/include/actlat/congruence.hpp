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
// This file contains congruences on finite right acts: generation by
// union-find closure, the lattice operations, enumeration of Con(A) by join
// saturation and by a brute-force partition oracle, minimal generating
// pairs, meet reduction, and quotients by congruences.

#ifndef ACTLAT_CONGRUENCE_HPP_
#define ACTLAT_CONGRUENCE_HPP_

#include <deque>          // for deque
#include <map>            // for map
#include <optional>       // for optional
#include <set>            // for set
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "act.hpp"
#include "config.hpp"
#include "monoid.hpp"

namespace actlat {

  //! An action-compatible equivalence relation on a RightAct, stored in
  //! canonical form: element a maps to the least element of its block.
  class Congruence {
   public:
    Congruence(RightAct A, std::vector<index_type> rep)
        : _act(std::move(A)), _rep(std::move(rep)) {}

    RightAct const& act() const noexcept {
      return _act;
    }

    std::vector<index_type> const& representatives() const noexcept {
      return _rep;
    }

    index_type representative(index_type a) const noexcept {
      return _rep[a];
    }

    bool related(index_type a, index_type b) const noexcept {
      return _rep[a] == _rep[b];
    }

    size_t number_of_blocks() const noexcept {
      size_t c = 0;
      for (index_type a = 0; a < _rep.size(); ++a) {
        c += _rep[a] == a;
      }
      return c;
    }

    //! Blocks as sorted element lists, ordered by least member.
    std::vector<element_set> blocks() const {
      std::vector<element_set> by_rep(_rep.size());
      for (index_type a = 0; a < _rep.size(); ++a) {
        by_rep[_rep[a]].push_back(a);
      }
      std::vector<element_set> out;
      for (auto& b : by_rep) {
        if (!b.empty()) {
          out.push_back(std::move(b));
        }
      }
      return out;
    }

    //! Number of related pairs (a, b), a != b counted once per order.
    size_t number_of_pairs() const {
      size_t total = 0;
      for (auto const& b : blocks()) {
        total += b.size() * b.size();
      }
      return total;
    }

    bool is_delta() const noexcept {
      return number_of_blocks() == _rep.size();
    }

    bool is_nabla() const noexcept {
      return std::all_of(
          _rep.begin(), _rep.end(), [](index_type r) { return r == 0; });
    }

    //! this is contained in that
    bool is_subset_of(Congruence const& that) const noexcept {
      for (index_type a = 0; a < _rep.size(); ++a) {
        if (that._rep[a] != that._rep[_rep[a]]) {
          return false;
        }
      }
      return true;
    }

    bool operator==(Congruence const& that) const noexcept {
      return _rep == that._rep && _act == that._act;
    }

    bool operator!=(Congruence const& that) const noexcept {
      return !(*this == that);
    }

   private:
    RightAct                _act;
    std::vector<index_type> _rep;
  };

  //! Block-list string "0,1|2" used as canonical node name and for display.
  inline std::string to_string(Congruence const& rho) {
    std::string out;
    bool        first_block = true;
    for (auto const& b : rho.blocks()) {
      out += first_block ? "" : "|";
      first_block = false;
      for (size_t i = 0; i < b.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(b[i]);
      }
    }
    return out;
  }

  //! Canonical order on a lattice: more blocks first, then representatives
  //! lexicographically.  Delta is always first and nabla last.
  inline bool canonical_less(Congruence const& x, Congruence const& y) {
    auto bx = x.number_of_blocks(), by = y.number_of_blocks();
    if (bx != by) {
      return bx > by;
    }
    return x.representatives() < y.representatives();
  }

  namespace detail {

    inline void check_same_act(Congruence const& x, Congruence const& y) {
      if (x.act() != y.act()) {
        fail(ErrorKind::MixedActs, "congruences on different acts");
      }
    }

    //! Union-find closure: whenever the blocks of a and b merge, (a * s,
    //! b * s) is queued for every s.
    inline void close(RightAct const&         A,
                      UnionFind&              uf,
                      std::deque<index_pair>& queue) {
      size_t const m = A.monoid().size();
      while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        if (uf.unite(a, b)) {
          for (index_type s = 0; s < m; ++s) {
            queue.emplace_back(A.act(a, s), A.act(b, s));
          }
        }
      }
    }

    //! Starts from the congruence rho and adds pairs.
    inline std::vector<index_type>
    generated_from(RightAct const&                A,
                   std::vector<index_type> const& rho,
                   std::vector<index_pair> const& pairs) {
      UnionFind uf(A.size());
      for (index_type a = 0; a < rho.size(); ++a) {
        uf.unite(a, rho[a]);
      }
      std::deque<index_pair> queue(pairs.begin(), pairs.end());
      close(A, uf, queue);
      return uf.representatives();
    }

    inline std::vector<index_type> identity_reps(size_t n) {
      std::vector<index_type> rep(n);
      std::iota(rep.begin(), rep.end(), index_type(0));
      return rep;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Basic congruences
  ////////////////////////////////////////////////////////////////////////

  inline Congruence delta(RightAct const& A) {
    return Congruence(A, detail::identity_reps(A.size()));
  }

  inline Congruence nabla(RightAct const& A) {
    return Congruence(A, std::vector<index_type>(A.size(), 0));
  }

  //! rho_B = (B x B) u Delta.
  inline Congruence rees_congruence(RightAct const& A, Subact const& B) {
    if (B.parent != A || !is_subact(A, B.elements)) {
      fail(ErrorKind::NotASubact, to_string(B.elements) + " is not a subact");
    }
    auto rep = detail::identity_reps(A.size());
    for (auto b : B.elements) {
      rep[b] = B.elements.front();
    }
    return Congruence(A, std::move(rep));
  }

  //! Validates a partition given as blocks (every element exactly once) and
  //! its compatibility with the action.
  inline Congruence congruence_from_blocks(RightAct const&                 A,
                                           std::vector<element_set> const& blocks) {
    std::vector<index_type> rep(A.size(), UNDEFINED);
    for (auto const& b : blocks) {
      if (b.empty()) {
        fail(ErrorKind::NotACongruence, "empty block");
      }
      index_type least = *std::min_element(b.begin(), b.end());
      for (auto x : b) {
        if (x >= A.size() || rep[x] != UNDEFINED) {
          fail(ErrorKind::NotACongruence,
               "element " + std::to_string(x) + " out of range or repeated");
        }
        rep[x] = least;
      }
    }
    for (index_type a = 0; a < A.size(); ++a) {
      if (rep[a] == UNDEFINED) {
        fail(ErrorKind::NotACongruence,
             "element " + std::to_string(a) + " is in no block");
      }
    }
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < A.monoid().size(); ++s) {
        if (rep[A.act(a, s)] != rep[A.act(rep[a], s)]) {
          fail(ErrorKind::NotACongruence,
               std::to_string(a) + " ~ " + std::to_string(rep[a]) + " but "
                   + std::to_string(a) + "*" + std::to_string(s) + " !~ "
                   + std::to_string(rep[a]) + "*" + std::to_string(s));
        }
      }
    }
    return Congruence(A, std::move(rep));
  }

  ////////////////////////////////////////////////////////////////////////
  // Generation and lattice operations
  ////////////////////////////////////////////////////////////////////////

  inline Congruence congruence_generated(RightAct const&                A,
                                         std::vector<index_pair> const& pairs) {
    for (auto [a, b] : pairs) {
      if (a >= A.size() || b >= A.size()) {
        fail(ErrorKind::InvalidInput, "pair index out of range");
      }
    }
    return Congruence(
        A, detail::generated_from(A, detail::identity_reps(A.size()), pairs));
  }

  inline Congruence principal_congruence(RightAct const& A,
                                         index_type      a,
                                         index_type      b) {
    return congruence_generated(A, {{a, b}});
  }

  inline Congruence join(Congruence const& x, Congruence const& y) {
    detail::check_same_act(x, y);
    std::vector<index_pair> pairs;
    for (index_type a = 0; a < y.act().size(); ++a) {
      if (y.representative(a) != a) {
        pairs.emplace_back(a, y.representative(a));
      }
    }
    return Congruence(x.act(),
                      detail::generated_from(x.act(), x.representatives(), pairs));
  }

  //! Block intersection; the result is again a congruence.
  inline Congruence meet(Congruence const& x, Congruence const& y) {
    detail::check_same_act(x, y);
    size_t const                         n = x.act().size();
    std::map<index_pair, index_type>     least;
    std::vector<index_type>              rep(n);
    for (index_type a = 0; a < n; ++a) {
      auto key = index_pair(x.representative(a), y.representative(a));
      auto it  = least.emplace(key, a).first;
      rep[a]   = it->second;
    }
    return Congruence(x.act(), std::move(rep));
  }

  inline Congruence meet_family(RightAct const&                A,
                                std::vector<Congruence> const& family) {
    Congruence result = nabla(A);
    for (auto const& rho : family) {
      if (rho.act() != A) {
        fail(ErrorKind::MixedActs, "congruence on a different act");
      }
      result = meet(result, rho);
    }
    return result;
  }

  //! sigma + delta when sigma meet delta is Delta, nothing otherwise.
  inline std::optional<Congruence> direct_sum_check(Congruence const& sigma,
                                                    Congruence const& other) {
    detail::check_same_act(sigma, other);
    if (!meet(sigma, other).is_delta()) {
      return std::nullopt;
    }
    return join(sigma, other);
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration of Con(A)
  ////////////////////////////////////////////////////////////////////////

  enum class CongruenceMethod { saturate, oracle };

  namespace detail {

    //! Delta, the principal congruences, and every join of them.  Every
    //! congruence is the join of the principal congruences it contains, so
    //! closing under joins with principal congruences gives all of Con(A).
    inline std::vector<std::vector<index_type>>
    saturate(RightAct const& A, size_t cap) {
      size_t const                     n = A.size();
      std::vector<index_pair>          generators;
      std::set<std::vector<index_type>> principal_seen;
      for (index_type a = 0; a < n; ++a) {
        for (index_type b = a + 1; b < n; ++b) {
          auto p = generated_from(A, identity_reps(n), {{a, b}});
          if (principal_seen.insert(p).second) {
            generators.emplace_back(a, b);
          }
        }
      }
      std::unordered_set<std::vector<index_type>, VectorHash> seen;
      std::deque<std::vector<index_type>>                   queue;
      auto                                                  add = [&](std::vector<index_type> rep) {
        if (seen.insert(rep).second) {
          if (seen.size() > cap) {
            fail(ErrorKind::SizeLimitExceeded,
                 "more than " + std::to_string(cap) + " congruences");
          }
          queue.push_back(std::move(rep));
        }
      };
      add(identity_reps(n));
      while (!queue.empty()) {
        auto rho = std::move(queue.front());
        queue.pop_front();
        for (auto [a, b] : generators) {
          if (rho[a] != rho[b]) {
            add(generated_from(A, rho, {{a, b}}));
          }
        }
      }
      return {seen.begin(), seen.end()};
    }

    //! Every set partition (as a restricted growth string) filtered for
    //! compatibility with the action.  Independent of the closure code.
    inline std::vector<std::vector<index_type>> partition_oracle(RightAct const& A) {
      size_t const                         n = A.size();
      size_t const                         m = A.monoid().size();
      std::vector<std::vector<index_type>> out;
      std::vector<index_type>              block(n, 0);
      auto                                 emit = [&]() {
        for (index_type a = 0; a < n; ++a) {
          for (index_type b = a + 1; b < n; ++b) {
            if (block[a] != block[b]) {
              continue;
            }
            for (index_type s = 0; s < m; ++s) {
              if (block[A.act(a, s)] != block[A.act(b, s)]) {
                return;
              }
            }
          }
        }
        std::vector<index_type> first(n, UNDEFINED), rep(n);
        for (index_type a = 0; a < n; ++a) {
          if (first[block[a]] == UNDEFINED) {
            first[block[a]] = a;
          }
          rep[a] = first[block[a]];
        }
        out.push_back(std::move(rep));
      };
      auto recurse = [&](auto&& self, size_t i, index_type max_block) -> void {
        if (i == n) {
          emit();
          return;
        }
        for (index_type v = 0; v <= max_block + 1; ++v) {
          block[i] = v;
          self(self, i + 1, std::max(max_block, v));
        }
      };
      if (n > 0) {
        block[0] = 0;
        recurse(recurse, 1, 0);
      }
      return out;
    }

  }  // namespace detail

  //! Con(A) in canonical order (see canonical_less).
  inline std::vector<Congruence>
  all_congruences(RightAct const& A,
                  CongruenceMethod method = CongruenceMethod::saturate,
                  Limits const&    limits = {}) {
    std::vector<std::vector<index_type>> reps;
    if (method == CongruenceMethod::oracle) {
      if (A.size() > limits.oracle_carrier) {
        fail(ErrorKind::SizeLimitExceeded,
             "oracle enumeration limited to acts with at most "
                 + std::to_string(limits.oracle_carrier) + " elements");
      }
      reps = detail::partition_oracle(A);
    } else {
      reps = detail::saturate(A, limits.lattice);
    }
    std::vector<Congruence> out;
    out.reserve(reps.size());
    for (auto& r : reps) {
      out.emplace_back(A, std::move(r));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generating pairs and meet reduction
  ////////////////////////////////////////////////////////////////////////

  //! A generating set of least size, drawn from the pairs (a, b) of rho with
  //! a < b, searched by increasing size and lexicographically within each
  //! size.  Terminates: a spanning forest of the blocks always generates.
  inline std::vector<index_pair>
  minimal_generating_pairs(Congruence const& rho,
                           size_t            cap = Limits{}.pair_search) {
    RightAct const&         A = rho.act();
    std::vector<index_pair> candidates;
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type b = a + 1; b < A.size(); ++b) {
        if (rho.related(a, b)) {
          candidates.emplace_back(a, b);
        }
      }
    }
    auto const& target = rho.representatives();
    size_t      tested = 0;
    size_t const bound = A.size() - rho.number_of_blocks();
    for (size_t k = 0; k <= bound; ++k) {
      std::vector<size_t> idx(k);
      std::iota(idx.begin(), idx.end(), size_t(0));
      while (true) {
        if (++tested > cap) {
          fail(ErrorKind::SizeLimitExceeded,
               "generating pair search exceeded " + std::to_string(cap)
                   + " candidate sets");
        }
        std::vector<index_pair> pairs;
        for (auto i : idx) {
          pairs.push_back(candidates[i]);
        }
        if (detail::generated_from(A, detail::identity_reps(A.size()), pairs)
            == target) {
          return pairs;
        }
        // next k-combination of candidates
        size_t i = k;
        while (i > 0 && idx[i - 1] == candidates.size() - k + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
      }
    }
    // unreachable: the spanning forest case k = bound always succeeds
    fail(ErrorKind::InvalidInput, "congruence is not generated by its pairs");
  }

  //! An inclusion-minimal nonempty subfamily with the same meet theta.
  //! Greedy removal in input order first; if the family has at most
  //! limits.exact_meet members, a least-cardinality subfamily is searched
  //! instead (the lexicographically first by position).
  inline std::vector<Congruence>
  meet_reduction(RightAct const&                A,
                 Congruence const&              theta,
                 std::vector<Congruence> const& family,
                 Limits const&                  limits = {}) {
    if (theta.act() != A) {
      fail(ErrorKind::MixedActs, "theta is on a different act");
    }
    if (family.empty()) {
      fail(ErrorKind::EmptySet, "meet_reduction needs a nonempty family");
    }
    if (meet_family(A, family) != theta) {
      fail(ErrorKind::MeetMismatch, "the family does not meet to theta");
    }
    std::vector<size_t> keep(family.size());
    std::iota(keep.begin(), keep.end(), size_t(0));
    auto meet_of = [&](std::vector<size_t> const& which) {
      Congruence r = nabla(A);
      for (auto i : which) {
        r = meet(r, family[i]);
      }
      return r;
    };
    for (size_t i = 0; i < family.size() && keep.size() > 1; ++i) {
      std::vector<size_t> trial;
      for (auto j : keep) {
        if (j != i) {
          trial.push_back(j);
        }
      }
      if (trial.size() < keep.size() && meet_of(trial) == theta) {
        keep = std::move(trial);
      }
    }
    if (family.size() <= limits.exact_meet) {
      for (size_t k = 1; k < keep.size(); ++k) {
        std::vector<size_t> idx(k);
        std::iota(idx.begin(), idx.end(), size_t(0));
        while (true) {
          if (meet_of(idx) == theta) {
            keep = idx;
            goto done;
          }
          size_t i = k;
          while (i > 0 && idx[i - 1] == family.size() - k + i - 1) {
            --i;
          }
          if (i == 0) {
            break;
          }
          ++idx[i - 1];
          for (size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
          }
        }
      }
    }
  done:
    std::vector<Congruence> out;
    for (auto i : keep) {
      out.push_back(family[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subacts, quotients and extrema
  ////////////////////////////////////////////////////////////////////////

  //! rho u Delta_A, for a congruence rho on the act as_act(B).
  inline Congruence extend_congruence(RightAct const&   A,
                                      Subact const&     B,
                                      Congruence const& rho) {
    if (B.parent != A || !is_subact(A, B.elements)) {
      fail(ErrorKind::NotASubact, to_string(B.elements) + " is not a subact");
    }
    if (rho.act() != as_act(B)) {
      fail(ErrorKind::MixedActs, "rho is not a congruence on the subact");
    }
    auto rep = detail::identity_reps(A.size());
    for (index_type i = 0; i < B.size(); ++i) {
      rep[B.elements[i]] = B.elements[rho.representative(i)];
    }
    // the elements of B are sorted, so block minima are preserved
    return Congruence(A, std::move(rep));
  }

  //! rho intersected with B x B, as a congruence on as_act(B).
  inline Congruence restrict_congruence(Congruence const& rho, Subact const& B) {
    if (B.parent != rho.act()) {
      fail(ErrorKind::MixedActs, "subact of a different act");
    }
    std::vector<index_type> rep(B.size());
    std::map<index_type, index_type> first;
    for (index_type i = 0; i < B.size(); ++i) {
      auto it = first.emplace(rho.representative(B.elements[i]), i).first;
      rep[i]  = it->second;
    }
    return Congruence(as_act(B), std::move(rep));
  }

  //! A / rho; the class with least member r gets the index of r among the
  //! block representatives.
  inline Quotient act_quotient(Congruence const& rho) {
    RightAct const&         A = rho.act();
    size_t const            m = A.monoid().size();
    std::vector<index_type> cls(A.size(), UNDEFINED);
    index_type              next = 0;
    for (index_type a = 0; a < A.size(); ++a) {
      if (rho.representative(a) == a) {
        cls[a] = next++;
      }
    }
    std::vector<index_type> image(A.size());
    for (index_type a = 0; a < A.size(); ++a) {
      image[a] = cls[rho.representative(a)];
    }
    std::vector<index_type> table(next * m);
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < m; ++s) {
        table[image[a] * m + s] = image[A.act(a, s)];
      }
    }
    auto Q = RightAct::make_unchecked(A.monoid(), next, std::move(table));
    return Quotient{Q, ActHom{A, Q, std::move(image)}};
  }

  struct Extrema {
    std::vector<Congruence> minimal;
    std::vector<Congruence> maximal;
  };

  inline Extrema lattice_extrema(std::vector<Congruence> const& set) {
    if (set.empty()) {
      fail(ErrorKind::EmptySet, "lattice_extrema of an empty set");
    }
    for (auto const& rho : set) {
      detail::check_same_act(set[0], rho);
    }
    Extrema e;
    for (size_t i = 0; i < set.size(); ++i) {
      bool minimal = true, maximal = true;
      for (size_t j = 0; j < set.size(); ++j) {
        if (set[i] == set[j]) {
          continue;
        }
        if (set[j].is_subset_of(set[i])) {
          minimal = false;
        }
        if (set[i].is_subset_of(set[j])) {
          maximal = false;
        }
      }
      if (minimal) {
        e.minimal.push_back(set[i]);
      }
      if (maximal) {
        e.maximal.push_back(set[i]);
      }
    }
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoid quotients
  ////////////////////////////////////////////////////////////////////////

  struct MonoidQuotient {
    Monoid    monoid;
    MonoidHom hom;
  };

  //! S / rho for a congruence rho on S_S that is also left compatible.
  inline MonoidQuotient quotient_monoid(Monoid const& S, Congruence const& rho) {
    if (rho.act() != regular_act(S)) {
      fail(ErrorKind::MixedActs, "rho is not a congruence on S as a right act");
    }
    for (index_type a = 0; a < S.size(); ++a) {
      auto b = rho.representative(a);
      for (index_type s = 0; s < S.size(); ++s) {
        if (!rho.related(S.product(a, s), S.product(b, s))
            || !rho.related(S.product(s, a), S.product(s, b))) {
          fail(ErrorKind::NotTwoSided,
               std::to_string(a) + " ~ " + std::to_string(b)
                   + " is not preserved by " + std::to_string(s));
        }
      }
    }
    auto                    q = act_quotient(rho);
    size_t const            n = q.act.size();
    std::vector<index_type> table(n * n);
    std::vector<index_type> some(n);
    for (index_type a = 0; a < S.size(); ++a) {
      some[q.epi.map[a]] = a;
    }
    for (index_type x = 0; x < n; ++x) {
      for (index_type y = 0; y < n; ++y) {
        table[x * n + y] = q.epi.map[S.product(some[x], some[y])];
      }
    }
    auto T = Monoid::make_unchecked(n, std::move(table), q.epi.map[S.identity()]);
    return MonoidQuotient{T, MonoidHom{S, T, q.epi.map}};
  }

}  // namespace actlat

#endif  // ACTLAT_CONGRUENCE_HPP_
