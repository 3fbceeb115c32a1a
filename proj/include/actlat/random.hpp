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
// This file contains seeded random monoids and acts.  Everything is
// deterministic in the seed: the generator is std::mt19937_64 and values
// are reduced with %, never with std::uniform_int_distribution whose output
// differs between standard libraries.

#ifndef ACTLAT_RANDOM_HPP_
#define ACTLAT_RANDOM_HPP_

#include <algorithm>  // for max
#include <cstdint>  // for uint64_t
#include <optional>  // for optional
#include <random>   // for mt19937_64
#include <vector>   // for vector

#include "act.hpp"
#include "config.hpp"
#include "congruence.hpp"
#include "monoid.hpp"

namespace actlat {

  struct RandomConfig {
    std::uint64_t seed         = 1;
    size_t        size         = 4;  // exact size of an act, upper bound for a monoid
    bool          commutative  = false;
    bool          with_zero    = false;
    size_t        max_attempts = 20'000;
  };

  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _gen(seed) {}

    size_t below(size_t n) {
      return n == 0 ? 0 : static_cast<size_t>(_gen() % n);
    }

    bool coin() {
      return (_gen() & 1) == 1;
    }

    std::uint64_t next() {
      return _gen();
    }

   private:
    std::mt19937_64 _gen;
  };

  //! Closure of one or two random transformations of at most four points,
  //! resampled until it has at most config.size elements and passes the
  //! commutative and with_zero filters.
  inline Monoid random_monoid(RandomConfig const& config) {
    if (config.size == 0) {
      fail(ErrorKind::InvalidInput, "monoid size bound must be positive");
    }
    Rng rng(config.seed);
    for (size_t attempt = 0; attempt < config.max_attempts; ++attempt) {
      size_t const degree = 1 + rng.below(std::min<size_t>(config.size, 4));
      size_t const ngens  = config.commutative ? 1 : 1 + rng.below(2);
      std::vector<Transformation> gens(ngens, Transformation(degree));
      for (auto& g : gens) {
        for (auto& x : g) {
          x = static_cast<index_type>(rng.below(degree));
        }
      }
      std::optional<Monoid> S;
      try {
        S = monoid_from_transformations(degree, gens, config.size);
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::SizeLimitExceeded) {
          throw;
        }
        continue;
      }
      if (config.commutative && !is_commutative(*S)) {
        continue;
      }
      if (config.with_zero && !S->zero()) {
        continue;
      }
      return *S;
    }
    fail(ErrorKind::SizeLimitExceeded, "no random monoid found within the attempt budget");
  }

  namespace detail {

    //! A greedy monoid generating set, and for every element a word in
    //! those generators (by breadth-first right multiplication).
    struct MonoidWords {
      element_set                          gens;
      std::vector<std::vector<index_type>> words;
    };

    inline MonoidWords monoid_words(Monoid const& S) {
      MonoidWords mw;
      size_t const n = S.size();
      auto         closure = [&]() {
        std::vector<std::vector<index_type>> words(n);
        std::vector<char>                    seen(n, 0);
        std::vector<index_type>              queue{S.identity()};
        seen[S.identity()] = 1;
        for (size_t i = 0; i < queue.size(); ++i) {
          auto x = queue[i];
          for (size_t k = 0; k < mw.gens.size(); ++k) {
            auto y = S.product(x, mw.gens[k]);
            if (!seen[y]) {
              seen[y]  = 1;
              words[y] = words[x];
              words[y].push_back(static_cast<index_type>(k));
              queue.push_back(y);
            }
          }
        }
        return std::pair(words, seen);
      };
      auto [words, seen] = closure();
      for (index_type s = 0; s < n; ++s) {
        if (!seen[s]) {
          mw.gens.push_back(s);
          std::tie(words, seen) = closure();
        }
      }
      mw.words = std::move(words);
      return mw;
    }

  }  // namespace detail

  //! A random act with exactly config.size elements over S.  Even attempts
  //! choose random images for a generating set of S and extend along words
  //! (the identity column is then correct by construction) and reject the
  //! table if it is not an action.  Odd attempts take a random quotient of
  //! a coproduct of copies of S_S and keep it if the size is right.
  inline RightAct random_act(Monoid const& S, RandomConfig const& config) {
    size_t const m = config.size;
    if (m == 0) {
      fail(ErrorKind::InvalidInput, "act size must be positive");
    }
    Rng         rng(config.seed);
    auto const  mw = detail::monoid_words(S);
    size_t const n = S.size();
    // one candidate act with exactly size elements, or nothing
    auto sample = [&](size_t size, size_t attempt) -> std::optional<RightAct> {
      if (attempt % 2 == 0) {
        std::vector<std::vector<index_type>> images(mw.gens.size(),
                                                    std::vector<index_type>(size));
        for (auto& img : images) {
          for (auto& x : img) {
            x = static_cast<index_type>(rng.below(size));
          }
        }
        std::vector<std::vector<index_type>> table(size, std::vector<index_type>(n));
        for (index_type a = 0; a < size; ++a) {
          for (index_type s = 0; s < n; ++s) {
            index_type x = a;
            for (auto k : mw.words[s]) {
              x = images[k][x];
            }
            table[a][s] = x;
          }
        }
        try {
          return act_from_table(S, table);
        } catch (Error const&) {
          return std::nullopt;
        }
      }
      size_t const copies = 1 + rng.below(size);
      std::vector<RightAct> parts(copies, regular_act(S));
      size_t const          extra = rng.below(size + 1);
      if (extra > 0) {
        parts.push_back(trivial_act(S, extra));
      }
      auto free = coproduct(parts);
      if (free.size() < size) {
        return std::nullopt;
      }
      std::vector<index_pair> pairs;
      auto                    rho = delta(free);
      while (rho.number_of_blocks() > size) {
        pairs.emplace_back(static_cast<index_type>(rng.below(free.size())),
                           static_cast<index_type>(rng.below(free.size())));
        rho = congruence_generated(free, pairs);
      }
      if (rho.number_of_blocks() != size) {
        return std::nullopt;
      }
      return act_quotient(rho).act;
    };
    for (size_t attempt = 0; attempt < config.max_attempts; ++attempt) {
      if (!config.with_zero) {
        if (auto A = sample(m, attempt)) {
          return *A;
        }
        continue;
      }
      // collapse the fixed points of a slightly larger act into one, or
      // adjoin a zero when there are none
      size_t const size = std::max<size_t>(m, 2) - 1 + rng.below(4);
      auto         B    = sample(size, attempt);
      if (!B) {
        continue;
      }
      element_set fixed;
      for (index_type a = 0; a < B->size(); ++a) {
        bool is_fixed = true;
        for (index_type s = 0; s < n && is_fixed; ++s) {
          is_fixed = B->act(a, s) == a;
        }
        if (is_fixed) {
          fixed.push_back(a);
        }
      }
      auto A = fixed.empty() ? coproduct({*B, trivial_act(S, 1)})
                             : rees_quotient(*B, make_subact(*B, fixed)).act;
      if (A.size() == m && A.zero()) {
        return A;
      }
    }
    fail(ErrorKind::SizeLimitExceeded, "no random act found within the attempt budget");
  }

}  // namespace actlat

#endif  // ACTLAT_RANDOM_HPP_
