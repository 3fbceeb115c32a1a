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
// This file contains the basic types shared by every part of actlat: element
// indices, the exception type, the size limits used by the enumerations, and
// a small dynamic bitset for element subsets.

#ifndef ACTLAT_CONFIG_HPP_
#define ACTLAT_CONFIG_HPP_

#include <algorithm>    // for sort, equal
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t, uint64_t
#include <functional>   // for hash
#include <numeric>      // for iota
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

namespace actlat {

  using index_type  = std::uint32_t;
  using element_set = std::vector<index_type>;  // always sorted, no repeats
  using index_pair  = std::pair<index_type, index_type>;

  inline constexpr index_type UNDEFINED = static_cast<index_type>(-1);

  enum class ErrorKind {
    InvalidInput,
    NotAssociative,
    BadIdentity,
    SizeLimitExceeded,
    NotCommutative,
    NotTwoSided,
    UnitLawViolated,
    ActionNotAssociative,
    EmptyGeneratingSet,
    NotASubact,
    MixedMonoids,
    MixedActs,
    MissingZero,
    NotACongruence,
    NotAHomomorphism,
    MeetMismatch,
    EmptySet,
    NotProjective,
    NotNested,
    NotAChain,
    UnknownSuite
  };

  constexpr std::string_view error_kind_name(ErrorKind k) noexcept {
    switch (k) {
      case ErrorKind::InvalidInput: return "InvalidInput";
      case ErrorKind::NotAssociative: return "NotAssociative";
      case ErrorKind::BadIdentity: return "BadIdentity";
      case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
      case ErrorKind::NotCommutative: return "NotCommutative";
      case ErrorKind::NotTwoSided: return "NotTwoSided";
      case ErrorKind::UnitLawViolated: return "UnitLawViolated";
      case ErrorKind::ActionNotAssociative: return "ActionNotAssociative";
      case ErrorKind::EmptyGeneratingSet: return "EmptyGeneratingSet";
      case ErrorKind::NotASubact: return "NotASubact";
      case ErrorKind::MixedMonoids: return "MixedMonoids";
      case ErrorKind::MixedActs: return "MixedActs";
      case ErrorKind::MissingZero: return "MissingZero";
      case ErrorKind::NotACongruence: return "NotACongruence";
      case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
      case ErrorKind::MeetMismatch: return "MeetMismatch";
      case ErrorKind::EmptySet: return "EmptySet";
      case ErrorKind::NotProjective: return "NotProjective";
      case ErrorKind::NotNested: return "NotNested";
      case ErrorKind::NotAChain: return "NotAChain";
      case ErrorKind::UnknownSuite: return "UnknownSuite";
    }
    return "Unknown";
  }

  //! Exception thrown by every checked operation in actlat.  The kind
  //! identifies the failed contract; the message carries the witness.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] inline void fail(ErrorKind kind, std::string const& msg) {
    throw Error(kind, msg);
  }

  //! Caps on the exponential enumerations.  Exceeding any of them raises
  //! ErrorKind::SizeLimitExceeded; nothing is ever silently truncated.
  struct Limits {
    size_t monoid_closure  = 10'000;     // monoid_from_transformations
    size_t lattice         = 100'000;    // all_congruences, all_subacts
    size_t oracle_carrier  = 7;          // all_congruences(oracle)
    size_t homs            = 1'000'000;  // homomorphism search nodes
    size_t pair_search     = 2'000'000;  // minimal_generating_pairs
    size_t exact_meet      = 12;         // meet_reduction exact phase
    size_t right_ideals    = 100'000;    // right_ideals
    size_t lattice_compare = 8;          // restrict_scalars lattice report
  };

  inline std::string to_string(element_set const& xs) {
    std::string out = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(xs[i]);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Bitset - subsets of {0, ..., n - 1}
  ////////////////////////////////////////////////////////////////////////

  class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(size_t n) : _n(n), _words((n + 63) / 64, 0) {}

    static Bitset from(size_t n, element_set const& xs) {
      Bitset b(n);
      for (auto x : xs) {
        b.set(x);
      }
      return b;
    }

    size_t universe() const noexcept {
      return _n;
    }

    bool test(size_t i) const noexcept {
      return (_words[i >> 6] >> (i & 63)) & 1;
    }

    void set(size_t i) noexcept {
      _words[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    void reset(size_t i) noexcept {
      _words[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    size_t count() const noexcept {
      size_t c = 0;
      for (auto w : _words) {
        c += static_cast<size_t>(__builtin_popcountll(w));
      }
      return c;
    }

    bool none() const noexcept {
      return std::all_of(
          _words.begin(), _words.end(), [](auto w) { return w == 0; });
    }

    bool is_subset_of(Bitset const& that) const noexcept {
      for (size_t i = 0; i < _words.size(); ++i) {
        if ((_words[i] & ~that._words[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    Bitset& operator|=(Bitset const& that) noexcept {
      for (size_t i = 0; i < _words.size(); ++i) {
        _words[i] |= that._words[i];
      }
      return *this;
    }

    Bitset& operator&=(Bitset const& that) noexcept {
      for (size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= that._words[i];
      }
      return *this;
    }

    element_set elements() const {
      element_set out;
      for (size_t i = 0; i < _n; ++i) {
        if (test(i)) {
          out.push_back(static_cast<index_type>(i));
        }
      }
      return out;
    }

    bool operator==(Bitset const& that) const noexcept {
      return _n == that._n && _words == that._words;
    }

    size_t hash() const noexcept {
      size_t h = _n;
      for (auto w : _words) {
        h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }

   private:
    size_t                     _n = 0;
    std::vector<std::uint64_t> _words;
  };

  struct BitsetHash {
    size_t operator()(Bitset const& b) const noexcept {
      return b.hash();
    }
  };

  struct VectorHash {
    size_t operator()(std::vector<index_type> const& v) const noexcept {
      size_t h = v.size();
      for (auto x : v) {
        h ^= std::hash<index_type>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }
  };

  // (size, lexicographic) order used for every list of element sets
  inline bool shortlex_less(element_set const& x, element_set const& y) {
    if (x.size() != y.size()) {
      return x.size() < y.size();
    }
    return x < y;
  }

  namespace detail {

    class UnionFind {
     public:
      explicit UnionFind(size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), index_type(0));
      }

      index_type find(index_type x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      // Returns false if x and y were already in the same block.  The root
      // of the merged block is always the smaller root.
      bool unite(index_type x, index_type y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        return true;
      }

      // rep[i] = least element of the block of i
      std::vector<index_type> representatives() {
        std::vector<index_type> rep(_parent.size());
        for (index_type i = 0; i < rep.size(); ++i) {
          rep[i] = find(i);
        }
        return rep;
      }

     private:
      std::vector<index_type> _parent;
    };

  }  // namespace detail
}  // namespace actlat

#endif  // ACTLAT_CONFIG_HPP_
