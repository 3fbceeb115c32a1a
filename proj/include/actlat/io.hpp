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
// This file contains JSON serialisation of monoids, acts, congruences and
// reports, and the workspace format used by the command line tool:
//
//   {"monoids": {"S": {"size": 2, "identity": 0, "table": [[0, 1], [1, 1]]}},
//    "acts":    {"A": {"monoid": "S", "size": 2, "table": [[0, 1], [1, 1]]}},
//    "metadata": {}}
//
// "size" and "zero" are optional on input and checked when present.  An act
// may carry its monoid inline instead of by name.

#ifndef ACTLAT_IO_HPP_
#define ACTLAT_IO_HPP_

#include <fstream>  // for ifstream
#include <map>      // for map
#include <sstream>  // for ostringstream
#include <string>   // for string
#include <vector>   // for vector

#include <nlohmann/json.hpp>

#include "act.hpp"
#include "config.hpp"
#include "congruence.hpp"
#include "exactness.hpp"
#include "monoid.hpp"
#include "poset.hpp"
#include "verify.hpp"

namespace actlat {

  using json = nlohmann::ordered_json;

  namespace detail {

    inline std::vector<std::vector<index_type>> read_table(json const& j,
                                                           std::string const& what) {
      if (!j.is_array()) {
        fail(ErrorKind::InvalidInput, what + ": table must be an array of rows");
      }
      std::vector<std::vector<index_type>> t;
      for (auto const& row : j) {
        if (!row.is_array()) {
          fail(ErrorKind::InvalidInput, what + ": table row must be an array");
        }
        std::vector<index_type> r;
        for (auto const& x : row) {
          if (!x.is_number_unsigned()) {
            fail(ErrorKind::InvalidInput, what + ": table entries must be non-negative integers");
          }
          r.push_back(x.get<index_type>());
        }
        t.push_back(std::move(r));
      }
      return t;
    }

    inline void check_optional_fields(json const&               j,
                                      size_t                    size,
                                      std::optional<index_type> zero,
                                      std::string const&        what) {
      if (j.contains("size") && (!j["size"].is_number_unsigned() || j["size"].get<size_t>() != size)) {
        fail(ErrorKind::InvalidInput, what + ": \"size\" does not match the table");
      }
      if (j.contains("zero")) {
        auto const& z = j["zero"];
        if (z.is_null() ? zero.has_value()
                        : (!z.is_number_unsigned() || !zero || z.get<index_type>() != *zero)) {
          fail(ErrorKind::InvalidInput, what + ": \"zero\" does not match the table");
        }
      }
    }

    inline json optional_index(std::optional<index_type> x) {
      return x ? json(*x) : json(nullptr);
    }

  }  // namespace detail

  inline json to_json(Monoid const& S) {
    return json{{"size", S.size()},
                {"identity", S.identity()},
                {"zero", detail::optional_index(S.zero())},
                {"table", S.table()}};
  }

  inline Monoid monoid_from_json(json const& j, std::string const& what = "monoid") {
    if (!j.is_object() || !j.contains("table")) {
      fail(ErrorKind::InvalidInput, what + ": expected an object with a \"table\"");
    }
    index_type identity = 0;
    if (j.contains("identity")) {
      if (!j["identity"].is_number_unsigned()) {
        fail(ErrorKind::InvalidInput, what + ": \"identity\" must be an index");
      }
      identity = j["identity"].get<index_type>();
    }
    auto S = monoid_from_table(detail::read_table(j["table"], what), identity);
    detail::check_optional_fields(j, S.size(), S.zero(), what);
    return S;
  }

  //! With a monoid name the monoid is referenced, otherwise inlined.
  inline json to_json(RightAct const& A, std::string const& monoid_name = "") {
    json j;
    j["monoid"] = monoid_name.empty() ? to_json(A.monoid()) : json(monoid_name);
    j["size"]   = A.size();
    j["zero"]   = detail::optional_index(A.zero());
    j["table"]  = A.table();
    return j;
  }

  inline json to_json(Congruence const& rho) {
    return rho.blocks();
  }

  inline Congruence congruence_from_json(RightAct const& A, json const& j) {
    if (!j.is_array()) {
      fail(ErrorKind::InvalidInput, "congruence must be a list of blocks");
    }
    std::vector<element_set> blocks;
    for (auto const& b : j) {
      blocks.push_back(b.get<element_set>());
    }
    return congruence_from_blocks(A, blocks);
  }

  struct Workspace {
    std::map<std::string, Monoid>   monoids;
    std::map<std::string, RightAct> acts;
    std::map<std::string, std::string> act_monoid;  // act name -> monoid name, if named
    json                               metadata = json::object();
  };

  inline Workspace workspace_from_json(json const& j) {
    if (!j.is_object()) {
      fail(ErrorKind::InvalidInput, "workspace must be a JSON object");
    }
    for (auto const& key : j.items()) {
      if (key.key() != "monoids" && key.key() != "acts" && key.key() != "metadata") {
        fail(ErrorKind::InvalidInput, "unknown workspace key \"" + key.key() + "\"");
      }
    }
    Workspace w;
    if (j.contains("monoids")) {
      if (!j["monoids"].is_object()) {
        fail(ErrorKind::InvalidInput, "\"monoids\" must be an object");
      }
      for (auto const& [name, m] : j["monoids"].items()) {
        w.monoids.emplace(name, monoid_from_json(m, "monoid " + name));
      }
    }
    if (j.contains("acts")) {
      if (!j["acts"].is_object()) {
        fail(ErrorKind::InvalidInput, "\"acts\" must be an object");
      }
      for (auto const& [name, a] : j["acts"].items()) {
        std::string const what = "act " + name;
        if (!a.is_object() || !a.contains("monoid") || !a.contains("table")) {
          fail(ErrorKind::InvalidInput, what + ": expected \"monoid\" and \"table\"");
        }
        std::optional<Monoid> S;
        if (a["monoid"].is_string()) {
          auto m = a["monoid"].get<std::string>();
          auto it = w.monoids.find(m);
          if (it == w.monoids.end()) {
            fail(ErrorKind::InvalidInput, what + ": unknown monoid \"" + m + "\"");
          }
          S = it->second;
          w.act_monoid.emplace(name, m);
        } else {
          S = monoid_from_json(a["monoid"], what + " monoid");
        }
        auto A = act_from_table(*S, detail::read_table(a["table"], what));
        detail::check_optional_fields(a, A.size(), A.zero(), what);
        w.acts.emplace(name, A);
      }
    }
    if (j.contains("metadata")) {
      w.metadata = j["metadata"];
    }
    return w;
  }

  inline json to_json(Workspace const& w) {
    json j;
    j["monoids"] = json::object();
    for (auto const& [name, S] : w.monoids) {
      j["monoids"][name] = to_json(S);
    }
    j["acts"] = json::object();
    for (auto const& [name, A] : w.acts) {
      auto it = w.act_monoid.find(name);
      j["acts"][name] = to_json(A, it == w.act_monoid.end() ? "" : it->second);
    }
    j["metadata"] = w.metadata;
    return j;
  }

  inline Workspace load_workspace(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      fail(ErrorKind::InvalidInput, "cannot open " + path);
    }
    json j;
    try {
      j = json::parse(in);
    } catch (json::parse_error const& e) {
      fail(ErrorKind::InvalidInput, path + ": " + e.what());
    }
    return workspace_from_json(j);
  }

  //! The act called name, or the only act if name is empty.
  inline RightAct const& pick_act(Workspace const& w, std::string const& name) {
    if (name.empty()) {
      if (w.acts.size() != 1) {
        fail(ErrorKind::InvalidInput, "workspace has " + std::to_string(w.acts.size())
                                          + " acts; choose one with --act");
      }
      return w.acts.begin()->second;
    }
    auto it = w.acts.find(name);
    if (it == w.acts.end()) {
      fail(ErrorKind::InvalidInput, "no act called \"" + name + "\"");
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(LatticeReport const& r) {
    return json{{"element_count", r.element_count},
                {"height", r.height},
                {"minimal_elements", r.minimal_elements},
                {"maximal_elements", r.maximal_elements},
                {"longest_chain", r.longest_chain}};
  }

  inline json to_json(FittingReport const& r) {
    json j{{"n", r.n_image_stable},
           {"k", r.k_meet_trivial},
           {"l", r.l},
           {"join_is_nabla", r.join_is_nabla},
           {"meet_is_delta", r.meet_is_delta},
           {"direct_sum_holds", r.direct_sum_holds}};
    j["kernel"] = r.kernel_at_l ? to_json(*r.kernel_at_l) : json(nullptr);
    j["image_congruence"]
        = r.image_congruence_at_l ? to_json(*r.image_congruence_at_l) : json(nullptr);
    return j;
  }

  inline json to_json(Instance const& inst) {
    json j{{"label", inst.label}, {"monoid", to_json(inst.monoid)}};
    j["act"] = inst.act ? json{{"size", inst.act->size()}, {"table", inst.act->table()}}
                        : json(nullptr);
    return j;
  }

  inline Instance instance_from_json(json const& j) {
    if (!j.is_object() || !j.contains("monoid")) {
      fail(ErrorKind::InvalidInput, "instance needs a \"monoid\"");
    }
    Instance inst{j.value("label", std::string("replay")), monoid_from_json(j["monoid"]),
                  std::nullopt};
    if (j.contains("act") && !j["act"].is_null()) {
      if (!j["act"].contains("table")) {
        fail(ErrorKind::InvalidInput, "instance act needs a \"table\"");
      }
      inst.act = act_from_table(inst.monoid, detail::read_table(j["act"]["table"], "act"));
    }
    return inst;
  }

  inline json to_json(Failure const& f) {
    return json{{"check", f.check}, {"detail", f.detail}, {"instance", to_json(f.instance)}};
  }

  inline json to_json(VerificationReport const& r) {
    json failures = json::array();
    for (auto const& f : r.failures) {
      failures.push_back(to_json(f));
    }
    return json{{"suite", r.suite},
                {"seed", r.seed},
                {"instances_tested", r.instances_tested},
                {"passed", r.passed()},
                {"failures", failures},
                {"notes", r.notes}};
  }

  inline std::string to_text(VerificationReport const& r) {
    std::ostringstream out;
    out << "suite      " << r.suite << "\n"
        << "seed       " << r.seed << "\n"
        << "instances  " << r.instances_tested << "\n"
        << "failures   " << r.failures.size() << "\n"
        << "result     " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (auto const& f : r.failures) {
      out << "  [" << f.instance.label << "] " << f.check;
      if (!f.detail.empty()) {
        out << ": " << f.detail;
      }
      out << "\n";
    }
    for (auto const& n : r.notes) {
      out << "note: " << n << "\n";
    }
    return out.str();
  }

}  // namespace actlat

#endif  // ACTLAT_IO_HPP_
