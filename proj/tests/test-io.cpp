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
#include <catch_amalgamated.hpp>

#include "actlat/actlat.hpp"
#include "actlat/io.hpp"
#include "oracles.hpp"

using namespace actlat;

TEST_CASE("monoid round trip", "[io]") {
  for (auto const& [name, S] : corpus_monoids()) {
    INFO(name);
    auto j = to_json(S);
    auto T = monoid_from_json(json::parse(j.dump()));
    REQUIRE(T == S);
    REQUIRE(T.zero() == S.zero());
    REQUIRE(T.identity() == S.identity());
  }
}

TEST_CASE("workspace round trip", "[io]") {
  Workspace w;
  w.monoids.emplace("min3", min_monoid_with_identity(3));
  w.acts.emplace("K", min_monoid_ideal_act(3));
  w.act_monoid.emplace("K", "min3");
  RandomConfig rc;
  rc.seed = 4;
  rc.size = 3;
  auto S  = random_monoid(rc);
  w.acts.emplace("inline", random_act(S, rc));
  auto text = to_json(w).dump(2);
  auto back = workspace_from_json(json::parse(text));
  REQUIRE(back.acts.at("K") == w.acts.at("K"));
  REQUIRE(back.acts.at("inline") == w.acts.at("inline"));
  REQUIRE(to_json(back).dump(2) == text);
}

TEST_CASE("malformed workspaces", "[io]") {
  auto kind = [](std::string const& text) {
    return oracle::error_kind([&] { workspace_from_json(json::parse(text)); });
  };
  REQUIRE(kind("[]") == ErrorKind::InvalidInput);
  REQUIRE(kind(R"({"monoids": {"S": {"table": [[0, 1], [1]]}}})") == ErrorKind::InvalidInput);
  REQUIRE(kind(R"({"monoids": {"S": {"table": [[0, 1], [0, 1]]}}})") == ErrorKind::BadIdentity);
  REQUIRE(kind(R"({"monoids": {"S": {"table": [[0, 1, 2], [1, 2, 1], [2, 2, 2]]}}})")
          == ErrorKind::NotAssociative);
  REQUIRE(kind(R"({"monoids": {"S": {"table": [[0]], "size": 2}}})") == ErrorKind::InvalidInput);
  REQUIRE(kind(R"({"acts": {"A": {"monoid": "nope", "table": [[0]]}}})")
          == ErrorKind::InvalidInput);
  REQUIRE(kind(R"({"monoids": {"S": {"table": [[0, 1], [1, 0]]}},
                   "acts": {"A": {"monoid": "S", "table": [[1, 0], [1, 0]]}}})")
          == ErrorKind::UnitLawViolated);
  REQUIRE(kind(R"({"monoids": {"S": {"table": [[0, 1], [1, 0]]}},
                   "acts": {"A": {"monoid": "S", "table": [[0, 1], [1, 2], [2, 0]]}}})")
          == ErrorKind::ActionNotAssociative);
  REQUIRE(kind(R"({"extra": 1})") == ErrorKind::InvalidInput);
  REQUIRE(kind(R"({"monoids": {"S": {"table": [[-1]]}}})") == ErrorKind::InvalidInput);
}

TEST_CASE("congruences and reports as JSON", "[io]") {
  auto K   = min_monoid_ideal_act(3);
  auto rho = rees_congruence(K, make_subact(K, {0, 1}));
  REQUIRE(to_json(rho).dump() == "[[0,1],[2]]");
  REQUIRE(congruence_from_json(K, json::parse("[[0,1],[2]]")) == rho);
  REQUIRE_THROWS_AS(congruence_from_json(K, json::parse("[[0,2],[1]]")), Error);

  auto r = chain_report(all_subacts(K));
  auto j = to_json(r);
  REQUIRE(j["height"] == 3);

  VerifyConfig cfg;
  cfg.instances = 2;
  auto vr       = verify_suite("cancellative", cfg);
  auto vj       = to_json(vr);
  REQUIRE(vj["passed"] == true);
  REQUIRE(vj["suite"] == "cancellative");
  REQUIRE(to_text(vr).find("PASS") != std::string::npos);
}

TEST_CASE("failure records replay", "[io]") {
  Failure f{"check", "detail", {"x", cyclic_group(3), regular_act(cyclic_group(3))}};
  auto    j    = json::parse(to_json(f).dump());
  auto    inst = instance_from_json(j["instance"]);
  REQUIRE(inst.monoid == f.instance.monoid);
  REQUIRE(*inst.act == *f.instance.act);
  REQUIRE(inst.label == "x");
}
