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
// Command line front end.  Exit codes: 0 success, 1 validation or
// verification failure, 2 usage error, 3 size limit exceeded.

#include <cstdio>    // for fprintf
#include <fstream>   // for ofstream
#include <iomanip>   // for setw
#include <iostream>  // for cout
#include <sstream>   // for istringstream
#include <string>    // for string
#include <vector>    // for vector

#include <CLI11.hpp>

#include "actlat/actlat.hpp"
#include "actlat/io.hpp"

using namespace actlat;

namespace {

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  bool json_mode = false;

  int exit_code(ErrorKind k) {
    switch (k) {
      case ErrorKind::SizeLimitExceeded:
        return 3;
      case ErrorKind::UnknownSuite:
        return 2;
      default:
        return 1;
    }
  }

  void print_error(std::string const& kind, std::string const& message) {
    if (json_mode) {
      std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
    } else {
      std::cerr << "error (" << kind << "): " << message << "\n";
    }
  }

  index_type parse_index(std::string const& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("expected a non-negative integer, got \"" + tok + "\"");
    }
    return static_cast<index_type>(std::stoul(tok));
  }

  std::vector<std::string> split(std::string const& s, char sep) {
    std::vector<std::string> out;
    std::string              tok;
    std::istringstream       in(s);
    while (std::getline(in, tok, sep)) {
      out.push_back(tok);
    }
    if (!s.empty() && s.back() == sep) {
      out.emplace_back();
    }
    return out;
  }

  // "0,2,3"
  std::vector<index_type> parse_list(std::string const& s) {
    std::vector<index_type> out;
    if (s.empty()) {
      return out;
    }
    for (auto const& tok : split(s, ',')) {
      out.push_back(parse_index(tok));
    }
    return out;
  }

  // "0,1|2"
  std::vector<element_set> parse_blocks(std::string const& s) {
    std::vector<element_set> out;
    for (auto const& b : split(s, '|')) {
      auto x = parse_list(b);
      std::sort(x.begin(), x.end());
      out.push_back(std::move(x));
    }
    return out;
  }

  void emit(json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int cmd_validate(std::string const& file) {
    auto w   = load_workspace(file);
    json out = json::object();
    out["monoids"] = json::object();
    out["acts"]    = json::object();
    for (auto const& [name, S] : w.monoids) {
      auto c = classify(S);
      out["monoids"][name] = json{{"size", S.size()},
                                  {"commutative", c.commutative},
                                  {"left_cancellative", c.left_cancellative},
                                  {"has_zero", c.has_zero},
                                  {"group", c.is_group},
                                  {"0-group", c.is_0group},
                                  {"local", c.is_local}};
    }
    for (auto const& [name, A] : w.acts) {
      auto c = classify_act(A);
      json j{{"size", A.size()},
             {"simple", c.simple},
             {"theta_simple", c.theta_simple},
             {"cyclic", c.cyclic},
             {"generator", c.generator},
             {"projective", c.projective},
             {"semisimple", c.semisimple ? json(*c.semisimple) : json(nullptr)},
             {"completely_reducible", c.completely_reducible}};
      out["acts"][name] = j;
    }
    if (json_mode) {
      emit(out);
      return 0;
    }
    std::cout << "monoid            size  comm  lcanc  zero  group  0-group  local\n";
    for (auto const& [name, m] : out["monoids"].items()) {
      std::cout << std::left << std::setw(16) << name << "  " << std::setw(4)
                << m["size"].get<size_t>() << "  " << std::setw(4)
                << yes_no(m["commutative"]) << "  " << std::setw(5)
                << yes_no(m["left_cancellative"]) << "  " << std::setw(4)
                << yes_no(m["has_zero"]) << "  " << std::setw(5) << yes_no(m["group"])
                << "  " << std::setw(7) << yes_no(m["0-group"]) << "  "
                << yes_no(m["local"]) << "\n";
    }
    std::cout << "\nact               size  simple  theta  cyclic  gen  proj  semisimple  c.red.\n";
    for (auto const& [name, a] : out["acts"].items()) {
      std::cout << std::left << std::setw(16) << name << "  " << std::setw(4)
                << a["size"].get<size_t>() << "  " << std::setw(6) << yes_no(a["simple"])
                << "  " << std::setw(5) << yes_no(a["theta_simple"]) << "  " << std::setw(6)
                << yes_no(a["cyclic"]) << "  " << std::setw(3) << yes_no(a["generator"])
                << "  " << std::setw(4) << yes_no(a["projective"]) << "  " << std::setw(10)
                << (a["semisimple"].is_null() ? "n/a" : yes_no(a["semisimple"])) << "  "
                << yes_no(a["completely_reducible"]) << "\n";
    }
    return 0;
  }

  void print_lattice(LatticeReport const& r, std::vector<std::string> const& labels) {
    if (json_mode) {
      json j          = to_json(r);
      j["elements"]   = labels;
      emit(j);
      return;
    }
    std::cout << "elements  " << r.element_count << "\n";
    std::cout << "height    " << r.height << "\n";
    auto list = [&](std::vector<size_t> const& xs) {
      std::string s;
      for (auto i : xs) {
        s += (s.empty() ? "" : "  ") + labels[i];
      }
      return s;
    };
    std::cout << "minimal   " << list(r.minimal_elements) << "\n";
    std::cout << "maximal   " << list(r.maximal_elements) << "\n";
    std::cout << "chain     " << list(r.longest_chain) << "\n";
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      fail(ErrorKind::InvalidInput, "cannot write " + path);
    }
    out << text;
  }

  int cmd_lattice(std::string const& file,
                  std::string const& act,
                  std::string const& kind,
                  std::string const& dot,
                  bool               oracle) {
    auto        w = load_workspace(file);
    auto const& A = pick_act(w, act);
    if (kind == "subacts") {
      if (oracle) {
        throw UsageError("--oracle applies to congruence lattices only");
      }
      auto                     subs = all_subacts(A);
      std::vector<std::string> labels;
      for (auto const& B : subs) {
        labels.push_back(to_string(B.elements));
      }
      print_lattice(chain_report(subs), labels);
      if (!dot.empty()) {
        write_file(dot, subact_lattice_dot(subs));
      }
      return 0;
    }
    auto                     cons = all_congruences(A);
    std::vector<std::string> labels;
    for (auto const& rho : cons) {
      labels.push_back(to_string(rho));
    }
    bool agrees = true;
    if (oracle) {
      auto other = all_congruences(A, CongruenceMethod::oracle);
      agrees     = other == cons;
    }
    if (json_mode) {
      json j        = to_json(chain_report(cons));
      j["elements"] = labels;
      if (oracle) {
        j["oracle_agrees"] = agrees;
      }
      emit(j);
    } else {
      print_lattice(chain_report(cons), labels);
      if (oracle) {
        std::cout << "oracle    " << (agrees ? "agrees" : "DISAGREES") << "\n";
      }
    }
    if (!dot.empty()) {
      write_file(dot, congruence_lattice_dot(cons));
    }
    return agrees ? 0 : 1;
  }

  json quotient_workspace(Workspace const& w, std::string const& act, RightAct const& Q) {
    Workspace out;
    auto      it = w.act_monoid.find(act.empty() ? w.acts.begin()->first : act);
    if (it != w.act_monoid.end()) {
      out.monoids.emplace(it->second, Q.monoid());
      out.act_monoid.emplace("quotient", it->second);
    }
    out.acts.emplace("quotient", Q);
    return to_json(out);
  }

  int cmd_quotient(std::string const& file,
                   std::string const& act,
                   std::string const& subact,
                   std::string const& congruence) {
    if (subact.empty() == congruence.empty()) {
      throw UsageError("give exactly one of --subact and --congruence");
    }
    auto        w = load_workspace(file);
    auto const& A = pick_act(w, act);
    RightAct    Q = A;
    if (!subact.empty()) {
      auto X = parse_list(subact);
      std::sort(X.begin(), X.end());
      Q = rees_quotient(A, make_subact(A, X)).act;
    } else {
      Q = act_quotient(congruence_from_blocks(A, parse_blocks(congruence))).act;
    }
    emit(quotient_workspace(w, act, Q));
    return 0;
  }

  int cmd_decompose(std::string const& file, std::string const& act, std::string const& mode) {
    auto        w = load_workspace(file);
    auto const& A = pick_act(w, act);
    auto pieces = mode == "zero" ? decompose_zero(A) : decompose_indecomposable(A);
    std::optional<bool> semisimple;
    if (A.monoid().zero()) {
      semisimple = is_semisimple(A);
    }
    json j;
    j["mode"]       = mode;
    j["components"] = json::array();
    for (auto const& p : pieces) {
      j["components"].push_back(p.elements);
    }
    j["semisimple"] = semisimple ? json(*semisimple) : json(nullptr);
    if (json_mode) {
      emit(j);
      return 0;
    }
    std::cout << "components  " << pieces.size() << "\n";
    for (auto const& p : pieces) {
      std::cout << "  " << to_string(p.elements) << "\n";
    }
    std::cout << "semisimple  " << (semisimple ? yes_no(*semisimple) : "n/a") << "\n";
    return 0;
  }

  int cmd_fitting(std::string const& file, std::string const& act, std::string const& endo) {
    auto        w = load_workspace(file);
    auto const& A = pick_act(w, act);
    auto        f = act_hom(A, A, parse_list(endo));
    auto        r = fitting_analysis(A, f);
    emit(to_json(r));
    return r.direct_sum_holds ? 0 : 1;
  }

  int cmd_series(std::string const& file, std::string const& act, std::string const& chain) {
    auto        w     = load_workspace(file);
    auto const& A     = pick_act(w, act);
    auto        steps = series_report(A, parse_blocks(chain));
    bool        ok    = true;
    json        j     = json::array();
    for (auto const& st : steps) {
      ok = ok && st.verified;
      j.push_back(json{{"factor", to_json(st.factor, "")},
                       {"f", st.ses.f.map},
                       {"g", st.ses.g.map},
                       {"verified", st.verified}});
    }
    if (json_mode) {
      emit(j);
    } else {
      std::cout << "steps  " << steps.size() << "\n";
      for (size_t i = 0; i < steps.size(); ++i) {
        std::cout << "  " << i + 1 << "  factor size " << steps[i].factor.size()
                  << "  exact " << yes_no(steps[i].verified) << "\n";
      }
    }
    return ok ? 0 : 1;
  }

  int cmd_verify(std::string const& suite, VerifyConfig const& cfg, std::string const& replay) {
    VerificationReport r;
    if (replay.empty()) {
      r = verify_suite(suite, cfg);
    } else {
      std::ifstream in(replay);
      if (!in) {
        fail(ErrorKind::InvalidInput, "cannot open " + replay);
      }
      json j;
      try {
        j = json::parse(in);
      } catch (json::parse_error const& e) {
        fail(ErrorKind::InvalidInput, replay + ": " + e.what());
      }
      // a whole report, a list of failure records, or a single instance
      std::vector<Instance> instances;
      if (j.is_object() && j.contains("failures")) {
        j = j["failures"];
      }
      if (j.is_object()) {
        j = json::array({j});
      }
      for (auto const& x : j) {
        instances.push_back(instance_from_json(x.contains("instance") ? x["instance"] : x));
      }
      r.suite = suite;
      r.seed  = cfg.seed;
      r.notes = suite_notes(suite);
      for (size_t i = 0; i < instances.size(); ++i) {
        auto f = check_instance(suite, instances[i], cfg, i);
        r.failures.insert(r.failures.end(), f.begin(), f.end());
      }
      r.instances_tested = instances.size();
      sort_failures(r.failures);
    }
    if (json_mode) {
      emit(to_json(r));
    } else {
      std::cout << to_text(r);
    }
    return r.passed() ? 0 : 1;
  }

  int cmd_gen(std::string const& kind, RandomConfig const& cfg) {
    Workspace w;
    if (kind == "monoid") {
      w.monoids.emplace("S", random_monoid(cfg));
    } else {
      RandomConfig mc = cfg;
      mc.size         = std::max<size_t>(cfg.size, 1);
      auto S          = random_monoid(mc);
      w.monoids.emplace("S", S);
      RandomConfig ac = cfg;
      ac.seed         = cfg.seed + 1;
      ac.with_zero    = false;
      w.acts.emplace("A", random_act(S, ac));
      w.act_monoid.emplace("A", "S");
    }
    w.metadata = json{{"seed", cfg.seed}, {"size", cfg.size}, {"kind", kind}};
    emit(to_json(w));
    return 0;
  }

  int cmd_builtin(std::string const& family, size_t n) {
    if (family != "min-monoid") {
      throw UsageError("unknown family \"" + family + "\"");
    }
    if (n == 0) {
      throw UsageError("--n must be positive");
    }
    Workspace   w;
    std::string name = "min" + std::to_string(n);
    w.monoids.emplace(name, min_monoid_with_identity(n));
    w.acts.emplace("K", min_monoid_ideal_act(n));
    w.act_monoid.emplace("K", name);
    w.metadata = json{{"family", family}, {"n", n}};
    emit(to_json(w));
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"actlat: finite monoid acts, congruence lattices and chain conditions"};
  app.require_subcommand(1);
  app.add_flag("--json", json_mode, "JSON on stdout, and error records on stderr");

  std::string file, act, kind = "congruences", dot, subact, congruence, mode = "plain",
                         endo, chain, suite, replay, family = "min-monoid";
  bool        oracle = false;
  size_t      n      = 1;
  VerifyConfig vcfg;
  RandomConfig rcfg;
  std::string  gen_kind;

  auto* validate = app.add_subcommand("validate", "load a workspace and classify everything");
  validate->add_option("file", file, "workspace JSON")->required();

  auto* lattice = app.add_subcommand("lattice", "congruence or subact lattice report");
  lattice->add_option("file", file, "workspace JSON")->required();
  lattice->add_option("--act", act, "act name");
  lattice->add_option("--kind", kind)->check(CLI::IsMember({"congruences", "subacts"}));
  lattice->add_option("--dot", dot, "write the Hasse diagram to this file");
  lattice->add_flag("--oracle", oracle, "cross-check against partition enumeration");

  auto* quotient = app.add_subcommand("quotient", "Rees quotient or quotient by a congruence");
  quotient->add_option("file", file)->required();
  quotient->add_option("--act", act);
  quotient->add_option("--subact", subact, "elements, e.g. 0,1");
  quotient->add_option("--congruence", congruence, "blocks, e.g. 0,1|2");

  auto* decompose = app.add_subcommand("decompose", "indecomposable or zero decomposition");
  decompose->add_option("file", file)->required();
  decompose->add_option("--act", act);
  decompose->add_option("--mode", mode)->check(CLI::IsMember({"plain", "zero"}));

  auto* fitting = app.add_subcommand("fitting", "Fitting analysis of an endomorphism");
  fitting->add_option("file", file)->required();
  fitting->add_option("--act", act);
  fitting->add_option("--endo", endo, "images, e.g. 0,1,1")->required();

  auto* series = app.add_subcommand("series", "Rees factors of a chain of subacts");
  series->add_option("file", file)->required();
  series->add_option("--act", act);
  series->add_option("--chain", chain, "members, e.g. 0|0,1|0,1,2")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required();
  verify->add_option("--seed", vcfg.seed);
  verify->add_option("--instances", vcfg.instances);
  verify->add_option("--max-act", vcfg.max_act)->check(CLI::Range(1, 7));
  verify->add_option("--max-monoid", vcfg.max_monoid)->check(CLI::Range(1, 4));
  verify->add_option("--replay", replay, "failure records to re-check");

  auto* gen = app.add_subcommand("gen", "random monoid or act");
  gen->add_option("--kind", gen_kind)->required()->check(CLI::IsMember({"monoid", "act"}));
  gen->add_option("--seed", rcfg.seed)->required();
  gen->add_option("--size", rcfg.size)->required()->check(CLI::Range(1, 64));
  gen->add_flag("--commutative", rcfg.commutative);
  gen->add_flag("--with-zero", rcfg.with_zero);

  auto* builtin = app.add_subcommand("builtin", "built-in families");
  builtin->add_option("--family", family)->required();
  builtin->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    print_error("Usage", e.what());
    return 2;
  }

  try {
    if (*validate) {
      return cmd_validate(file);
    } else if (*lattice) {
      return cmd_lattice(file, act, kind, dot, oracle);
    } else if (*quotient) {
      return cmd_quotient(file, act, subact, congruence);
    } else if (*decompose) {
      return cmd_decompose(file, act, mode);
    } else if (*fitting) {
      return cmd_fitting(file, act, endo);
    } else if (*series) {
      return cmd_series(file, act, chain);
    } else if (*verify) {
      return cmd_verify(suite, vcfg, replay);
    } else if (*gen) {
      return cmd_gen(gen_kind, rcfg);
    } else if (*builtin) {
      return cmd_builtin(family, n);
    }
  } catch (UsageError const& e) {
    print_error("Usage", e.what());
    return 2;
  } catch (Error const& e) {
    print_error(std::string(error_kind_name(e.kind())), e.what());
    return exit_code(e.kind());
  } catch (json::exception const& e) {
    print_error("InvalidInput", e.what());
    return 1;
  }
  return 2;
}
