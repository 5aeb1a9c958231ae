// gaha: twisted conjugacy classes, cocenter dimensions and verification
// suites for graded affine Hecke algebras with a diagram automorphism.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include "gaha/suites.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

using namespace gaha;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string type, twist = "auto", k;
  int deg = 2;
  bool json = false, timing = false, parallel = false;
  unsigned seed = 0;
};

SystemSpec parse_spec(const Common& c) {
  static const std::regex re("([A-G])([0-9]+)");
  std::smatch m;
  if (!std::regex_match(c.type, m, re)) throw UsageError("--type: expected a name like A2, B3, D4, F4, G2");
  SystemSpec s;
  s.type = m[1].str()[0];
  s.rank = std::stoi(m[2].str());
  if (c.twist == "auto") s.twist = 1;
  else if (c.twist == "1" || c.twist == "2" || c.twist == "3") s.twist = std::stoi(c.twist);
  else throw UsageError("--twist: expected auto, 1, 2 or 3");
  if (!c.k.empty()) {
    std::stringstream ss(c.k);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        Q v(item);
        v.canonicalize();
        s.k.push_back(v);
      } catch (const std::invalid_argument&) {
        throw UsageError("--k: bad rational '" + item + "'");
      }
    }
  }
  if (c.deg < 0) throw UsageError("--deg must be >= 0");
  s.N = c.deg;
  return s;
}

std::unique_ptr<System> build(const Common& c) {
  SystemSpec s = parse_spec(c);
  try {
    return make_system(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classes(const Common& c) {
  auto sys = build(c);
  Json t = classes_json(sys->spec.name(), *sys->tc, sys->ss);
  int ne = 0;
  for (const auto& r : t["classes"]) ne += r["elliptic"].get<bool>() ? 1 : 0;
  if (c.json) {
    Json j;
    j["schema"] = 1;
    j["system"] = system_json(sys->spec);
    for (auto& [key, v] : t.items()) j[key] = v;
    j["num_elliptic"] = ne;
    emit(j);
  } else {
    std::printf("%s: %zu twisted classes, %d elliptic\n", sys->spec.name().c_str(), t["classes"].size(), ne);
    std::printf("%4s %6s %4s %5s  %-16s %-10s %s\n", "id", "size", "ell", "lmin", "min_word", "J_C", "w_C");
    for (const auto& r : t["classes"])
      std::printf("%4d %6d %4s %5d  %-16s %-10s %s\n", r["id"].get<int>(), r["size"].get<int>(),
                  r["elliptic"].get<bool>() ? "E" : "-", r["min_length"].get<int>(),
                  r["min_word"].get<std::string>().c_str(), r["J_C"].get<std::string>().c_str(),
                  r["w_C_word"].get<std::string>().c_str());
  }
  return 0;
}

int cmd_cocenter(const Common& c) {
  auto sys = build(c);
  bool ok0 = false, ok1 = false;
  Json at0 = cocenter_summary(*sys->W, constant_params(sys->rs, 0), sys->delta, sys->spec.N, &ok0);
  Json atk = cocenter_summary(*sys->W, sys->k, sys->delta, sys->spec.N, &ok1);
  const bool same = at0["quotient_dim"] == atk["quotient_dim"];
  const bool ok = ok0 && ok1 && same;
  if (c.json) {
    Json j;
    j["schema"] = 1;
    j["system"] = system_json(sys->spec);
    j["total"] = atk["quotient_dim"];
    j["k0"] = at0;
    j["k"] = atk;
    j["k0_equals_k"] = same;
    j["passed"] = ok;
    emit(j);
  } else {
    auto line = [](const char* tag, const Json& s) {
      std::printf("%-6s k=%s: dims by degree %s, new entries %s, total %s (expected %s)\n", tag,
                  s["k"].get<std::string>().c_str(), s["image_dim_by_degree"].dump().c_str(),
                  s["entries_by_degree"].dump().c_str(), s["quotient_dim"].dump().c_str(),
                  s["expected_dim"].dump().c_str());
    };
    std::printf("%s, N=%d\n", sys->spec.name().c_str(), sys->spec.N);
    line("k=0", at0);
    line("given", atk);
    std::printf("total %s, %s\n", atk["quotient_dim"].dump().c_str(), ok ? "pass" : "FAIL");
  }
  return ok ? 0 : 1;
}

int cmd_verify(const Common& c, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) names = {suite};
  else throw UsageError("--suite: unknown suite '" + suite + "'");
  auto sys = build(c);
  SuiteOptions opt;
  opt.seed = c.seed;
  std::vector<VerificationReport> reports(names.size());
  if (c.parallel && names.size() > 1) {
    // ModuleAction caches are per thread, so each suite gets its own System.
    std::vector<std::thread> pool;
    std::vector<std::string> errors(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
      pool.emplace_back([&, i] {
        try {
          auto own = make_system(sys->spec);
          reports[i] = run_suite(names[i], *own, opt);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      });
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (!e.empty()) throw std::runtime_error(e);
  } else {
    for (std::size_t i = 0; i < names.size(); ++i) reports[i] = run_suite(names[i], *sys, opt);
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (c.json) {
    if (reports.size() == 1) {
      emit(reports[0].to_json(c.timing));
    } else {
      Json j;
      j["schema"] = 1;
      j["system"] = system_json(sys->spec);
      j["passed"] = ok;
      Json rs = Json::array();
      for (const auto& r : reports) rs.push_back(r.to_json(c.timing));
      j["reports"] = std::move(rs);
      emit(j);
    }
  } else {
    int n = 0, bad = 0;
    for (const auto& r : reports) {
      std::cout << r.text();
      if (c.timing) std::printf("# %s: %.2fs\n", r.suite.c_str(), r.seconds);
      for (const auto& ch : r.checks) {
        ++n;
        bad += ch.pass ? 0 : 1;
      }
    }
    std::printf("%s: %d checks, %d failed\n", sys->spec.name().c_str(), n, bad);
  }
  return ok ? 0 : 1;
}

void add_common(CLI::App* sub, Common& c, bool with_k) {
  sub->add_option("--type", c.type, "root system, e.g. A2, B3, D4, F4, G2")->required();
  sub->add_option("--twist", c.twist, "order of δ: auto (identity), 1, 2 or 3");
  if (with_k) {
    sub->add_option("--k", c.k, "comma-separated k per root-length orbit, long first");
    sub->add_option("--deg", c.deg, "degree cap N");
  }
  sub->add_flag("--json", c.json, "JSON output (schema 1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaha: graded affine Hecke algebras with diagram automorphisms"};
  app.require_subcommand(1);
  Common c;
  std::string suite = "all";
  auto* classes = app.add_subcommand("classes", "δ-twisted conjugacy classes of W");
  add_common(classes, c, false);
  auto* cocenter = app.add_subcommand("cocenter", "dimension of the truncated twisted cocenter");
  add_common(cocenter, c, true);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, c, true);
  verify->add_option("--suite", suite, "all|classes|basis|density|trace|mackey|clifford|elliptic|explicit");
  verify->add_option("--seed", c.seed, "seed for sampled checks");
  verify->add_flag("--parallel", c.parallel, "run suites in parallel");
  verify->add_flag("--timing", c.timing, "report timings (output is then not byte-reproducible)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    if (*classes) return cmd_classes(c);
    if (*cocenter) return cmd_cocenter(c);
    return cmd_verify(c, suite);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
