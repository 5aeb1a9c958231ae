#pragma once
// Verification reports and JSON serialization (schema 1). Rationals are
// strings "p/q".

#include "gaha/module.hpp"
#include "gaha/twistconj.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace gaha {

using Json = nlohmann::ordered_json;

struct SystemSpec {
  char type = 'A';
  int rank = 1;
  int twist = 1;       // order of δ
  std::vector<Q> k;    // one value per root-length orbit, long first
  int N = 2;           // degree cap
  std::string name() const;  // e.g. "3D4", "B2"
};

struct Check {
  std::string name;
  bool pass = false;
  Json witness;  // counterexample or evidence; required when pass is false
};

struct VerificationReport {
  std::string suite;
  SystemSpec system;
  std::vector<Check> checks;
  std::vector<std::string> skipped;  // checks not evaluable on this system, with the reason
  double seconds = 0;

  bool passed() const;
  void add(std::string name, bool pass, Json witness = Json::object());
  void skip(const std::string& name, const std::string& why);
  Json to_json(bool with_timing = true) const;
  // One line per check: "PASS name" or "FAIL name: witness".
  std::string text() const;
};

Json rat_json(const Q& x);
Json qvec_json(const QVec& v);
Json mat_json(const Mat& m);
Json module_json(const FiniteModule& M);
Json system_json(const SystemSpec& s);
// {type, delta_order, classes: [{size, elliptic, char_poly, l_vector, min_word, J_C, w_C_word, ...}]}
Json classes_json(const std::string& type, const TwistedClasses& tc, const StableSubsets& ss);

}  // namespace gaha
