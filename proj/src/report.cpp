#include "gaha/report.hpp"

#include <sstream>

namespace gaha {

std::string SystemSpec::name() const {
  std::string s = twist > 1 ? std::to_string(twist) : "";
  return s + type + std::to_string(rank);
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(std::string name, bool pass, Json witness) {
  checks.push_back({std::move(name), pass, std::move(witness)});
}

Json VerificationReport::to_json(bool with_timing) const {
  Json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["system"] = system_json(system);
  j["passed"] = passed();
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    e["witness"] = c.witness;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  if (!skipped.empty()) j["skipped"] = skipped;
  if (with_timing) j["seconds"] = seconds;
  return j;
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << suite << "/" << system.name() << "/" << c.name;
    if (!c.pass || !c.witness.empty()) os << ": " << c.witness.dump();
    os << "\n";
  }
  for (const auto& s : skipped) os << "SKIP " << suite << "/" << system.name() << "/" << s << "\n";
  return os.str();
}

void VerificationReport::skip(const std::string& name, const std::string& why) { skipped.push_back(name + ": " + why); }

Json rat_json(const Q& x) { return qstr(x); }

Json qvec_json(const QVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(qstr(x));
  return j;
}

Json mat_json(const Mat& m) {
  Json j = Json::array();
  for (int i = 0; i < m.r; ++i) j.push_back(qvec_json(m.row(i)));
  return j;
}

Json module_json(const FiniteModule& M) {
  Json j;
  j["label"] = M.label;
  j["levi"] = subset_str(M.J);
  j["dim"] = M.dim;
  Json g = Json::object();
  for (const auto& [i, m] : M.gens) g["s" + std::to_string(i + 1)] = mat_json(m);
  j["generators"] = std::move(g);
  Json e = Json::array();
  for (const auto& m : M.eps) e.push_back(mat_json(m));
  j["eps"] = std::move(e);
  if (M.phi) j["intertwiner"] = mat_json(*M.phi);
  return j;
}

Json system_json(const SystemSpec& s) {
  Json j;
  j["type"] = std::string(1, s.type);
  j["rank"] = s.rank;
  j["delta_order"] = s.twist;
  j["k"] = qvec_json(s.k);
  j["degree_cap"] = s.N;
  return j;
}

Json classes_json(const std::string& type, const TwistedClasses& tc, const StableSubsets& ss) {
  const WeylGroup& W = tc.group();
  Json rows = Json::array();
  for (const auto& c : tc.classes()) {
    ClassIndexData ci = class_index(tc, ss, c.id, 0);
    Json r;
    r["id"] = c.id;
    r["size"] = c.size();
    r["elliptic"] = c.elliptic;
    r["char_poly"] = qvec_json(c.char_poly);
    r["l_vector"] = c.length_vector;
    r["min_word"] = W.word_str(c.min_rep);
    r["J_C"] = subset_str(ci.J);
    r["w_C_word"] = W.word_str(ci.w);
    r["min_length"] = c.min_length;
    r["num_minimal"] = c.min_elements.size();
    rows.push_back(std::move(r));
  }
  Json j;
  j["type"] = type;
  j["delta_order"] = tc.delta().order;
  j["classes"] = std::move(rows);
  return j;
}

}  // namespace gaha
