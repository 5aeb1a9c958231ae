#pragma once
// Verification suites over one (type, δ, k, N) system. Each suite returns a
// report with one entry per check; expected table values live in the tests.

#include "gaha/cocenter.hpp"
#include "gaha/operators.hpp"
#include "gaha/report.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gaha {

struct System {
  SystemSpec spec;
  RootSystem rs;
  std::unique_ptr<WeylGroup> W;
  DiagramAutomorphism delta;
  ParamFunction k;
  std::unique_ptr<HeckeAlgebra> H;
  std::unique_ptr<TwistedClasses> tc;
  StableSubsets ss;
};

// Throws std::invalid_argument on a bad type, twist or parameter list. An
// empty k means k = 1 on every orbit.
std::unique_ptr<System> make_system(SystemSpec spec);

struct SuiteOptions {
  unsigned seed = 0;
};

// classes, basis, density, trace, mackey, clifford, elliptic, explicit
const std::vector<std::string>& suite_names();
VerificationReport run_suite(const std::string& name, System& sys, const SuiteOptions& opt = {});

VerificationReport suite_classes(System& sys);
VerificationReport suite_basis(System& sys);
VerificationReport suite_density(System& sys, const SuiteOptions& opt);
VerificationReport suite_trace(System& sys, const SuiteOptions& opt);
VerificationReport suite_mackey(System& sys, const SuiteOptions& opt);
VerificationReport suite_clifford(System& sys, const SuiteOptions& opt);
VerificationReport suite_elliptic(System& sys);
VerificationReport suite_explicit(System& sys);

// Pieces shared with the tests.
FiniteModule sign_lift(const HeckeAlgebra& H, Subset J);
// ν with ν(α_j) = 0 for j ∈ J, constant on δ-orbits when stable is set.
QVec random_nu(const HeckeAlgebra& H, Subset J, bool stable, std::mt19937& rng);
// Cocenter dimensions at parameter k: quotient vs expected, unit coordinates.
Json cocenter_summary(const WeylGroup& W, const ParamFunction& k, const DiagramAutomorphism& delta, int N,
                      bool* ok = nullptr);
// δ-twisted classes of W_J made of δ-elliptic elements of W_J, as member lists.
std::vector<std::vector<int>> elliptic_classes_in(const TwistedClasses& tc, Subset J);

}  // namespace gaha
