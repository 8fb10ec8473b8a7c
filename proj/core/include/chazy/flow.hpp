#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chazy/catalog.hpp"

namespace chazy {

struct PathSpec {
  std::vector<CScalar> waypoints;   // straight segments between consecutive points
};

struct IntegratorConfig {
  double rtol = 1e-10;
  double atol = 1e-12;
  double h_init = 1e-3;
  double h_min = 1e-12;
  long max_steps = 2'000'000;
};

struct Trajectory {
  std::vector<CScalar> times;
  std::vector<std::vector<CScalar>> states;
  bool pole_detected = false;
  CScalar pole_estimate{0, 0};
  bool max_steps_exceeded = false;
  long steps_accepted = 0;
  long steps_rejected = 0;
};

/// Adaptive embedded Dormand-Prince 5(4) over complex state along the path.
Trajectory integrate(const SystemDef& sys, const std::vector<CScalar>& ic,
                     const PathSpec& path, const IntegratorConfig& cfg,
                     const std::map<std::string, CScalar>& param_values = {});

/// Max |I(state) - I(state_0)| over the trajectory samples.
double drift(const Trajectory& traj, const SystemDef& sys, const RatFun& integral,
             const std::map<std::string, CScalar>& param_values = {});

/// Closed-form solution ansatz. Components are rational in the generator
/// symbols; for hyperbolic/trigonometric kinds the symbol w stands for
/// tanh(theta) (w' = k (1 - w^2)) or tan(theta) (w' = k (1 + w^2)), and the
/// rates give dtheta/dt (and dtheta/ds for Pfaffian targets).
struct AnsatzSolution {
  enum class Kind { rational_in_t, hyperbolic, trigonometric };
  std::string name;
  Kind kind = Kind::rational_in_t;
  VarsPtr gen_vars;                     // (t, w, params...) or (t, params...)
  std::vector<RatFun> components;       // one per target state variable
  RatFun rate_t;                        // dtheta/dt in params (unused for rational)
  RatFun rate_s;                        // dtheta/ds (Pfaffian only)
  std::map<std::string, RatFun> param_values;  // target param -> expr in gen params
  std::string note;
};

struct AnsatzReport {
  bool exact = false;
  bool ok = false;
  double max_residual = 0.0;
  std::string witness;
};

/// Substitute the ansatz into the field equations and reduce exactly.
AnsatzReport ansatz_residual(const SystemDef& sys, const AnsatzSolution& sol);
AnsatzReport ansatz_residual(const PfaffianDef& p, const AnsatzSolution& sol);

/// Numeric residual of a concrete solution map t (,s) -> state.
struct NumericSolution {
  std::function<std::vector<CScalar>(CScalar t, CScalar s)> state;
  std::map<std::string, CScalar> param_values;
};
double numeric_residual(const SystemDef& sys, const NumericSolution& sol,
                        const std::vector<CScalar>& ts, double h = 1e-5);
double numeric_residual(const PfaffianDef& p, const NumericSolution& sol,
                        const std::vector<std::pair<CScalar, CScalar>>& tss, double h = 1e-5);

/// Registered closed-form solutions keyed by claim id.
struct SolutionFixture {
  std::string id;
  std::string system;                 // catalog name (SystemDef or Pfaffian)
  bool exact;                         // exact path vs numeric-only
  std::function<AnsatzReport()> run;
};
const std::vector<SolutionFixture>& solution_fixtures();

}  // namespace chazy
