#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chazy/catalog.hpp"
#include "chazy/geometry.hpp"
#include "chazy/series.hpp"

namespace chazy {

/// Birational map between registered systems (or scalar ODEs via their jet
/// systems), with an action on parameters.
struct BiMap {
  std::string name;
  std::string source, target;             // catalog names
  std::vector<RatFun> forward;            // over source vars, one per target state
  std::vector<RatFun> inverse;            // over target vars (may be empty)
  std::map<std::string, RatFun> param_action;  // target param -> expr in source params
  bool time_dependent = false;
  std::string note;
};

/// Scalar Backlund transformation u -> expr(u, u', u''; params).
struct ScalarBT {
  std::string name;
  std::string source, target;             // scalar ODE catalog names
  RatFun forward;                         // over source jet vars
  std::map<std::string, RatFun> param_action;
  std::string note;
};

class MapRegistry {
 public:
  static const MapRegistry& instance();
  std::vector<std::string> names() const;
  std::vector<std::string> scalar_names() const;
  std::vector<std::string> chart_group_names() const;
  const BiMap& map(const std::string& name) const;
  const ScalarBT& scalar(const std::string& name) const;
  const std::vector<Chart>& charts(const std::string& group) const;
  bool has_map(const std::string& name) const;
  bool has_scalar(const std::string& name) const;
  bool has_charts(const std::string& group) const;

 private:
  MapRegistry();
  std::map<std::string, BiMap> maps_;
  std::map<std::string, ScalarBT> scalars_;
  std::map<std::string, std::vector<Chart>> charts_;
};

struct CheckReport {
  bool ok = false;
  std::string witness;
};

/// J(forward) . f_src == f_tgt(forward) with parameters mapped, as an exact
/// identity (time derivative term added for time-dependent maps).
CheckReport pushforward_check(const BiMap& m);

/// Round-trip inverse(forward) == id.
CheckReport roundtrip_check(const BiMap& m);

/// Scalar BT verified on the jet: prolong twice, substitute the source rhs,
/// compare against the target rhs. series mode pushes a Taylor jet instead.
enum class BtMode { exact_jet, series };
CheckReport bt_check(const ScalarBT& m, BtMode mode = BtMode::exact_jet);

/// det J(forward) == 1 exactly.
CheckReport unimodular_check(const std::vector<RatFun>& forward, const VarsPtr& vars,
                             const std::vector<int>& state_indices);
CheckReport unimodular_check_chart(const Chart& chart, int dim);

struct HolomorphyReport {
  bool all_polynomial = false;
  std::vector<bool> per_chart;
  std::vector<std::string> witnesses;
};

/// Transformed field polynomial in every chart of the group.
HolomorphyReport holomorphy_check(const SystemDef& sys, const std::vector<Chart>& charts);
/// Same for a Pfaffian pair (both direction fields must stay polynomial).
HolomorphyReport holomorphy_check(const PfaffianDef& p, const std::vector<Chart>& charts);

/// Compatibility bracket J(f).g - J(g).f == 0 for an autonomous Pfaffian pair.
CheckReport compatibility_check(const PfaffianDef& p);

/// grad(I) . field == 0 exactly.
CheckReport first_integral_check(const SystemDef& sys, const RatFun& integral);

/// field == (dH/dp, -dH/dq) for 2-dim canonical systems (q = state 0).
CheckReport hamiltonian_check(const MPoly& H, const SystemDef& sys);

/// Word in registered maps; checks composition == identity or == named map
/// including the parameter actions.
struct RelationWord {
  std::string name;
  std::vector<std::string> factors;     // applied left to right
  std::string expected;                 // "" = identity, else map name
  std::string on_system;                // catalog name fixing the var table
};
CheckReport relation_check(const RelationWord& w);

/// Jet-series elimination check: sample Taylor solutions of sys, evaluate
/// var_exprs along them, assert the claimed reduced system/ODE annihilates
/// the resulting series through order N.
CheckReport elimination_check(const SystemDef& sys, const std::vector<RatFun>& var_exprs,
                              const SystemDef& claimed, int N, unsigned seed = 1,
                              const std::map<std::string, RatFun>* bind_integral = nullptr);
CheckReport elimination_check_ode(const SystemDef& sys, const RatFun& var_expr,
                                  const ScalarODE& claimed, int N, unsigned seed = 1);

/// Fixed fixture: x = -X'/X turns the App B Riccati into the stated linear
/// second-order equation; mutate flips a sign to probe the failure path.
CheckReport riccati_reduce_check(bool mutate = false);

/// Recovery of the Chazy X system from its holomorphy data: the space of
/// cubic fields kept polynomial by both charts is one-dimensional and spanned
/// by the catalog field (checked at a fixed rational alpha).
CheckReport x_recovery_check(const QuadExt& alpha_value);

/// First integrals shipped with the catalog, keyed by system name.
const std::map<std::string, std::string>& registered_integrals();

}  // namespace chazy
