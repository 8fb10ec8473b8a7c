#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chazy/mpoly.hpp"

namespace chazy {

/// Named first-order system dx_i/dt = field[i]. The VarTable holds the dim
/// state symbols first, then t when the system is non-autonomous, then the
/// parameter symbols.
struct SystemDef {
  std::string name;
  VarsPtr vars;
  std::vector<RatFun> field;            // one per state variable
  std::vector<std::string> params;
  std::optional<DerivationRules> rules; // auxiliary differential symbols
  int dim = 0;
  bool has_time = false;                // t is a state-adjacent symbol
  std::string note;

  bool is_polynomial() const;
  int time_index() const;               // -1 when autonomous
  std::vector<int> state_indices() const;
  /// Copy with parameters replaced by exact values (by name).
  SystemDef bind(const std::map<std::string, QuadExt>& values) const;
};

/// Scalar ODE u^(order) = rhs(u, u', ..., u^(order-1), t, params).
/// Jet symbols are named u, u1, u2, ...
struct ScalarODE {
  std::string name;
  int order = 0;
  VarsPtr vars;
  RatFun rhs;
  std::vector<std::string> params;
  std::string note;

  ScalarODE bind(const std::map<std::string, QuadExt>& values) const;
};

/// Pair of commuting direction fields: dx_i = f_i dt + g_i ds.
struct PfaffianDef {
  std::string name;
  VarsPtr vars;
  std::vector<MPoly> f, g;
  std::vector<std::string> params;
  int dim = 0;
  std::string note;
};

using CatalogEntry = std::variant<SystemDef, ScalarODE, PfaffianDef>;

class Catalog {
 public:
  static const Catalog& instance();

  std::vector<std::string> names() const;
  bool contains(const std::string& name) const;
  const CatalogEntry& entry(const std::string& name) const;
  const SystemDef& system(const std::string& name) const;
  const ScalarODE& ode(const std::string& name) const;
  const PfaffianDef& pfaffian(const std::string& name) const;

  /// Entry with parameters bound; throws on non-parameter bindings.
  CatalogEntry get(const std::string& name,
                   const std::map<std::string, QuadExt>& bindings = {}) const;

  /// Close matches for error messages.
  std::vector<std::string> suggest(const std::string& name, int max = 5) const;

 private:
  Catalog();
  void add(SystemDef s);
  void add(ScalarODE s);
  void add(PfaffianDef s);
  std::map<std::string, CatalogEntry> entries_;
};

/// First-order jet system of a scalar ODE: states (u, u1, ..., u_{n-1}).
SystemDef jet_system(const ScalarODE& ode);

/// Append t as a state with dt/dt = 1; warning flag when already autonomous.
struct AutonomizeResult {
  SystemDef sys;
  bool was_autonomous = false;
};
AutonomizeResult autonomize(const SystemDef& sys);

/// Derivation rules of the jet prolongation: u -> u1 -> ... -> rhs; t -> 1;
/// params -> 0.
DerivationRules jet_rules(const ScalarODE& ode);

/// Rule tables for the Chazy I coefficient ring (App A): variant selects the
/// direct closure or the higher-derivative closure reduced on the fly.
DerivationRules chazy_I_rules(bool alternative_closure, const VarsPtr& vars);

}  // namespace chazy
