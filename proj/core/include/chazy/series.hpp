#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chazy/catalog.hpp"
#include "chazy/linalg.hpp"
#include "chazy/pseries.hpp"

namespace chazy {

/// Dominant balance x_i ~ leading_i * tau^(-m_i); zero leading entries mark
/// branches where the variable enters at a higher order.
struct Balance {
  std::vector<int> pole_orders;
  std::vector<QuadExt> leading;
};

struct KowalevskiData {
  QMatrix matrix;
  std::vector<QuadExt> resonances;        // exact eigenvalues
  std::vector<CScalar> resonances_c;      // numeric leftovers
  bool degenerate = false;
};

struct FreeSlot {
  int order = 0;        // tau-power grid index k (coefficient c_{.,k})
  int variable = -1;    // representative slot (first nonzero null direction)
  std::vector<int> candidates;
};

struct LaurentSolution {
  std::vector<int> pole_orders;
  std::vector<PSeries> series;            // per state variable, in tau = t - t0
  CScalar t0{0.0, 0.0};
  QuadExt t0_exact;
  std::vector<FreeSlot> free_params;
  int truncation = 0;
};

/// All balances with pole orders in [1, max_order]; exact where the leading
/// algebraic system factors, numeric+lift otherwise.
std::vector<Balance> dominant_balances(const SystemDef& sys, int max_order = 6);

KowalevskiData kowalevski(const SystemDef& sys, const Balance& b);

/// Key (k, variable) -> bound coefficient value at a resonance order.
using FreeValues = std::map<std::pair<int, int>, QuadExt>;

/// Extend a balance to a Laurent solution through tau-order N; throws
/// ObstructionError when a resonance compatibility condition fails.
struct ObstructionError : std::runtime_error {
  int order;
  explicit ObstructionError(int k)
      : std::runtime_error("resonance obstruction at order " + std::to_string(k)), order(k) {}
};

LaurentSolution laurent_extend(const SystemDef& sys, const Balance& b,
                               const QuadExt& t0, const FreeValues& free_values, int N);

/// Taylor jet at a regular point (pole-free Laurent solution).
LaurentSolution jet_taylor(const SystemDef& sys, const std::vector<QuadExt>& ic,
                           const QuadExt& t0, int N);

/// Exact residual check of a solution in a system or scalar ODE; returns the
/// largest tau-order that was checked, throwing on nonzero residual is left
/// to callers -- the result reports whether all checked coefficients vanish.
struct ResidualReport {
  bool exact_zero = true;
  int checked_through = 0;           // residual known zero for orders < this
  std::string witness;               // first offending coefficient
};

ResidualReport series_residual(const LaurentSolution& sol, const SystemDef& target);
ResidualReport series_residual(const std::vector<PSeries>& jets, const ScalarODE& target);
ResidualReport series_residual(const LaurentSolution& sol, const ScalarODE& target, int var);

}  // namespace chazy
