#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chazy/catalog.hpp"
#include "chazy/linalg.hpp"

namespace chazy {

/// Birational chart on the phase space. to_chart maps base coordinates to
/// chart coordinates, from_chart inverts it; boundary_index selects the chart
/// variable whose vanishing cuts the divisor at infinity.
struct Chart {
  std::string name;
  VarsPtr base_vars;                 // symbols of the source system
  VarsPtr chart_vars;                // symbols of the chart copy
  std::vector<RatFun> to_chart;      // over base_vars, one per chart state
  std::vector<RatFun> from_chart;    // over chart_vars, one per base state
  int boundary_index = 0;
  std::string note;

  /// from_chart(to_chart(x)) == x, exactly.
  bool roundtrip_ok(int dim) const;
  /// Substitution images padded with identity on t / parameter symbols.
  std::vector<RatFun> from_chart_image() const;
  std::vector<RatFun> to_chart_image() const;
};

/// Standard projective charts U1..Un for an n-dim affine system plus the
/// pole-order weighted jet chart (1/x, y/x^2, z/x^3, ...).
Chart projective_chart(const SystemDef& sys, int j);
Chart weighted_jet_chart(const SystemDef& sys, const std::vector<int>& weights);
/// Centered affine chart: identity moved by offset (for local analysis).
Chart shifted_chart(const SystemDef& sys, int boundary_index);

/// Vector field expressed in chart coordinates: J(to_chart) . f, then
/// substitute from_chart. One RatFun per chart variable.
std::vector<RatFun> transform_field(const SystemDef& sys, const Chart& chart);

struct AccessiblePoint {
  const Chart* chart = nullptr;
  std::string chart_name;
  std::vector<QuadExt> coords;        // chart state coordinates (exact)
  std::vector<CScalar> coords_c;      // numeric mirror
  bool exact = true;
  std::string multiplicity_note;
};

bool is_accessible(const SystemDef& sys, const Chart& chart,
                   const std::vector<QuadExt>& coords);
bool is_accessible_numeric(const SystemDef& sys, const Chart& chart,
                           const std::vector<CScalar>& coords, double tol = 1e-9);

struct FindOptions {
  bool prefer_exact = true;
  double box = 5.0;
  int grid = 6;
  double newton_tol = 1e-12;
  double dedup_radius = 1e-6;
  long lift_d = 0;                    // ambient sqrt(d) for lifting
  unsigned seed = 1;
};

struct FindResult {
  std::vector<AccessiblePoint> points;
  std::vector<std::string> loci;      // descriptions of 1-dim singular loci
  bool used_fallback = false;         // numeric scan used
};

/// Accessible singular points of sys in one chart (or all standard charts
/// when chart == nullptr, deduplicated projectively).
FindResult find_accessible(const SystemDef& sys, const Chart* chart,
                           const FindOptions& opt = {});

struct LocalIndex {
  std::vector<QuadExt> eigenvalues;     // boundary eigenvalue first when known
  std::vector<CScalar> eigenvalues_c;   // numeric leftovers
  QuadExt boundary;                     // a_11
  bool boundary_known = true;
  bool all_exact = true;
  std::vector<QuadExt> ratios() const;  // (1, a22/a11, ...) -- throws if boundary 0
};

/// Eigenvalues of the linearization of (boundary coord) * (chart field) at an
/// accessible point; the boundary-direction eigenvalue is listed first.
LocalIndex local_index(const SystemDef& sys, const Chart& chart,
                       const std::vector<QuadExt>& coords);

struct RatioCheck {
  bool all_integer = false;
  bool zero_leading = false;          // a_11 == 0
  std::vector<QuadExt> ratios;
};

/// Integer-ratio necessary condition on a local index.
RatioCheck ratio_condition(const LocalIndex& idx);

/// Projective comparison: multisets agree up to one nonzero scalar factor.
bool match_projective(std::vector<QuadExt> computed, std::vector<QuadExt> reference);

/// Exact zero-dimensional solve of a small polynomial system by cascaded
/// univariate / linear-branch elimination. complete == false when the shape
/// resisted (callers fall back to numerics).
struct PolySolutions {
  bool complete = true;
  std::vector<std::vector<QuadExt>> solutions;  // indexed by the full var table
};
PolySolutions solve_poly_system(const VarsPtr& vars, const std::vector<MPoly>& eqs,
                                const std::vector<int>& unknowns, long ambient_d);

}  // namespace chazy
