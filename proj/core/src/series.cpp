#include "chazy/series.hpp"

#include <algorithm>
#include <set>

#include "chazy/geometry.hpp"

namespace chazy {

namespace {

void require_bound(const SystemDef& sys) {
  if (!sys.params.empty())
    throw std::invalid_argument(sys.name + ": bind parameters before series analysis");
}

long ambient_d_of(const SystemDef& sys) {
  std::set<long> ds;
  for (const auto& f : sys.field)
    for (const auto& [e, c] : f.num().terms())
      if (c.d() != 0) ds.insert(c.d());
  return ds.size() == 1 ? *ds.begin() : 0;
}

int weighted_degree(const Expo& e, const std::vector<int>& m, int dim) {
  int w = 0;
  for (int i = 0; i < dim; ++i) w += e[i] * m[i];
  return w;
}

MPoly weighted_slice(const MPoly& f, const std::vector<int>& m, int dim, int w) {
  MPoly out(f.vars());
  for (const auto& [e, c] : f.terms())
    if (weighted_degree(e, m, dim) == w) out.add_term(e, c);
  return out;
}

bool has_superdominant(const MPoly& f, const std::vector<int>& m, int dim, int w) {
  for (const auto& [e, c] : f.terms())
    if (weighted_degree(e, m, dim) > w) return true;
  return false;
}

std::vector<MPoly> polynomial_field(const SystemDef& sys) {
  std::vector<MPoly> out;
  for (const auto& f : sys.field) {
    auto p = f.as_polynomial();
    if (!p) throw std::invalid_argument(sys.name + ": polynomial field required");
    out.push_back(*p);
  }
  return out;
}

std::vector<PSeries> full_series_point(const SystemDef& sys, const std::vector<PSeries>& states,
                                       const QuadExt& t0, int acc) {
  std::vector<PSeries> pt(sys.vars->size(), PSeries::zero(acc));
  for (int i = 0; i < sys.dim; ++i) pt[i] = states[i];
  int ti = sys.time_index();
  if (ti >= 0) pt[ti] = PSeries::constant(t0, acc) + PSeries::tau_power(1, acc);
  return pt;
}

}  // namespace

std::vector<Balance> dominant_balances(const SystemDef& sys, int max_order) {
  require_bound(sys);
  auto field = polynomial_field(sys);
  int n = sys.dim;
  long ambient_d = ambient_d_of(sys);

  // candidate gradings: every m in [1, max_order]^n whose components see no
  // superdominant term (those gradings have no consistent recursion)
  std::vector<std::vector<int>> grids;
  std::vector<int> m(n, 1);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (has_superdominant(field[i], m, n, m[i] + 1)) ok = false;
    if (ok) grids.push_back(m);
    int pos = n - 1;
    while (pos >= 0 && m[pos] == max_order) m[pos--] = 1;
    if (pos < 0) break;
    ++m[pos];
  }

  std::vector<Balance> out;
  auto have = [&](const Balance& b) {
    for (const auto& o : out)
      if (o.pole_orders == b.pole_orders && o.leading == b.leading) return true;
    return false;
  };
  for (const auto& mm : grids) {
    std::vector<MPoly> eqs;
    for (int i = 0; i < n; ++i) {
      MPoly s = weighted_slice(field[i], mm, n, mm[i] + 1);
      MPoly lin = MPoly::var(sys.vars, i).scaled(QuadExt(mm[i]));
      eqs.push_back(lin + s);
    }
    std::vector<int> unknowns(n);
    for (int i = 0; i < n; ++i) unknowns[i] = i;
    auto sols = solve_poly_system(sys.vars, eqs, unknowns, ambient_d);
    for (const auto& sol : sols.solutions) {
      std::vector<QuadExt> lead(sol.begin(), sol.begin() + n);
      if (std::all_of(lead.begin(), lead.end(), [](const QuadExt& c) { return c.is_zero(); }))
        continue;
      Balance b{mm, lead};
      if (have(b)) continue;
      int probe = *std::max_element(mm.begin(), mm.end());
      try {
        laurent_extend(sys, b, QuadExt(0), {}, probe);
      } catch (const ObstructionError&) {
        continue;  // grading artifact or immediate log branch
      }
      out.push_back(std::move(b));
    }
  }
  return out;
}

KowalevskiData kowalevski(const SystemDef& sys, const Balance& b) {
  require_bound(sys);
  auto field = polynomial_field(sys);
  int n = sys.dim;
  std::vector<QuadExt> pt(sys.vars->size(), QuadExt(0));
  for (int i = 0; i < n; ++i) pt[i] = b.leading[i];
  KowalevskiData kd;
  kd.matrix.assign(n, QVector(n, QuadExt(0)));
  for (int i = 0; i < n; ++i) {
    MPoly s = weighted_slice(field[i], b.pole_orders, n, b.pole_orders[i] + 1);
    for (int j = 0; j < n; ++j) kd.matrix[i][j] = s.derivative(j).eval(pt);
    kd.matrix[i][i] += QuadExt(b.pole_orders[i]);
  }
  kd.degenerate = qmat_det(kd.matrix).is_zero();
  auto roots = upoly_roots(char_poly(kd.matrix), ambient_d_of(sys));
  kd.resonances = roots.exact;
  kd.resonances_c = roots.numeric;
  std::sort(kd.resonances.begin(), kd.resonances.end());
  return kd;
}

LaurentSolution laurent_extend(const SystemDef& sys, const Balance& b, const QuadExt& t0,
                               const FreeValues& free_values, int N) {
  require_bound(sys);
  auto field = polynomial_field(sys);
  int n = sys.dim;
  auto kd = kowalevski(sys, b);

  LaurentSolution sol;
  sol.pole_orders = b.pole_orders;
  sol.t0_exact = t0;
  sol.t0 = t0.to_complex();
  sol.truncation = N;
  std::vector<PSeries> x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = PSeries::zero(N + 1 - b.pole_orders[i]);
    x[i].set_coeff(-b.pole_orders[i], b.leading[i]);
  }

  for (int k = 1; k <= N; ++k) {
    auto pt = full_series_point(sys, x, t0, N + 2);
    QVector rhs(n, QuadExt(0));
    for (int i = 0; i < n; ++i) {
      PSeries resid = x[i].derivative() - eval_series(field[i], pt);
      rhs[i] = -resid.coeff(k - b.pole_orders[i] - 1);
    }
    QMatrix M(n, QVector(n, QuadExt(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        M[i][j] = -kd.matrix[i][j];
        if (i == j) M[i][j] += QuadExt(k);
      }
    auto lin = solve_linear(M, rhs);
    if (!lin) throw ObstructionError(k);
    QVector ck = lin->particular;
    if (!lin->nullspace.empty()) {
      FreeSlot slot;
      slot.order = k;
      for (const auto& v : lin->nullspace)
        for (int j = 0; j < n; ++j)
          if (!v[j].is_zero() &&
              std::find(slot.candidates.begin(), slot.candidates.end(), j) ==
                  slot.candidates.end())
            slot.candidates.push_back(j);
      for (const auto& v : lin->nullspace) {
        int rep = -1;
        QuadExt want(0);
        for (int j = 0; j < n; ++j) {
          auto it = free_values.find({k, j});
          if (it != free_values.end() && !v[j].is_zero()) {
            rep = j;
            want = it->second;
            break;
          }
        }
        if (rep < 0) {
          for (int j = 0; j < n; ++j)
            if (!v[j].is_zero()) { rep = j; break; }
        }
        if (rep < 0) continue;
        QuadExt s = (want - ck[rep]) / v[rep];
        for (int j = 0; j < n; ++j) ck[j] += s * v[j];
        slot.variable = rep;
      }
      sol.free_params.push_back(slot);
    }
    for (int i = 0; i < n; ++i)
      if (!ck[i].is_zero()) x[i].set_coeff(k - b.pole_orders[i], ck[i]);
  }
  sol.series = std::move(x);
  // self oracle: every produced solution must annihilate the field through
  // the computed window
  auto rr = series_residual(sol, sys);
  if (!rr.exact_zero)
    throw std::logic_error("laurent_extend: self-check failed: " + rr.witness);
  return sol;
}

LaurentSolution jet_taylor(const SystemDef& sys, const std::vector<QuadExt>& ic,
                           const QuadExt& t0, int N) {
  require_bound(sys);
  int n = sys.dim;
  LaurentSolution sol;
  sol.pole_orders.assign(n, 0);
  sol.t0_exact = t0;
  sol.t0 = t0.to_complex();
  sol.truncation = N;
  std::vector<PSeries> x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = PSeries::zero(N + 1);
    x[i].set_coeff(0, ic.at(i));
  }
  for (int k = 0; k < N; ++k) {
    auto pt = full_series_point(sys, x, t0, N + 1);
    for (int i = 0; i < n; ++i) {
      PSeries fi = eval_series(sys.field[i], pt);  // throws when den vanishes at ic
      QuadExt c = fi.coeff(k) / QuadExt(k + 1);
      if (!c.is_zero()) x[i].set_coeff(k + 1, c);
    }
  }
  sol.series = std::move(x);
  return sol;
}

ResidualReport series_residual(const LaurentSolution& sol, const SystemDef& target) {
  require_bound(target);
  ResidualReport rep;
  auto pt = full_series_point(target, sol.series, sol.t0_exact, sol.truncation + 2);
  int through = INT32_MAX;
  for (int i = 0; i < target.dim; ++i) {
    PSeries den = eval_series(target.field[i].den(), pt);
    if (den.known_zero()) {
      rep.exact_zero = false;
      rep.witness = "denominator of component " + std::to_string(i) +
                    " vanishes identically along the solution";
      return rep;
    }
    PSeries resid = sol.series[i].derivative() * den - eval_series(target.field[i].num(), pt);
    through = std::min(through, resid.acc());
    if (!resid.known_zero()) {
      rep.exact_zero = false;
      rep.witness = "component " + std::to_string(i) + ": residual " + resid.str();
    }
  }
  rep.checked_through = through;
  return rep;
}

ResidualReport series_residual(const std::vector<PSeries>& jets, const ScalarODE& target) {
  ResidualReport rep;
  if (static_cast<int>(jets.size()) != target.order + 1)
    throw std::invalid_argument("series_residual: need jets u, u', ..., u^(order)");
  int acc = jets.front().acc();
  for (const auto& j : jets) acc = std::min(acc, j.acc());
  std::vector<PSeries> pt(target.vars->size(), PSeries::zero(acc));
  for (int i = 0; i <= target.order - 1; ++i) pt[i] = jets[i];
  if (auto ti = target.vars->find("t")) pt[*ti] = PSeries::tau_power(1, acc);
  PSeries den = eval_series(target.rhs.den(), pt);
  if (den.known_zero()) {
    rep.exact_zero = false;
    rep.witness = "denominator vanishes identically along the solution";
    return rep;
  }
  PSeries resid = jets[target.order] * den - eval_series(target.rhs.num(), pt);
  rep.checked_through = resid.acc();
  if (!resid.known_zero()) {
    rep.exact_zero = false;
    rep.witness = "residual " + resid.str();
  }
  return rep;
}

ResidualReport series_residual(const LaurentSolution& sol, const ScalarODE& target, int var) {
  std::vector<PSeries> jets;
  PSeries cur = sol.series.at(var);
  for (int k = 0; k <= target.order; ++k) {
    jets.push_back(cur);
    cur = cur.derivative();
  }
  return series_residual(jets, target);
}

}  // namespace chazy
