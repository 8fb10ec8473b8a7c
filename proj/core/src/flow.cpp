#include "chazy/flow.hpp"

#include <algorithm>
#include <cmath>

namespace chazy {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920, E5 = -17253.0 / 339200,
                 E6 = 22.0 / 525, E7 = -1.0 / 40;

using CVec = std::vector<CScalar>;

CVec axpy(const CVec& y, double h, const CScalar& dir, std::initializer_list<std::pair<double, const CVec*>> ks) {
  CVec out = y;
  for (const auto& [c, k] : ks)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += h * dir * c * (*k)[i];
  return out;
}

}  // namespace

Trajectory integrate(const SystemDef& sys, const std::vector<CScalar>& ic, const PathSpec& path,
                     const IntegratorConfig& cfg,
                     const std::map<std::string, CScalar>& param_values) {
  if (path.waypoints.size() < 2) throw std::invalid_argument("integrate: need >= 2 waypoints");
  for (const auto& p : sys.params)
    if (!param_values.count(p))
      throw std::invalid_argument("integrate: unbound parameter " + p);
  Trajectory traj;
  int n = sys.dim;
  CVec y = ic;
  if (static_cast<int>(y.size()) != n) throw std::invalid_argument("integrate: bad ic size");

  auto fullpoint = [&](const CVec& state, CScalar t) {
    std::vector<CScalar> pt(sys.vars->size(), CScalar(0, 0));
    for (int i = 0; i < n; ++i) pt[i] = state[i];
    int ti = sys.time_index();
    if (ti >= 0) pt[ti] = t;
    for (const auto& [k, v] : param_values) {
      if (auto idx = sys.vars->find(k)) pt[*idx] = v;
    }
    return pt;
  };
  auto eval_field = [&](const CVec& state, CScalar t) {
    auto pt = fullpoint(state, t);
    CVec out(n);
    for (int i = 0; i < n; ++i) out[i] = sys.field[i].eval_c(pt);
    return out;
  };

  CScalar tcur = path.waypoints.front();
  traj.times.push_back(tcur);
  traj.states.push_back(y);
  long steps = 0;
  for (std::size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
    CScalar from = path.waypoints[seg], to = path.waypoints[seg + 1];
    double length = std::abs(to - from);
    if (length == 0) throw std::invalid_argument("integrate: repeated waypoint");
    CScalar dir = (to - from) / length;
    double s = 0;
    double h = std::min(cfg.h_init, length);
    while (s < length) {
      if (steps++ > cfg.max_steps) {
        traj.max_steps_exceeded = true;
        return traj;
      }
      h = std::min(h, length - s);
      CScalar t0 = from + s * dir;
      CVec k1 = eval_field(y, t0);
      CVec k2 = eval_field(axpy(y, h, dir, {{A21, &k1}}), t0 + CScalar(h * A21) * dir);
      CVec k3 = eval_field(axpy(y, h, dir, {{A31, &k1}, {A32, &k2}}),
                           t0 + CScalar(h * (A31 + A32)) * dir);
      CVec k4 = eval_field(axpy(y, h, dir, {{A41, &k1}, {A42, &k2}, {A43, &k3}}),
                           t0 + CScalar(h * 0.8) * dir);
      CVec k5 = eval_field(axpy(y, h, dir, {{A51, &k1}, {A52, &k2}, {A53, &k3}, {A54, &k4}}),
                           t0 + CScalar(h * 8.0 / 9.0) * dir);
      CVec y6 = axpy(y, h, dir, {{A61, &k1}, {A62, &k2}, {A63, &k3}, {A64, &k4}, {A65, &k5}});
      CVec k6 = eval_field(y6, t0 + CScalar(h) * dir);
      CVec y5 = axpy(y, h, dir, {{B1, &k1}, {B3, &k3}, {B4, &k4}, {B5, &k5}, {B6, &k6}});
      CVec k7 = eval_field(y5, t0 + CScalar(h) * dir);
      // embedded error estimate
      double err = 0;
      bool finite = true;
      for (int i = 0; i < n; ++i) {
        CScalar e = CScalar(h) * dir *
                    (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] +
                     E7 * k7[i]);
        double sc = cfg.atol + cfg.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
        err += std::norm(e / sc);
        if (!std::isfinite(y5[i].real()) || !std::isfinite(y5[i].imag())) finite = false;
      }
      err = std::sqrt(err / n);
      // error-per-unit-step control keeps the endpoint error O(tol)
      double ratio = finite ? err / h : 1e12;
      if (ratio <= 1.0) {
        s += h;
        y = y5;
        traj.times.push_back(from + s * dir);
        traj.states.push_back(y);
        ++traj.steps_accepted;
      } else {
        ++traj.steps_rejected;
      }
      double factor = finite && ratio > 0 ? 0.9 * std::pow(ratio, -0.25) : 0.2;
      h *= std::clamp(factor, 0.2, 5.0);
      if (h < cfg.h_min) {
        traj.pole_detected = true;
        traj.pole_estimate = from + s * dir;
        return traj;
      }
    }
  }
  return traj;
}

double drift(const Trajectory& traj, const SystemDef& sys, const RatFun& integral,
             const std::map<std::string, CScalar>& param_values) {
  if (traj.states.empty()) return 0.0;
  auto eval_I = [&](const std::vector<CScalar>& state, CScalar t) {
    std::vector<CScalar> pt(sys.vars->size(), CScalar(0, 0));
    for (int i = 0; i < sys.dim; ++i) pt[i] = state[i];
    int ti = sys.time_index();
    if (ti >= 0) pt[ti] = t;
    for (const auto& [k, v] : param_values)
      if (auto idx = sys.vars->find(k)) pt[*idx] = v;
    return integral.eval_c(pt);
  };
  CScalar I0 = eval_I(traj.states.front(), traj.times.front());
  double worst = 0;
  for (std::size_t i = 1; i < traj.states.size(); ++i)
    worst = std::max(worst, std::abs(eval_I(traj.states[i], traj.times[i]) - I0));
  return worst;
}

namespace {

DerivationRules direction_rules(const AnsatzSolution& sol, bool s_direction) {
  DerivationRules rules(sol.gen_vars);
  for (int i = 0; i < sol.gen_vars->size(); ++i) {
    const std::string& nm = sol.gen_vars->name(i);
    if (nm == "t") {
      rules.set(nm, MPoly::constant(sol.gen_vars, QuadExt(s_direction ? 0 : 1)));
    } else if (nm == "w") {
      RatFun rate = s_direction ? sol.rate_s : sol.rate_t;
      RatFun wsq = RatFun::var(sol.gen_vars, "w") * RatFun::var(sol.gen_vars, "w");
      RatFun one = RatFun::constant(sol.gen_vars, QuadExt(1));
      RatFun rule = sol.kind == AnsatzSolution::Kind::trigonometric ? rate * (one + wsq)
                                                                    : rate * (one - wsq);
      auto p = rule.as_polynomial();
      if (!p) throw std::invalid_argument("ansatz: w rule must be polynomial");
      rules.set(nm, *p);
    } else {
      rules.set(nm, MPoly::zero(sol.gen_vars));
    }
  }
  return rules;
}

std::vector<RatFun> target_images(const SystemDef& sys, const AnsatzSolution& sol) {
  std::vector<RatFun> image;
  for (int i = 0; i < sys.vars->size(); ++i) {
    const std::string& nm = sys.vars->name(i);
    if (i < sys.dim) {
      image.push_back(sol.components.at(i));
    } else if (nm == "t") {
      image.push_back(RatFun::var(sol.gen_vars, "t"));
    } else {
      auto it = sol.param_values.find(nm);
      if (it == sol.param_values.end())
        throw std::invalid_argument("ansatz: no value for parameter " + nm);
      image.push_back(it->second);
    }
  }
  return image;
}

AnsatzReport residual_one_direction(const std::vector<RatFun>& field, const SystemDef& sys,
                                    const AnsatzSolution& sol, bool s_direction) {
  AnsatzReport rep;
  rep.exact = true;
  rep.ok = true;
  DerivationRules rules = direction_rules(sol, s_direction);
  auto image = target_images(sys, sol);
  for (int i = 0; i < sys.dim; ++i) {
    RatFun resid = total_derivative(sol.components[i], rules) - field[i].substitute(image);
    if (!resid.is_zero()) {
      rep.ok = false;
      rep.witness = sol.name + ": component " + std::to_string(i) + " residual " +
                    resid.num().str();
      return rep;
    }
  }
  return rep;
}

}  // namespace

AnsatzReport ansatz_residual(const SystemDef& sys, const AnsatzSolution& sol) {
  return residual_one_direction(sys.field, sys, sol, false);
}

AnsatzReport ansatz_residual(const PfaffianDef& p, const AnsatzSolution& sol) {
  SystemDef carrier;
  carrier.name = p.name;
  carrier.vars = p.vars;
  carrier.dim = p.dim;
  carrier.params = p.params;
  std::vector<RatFun> f, g;
  for (const auto& c : p.f) f.emplace_back(c);
  for (const auto& c : p.g) g.emplace_back(c);
  AnsatzReport a = residual_one_direction(f, carrier, sol, false);
  if (!a.ok) return a;
  return residual_one_direction(g, carrier, sol, true);
}

namespace {

std::vector<CScalar> stencil_dt(const std::function<std::vector<CScalar>(CScalar, CScalar)>& F,
                                CScalar t, CScalar s, bool wrt_s, double h) {
  auto at = [&](double off) {
    return wrt_s ? F(t, s + CScalar(off)) : F(t + CScalar(off), s);
  };
  auto fp2 = at(2 * h), fp1 = at(h), fm1 = at(-h), fm2 = at(-2 * h);
  std::vector<CScalar> out(fp1.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (-fp2[i] + 8.0 * fp1[i] - 8.0 * fm1[i] + fm2[i]) / CScalar(12 * h);
  return out;
}

}  // namespace

double numeric_residual(const SystemDef& sys, const NumericSolution& sol,
                        const std::vector<CScalar>& ts, double h) {
  double worst = 0;
  for (const auto& t : ts) {
    auto state = sol.state(t, CScalar(0, 0));
    auto deriv = stencil_dt(sol.state, t, CScalar(0, 0), false, h);
    std::vector<CScalar> pt(sys.vars->size(), CScalar(0, 0));
    for (int i = 0; i < sys.dim; ++i) pt[i] = state[i];
    int ti = sys.time_index();
    if (ti >= 0) pt[ti] = t;
    for (const auto& [k, v] : sol.param_values)
      if (auto idx = sys.vars->find(k)) pt[*idx] = v;
    for (int i = 0; i < sys.dim; ++i)
      worst = std::max(worst, std::abs(deriv[i] - sys.field[i].eval_c(pt)));
  }
  return worst;
}

double numeric_residual(const PfaffianDef& p, const NumericSolution& sol,
                        const std::vector<std::pair<CScalar, CScalar>>& tss, double h) {
  double worst = 0;
  for (const auto& [t, s] : tss) {
    auto state = sol.state(t, s);
    auto dt = stencil_dt(sol.state, t, s, false, h);
    auto ds = stencil_dt(sol.state, t, s, true, h);
    std::vector<CScalar> pt(p.vars->size(), CScalar(0, 0));
    for (int i = 0; i < p.dim; ++i) pt[i] = state[i];
    for (const auto& [k, v] : sol.param_values)
      if (auto idx = p.vars->find(k)) pt[*idx] = v;
    for (int i = 0; i < p.dim; ++i) {
      worst = std::max(worst, std::abs(dt[i] - p.f[i].eval_c(pt)));
      worst = std::max(worst, std::abs(ds[i] - p.g[i].eval_c(pt)));
    }
  }
  return worst;
}

}  // namespace chazy
