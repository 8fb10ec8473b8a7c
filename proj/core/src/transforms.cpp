#include "chazy/transforms.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace chazy {

namespace {

/// Resolve a catalog name to the system it denotes (jet system for ODEs).
SystemDef resolve_system(const std::string& name) {
  const auto& cat = Catalog::instance();
  const CatalogEntry& e = cat.entry(name);
  if (std::holds_alternative<SystemDef>(e)) return std::get<SystemDef>(e);
  if (std::holds_alternative<ScalarODE>(e)) return jet_system(std::get<ScalarODE>(e));
  throw std::invalid_argument(name + ": not a system or scalar equation");
}

/// Substitution image sending target-system symbols to expressions over the
/// source table: states -> forward, t -> t, params -> action (or same name).
std::vector<RatFun> target_image(const SystemDef& tgt, const SystemDef& src,
                                 const std::vector<RatFun>& forward,
                                 const std::map<std::string, RatFun>& param_action) {
  std::vector<RatFun> image;
  for (int i = 0; i < tgt.vars->size(); ++i) {
    const std::string& nm = tgt.vars->name(i);
    if (i < tgt.dim) {
      image.push_back(forward.at(i));
      continue;
    }
    if (tgt.has_time && i == tgt.dim) {
      image.push_back(RatFun::var(src.vars, "t"));
      continue;
    }
    auto it = param_action.find(nm);
    if (it != param_action.end()) {
      image.push_back(it->second);
    } else {
      image.push_back(RatFun::var(src.vars, nm));  // same-name passthrough
    }
  }
  return image;
}

std::map<std::string, QuadExt> default_bindings(const std::vector<std::string>& params,
                                                unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
  std::map<std::string, QuadExt> out;
  for (const auto& p : params) {
    QuadExt v(rat(num(rng), den(rng)));
    if (v.is_zero()) v = QuadExt(rat(1, 2));
    out[p] = v;
  }
  return out;
}

RatFun det_ratfun(std::vector<std::vector<RatFun>> M) {
  std::size_t n = M.size();
  if (n == 0) throw std::invalid_argument("det of empty matrix");
  if (n == 1) return M[0][0];
  // expand along the row with the most zeros
  std::size_t best = 0, best_zeros = 0;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t z = 0;
    for (const auto& e : M[r])
      if (e.is_zero()) ++z;
    if (z >= best_zeros) { best_zeros = z; best = r; }
  }
  VarsPtr vars = M[0][0].vars();
  RatFun det = RatFun::constant(vars, QuadExt(0));
  for (std::size_t c = 0; c < n; ++c) {
    if (M[best][c].is_zero()) continue;
    std::vector<std::vector<RatFun>> minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == best) continue;
      std::vector<RatFun> row;
      for (std::size_t c2 = 0; c2 < n; ++c2)
        if (c2 != c) row.push_back(M[r][c2]);
      minor.push_back(std::move(row));
    }
    RatFun term = M[best][c] * det_ratfun(std::move(minor));
    if ((best + c) % 2) term = -term;
    det += term;
  }
  return det;
}

}  // namespace

CheckReport pushforward_check(const BiMap& m) {
  SystemDef src = resolve_system(m.source);
  SystemDef tgt = resolve_system(m.target);
  CheckReport rep;
  if (static_cast<int>(m.forward.size()) != tgt.dim) {
    rep.witness = "dimension mismatch";
    return rep;
  }
  auto image = target_image(tgt, src, m.forward, m.param_action);
  int ti = src.time_index();
  for (int i = 0; i < tgt.dim; ++i) {
    RatFun lhs = RatFun::constant(src.vars, QuadExt(0));
    for (int j = 0; j < src.dim; ++j) {
      RatFun dj = m.forward[i].derivative(j);
      if (!dj.is_zero()) lhs += dj * src.field[j];
    }
    if (ti >= 0) lhs += m.forward[i].derivative(ti);
    RatFun rhs = tgt.field[i].substitute(image);
    if (!equal(lhs, rhs)) {
      rep.witness = m.name + ": component " + std::to_string(i) + " fails";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

CheckReport roundtrip_check(const BiMap& m) {
  SystemDef src = resolve_system(m.source);
  SystemDef tgt = resolve_system(m.target);
  CheckReport rep;
  if (m.inverse.empty()) {
    rep.witness = m.name + ": no inverse registered";
    return rep;
  }
  // inverse(forward) == id on source states
  std::vector<RatFun> inv_img = target_image(tgt, src, m.forward, m.param_action);
  for (int i = 0; i < src.dim; ++i) {
    RatFun comp = m.inverse[i].substitute(inv_img);
    if (!equal(comp, RatFun::var(src.vars, src.vars->name(i)))) {
      rep.witness = m.name + ": inverse round trip fails at component " + std::to_string(i);
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

CheckReport bt_check(const ScalarBT& m, BtMode mode) {
  const auto& cat = Catalog::instance();
  ScalarODE src = cat.ode(m.source);
  ScalarODE tgt = cat.ode(m.target);
  CheckReport rep;
  if (mode == BtMode::exact_jet) {
    DerivationRules rules = jet_rules(src);
    std::vector<RatFun> jets = {m.forward};
    for (int k = 0; k < tgt.order; ++k) jets.push_back(total_derivative(jets.back(), rules));
    // target rhs with jets and parameter action substituted
    std::vector<RatFun> image;
    for (int i = 0; i < tgt.vars->size(); ++i) {
      const std::string& nm = tgt.vars->name(i);
      if (i < tgt.order) {
        image.push_back(jets[i]);
      } else if (nm == "t") {
        image.push_back(RatFun::var(src.vars, "t"));
      } else {
        auto it = m.param_action.find(nm);
        image.push_back(it != m.param_action.end() ? it->second
                                                   : RatFun::var(src.vars, nm));
      }
    }
    RatFun resid = jets[tgt.order] - tgt.rhs.substitute(image);
    if (!resid.is_zero()) {
      rep.witness = m.name + ": jet identity fails";
      return rep;
    }
    rep.ok = true;
    return rep;
  }
  // series mode: push a Taylor jet through the map
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-5, 5);
  auto bind_src = default_bindings(src.params, 99);
  ScalarODE src_b = src.bind(bind_src);
  SystemDef jet_sys = jet_system(src_b);
  std::map<std::string, RatFun> fb;
  for (const auto& [k, v] : bind_src) fb.emplace(k, RatFun::constant(src.vars, v));
  RatFun fwd_b = m.forward.substitute(fb);
  // bind target params through the action
  std::map<std::string, QuadExt> bind_tgt;
  for (const auto& p : tgt.params) {
    auto it = m.param_action.find(p);
    if (it == m.param_action.end()) {
      bind_tgt[p] = bind_src.at(p);
    } else {
      std::vector<QuadExt> pt(src.vars->size(), QuadExt(0));
      for (const auto& [k, v] : bind_src) pt[src.vars->index(k)] = v;
      bind_tgt[p] = it->second.eval(pt);
    }
  }
  ScalarODE tgt_b = tgt.bind(bind_tgt);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<QuadExt> ic;
    for (int i = 0; i < jet_sys.dim; ++i) ic.push_back(QuadExt(rat(num(rng), 3)));
    try {
      LaurentSolution sol = jet_taylor(jet_sys, ic, QuadExt(0), 10);
      auto pt = sol.series;
      std::vector<PSeries> full(src.vars->size(), PSeries::zero(11));
      for (int i = 0; i < jet_sys.dim; ++i) full[i] = pt[i];
      if (auto t_i = src.vars->find("t")) full[*t_i] = PSeries::tau_power(1, 11);
      PSeries u = eval_series(fwd_b, full);
      std::vector<PSeries> jets = {u};
      for (int k = 0; k < tgt.order; ++k) jets.push_back(jets.back().derivative());
      auto rr = series_residual(jets, tgt_b);
      if (rr.exact_zero) {
        rep.ok = true;
        return rep;
      }
      rep.witness = m.name + ": " + rr.witness;
      return rep;
    } catch (const std::domain_error&) {
      continue;  // denominator hit; retry with a new initial condition
    }
  }
  rep.witness = m.name + ": no regular sample point found";
  return rep;
}

CheckReport unimodular_check(const std::vector<RatFun>& forward, const VarsPtr& vars,
                             const std::vector<int>& state_indices) {
  CheckReport rep;
  std::vector<std::vector<RatFun>> J;
  for (const auto& f : forward) {
    std::vector<RatFun> row;
    for (int v : state_indices) row.push_back(f.derivative(v));
    J.push_back(std::move(row));
  }
  RatFun det = det_ratfun(std::move(J));
  RatFun one = RatFun::constant(vars, QuadExt(1));
  if (equal(det, one)) {
    rep.ok = true;
  } else {
    rep.witness = "det J = " + det.str();
  }
  return rep;
}

CheckReport unimodular_check_chart(const Chart& chart, int dim) {
  std::vector<int> idx(dim);
  for (int i = 0; i < dim; ++i) idx[i] = i;
  return unimodular_check(chart.to_chart, chart.base_vars, idx);
}

HolomorphyReport holomorphy_check(const SystemDef& sys, const std::vector<Chart>& charts) {
  HolomorphyReport rep;
  rep.all_polynomial = true;
  for (const auto& ch : charts) {
    auto tf = transform_field(sys, ch);
    bool ok = true;
    std::string witness;
    for (int i = 0; i < sys.dim; ++i) {
      if (!tf[i].as_polynomial()) {
        ok = false;
        witness = ch.name + ": component " + std::to_string(i) + " is not polynomial";
        break;
      }
    }
    rep.per_chart.push_back(ok);
    rep.witnesses.push_back(witness);
    if (!ok) rep.all_polynomial = false;
  }
  return rep;
}

HolomorphyReport holomorphy_check(const PfaffianDef& p, const std::vector<Chart>& charts) {
  SystemDef ft, gt;
  ft.name = p.name + ".dt";
  ft.vars = p.vars;
  ft.dim = p.dim;
  for (const auto& c : p.f) ft.field.emplace_back(c);
  gt = ft;
  gt.name = p.name + ".ds";
  gt.field.clear();
  for (const auto& c : p.g) gt.field.emplace_back(c);
  HolomorphyReport a = holomorphy_check(ft, charts);
  HolomorphyReport b = holomorphy_check(gt, charts);
  HolomorphyReport rep;
  rep.all_polynomial = a.all_polynomial && b.all_polynomial;
  for (std::size_t i = 0; i < charts.size(); ++i) {
    rep.per_chart.push_back(a.per_chart[i] && b.per_chart[i]);
    rep.witnesses.push_back(a.per_chart[i] ? b.witnesses[i] : a.witnesses[i]);
  }
  return rep;
}

CheckReport compatibility_check(const PfaffianDef& p) {
  CheckReport rep;
  for (int i = 0; i < p.dim; ++i) {
    RatFun bracket = RatFun::constant(p.vars, QuadExt(0));
    for (int j = 0; j < p.dim; ++j) {
      MPoly dfij = p.f[i].derivative(j);
      MPoly dgij = p.g[i].derivative(j);
      bracket += RatFun(dfij) * RatFun(p.g[j]) - RatFun(dgij) * RatFun(p.f[j]);
    }
    if (!bracket.is_zero()) {
      rep.witness = p.name + ": bracket component " + std::to_string(i) + " = " + bracket.str();
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

CheckReport first_integral_check(const SystemDef& sys, const RatFun& integral) {
  CheckReport rep;
  RatFun dot = RatFun::constant(sys.vars, QuadExt(0));
  for (int i = 0; i < sys.dim; ++i) dot += integral.derivative(i) * sys.field[i];
  int ti = sys.time_index();
  if (ti >= 0) dot += integral.derivative(ti);
  if (dot.is_zero()) {
    rep.ok = true;
  } else {
    rep.witness = sys.name + ": grad(I).f = " + dot.num().str();
  }
  return rep;
}

CheckReport hamiltonian_check(const MPoly& H, const SystemDef& sys) {
  CheckReport rep;
  if (sys.dim != 2) {
    rep.witness = "hamiltonian_check needs a 2-dim system";
    return rep;
  }
  RatFun dq = RatFun(H.derivative(1));   // dH/dp
  RatFun dp = -RatFun(H.derivative(0));  // -dH/dq
  if (!equal(dq, sys.field[0])) {
    rep.witness = sys.name + ": dH/dp mismatch";
    return rep;
  }
  if (!equal(dp, sys.field[1])) {
    rep.witness = sys.name + ": -dH/dq mismatch";
    return rep;
  }
  rep.ok = true;
  return rep;
}

CheckReport relation_check(const RelationWord& w) {
  const auto& reg = MapRegistry::instance();
  SystemDef base = resolve_system(w.on_system);
  CheckReport rep;
  // identity composition state
  std::vector<RatFun> state;
  for (int i = 0; i < base.dim; ++i) state.push_back(RatFun::var(base.vars, base.vars->name(i)));
  std::map<std::string, RatFun> params;
  for (const auto& p : base.params) params.emplace(p, RatFun::var(base.vars, p));

  auto apply = [&](const BiMap& f) {
    SystemDef fsrc = resolve_system(f.source);
    std::vector<RatFun> image;
    for (int i = 0; i < fsrc.vars->size(); ++i) {
      const std::string& nm = fsrc.vars->name(i);
      if (i < fsrc.dim) {
        image.push_back(state.at(i));
      } else if (fsrc.has_time && i == fsrc.dim) {
        image.push_back(RatFun::var(base.vars, "t"));
      } else {
        auto it = params.find(nm);
        image.push_back(it != params.end() ? it->second : RatFun::var(base.vars, nm));
      }
    }
    std::vector<RatFun> new_state;
    for (const auto& comp : f.forward) new_state.push_back(comp.substitute(image));
    std::map<std::string, RatFun> new_params = params;
    for (const auto& [p, expr] : f.param_action) new_params[p] = expr.substitute(image);
    state = std::move(new_state);
    params = std::move(new_params);
  };
  for (const auto& fname : w.factors) apply(reg.map(fname));

  std::vector<RatFun> want_state;
  std::map<std::string, RatFun> want_params;
  if (w.expected.empty()) {
    for (int i = 0; i < base.dim; ++i)
      want_state.push_back(RatFun::var(base.vars, base.vars->name(i)));
    for (const auto& p : base.params) want_params.emplace(p, RatFun::var(base.vars, p));
  } else {
    const BiMap& e = reg.map(w.expected);
    want_state = e.forward;
    for (const auto& p : base.params) {
      auto it = e.param_action.find(p);
      want_params.emplace(p, it != e.param_action.end() ? it->second
                                                        : RatFun::var(base.vars, p));
    }
  }
  for (int i = 0; i < base.dim; ++i) {
    if (!equal(state[i], want_state[i])) {
      rep.witness = w.name + ": state component " + std::to_string(i) + " differs";
      return rep;
    }
  }
  for (const auto& p : base.params) {
    if (!equal(params.at(p), want_params.at(p))) {
      rep.witness = w.name + ": parameter action on " + p + " differs";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

CheckReport elimination_check(const SystemDef& sys, const std::vector<RatFun>& var_exprs,
                              const SystemDef& claimed, int N, unsigned seed,
                              const std::map<std::string, RatFun>* bind_integral) {
  CheckReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-6, 6), den(2, 5);
  auto bound_src = sys.bind(default_bindings(sys.params, seed + 7));
  int successes = 0;
  for (int attempt = 0; attempt < 24 && successes < 3; ++attempt) {
    std::vector<QuadExt> ic;
    for (int i = 0; i < bound_src.dim; ++i) ic.push_back(QuadExt(rat(num(rng), den(rng))));
    try {
      LaurentSolution sol = jet_taylor(bound_src, ic, QuadExt(0), N + 2);
      std::vector<PSeries> full(bound_src.vars->size(), PSeries::zero(N + 3));
      for (int i = 0; i < bound_src.dim; ++i) full[i] = sol.series[i];
      // bind the claimed system's parameters: same-name source params plus
      // first-integral values evaluated at the sample point
      std::map<std::string, QuadExt> bind_tgt;
      auto src_bindings = default_bindings(sys.params, seed + 7);
      for (const auto& p : claimed.params) {
        if (src_bindings.count(p)) {
          bind_tgt[p] = src_bindings[p];
        } else if (bind_integral && bind_integral->count(p)) {
          RatFun expr = bind_integral->at(p);
          std::map<std::string, RatFun> bb;
          for (const auto& [k, v] : src_bindings) bb.emplace(k, RatFun::constant(sys.vars, v));
          RatFun expr_b = expr.substitute(bb);
          std::vector<QuadExt> pt(sys.vars->size(), QuadExt(0));
          for (int i = 0; i < bound_src.dim; ++i) pt[i] = ic[i];
          bind_tgt[p] = expr_b.eval(pt);
        } else {
          throw std::invalid_argument("elimination_check: unbound parameter " + p);
        }
      }
      SystemDef claimed_b = claimed.bind(bind_tgt);
      // evaluate the defining expressions along the solution
      std::map<std::string, RatFun> bb;
      for (const auto& [k, v] : src_bindings) bb.emplace(k, RatFun::constant(sys.vars, v));
      std::vector<PSeries> vs;
      for (const auto& e : var_exprs) vs.push_back(eval_series(e.substitute(bb), full));
      // residual of the claimed system on the v-series
      std::vector<PSeries> cpt(claimed_b.vars->size(), PSeries::zero(N + 1));
      for (int i = 0; i < claimed_b.dim; ++i) cpt[i] = vs[i].truncated(N + 1);
      if (auto ti = claimed_b.vars->find("t"); ti && claimed_b.has_time)
        cpt[*ti] = PSeries::tau_power(1, N + 1);
      for (int i = 0; i < claimed_b.dim; ++i) {
        PSeries dnm = eval_series(claimed_b.field[i].den(), cpt);
        if (dnm.known_zero()) throw std::domain_error("denominator vanishes along sample");
        PSeries resid = cpt[i].derivative() * dnm - eval_series(claimed_b.field[i].num(), cpt);
        if (!resid.known_zero()) {
          rep.witness = "residual in component " + std::to_string(i) + ": " + resid.str();
          return rep;
        }
      }
      ++successes;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  if (successes < 3) {
    rep.witness = "fewer than 3 regular sample points found";
    return rep;
  }
  rep.ok = true;
  return rep;
}

CheckReport elimination_check_ode(const SystemDef& sys, const RatFun& var_expr,
                                  const ScalarODE& claimed, int N, unsigned seed) {
  CheckReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-6, 6), den(2, 5);
  auto bound_src = sys.bind(default_bindings(sys.params, seed + 7));
  ScalarODE claimed_b = claimed.bind(default_bindings(claimed.params, seed + 7));
  int successes = 0;
  for (int attempt = 0; attempt < 24 && successes < 3; ++attempt) {
    std::vector<QuadExt> ic;
    for (int i = 0; i < bound_src.dim; ++i) ic.push_back(QuadExt(rat(num(rng), den(rng))));
    try {
      LaurentSolution sol = jet_taylor(bound_src, ic, QuadExt(0), N + claimed.order);
      std::vector<PSeries> full(bound_src.vars->size(), PSeries::zero(N + claimed.order + 1));
      for (int i = 0; i < bound_src.dim; ++i) full[i] = sol.series[i];
      PSeries v = eval_series(var_expr, full);
      std::vector<PSeries> jets = {v};
      for (int k = 0; k < claimed.order; ++k) jets.push_back(jets.back().derivative());
      auto rr = series_residual(jets, claimed_b);
      if (!rr.exact_zero) {
        rep.witness = rr.witness;
        return rep;
      }
      ++successes;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  if (successes < 3) {
    rep.witness = "fewer than 3 regular sample points found";
    return rep;
  }
  rep.ok = true;
  return rep;
}

CheckReport riccati_reduce_check(bool mutate) {
  // x = -X'/X turns x' = x^2 + (beta/2) t - alpha^2 t^2 + alpha + gamma/2
  // into X'' = (1/2)(2 alpha^2 t^2 - beta t - 2 alpha - gamma) X
  auto vars = VarTable::make({"X0", "X1", "t", "alpha", "beta", "gamma"});
  DerivationRules rules(vars);
  rules.set("t", MPoly::constant(vars, QuadExt(1)));
  rules.set("alpha", MPoly::zero(vars));
  rules.set("beta", MPoly::zero(vars));
  rules.set("gamma", MPoly::zero(vars));
  rules.set("X0", MPoly::var(vars, "X1"));
  rules.set("X1", parse_poly(vars, "1/2*(2*alpha^2*t^2 - beta*t - 2*alpha - gamma)*X0"));
  RatFun x = parse_ratfun(vars, "-X1/X0");
  RatFun phi = parse_ratfun(vars, "beta/2*t - alpha^2*t^2 + alpha + gamma/2");
  RatFun sq = x * x;
  if (mutate) sq = -sq;
  RatFun resid = total_derivative(x, rules) - sq - phi;
  CheckReport rep;
  if (resid.is_zero()) rep.ok = true;
  else rep.witness = "residual " + resid.num().str();
  return rep;
}

}  // namespace chazy

namespace chazy {

const std::map<std::string, std::string>& registered_integrals() {
  static const std::map<std::string, std::string> table = {
      {"appC.mmSVIII", "x*z - y*z - alpha2*x + alpha4*y - (alpha5 - alpha6)*z"},
      {"appD.system",
       "2*x^3*(z - alpha2)"
       " + x^2*(y^2 - 2*y*(z + alpha1 - alpha2) - 2*(2*alpha1 - 3*alpha3)*z"
       " - 6*alpha2*alpha3 + alpha1^2 + 4*alpha1*alpha2)"
       " - 2*x*(alpha1 - alpha3)*(y^2 - 2*y*(z + alpha1 - alpha2)"
       " - (alpha1 - 3*alpha3)*z + alpha1^2 + alpha1*alpha2 - 3*alpha2*alpha3)"
       " + (alpha1 - alpha3)^2*(y^2 - 2*y*(z + alpha1 - alpha2) + 2*alpha3*z)"},
      {"appE.system", "(x + z)*y^2*z^3"},
  };
  return table;
}

CheckReport x_recovery_check(const QuadExt& alpha_value) {
  CheckReport rep;
  SystemDef sysfix = Catalog::instance().system("chazy.X.system").bind({{"alpha", alpha_value}});
  const auto& charts = MapRegistry::instance().charts("chazy.X.system.charts");
  // bind alpha inside the chart formulas as well
  std::vector<Chart> bound_charts;
  for (const auto& ch : charts) {
    Chart b = ch;
    std::map<std::string, RatFun> to_bind = {
        {"alpha", RatFun::constant(ch.base_vars, alpha_value)}};
    std::map<std::string, RatFun> from_bind = {
        {"alpha", RatFun::constant(ch.chart_vars, alpha_value)}};
    for (auto& c : b.to_chart) c = c.substitute(to_bind);
    for (auto& c : b.from_chart) c = c.substitute(from_bind);
    bound_charts.push_back(std::move(b));
  }
  // basis of cubic fields: 20 monomials x^i y^j z^k (i+j+k <= 3) per component
  std::vector<MPoly> monomials;
  const auto& V = sysfix.vars;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j)
      for (int k = 0; i + j + k <= 3; ++k) {
        Expo e(V->size(), 0);
        e[0] = i;
        e[1] = j;
        e[2] = k;
        MPoly mono(V);
        mono.add_term(e, QuadExt(1));
        monomials.push_back(std::move(mono));
      }
  const int nmono = static_cast<int>(monomials.size());
  const int nunk = 3 * nmono;

  // linear polynomiality constraints: for every chart component, collect the
  // non-divisible part of the transformed basis fields
  std::vector<QVector> rows;
  for (const auto& ch : bound_charts) {
    auto inverse = ch.from_chart_image();
    int b = ch.boundary_index;
    for (int comp = 0; comp < 3; ++comp) {
      // transformed component for unknown field f: sum_j d(to_comp)/dx_j f_j(from)
      // basis contribution for unknown (j, m): d(to_comp)/dx_j * mono_m(from)
      std::vector<RatFun> contrib(nunk, RatFun::constant(ch.chart_vars, QuadExt(0)));
      for (int j = 0; j < 3; ++j) {
        RatFun dj = ch.to_chart[comp].derivative(j);
        if (dj.is_zero()) continue;
        RatFun djc = dj.substitute(inverse);
        for (int mm = 0; mm < nmono; ++mm) {
          RatFun mono_c = RatFun(monomials[mm]).substitute(inverse);
          contrib[j * nmono + mm] = djc * mono_c;
        }
      }
      // common denominator: boundary variable to the max power
      int maxpow = 0;
      for (const auto& c : contrib)
        if (!c.is_zero()) maxpow = std::max(maxpow, c.den().degree_in(b));
      // each contribution as numerator over x_b^maxpow; constraint rows are the
      // coefficients of monomials with x_b-degree < maxpow
      std::map<Expo, QVector> coeff_rows;
      for (int u = 0; u < nunk; ++u) {
        if (contrib[u].is_zero()) continue;
        const MPoly& den = contrib[u].den();
        int dpow = den.degree_in(b);
        QuadExt dc = den.terms().rbegin()->second;  // monomial denominator
        MPoly lifted = contrib[u].num();
        // lift numerator by x_b^(maxpow - dpow), divide coefficient
        MPoly shift(contrib[u].vars());
        Expo se(ch.chart_vars->size(), 0);
        se[b] = maxpow - dpow;
        shift.add_term(se, QuadExt(1) / dc);
        lifted = lifted * shift;
        for (const auto& [e, c] : lifted.terms()) {
          if (e[b] >= maxpow) continue;
          auto it = coeff_rows.find(e);
          if (it == coeff_rows.end())
            it = coeff_rows.emplace(e, QVector(nunk, QuadExt(0))).first;
          it->second[u] += c;
        }
      }
      for (auto& [e, row] : coeff_rows) rows.push_back(std::move(row));
    }
  }
  auto basis = nullspace(QMatrix(rows.begin(), rows.end()), nunk);
  if (basis.size() != 1) {
    rep.witness = "recovered solution space has dimension " + std::to_string(basis.size());
    return rep;
  }
  // compare span{basis[0]} with the catalog field
  std::vector<MPoly> rec(3, MPoly(V));
  for (int comp = 0; comp < 3; ++comp)
    for (int mm = 0; mm < nmono; ++mm) {
      const QuadExt& c = basis[0][comp * nmono + mm];
      if (!c.is_zero()) rec[comp] += monomials[mm].scaled(c);
    }
  // find the scale from the first nonzero pair and match all components
  QuadExt scale(0);
  for (int comp = 0; comp < 3 && scale.is_zero(); ++comp) {
    auto f = sysfix.field[comp].as_polynomial();
    if (!f || f->is_zero() || rec[comp].is_zero()) continue;
    scale = f->terms().rbegin()->second / rec[comp].terms().rbegin()->second;
  }
  if (scale.is_zero()) {
    rep.witness = "degenerate recovered field";
    return rep;
  }
  for (int comp = 0; comp < 3; ++comp) {
    auto f = sysfix.field[comp].as_polynomial();
    if (!f || !(rec[comp].scaled(scale) == *f)) {
      rep.witness = "recovered field differs in component " + std::to_string(comp);
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace chazy
