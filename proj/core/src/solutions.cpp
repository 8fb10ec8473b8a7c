#include <cmath>

#include "chazy/flow.hpp"

namespace chazy {

namespace {

AnsatzSolution make_exact(const std::string& name, AnsatzSolution::Kind kind,
                          std::vector<std::string> gens,
                          const std::vector<std::string>& comps,
                          const std::map<std::string, std::string>& params,
                          const std::string& rate_t = "0", const std::string& rate_s = "0") {
  AnsatzSolution s;
  s.name = name;
  s.kind = kind;
  s.gen_vars = VarTable::make(std::move(gens));
  for (const auto& c : comps) s.components.push_back(parse_ratfun(s.gen_vars, c));
  for (const auto& [k, v] : params) s.param_values.emplace(k, parse_ratfun(s.gen_vars, v));
  s.rate_t = parse_ratfun(s.gen_vars, rate_t);
  s.rate_s = parse_ratfun(s.gen_vars, rate_s);
  return s;
}

AnsatzReport run_exact_system(const std::string& sysname, const AnsatzSolution& sol) {
  return ansatz_residual(Catalog::instance().system(sysname), sol);
}

std::vector<CScalar> sample_ts(int n) {
  std::vector<CScalar> out;
  for (int k = 0; k < n; ++k) out.emplace_back(-0.7 + 0.11 * k, 0.03 * (k % 5) - 0.06);
  return out;
}

}  // namespace

const std::vector<SolutionFixture>& solution_fixtures() {
  static const std::vector<SolutionFixture> fixtures = [] {
    std::vector<SolutionFixture> v;

    // section 5: tanh solution of the XYZ form of Chazy III
    v.push_back({"sec5-tanh", "chazy.III.sys2", true, [] {
      auto s = make_exact("sec5-tanh", AnsatzSolution::Kind::hyperbolic, {"t", "w", "c1"},
                          {"c1", "0", "-6*c1*w - 4*c1"}, {}, "6*c1");
      return run_exact_system("chazy.III.sys2", s);
    }});

    // section 5: x = 0 family of system (1)
    v.push_back({"sec5-x0", "chazy.III.system", true, [] {
      auto s = make_exact("sec5-x0", AnsatzSolution::Kind::rational_in_t, {"t", "c1", "c2"},
                          {"0", "-2*(t + c1)/(t^2 + 2*c1*t - 2*c2)", "-1/(t + c1)"}, {});
      return run_exact_system("chazy.III.system", s);
    }});

    // section 15: rational solutions of the Chazy X system (alpha = 0)
    v.push_back({"sec15-rational", "chazy.X.system", true, [] {
      auto s = make_exact("sec15-rational", AnsatzSolution::Kind::rational_in_t, {"t", "c"},
                          {"-2/((3 + sqrt3)*t + 2*c)", "0", "0"}, {{"alpha", "0"}});
      return run_exact_system("chazy.X.system", s);
    }});
    v.push_back({"sec15-rational-0", "chazy.X.system", true, [] {
      auto s = make_exact("sec15-rational-0", AnsatzSolution::Kind::rational_in_t, {"t"},
                          {"0", "0", "0"}, {{"alpha", "0"}});
      return run_exact_system("chazy.X.system", s);
    }});

    // appendix B: rational solution at alpha = 0
    v.push_back({"appB-rational", "chazy.VIII.system", true, [] {
      auto s = make_exact("appB-rational", AnsatzSolution::Kind::rational_in_t,
                          {"t", "beta_v", "gamma_v"},
                          {"0", "-beta_v/2*t - gamma_v/2", "0"},
                          {{"alpha", "0"}, {"beta", "beta_v"}, {"gamma", "gamma_v"}});
      return run_exact_system("chazy.VIII.system", s);
    }});

    // appendix E: two rational families (the first with the y sign corrected)
    v.push_back({"appE-rational-1", "appE.system", true, [] {
      auto s = make_exact("appE-rational-1", AnsatzSolution::Kind::rational_in_t,
                          {"t", "c1", "c2"},
                          {"-1/(t + c1)",
                           "-3*(t^2 + 2*c1*t + c1^2)/(t^3 + 3*c1*t^2 + 3*c1^2*t + 3*c2)",
                           "1/(t + c1)"},
                          {});
      return run_exact_system("appE.system", s);
    }});
    v.push_back({"appE-rational-2", "appE.system", true, [] {
      auto s = make_exact("appE-rational-2", AnsatzSolution::Kind::rational_in_t,
                          {"t", "c1", "c2"},
                          {"-c2/(c2*t - c1)", "0", "-1/(c2*t - c1)"}, {});
      return run_exact_system("appE.system", s);
    }});

    // appendix F: the diagonal pole solution, parameters symbolic
    v.push_back({"appF-rational", "halphen.classic", true, [] {
      auto s = make_exact("appF-rational", AnsatzSolution::Kind::rational_in_t,
                          {"t", "t0", "av", "bv", "gv"},
                          {"-1/(t - t0)", "-1/(t - t0)", "-1/(t - t0)"},
                          {{"alpha", "av"}, {"beta", "bv"}, {"gamma", "gv"}});
      return run_exact_system("halphen.classic", s);
    }});
    v.push_back({"appF4-rational", "halphen.four", true, [] {
      auto s = make_exact("appF4-rational", AnsatzSolution::Kind::rational_in_t,
                          {"t", "t0", "a1", "a2", "a3", "a4", "a5", "a6"},
                          {"-1/(t - t0)", "-1/(t - t0)", "-1/(t - t0)", "-1/(t - t0)"},
                          {{"alpha", "a1"}, {"beta", "a2"}, {"chi", "a3"},
                           {"delta", "a4"}, {"epsilon", "a5"}, {"gamma", "a6"}});
      return run_exact_system("halphen.four", s);
    }});

    // section 1: Darboux-Halphen rational families (second with b = 1; the
    // printed free b only solves the system at b = 1)
    v.push_back({"sec1-dh-rational", "darboux.halphen.system", true, [] {
      auto s = make_exact("sec1-dh-rational", AnsatzSolution::Kind::rational_in_t,
                          {"t", "t0"},
                          {"1/(t - t0)", "1/(t - t0)", "1/(t - t0)"}, {});
      return run_exact_system("darboux.halphen.system", s);
    }});
    v.push_back({"sec1-dh-rational-2", "darboux.halphen.system", true, [] {
      auto s = make_exact("sec1-dh-rational-2", AnsatzSolution::Kind::rational_in_t,
                          {"t", "t0", "a"},
                          {"1/(t - t0)", "1/(t - t0)", "a/(t - t0)^2 + 1/(t - t0)"}, {});
      return run_exact_system("darboux.halphen.system", s);
    }});

    // section 10: travelling wave (nested radicals -> numeric check),
    // delta = (3/4)(sqrt5 - 3) c2^4 with c2 = 1 (corrected magnitude)
    v.push_back({"sec10-travelling-wave", "chazy.IX.pde", false, [] {
      const double r5 = std::sqrt(5.0);
      const double c2 = 1.0, c1 = 0.4;
      const double kt = std::sqrt(1.5 * (r5 - 2.0)) * c2;
      const double ks = std::sqrt(3.0 * (r5 + 1.0)) * c2 * c2 * c2;
      const double amp = c2 / std::sqrt(3.0 * (r5 + 1.0));
      const double yv = -0.25 * (r5 - 3.0) * c2 * c2;
      const double delta = 0.75 * (r5 - 3.0) * c2 * c2 * c2 * c2;
      NumericSolution sol;
      sol.param_values = {{"delta", CScalar(delta, 0)}};
      sol.state = [=](CScalar t, CScalar s) {
        CScalar th = kt * t + ks * s + CScalar(c1);
        return std::vector<CScalar>{amp * std::tanh(th), CScalar(yv, 0), CScalar(0, 0)};
      };
      std::vector<std::pair<CScalar, CScalar>> pts;
      for (int k = 0; k < 16; ++k)
        pts.emplace_back(CScalar(-0.6 + 0.08 * k, 0.01 * (k % 3)), CScalar(0.05 * k - 0.4, 0));
      double r = numeric_residual(Catalog::instance().pfaffian("chazy.IX.pde"), sol, pts, 1e-3);
      AnsatzReport rep;
      rep.exact = false;
      rep.max_residual = r;
      rep.ok = r <= 1e-10;
      if (!rep.ok) rep.witness = "max residual " + std::to_string(r);
      return rep;
    }});

    // section 15: Tan and Tanh solutions at alpha = 1 (numeric)
    v.push_back({"sec15-tan", "chazy.X.system", false, [] {
      const double r3 = std::sqrt(3.0);
      const double al = 1.0, c = 0.0;
      const double k = std::pow(3.0, 0.25) / 4.0 * std::sqrt(3.0 + r3) * std::sqrt(al);
      const double amp = -(-3.0 + r3) * std::sqrt(3.0 + r3) * std::sqrt(al) /
                         (4.0 * std::pow(3.0, 0.75));
      NumericSolution sol;
      sol.param_values = {{"alpha", CScalar(al, 0)}};
      sol.state = [=](CScalar t, CScalar) {
        CScalar th = k * (t + CScalar(8 * c));
        return std::vector<CScalar>{amp * std::tan(th), CScalar(r3 / 8 * al, 0), CScalar(0, 0)};
      };
      double r = numeric_residual(Catalog::instance().system("chazy.X.system"), sol,
                                  sample_ts(16), 1e-3);
      AnsatzReport rep;
      rep.exact = false;
      rep.max_residual = r;
      rep.ok = r <= 1e-10;
      if (!rep.ok) rep.witness = "max residual " + std::to_string(r);
      return rep;
    }});
    v.push_back({"sec15-tanh", "chazy.X.system", false, [] {
      const double r3 = std::sqrt(3.0);
      const double al = 1.0, c = 0.0;
      const double k = 0.25 * std::sqrt(5.0 + 3.0 * r3) * std::sqrt(al);
      const double amp =
          -std::pow(3.0 + r3, 1.5) * std::sqrt(al) / (12.0 * std::sqrt(3.0 + 2.0 * r3));
      NumericSolution sol;
      sol.param_values = {{"alpha", CScalar(al, 0)}};
      sol.state = [=](CScalar t, CScalar) {
        CScalar th = k * (t + CScalar(24 * c));
        return std::vector<CScalar>{amp * std::tanh(th), CScalar(-(3.0 + 2.0 * r3) / 24.0 * al, 0),
                                    CScalar(0, 0)};
      };
      double r = numeric_residual(Catalog::instance().system("chazy.X.system"), sol,
                                  sample_ts(16), 1e-3);
      AnsatzReport rep;
      rep.exact = false;
      rep.max_residual = r;
      rep.ok = r <= 1e-10;
      if (!rep.ok) rep.witness = "max residual " + std::to_string(r);
      return rep;
    }});

    return v;
  }();
  return fixtures;
}

}  // namespace chazy
