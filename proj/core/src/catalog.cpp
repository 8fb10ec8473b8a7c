#include "chazy/catalog.hpp"

#include <algorithm>

namespace chazy {

namespace {

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

SystemDef make_system(const std::string& name, std::vector<std::string> states,
                      std::vector<std::string> params, const std::vector<std::string>& field,
                      bool has_time = false, const std::string& note = "") {
  SystemDef s;
  s.name = name;
  s.dim = static_cast<int>(states.size());
  s.has_time = has_time;
  std::vector<std::string> names = states;
  if (has_time) names.push_back("t");
  names = concat(std::move(names), params);
  s.vars = VarTable::make(names);
  s.params = std::move(params);
  for (const auto& comp : field) s.field.push_back(parse_ratfun(s.vars, comp));
  s.note = note;
  return s;
}

ScalarODE make_ode(const std::string& name, int order, std::vector<std::string> params,
                   const std::string& rhs, bool has_time = false, const std::string& note = "") {
  ScalarODE s;
  s.name = name;
  s.order = order;
  std::vector<std::string> names = {"u"};
  for (int k = 1; k < order; ++k) names.push_back("u" + std::to_string(k));
  if (has_time) names.push_back("t");
  names = concat(std::move(names), params);
  s.vars = VarTable::make(names);
  s.params = std::move(params);
  s.rhs = parse_ratfun(s.vars, rhs);
  s.note = note;
  return s;
}

PfaffianDef make_pfaffian(const std::string& name, std::vector<std::string> states,
                          std::vector<std::string> params, const std::vector<std::string>& f,
                          const std::vector<std::string>& g, const std::string& note = "") {
  PfaffianDef s;
  s.name = name;
  s.dim = static_cast<int>(states.size());
  s.vars = VarTable::make(concat(std::move(states), params));
  s.params = std::move(params);
  for (const auto& comp : f) s.f.push_back(parse_poly(s.vars, comp));
  for (const auto& comp : g) s.g.push_back(parse_poly(s.vars, comp));
  s.note = note;
  return s;
}

}  // namespace

bool SystemDef::is_polynomial() const {
  return std::all_of(field.begin(), field.end(),
                     [](const RatFun& f) { return f.is_polynomial(); });
}

int SystemDef::time_index() const { return has_time ? dim : -1; }

std::vector<int> SystemDef::state_indices() const {
  std::vector<int> idx(dim);
  for (int i = 0; i < dim; ++i) idx[i] = i;
  return idx;
}

SystemDef SystemDef::bind(const std::map<std::string, QuadExt>& values) const {
  SystemDef out = *this;
  if (values.empty()) return out;
  std::map<std::string, RatFun> bindings;
  for (const auto& [k, v] : values) {
    if (std::find(params.begin(), params.end(), k) == params.end())
      throw std::invalid_argument(name + ": not a parameter: " + k);
    bindings.emplace(k, RatFun::constant(vars, v));
  }
  for (auto& comp : out.field) comp = comp.substitute(bindings);
  out.params.erase(std::remove_if(out.params.begin(), out.params.end(),
                                  [&](const std::string& p) { return values.count(p) > 0; }),
                   out.params.end());
  return out;
}

ScalarODE ScalarODE::bind(const std::map<std::string, QuadExt>& values) const {
  ScalarODE out = *this;
  if (values.empty()) return out;
  std::map<std::string, RatFun> bindings;
  for (const auto& [k, v] : values) {
    if (std::find(params.begin(), params.end(), k) == params.end())
      throw std::invalid_argument(name + ": not a parameter: " + k);
    bindings.emplace(k, RatFun::constant(vars, v));
  }
  out.rhs = out.rhs.substitute(bindings);
  out.params.erase(std::remove_if(out.params.begin(), out.params.end(),
                                  [&](const std::string& p) { return values.count(p) > 0; }),
                   out.params.end());
  return out;
}

SystemDef jet_system(const ScalarODE& ode) {
  SystemDef s;
  s.name = ode.name + ".jet";
  s.vars = ode.vars;
  s.params = ode.params;
  s.dim = ode.order;
  s.has_time = ode.vars->find("t").has_value();
  for (int k = 1; k < ode.order; ++k)
    s.field.push_back(RatFun::var(s.vars, "u" + std::to_string(k)));
  s.field.push_back(ode.rhs);
  return s;
}

AutonomizeResult autonomize(const SystemDef& sys) {
  AutonomizeResult out;
  if (!sys.has_time) {
    out.sys = sys;
    out.was_autonomous = true;
    return out;
  }
  SystemDef s = sys;
  s.name = sys.name + ".autonomized";
  s.dim = sys.dim + 1;
  s.has_time = false;
  s.field.push_back(RatFun::constant(s.vars, QuadExt(1)));  // t' = 1
  out.sys = std::move(s);
  return out;
}

DerivationRules jet_rules(const ScalarODE& ode) {
  DerivationRules rules(ode.vars);
  auto rhs_poly = ode.rhs.as_polynomial();
  for (int k = 0; k < ode.order; ++k) {
    std::string cur = k == 0 ? "u" : "u" + std::to_string(k);
    if (k + 1 < ode.order) {
      rules.set(cur, MPoly::var(ode.vars, "u" + std::to_string(k + 1)));
    } else if (rhs_poly) {
      rules.set(cur, *rhs_poly);
    }
    // rational rhs: top rule left out; callers prolong manually
  }
  if (ode.vars->find("t")) rules.set("t", MPoly::constant(ode.vars, QuadExt(1)));
  for (const auto& p : ode.params) rules.set(p, MPoly::zero(ode.vars));
  return rules;
}

DerivationRules chazy_I_rules(bool alternative_closure, const VarsPtr& vars) {
  DerivationRules rules(vars);
  rules.set("A0", parse_poly(vars, "A1"));
  rules.set("A1", parse_poly(vars, "6*A0^2"));
  rules.set("B0", parse_poly(vars, "B1"));
  rules.set("C0", parse_poly(vars, "C1"));
  if (!alternative_closure) {
    rules.set("B1", parse_poly(vars, "6*A0*B0"));
    rules.set("C1", parse_poly(vars, "B0^2 + 2*A0*C0"));
  } else {
    // closure via the higher-derivative relations, with A''' = 12*A0*A1 and
    // B''' = d/dt(B'') expanded through the ring itself
    rules.set("B1", parse_poly(vars, "2/3*(9*A0*B0 + 12*A1*A0 - 12*A0*A1)"));
    rules.set("C1",
              parse_poly(vars, "1/3*(3*B0^2 + 6*A0*C0 + 6*A1*B0 + 6*A0*B1 - (6*A1*B0 + 6*A0*B1))"));
  }
  return rules;
}

Catalog::Catalog() {
  // --- canonical Chazy classes (section 2) ---
  add(make_ode("chazy.I.canonical", 3, {}, "-6*u1^2"));
  add(make_ode("chazy.II.canonical", 3, {}, "-2*u*u2 - 2*u1^2"));
  add(make_ode("chazy.III.canonical", 3, {}, "2*u*u2 - 3*u1^2"));
  add(make_ode("chazy.IV.canonical", 3, {}, "-3*u*u2 - 3*u1^2 - 3*u^2*u1"));
  add(make_ode("chazy.V.canonical", 3, {}, "-2*u*u2 - 4*u1^2 - 2*u^2*u1"));
  add(make_ode("chazy.VI.canonical", 3, {}, "-u*u2 - 5*u1^2 - u^2*u1"));
  add(make_ode("chazy.VII.canonical", 3, {}, "-u*u2 - 2*u1^2 + 2*u^2*u1"));
  add(make_ode("chazy.VIII.canonical", 3, {}, "6*u^2*u1"));
  add(make_ode("chazy.IX.canonical", 3, {}, "12*u1^2 + 72*u^2*u1 + 54*u^4"));
  add(make_ode("chazy.X.a.canonical", 3, {}, "6*u^2*u1 + 3/11*(9+7*sqrt3)*(u1+u^2)^2"));
  add(make_ode("chazy.X.b.canonical", 3, {}, "6*u^2*u1 + 3/11*(9-7*sqrt3)*(u1+u^2)^2"));
  add(make_ode("chazy.XI.canonical", 3, {"N"},
               "-2*u*u2 - 2*u1^2 + 24/(N^2-1)*(u1+u^2)^2",
               false, "N a positive integer, not 1 and not a multiple of 6"));
  add(make_ode("chazy.XII.canonical", 3, {"N"},
               "2*u*u2 - 3*u1^2 - 4/(N^2-36)*(6*u1-u^2)^2",
               false, "N a positive integer, not 1 and not 6"));
  add(make_ode("chazy.XIII.canonical", 3, {}, "12*u*u1"));

  // --- full equations with recessive terms ---
  add(make_ode("chazy.IX.equation", 3, {"delta"},
               "54*u^4 + 72*u^2*u1 + 12*u1^2 + delta"));
  add(make_ode("chazy.X.a.equation", 3, {"alpha"},
               "6*u^2*u1 + 3/11*(9+7*sqrt3)*(u1+u^2)^2 - 1/22*(4-3*sqrt3)*alpha*u1"
               " + 1/44*(3-5*sqrt3)*alpha*u^2 - 1/352*(9+7*sqrt3)*alpha^2"));
  add(make_ode("chazy.X.b.equation", 3, {"alpha"},
               "6*u^2*u1 + 3/11*(9-7*sqrt3)*(u1+u^2)^2 - 1/22*(4+3*sqrt3)*alpha*u1"
               " + 1/44*(3+5*sqrt3)*alpha*u^2 - 1/352*(9-7*sqrt3)*alpha^2"));
  add(make_ode("chazy.VIII.equation", 3, {"alpha", "beta", "gamma"},
               "6*u^2*u1 + (-2*alpha^2*t^2 + beta*t + gamma)*(u1 + alpha) + 2*alpha*u^2"
               " + (-4*alpha^2*t + beta)*u",
               true));
  add(make_ode("chazy.XI.N3.equation", 3, {},
               "3*u^4 + 6*u^2*u1 + u1^2 - 2*u*u2", false, "class XI at N = 3"));
  add(make_ode("example.3.1.equation", 3, {}, "u*u2 - 2*u1^2 + 6*u^2*u1"));
  add(make_ode("example.3.2.equation", 3, {"a"}, "2*u*u2 - 3*u1^2 + a*(6*u1 - u^2)^2"));
  add(make_ode("pii.equation", 2, {"alpha"}, "2*u^3 + t*u + alpha", true));
  add(make_ode("chazy.III.derived", 3, {},
               "-3*(u^2 - u1)*u1 + 3/2*u^4 - (u^3 - 2*u2)*(5*u^3 + 2*u2)/(2*(u^2 + 2*u1))",
               false, "third-order rational equation for v = Y"));

  {  // Chazy I with coefficient symbols; rules attached to the closed system
    ScalarODE ode;
    ode.name = "chazy.I.equation";
    ode.order = 3;
    ode.vars = VarTable::make({"u", "u1", "u2", "A0", "A1", "B0", "B1", "C0", "C1"});
    ode.rhs = parse_ratfun(ode.vars, "6*(-u1^2 + A0*(u1 + u^2) + B0*u + C0)");
    add(ode);
  }

  // --- Chazy III systems (sections 1, 4, 5) ---
  add(make_system("chazy.III.system", {"x", "y", "z"}, {},
                  {"x^2 - x*y", "y^2 - x*y + x*z - y*z", "z^2 + 8*x*z - 20*x*y"}));
  add(make_system("chazy.III.sys2", {"x", "y", "z"}, {},
                  {"-x*y", "(2*x + y - z)*y", "z^2 + 8*x*z - 20*x*y - 20*x^2"}));
  add(make_system("darboux.halphen.system", {"x", "y", "z"}, {},
                  {"y*z - x*(y + z)", "x*z - y*(x + z)", "x*y - z*(x + y)"}));
  add(make_system("example.3.1.system", {"x", "y", "z"}, {},
                  {"x^2 - x*y", "y^2 - x*y + x*z - y*z", "z^2 - 3*x*z - 4*x*y"}));
  add(make_system("example.3.2.system", {"x", "y", "z"}, {"a"},
                  {"2*x*y - x*z", "-y^2 + y*z",
                   "-3*x*y^2 + 36*a*x*y^2 - 12*a*x^2*y^2 + a*x^3*y^2 + 2*x*y*z - z^2"}));

  // --- Chazy IX systems (sections 6-9) ---
  add(make_system("chazy.IX.system", {"x", "y", "z"}, {"delta"},
                  {"-3/2*(sqrt5 - 1)*x^2 + y", "z",
                   "3*(sqrt5 + 3)*y^2 + 3*(sqrt5 - 1)*x*z + delta"}));
  add(make_system("chazy.IX.system.b", {"x", "y", "z"}, {"delta"},
                  {"-3/2*(-sqrt5 - 1)*x^2 + y", "z",
                   "3*(-sqrt5 + 3)*y^2 + 3*(-sqrt5 - 1)*x*z + delta"}));
  add(make_system("chazy.IX.system.s0", {"x", "y", "z"}, {"delta"},
                  {"-3/2*(sqrt5 - 1)*x^2 - (9 + 4*sqrt5)*y", "z",
                   "3*(sqrt5 + 3)*y^2 + 3*(sqrt5 - 1)*x*z + delta"}));
  add(make_system("chazy.IX.system.s1", {"x", "y", "z"}, {"delta"},
                  {"-3/2*(-sqrt5 - 1)*x^2 + (-9 + 4*sqrt5)*y", "z",
                   "3*(-sqrt5 + 3)*y^2 + 3*(-sqrt5 - 1)*x*z + delta"}));

  // --- Chazy X systems (sections 12-14) ---
  add(make_system("chazy.X.system", {"x", "y", "z"}, {"alpha"},
                  {"(3 + sqrt3)/2*x^2 + y", "z",
                   "2/11*(-3 + 5*sqrt3)*y^2 - (3 + sqrt3)*x*z + 1/22*(-4 + 3*sqrt3)*alpha*y"
                   " - 1/352*(9 + 7*sqrt3)*alpha^2"}));
  add(make_system("chazy.X.system.b", {"x", "y", "z"}, {"alpha"},
                  {"-x^2 + y - 1/8*(sqrt3 - 1)*alpha", "(5 + sqrt3)*x*y + z",
                   "-(15 + 7*sqrt3)*x^2*y + 2/11*(-3 + 5*sqrt3)*y^2 - (3 + sqrt3)*x*z"
                   " - 3/4*alpha*y"}));
  add(make_system("chazy.X.system.s0", {"x", "y", "z"}, {"alpha"},
                  {"(3 + sqrt3)/2*x^2 + 1/11*(-43 + 24*sqrt3)*y + (21 - 13*sqrt3)/66*alpha", "z",
                   "2/11*(-3 + 5*sqrt3)*y^2 - (3 + sqrt3)*x*z - 1/22*(-4 + 3*sqrt3)*alpha*y"
                   " - 1/352*(9 + 7*sqrt3)*alpha^2"}));
  add(make_system("chazy.X.system.s1", {"x", "y", "z"}, {"alpha"},
                  {"-(4 + sqrt3)*x^2 + (8*(89 + 46*sqrt3)*y - 11*(11 + 7*sqrt3)*alpha)/1144",
                   "(5 + sqrt3)*x*y - 1/13*(-4 + sqrt3)*z",
                   "(15 + 7*sqrt3)*x^2*y + (3 + sqrt3)*x*z + 1/44*y*(8*(3 - 5*sqrt3)*y"
                   " + 33*alpha)"}));

  // --- Chazy VIII systems (appendix B) ---
  add(make_system("chazy.VIII.system", {"x", "y", "z"}, {"alpha", "beta", "gamma"},
                  {"x^2 + y + beta/2*t - alpha^2*t^2 + alpha + gamma/2",
                   "-2*x*y + z + 2*alpha^2*t - beta/2", "-2*alpha*y - 2*alpha^2"},
                  true));
  add(make_system("chazy.VIII.system.s0", {"x", "y", "z"}, {"alpha", "beta", "gamma"},
                  {"x^2 + y - alpha^2*t^2 + beta/2*t + 3*alpha + gamma/2",
                   "z - 2*x*y - 2*alpha^2*t + beta/2", "2*alpha*y + 2*alpha^2"},
                  true));
  add(make_system("chazy.VIII.system.s1", {"x", "y", "z"}, {"alpha", "beta", "gamma"},
                  {"x^2 + y - alpha^2*t^2 + beta/2*t - 3*alpha + gamma/2",
                   "z - 2*x*y - 2*alpha^2*t + beta/2", "-2*alpha*y + 2*alpha^2"},
                  true));

  {  // Chazy I as a closed polynomial system over the coefficient ring
    SystemDef s = make_system(
        "chazy.I.system", {"x", "y", "z", "A0", "A1", "B0", "B1", "C0", "C1"}, {},
        {"y", "z", "6*(-y^2 + A0*(y + x^2) + B0*x + C0)", "A1", "6*A0^2", "B1", "6*A0*B0",
         "C1", "B0^2 + 2*A0*C0"});
    s.rules = chazy_I_rules(false, s.vars);
    s.note = "coefficient ring closed by the A,B,C relations";
    add(std::move(s));
  }

  // --- PII warm-up (section 7) ---
  add(make_system("pii.system", {"x", "y"}, {"alpha"}, {"y", "2*x^3 + t*x + alpha"}, true));
  add(make_system("pii.hamiltonian.system", {"q", "p"}, {"alpha"},
                  {"q^2 + p + t/2", "-2*q*p + alpha - 1/2"}, true));

  // --- appendix C ---
  add(make_system(
      "appC.mmSVIII", {"x", "y", "z"},
      {"alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6"},
      {"x^2 - x*y - x*z + (-alpha3 + alpha4 - alpha5 + alpha6)*x + alpha3*y + alpha5*z"
       " + alpha3*alpha5 - alpha4*alpha5 - alpha3*alpha6",
       "y^2 - x*y - y*z + alpha1*x + (-alpha1 + alpha2 + alpha5 - alpha6)*y + alpha6*z"
       " - alpha1*alpha5 + alpha1*alpha6 - alpha2*alpha6",
       "z^2 - x*z - y*z + alpha2*x + alpha4*y + (alpha1 - alpha2 + alpha3 - alpha4)*z"
       " - alpha2*alpha3 - alpha1*alpha4 + alpha2*alpha4"}));
  add(make_system(
      "appC.reduced", {"y", "z"},
      {"alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6", "I"},
      {"y^2 - y*z + (-alpha1 + alpha2 + alpha5 - alpha6)*y + alpha6*z - alpha1*alpha5"
       " + alpha1*alpha6 - alpha2*alpha6"
       " - (y - alpha1)*(I + y*z - alpha4*y + (alpha5 - alpha6)*z)/(z - alpha2)",
       "z^2 - 2*y*z + 2*alpha4*y + (alpha1 - alpha2 + alpha3 - alpha4 - alpha5 + alpha6)*z"
       " - alpha1*alpha4 + alpha2*alpha4 - alpha2*alpha3 - I"}));
  add(make_system(
      "appC.hamiltonian.system", {"q", "p"},
      {"alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6", "I"},
      {"2*q^2*p + (alpha2 - alpha4)*q^2 - 2*q*p"
       " + (alpha1 - alpha2 - alpha3 + alpha4 + alpha5 - alpha6)*q + alpha6 - alpha1",
       "-2*q*p^2 + p^2 - 2*(alpha2 - alpha4)*q*p"
       " - (alpha1 - alpha2 - alpha3 + alpha4 + alpha5 - alpha6)*p"
       " - I - alpha1*alpha2 + alpha1*alpha4 - alpha2*alpha5 + alpha2*alpha6"},
      false, "autonomous Painleve V form; canonical variables (q,p) = (X,Y)"));

  // --- appendix D ---
  add(make_system(
      "appD.system", {"x", "y", "z"}, {"alpha1", "alpha2", "alpha3"},
      {"x^2 - x*y - (alpha1 - 2*alpha3)*x + (alpha1 - alpha3)*y - (alpha1 - alpha3)*alpha3",
       "y^2 - x*y + x*z - y*z + (alpha1 - alpha2)*x - (alpha1 - alpha2 + alpha3)*y"
       " + alpha3*z + (alpha1 - alpha2)*alpha3",
       "z^2 - 3*x*z + 3*alpha2*x + (3*alpha1 - 2*alpha2 - 3*alpha3)*z"
       " - alpha2*(3*alpha1 - alpha2 - 3*alpha3)"}));

  // --- appendix E ---
  add(make_system("appE.system", {"x", "y", "z"}, {},
                  {"x^2 - 2*x*y - 2*y*z", "y^2 - 2*x*y", "x*z"}));
  add(make_system("appE.reduced", {"y", "z"}, {"I"},
                  {"y^2 - 2*(I - y^2*z^4)/(y*z^3)", "(I - y^2*z^4)/(y^2*z^2)"}));
  add(make_system("appE.autoPIV", {"q", "p"}, {"I"}, {"p^2", "-I*q^2 + 1"},
                  false, "autonomous Painleve IV form; (q,p) = (X,Y)"));
  add(make_system("appE.gen", {"s", "c"}, {"a", "alpha1", "alpha2"},
                  {"c^2 - a*s + alpha1", "-s^2 + a*c + alpha2"},
                  false, "two-variable generalization with A2(1) Weyl symmetry"));

  // --- appendix F ---
  add(make_system("halphen.classic", {"x", "y", "z"}, {"alpha", "beta", "gamma"},
                  {"x^2 + gamma*(x - y)^2 + beta*(z - x)^2 + alpha*(y - z)^2",
                   "y^2 + gamma*(x - y)^2 + beta*(z - x)^2 + alpha*(y - z)^2",
                   "z^2 + gamma*(x - y)^2 + beta*(z - x)^2 + alpha*(y - z)^2"}));
  add(make_system(
      "halphen.four", {"x", "y", "z", "w"},
      {"alpha", "beta", "chi", "delta", "epsilon", "gamma"},
      {"x^2 + alpha*(x - y)^2 + beta*(x - z)^2 + chi*(x - w)^2 + delta*(y - z)^2"
       " + epsilon*(y - w)^2 + gamma*(z - w)^2",
       "y^2 + alpha*(x - y)^2 + beta*(x - z)^2 + chi*(x - w)^2 + delta*(y - z)^2"
       " + epsilon*(y - w)^2 + gamma*(z - w)^2",
       "z^2 + alpha*(x - y)^2 + beta*(x - z)^2 + chi*(x - w)^2 + delta*(y - z)^2"
       " + epsilon*(y - w)^2 + gamma*(z - w)^2",
       "w^2 + alpha*(x - y)^2 + beta*(x - z)^2 + chi*(x - w)^2 + delta*(y - z)^2"
       " + epsilon*(y - w)^2 + gamma*(z - w)^2"}));

  // --- Pfaffian systems (sections 10-11) ---
  add(make_pfaffian(
      "chazy.IX.pde", {"x", "y", "z"}, {"delta"},
      {"-3/2*(sqrt5 - 1)*x^2 + y", "z", "3*(sqrt5 + 3)*y^2 + 3*(sqrt5 - 1)*x*z + delta"},
      {"-12*(sqrt5 + 2)*x^2*y + (sqrt5 + 1)*(3*x*z - 2*y^2 - 2/3*delta)",
       "-6*(2*sqrt5 - 5)*x^2*z + 12*sqrt5*x*y^2 - (sqrt5 + 1)*y*z + (3*sqrt5 - 5)*delta*x",
       "48*x*y*z - 24*y^3 - (sqrt5 + 1)*z^2 + 2*(sqrt5 - 3)*delta*y"}));
  add(make_pfaffian(
      "chazy.IX.pde.soliton", {"x", "y", "z"}, {"delta"},
      {"y", "z", "54*x^4 + 72*x^2*y + 12*y^2 + delta"},
      {"54*x^4 + 18*x^2*y + 3*y^2 - 9/2*x*z + delta",
       "-243*x^5 - 108*x^3*y - 18*x*y^2 + 18*x^2*z + 3/2*y*z - 9/2*delta*x",
       "972*x^6 + 162*x^4*y - 108*x^3*z + 3/2*z^2 + 18*delta*x^2 - 3*delta*y"},
      "soliton-side pair; the dt direction is the Chazy IX jet"));
}

void Catalog::add(SystemDef s) {
  std::string key = s.name;
  entries_.emplace(std::move(key), std::move(s));
}
void Catalog::add(ScalarODE s) {
  std::string key = s.name;
  entries_.emplace(std::move(key), std::move(s));
}
void Catalog::add(PfaffianDef s) {
  std::string key = s.name;
  entries_.emplace(std::move(key), std::move(s));
}

const Catalog& Catalog::instance() {
  static const Catalog cat;
  return cat;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

bool Catalog::contains(const std::string& name) const { return entries_.count(name) > 0; }

const CatalogEntry& Catalog::entry(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw std::invalid_argument("catalog: unknown name " + name);
  return it->second;
}

const SystemDef& Catalog::system(const std::string& name) const {
  return std::get<SystemDef>(entry(name));
}
const ScalarODE& Catalog::ode(const std::string& name) const {
  return std::get<ScalarODE>(entry(name));
}
const PfaffianDef& Catalog::pfaffian(const std::string& name) const {
  return std::get<PfaffianDef>(entry(name));
}

namespace {

void validate_N(const std::string& name, const QuadExt& N) {
  if (!N.is_integer() || N.a() <= 0)
    throw std::invalid_argument(name + ": N must be a positive integer");
  long n = N.a().get_num().get_si();
  if (name == "chazy.XI.canonical" && (n == 1 || n % 6 == 0))
    throw std::invalid_argument(name + ": N must not be 1 or a multiple of 6");
  if (name == "chazy.XII.canonical" && (n == 1 || n == 6))
    throw std::invalid_argument(name + ": N must not be 1 or 6");
}

}  // namespace

CatalogEntry Catalog::get(const std::string& name,
                          const std::map<std::string, QuadExt>& bindings) const {
  const CatalogEntry& e = entry(name);
  if (auto it = bindings.find("N"); it != bindings.end()) validate_N(name, it->second);
  if (bindings.empty()) return e;
  if (std::holds_alternative<SystemDef>(e)) return std::get<SystemDef>(e).bind(bindings);
  if (std::holds_alternative<ScalarODE>(e)) return std::get<ScalarODE>(e).bind(bindings);
  throw std::invalid_argument(name + ": parameter binding not supported for Pfaffian entries");
}

std::vector<std::string> Catalog::suggest(const std::string& name, int max) const {
  // rank by longest common prefix, then substring hits
  std::vector<std::pair<int, std::string>> scored;
  for (const auto& [k, v] : entries_) {
    int score = 0;
    for (std::size_t i = 0; i < std::min(k.size(), name.size()); ++i) {
      if (k[i] != name[i]) break;
      ++score;
    }
    if (k.find(name) != std::string::npos) score += 4;
    scored.emplace_back(-score, k);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (int i = 0; i < std::min<int>(max, static_cast<int>(scored.size())); ++i)
    out.push_back(scored[i].second);
  return out;
}

}  // namespace chazy
