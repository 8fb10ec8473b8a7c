#include "registry_internal.hpp"

namespace chazy {

namespace {

SystemDef carrier(const std::string& name) {
  const auto& cat = Catalog::instance();
  const CatalogEntry& e = cat.entry(name);
  if (std::holds_alternative<SystemDef>(e)) return std::get<SystemDef>(e);
  if (std::holds_alternative<ScalarODE>(e)) return jet_system(std::get<ScalarODE>(e));
  const auto& p = std::get<PfaffianDef>(e);
  SystemDef s;
  s.name = p.name;
  s.vars = p.vars;
  s.dim = p.dim;
  for (const auto& f : p.f) s.field.emplace_back(f);
  s.params = p.params;
  return s;
}

BiMap make_map(const std::string& name, const std::string& source, const std::string& target,
               const std::vector<std::string>& forward, const std::vector<std::string>& inverse,
               const std::map<std::string, std::string>& actions = {},
               bool time_dependent = false, const std::string& note = "") {
  BiMap m;
  m.name = name;
  m.source = source;
  m.target = target;
  m.time_dependent = time_dependent;
  m.note = note;
  SystemDef src = carrier(source);
  SystemDef tgt = carrier(target);
  for (const auto& e : forward) m.forward.push_back(parse_ratfun(src.vars, e));
  for (const auto& e : inverse) m.inverse.push_back(parse_ratfun(tgt.vars, e));
  for (const auto& [p, e] : actions) m.param_action.emplace(p, parse_ratfun(src.vars, e));
  return m;
}

ScalarBT make_bt(const std::string& name, const std::string& source, const std::string& target,
                 const std::string& forward, const std::map<std::string, std::string>& actions,
                 const std::string& note = "") {
  ScalarBT m;
  m.name = name;
  m.source = source;
  m.target = target;
  m.note = note;
  const auto& src = Catalog::instance().ode(source);
  m.forward = parse_ratfun(src.vars, forward);
  for (const auto& [p, e] : actions) m.param_action.emplace(p, parse_ratfun(src.vars, e));
  return m;
}

}  // namespace

MapRegistry::MapRegistry() {
  auto add = [&](BiMap m) { maps_.emplace(m.name, std::move(m)); };
  auto addb = [&](ScalarBT m) { scalars_.emplace(m.name, std::move(m)); };

  // ---------- Chazy III (sections 1, 4) ----------
  add(make_map("iii.phi0", "chazy.III.canonical", "chazy.III.system",
               {"u/6", "-u1/u + u/6", "-u2/u1 + u/3"}, {}));
  add(make_map("iii.intro", "chazy.III.canonical", "chazy.III.sys2",
               {"u/6", "-u1/u", "-u2/u1 + u/3"}, {}));
  add(make_map("iii.lin", "chazy.III.system", "chazy.III.sys2",
               {"x", "y - x", "z"}, {"x", "y + x", "z"}));
  add(make_map("dh.to.chazy3", "darboux.halphen.system", "chazy.III.canonical",
               {"-2*(x + y + z)", "2*(x*z + y*z + x*y)", "-12*x*y*z"}, {}));
  add(make_map("dh.pi", "darboux.halphen.system", "darboux.halphen.system",
               {"y", "z", "x"}, {"z", "x", "y"}));

  // ---------- section 7: PII warm-up ----------
  add(make_map("pii.phi", "pii.system", "pii.hamiltonian.system",
               {"x", "y - x^2 - t/2"}, {"q", "p + q^2 + t/2"},
               {{"alpha", "alpha"}}, true));

  // ---------- examples 3.1 / 3.2 ----------
  add(make_map("ex31.phi0", "example.3.1.equation", "example.3.1.system",
               {"u", "-u1/u + u", "-u2/u1 + 2*u"}, {}));
  add(make_map("ex32.phi0", "example.3.2.equation", "example.3.2.system",
               {"u^2/u1", "u1/u", "u2/u1"}, {}, {{"a", "a"}}));

  // ---------- Chazy IX (sections 6, 9) ----------
  add(make_map("ix.phi0", "chazy.IX.equation", "chazy.IX.system",
               {"u", "u1 + 3/2*(sqrt5 - 1)*u^2", "u2 + 3*(sqrt5 - 1)*u*u1"},
               {"x", "y - 3/2*(sqrt5 - 1)*x^2",
                "z - 3*(sqrt5 - 1)*x*(y - 3/2*(sqrt5 - 1)*x^2)"},
               {{"delta", "delta"}}));
  add(make_map("ix.s0", "chazy.IX.system", "chazy.IX.system.s0",
               {"x + 2*(3*(sqrt5 + 3)*y^2 + delta)/(3*(sqrt5 - 1)*z)", "-y", "-z"},
               {"x + 2*(3*(sqrt5 + 3)*y^2 + delta)/(3*(sqrt5 - 1)*z)", "-y", "-z"},
               {{"delta", "delta"}}));
  add(make_map("ix.phi1", "chazy.IX.system.s0", "chazy.IX.equation",
               {"1/2*(sqrt5 - 3)*x", "3*(sqrt5 - 2)*x^2 + 1/2*(7 + 3*sqrt5)*y",
                "9*(3*sqrt5 - 7)*x^3 - 6*(sqrt5 + 2)*x*y + 1/2*(3*sqrt5 + 7)*z"},
               {"-(sqrt5 + 3)/2*u",
                "(7 - 3*sqrt5)/2*(u1 - 3*(sqrt5 - 2)*((sqrt5 + 3)/2*u)^2)",
                "(7 - 3*sqrt5)/2*(u2 - 9*(3*sqrt5 - 7)*(-(sqrt5 + 3)/2*u)^3"
                " + 6*(sqrt5 + 2)*(-(sqrt5 + 3)/2*u)"
                "*((7 - 3*sqrt5)/2*(u1 - 3*(sqrt5 - 2)*((sqrt5 + 3)/2*u)^2)))"},
               {{"delta", "(7 + 3*sqrt5)/2*delta"}}));
  add(make_map("ix.pi", "chazy.IX.system", "chazy.IX.system.b",
               {"x", "y - 3*sqrt5*x^2", "z - 6*sqrt5*x*y - 9*(sqrt5 - 5)*x^3"},
               {"x", "y + 3*sqrt5*x^2",
                "z + 6*sqrt5*x*(y + 3*sqrt5*x^2) + 9*(sqrt5 - 5)*x^3"},
               {{"delta", "delta"}}));
  add(make_map("ix.s1", "chazy.IX.system.b", "chazy.IX.system.s1",
               {"x - 2*(3*(-sqrt5 + 3)*y^2 + delta)/(3*(sqrt5 + 1)*z)", "-y", "-z"},
               {"x - 2*(3*(-sqrt5 + 3)*y^2 + delta)/(3*(sqrt5 + 1)*z)", "-y", "-z"},
               {{"delta", "delta"}}));
  add(make_map("ix.phi2", "chazy.IX.system.s1", "chazy.IX.equation",
               {"1/2*(-sqrt5 - 3)*x", "3*(-sqrt5 - 2)*x^2 + 1/2*(7 - 3*sqrt5)*y",
                "9*(-3*sqrt5 - 7)*x^3 - 6*(-sqrt5 + 2)*x*y + 1/2*(-3*sqrt5 + 7)*z"},
               {},
               {{"delta", "(7 - 3*sqrt5)/2*delta"}}));
  addb(make_bt("ix.g0", "chazy.IX.equation", "chazy.IX.equation",
               "(sqrt5 - 3)*(108*u^4 + 18*(5 + sqrt5)*u^2*u1 + 6*(3 + sqrt5)*u1^2"
               " + 3*(sqrt5 - 1)*u*u2 + 2*delta)"
               "/(6*(sqrt5 - 1)*(3*(sqrt5 - 1)*u*u1 + u2))",
               {{"delta", "(7 + 3*sqrt5)/2*delta"}}));
  addb(make_bt("ix.g1", "chazy.IX.equation", "chazy.IX.equation",
               "(-sqrt5 - 3)*(108*u^4 + 18*(5 - sqrt5)*u^2*u1 + 6*(3 - sqrt5)*u1^2"
               " + 3*(-sqrt5 - 1)*u*u2 + 2*delta)"
               "/(6*(-sqrt5 - 1)*(3*(-sqrt5 - 1)*u*u1 + u2))",
               {{"delta", "(7 - 3*sqrt5)/2*delta"}}));

  // ---------- Chazy X (sections 12-13) ----------
  add(make_map("x.phi0", "chazy.X.a.equation", "chazy.X.system",
               {"u", "u1 - (3 + sqrt3)/2*u^2", "u2 - (3 + sqrt3)*u*u1"},
               {"x", "y + (3 + sqrt3)/2*x^2",
                "z + (3 + sqrt3)*x*(y + (3 + sqrt3)/2*x^2)"},
               {{"alpha", "alpha"}}));
  add(make_map("x.s0", "chazy.X.system", "chazy.X.system.s0",
               {"x - (64*(-3 + 5*sqrt3)*y^2 + 16*(-4 + 3*sqrt3)*alpha*y"
                " - (9 + 7*sqrt3)*alpha^2)/(176*(3 + sqrt3)*z)",
                "-y", "-z"},
               {"x - (64*(-3 + 5*sqrt3)*y^2 - 16*(-4 + 3*sqrt3)*alpha*y"
                " - (9 + 7*sqrt3)*alpha^2)/(176*(3 + sqrt3)*z)",
                "-y", "-z"},
               {{"alpha", "alpha"}}));
  add(make_map("x.phi1", "chazy.X.system.s0", "chazy.X.b.equation",
               {"(2 + sqrt3)*x",
                "(2 + sqrt3)/(11*(3 + sqrt3))*(33*(2 + sqrt3)*x^2 + (-57 + 29*sqrt3)*y"
                " - (-4 + 3*sqrt3)*alpha)",
                "6*(2 + sqrt3)/(11*(3 + sqrt3)^3)*(33*(33 + 19*sqrt3)*x^3"
                " - 6*(13 + 4*sqrt3)*x*y + (-27 + sqrt3)*z - (9 + 7*sqrt3)*alpha*x)"},
               {},
               {{"alpha", "alpha"}}));
  add(make_map("x.pi", "chazy.X.system", "chazy.X.system.b",
               {"x", "y + (5 + sqrt3)/2*x^2 + (sqrt3 - 1)/8*alpha",
                "z - (5 + sqrt3)*x^3 - (2*sqrt3 - 1)/4*alpha*x"},
               {"x", "y - (5 + sqrt3)/2*x^2 - (sqrt3 - 1)/8*alpha",
                "z + (5 + sqrt3)*x^3 + (2*sqrt3 - 1)/4*alpha*x"},
               {{"alpha", "alpha"}}));
  add(make_map("x.s1", "chazy.X.system.b", "chazy.X.system.s1",
               {"x - (sqrt3 - 4)*z/(13*y)", "y", "-z"},
               {"x - (sqrt3 - 4)*z/(13*y)", "y", "-z"},
               {{"alpha", "alpha"}}));
  add(make_map("x.phi2", "chazy.X.system.s1", "chazy.X.b.equation",
               {"(4 + sqrt3)*x",
                "-(19 + 8*sqrt3)*x^2 + 1/11*(38 + 21*sqrt3)*y - 1/8*(5 + 3*sqrt3)*alpha",
                "2*(100 + 51*sqrt3)*x^3 + 1/143*(89 + 46*sqrt3)*z"
                " + x/44*(-4*(177 + 101*sqrt3)*y + 11*(29 + 17*sqrt3)*alpha)"},
               {},
               {{"alpha", "(-2 - sqrt3)*alpha"}},
               false,
               "parameter action corrected: the stated (-2 + sqrt3) multiplier admits"
               " no pushforward; (-2 - sqrt3) is the unique solution"));
  addb(make_bt("x.g0", "chazy.X.a.equation", "chazy.X.b.equation",
               "(3 + sqrt3)/(1056*((3 + sqrt3)*u*u1 - u2))*(288*(6 + sqrt3)*u^2*u1"
               " - 176*(3 + sqrt3)*u*u2 + 96*(9 + 7*sqrt3)*u^4 + 64*(-3 + 5*sqrt3)*u1^2"
               " - 8*(-3 + 5*sqrt3)*alpha*u^2 + 16*(-4 + 3*sqrt3)*alpha*u1"
               " - (9 + 7*sqrt3)*alpha^2)",
               {{"alpha", "alpha"}}));
  addb(make_bt("x.g1", "chazy.X.a.equation", "chazy.X.b.equation",
               "(4 + sqrt3)*(8*(-4 + sqrt3)*u^3 - 8*(-4 + sqrt3)*u*u1 - 8*(-4 + sqrt3)*u2"
               " - (-7 + 5*sqrt3)*alpha*u)/(13*(8*u^2 + 8*u1 + (sqrt3 - 1)*alpha))",
               {{"alpha", "(-2 - sqrt3)*alpha"}},
               "parameter action corrected as for x.phi2"));

  // ---------- Chazy VIII (appendix B) ----------
  add(make_map("viii.phi0", "chazy.VIII.equation", "chazy.VIII.system",
               {"u", "u1 - u^2 - 1/2*((-2*alpha^2*t + beta)*t + 2*alpha + gamma)",
                "u2 - 2*u^3 - ((-2*alpha^2*t + beta)*t + 2*alpha + gamma)*u"},
               {}, {{"alpha", "alpha"}, {"beta", "beta"}, {"gamma", "gamma"}}, true));
  add(make_map("viii.s0", "chazy.VIII.system", "chazy.VIII.system.s0",
               {"x - (2*z + 4*alpha^2*t - beta)/(2*y)", "y", "-z"},
               {"x - (2*z - 4*alpha^2*t + beta)/(2*y)", "y", "-z"},
               {{"alpha", "alpha"}, {"beta", "beta"}, {"gamma", "gamma"}}, true));
  add(make_map("viii.s1", "chazy.VIII.system", "chazy.VIII.system.s1",
               {"-(x + (z + 4*alpha*x - 2*alpha^2*t + beta/2)"
                "/(y + 2*x^2 - 2*alpha^2*t^2 + beta*t + gamma))",
                "-(y + 2*x^2 - 2*alpha^2*t^2 + beta*t + gamma)", "z + 4*alpha*x"},
               {"-x + (2*z - 4*alpha^2*t + beta)/(2*y)",
                "-y - 2*x^2 + 2*alpha^2*t^2 - beta*t - gamma + 4*x*(z - 2*alpha^2*t)/y"
                " + (4*beta*x*y - 4*z^2 + 4*z*(4*alpha^2*t - beta) - 16*alpha^4*t^2"
                " + 8*alpha^2*beta*t - beta^2)/(2*y^2)",
                "z + 4*alpha*x - 2*alpha*(2*z - 4*alpha^2*t + beta)/y"},
               {{"alpha", "alpha"}, {"beta", "beta"}, {"gamma", "gamma"}}, true));
  add(make_map("viii.s1.inv", "chazy.VIII.system.s1", "chazy.VIII.system",
               {"-x + (2*z - 4*alpha^2*t + beta)/(2*y)",
                "-y - 2*x^2 + 2*alpha^2*t^2 - beta*t - gamma + 4*x*(z - 2*alpha^2*t)/y"
                " + (4*beta*x*y - 4*z^2 + 4*z*(4*alpha^2*t - beta) - 16*alpha^4*t^2"
                " + 8*alpha^2*beta*t - beta^2)/(2*y^2)",
                "z + 4*alpha*x - 2*alpha*(2*z - 4*alpha^2*t + beta)/y"},
               {}, {{"alpha", "alpha"}, {"beta", "beta"}, {"gamma", "gamma"}}, true,
               "inverse direction of viii.s1"));
  add(make_map("viii.phi", "chazy.VIII.system.s0", "chazy.VIII.system.s1",
               {"x", "y", "z"}, {"x", "y", "z"},
               {{"alpha", "-alpha"}, {"beta", "beta"}, {"gamma", "gamma"}}, true,
               "parameter flip carrying the first transformed system to the second"));
  add(make_map("viii.pi", "chazy.VIII.system", "chazy.VIII.system",
               {"-x", "-y - 2*x^2 + 2*alpha^2*t^2 - beta*t - gamma", "-z - 4*alpha*x"},
               {"-x", "-y - 2*x^2 + 2*alpha^2*t^2 - beta*t - gamma", "-z - 4*alpha*x"},
               {{"alpha", "-alpha"}, {"beta", "beta"}, {"gamma", "gamma"}}, true));
  add(make_map("viii.s0.special", "chazy.VIII.system", "chazy.VIII.system",
               {"x - z/y", "y", "-z"}, {},
               {{"alpha", "alpha"}, {"beta", "beta"}, {"gamma", "gamma"}}, true,
               "auto transformation only on the alpha = beta = 0 slice"));
  add(make_map("viii.s1.special", "chazy.VIII.system", "chazy.VIII.system",
               {"-(x + z/(y + 2*x^2 + gamma))", "-(y + 2*x^2 + gamma)", "z"}, {},
               {{"alpha", "alpha"}, {"beta", "beta"}, {"gamma", "gamma"}}, true,
               "auto transformation only on the alpha = beta = 0 slice"));

  // ---------- appendix C ----------
  add(make_map("appC.s0", "appC.mmSVIII", "appC.mmSVIII", {"y", "x", "z"}, {"y", "x", "z"},
               {{"alpha1", "alpha3"}, {"alpha2", "alpha4"}, {"alpha3", "alpha1"},
                {"alpha4", "alpha2"}, {"alpha5", "alpha6"}, {"alpha6", "alpha5"}}));
  add(make_map("appC.s1", "appC.mmSVIII", "appC.mmSVIII", {"z", "y", "x"}, {"z", "y", "x"},
               {{"alpha1", "alpha6"}, {"alpha2", "alpha5"}, {"alpha3", "alpha4"},
                {"alpha4", "alpha3"}, {"alpha5", "alpha2"}, {"alpha6", "alpha1"}}));
  add(make_map("appC.s2", "appC.mmSVIII", "appC.mmSVIII", {"x", "z", "y"}, {"x", "z", "y"},
               {{"alpha1", "alpha2"}, {"alpha2", "alpha1"}, {"alpha3", "alpha5"},
                {"alpha4", "alpha6"}, {"alpha5", "alpha3"}, {"alpha6", "alpha4"}}));
  add(make_map("appC.pi", "appC.mmSVIII", "appC.mmSVIII", {"y", "z", "x"}, {"z", "x", "y"},
               {{"alpha1", "alpha4"}, {"alpha2", "alpha3"}, {"alpha3", "alpha6"},
                {"alpha4", "alpha5"}, {"alpha5", "alpha1"}, {"alpha6", "alpha2"}}));
  add(make_map("appC.canonical", "appC.reduced", "appC.hamiltonian.system",
               {"(y - alpha1)/(z - alpha2)", "z - alpha2"},
               {"alpha1 + q*p", "alpha2 + p"},
               {{"alpha1", "alpha1"}, {"alpha2", "alpha2"}, {"alpha3", "alpha3"},
                {"alpha4", "alpha4"}, {"alpha5", "alpha5"}, {"alpha6", "alpha6"},
                {"I", "I"}}));

  // ---------- appendix E ----------
  {
    const std::string om = "((1 + isqrt3)/2)";
    add(make_map("appE.w0", "appE.gen", "appE.gen",
                 {"s - (alpha1 + alpha2)/(s + c + a)", "c + (alpha1 + alpha2)/(s + c + a)"},
                 {"s - (alpha1 + alpha2)/(s + c + a)", "c + (alpha1 + alpha2)/(s + c + a)"},
                 {{"alpha1", "-alpha2"}, {"alpha2", "-alpha1"}, {"a", "a"}}));
    add(make_map("appE.w1", "appE.gen", "appE.gen",
                 {"s - " + om + "*(" + om + "*alpha1 - alpha2)/(c - " + om + "*s + " + om +
                      "^2*a)",
                  "c + (alpha1 + " + om + "^2*alpha2)/(c - " + om + "*s + " + om + "^2*a)"},
                 {},
                 {{"alpha1", "-" + om + "^2*alpha2"}, {"alpha2", om + "*alpha1"}, {"a", "a"}}));
    add(make_map("appE.w2", "appE.gen", "appE.gen",
                 {"s - " + om + "*(" + om + "*alpha2 - alpha1)/(c + " + om + "^2*s - " + om +
                      "*a)",
                  "c - (" + om + "*alpha2 - alpha1)/(c + " + om + "^2*s - " + om + "*a)"},
                 {},
                 {{"alpha1", om + "*alpha2"}, {"alpha2", "-" + om + "^2*alpha1"}, {"a", "a"}}));
    add(make_map("appE.pi", "appE.gen", "appE.gen",
                 {"-s/" + om, "-" + om + "*c"}, {},
                 {{"alpha1", om + "^2*alpha1"}, {"alpha2", "-" + om + "*alpha2"}, {"a", "a"}},
                 false,
                 "alpha1 action sign corrected; the printed -(-1)^(2/3) alpha1 is not a"
                 " symmetry, and with the correction pi^3 = 1"));
    add(make_map("appE.canonical", "appE.reduced", "appE.autoPIV",
                 {"-1/(y*z^2)", "1/z"}, {},
                 {{"I", "I"}}));
  }

  // ---------- appendix F ----------
  add(make_map("appF.s0", "halphen.classic", "halphen.classic", {"y", "x", "z"},
               {"y", "x", "z"},
               {{"alpha", "beta"}, {"beta", "alpha"}, {"gamma", "gamma"}}));
  add(make_map("appF.s1", "halphen.classic", "halphen.classic", {"z", "y", "x"},
               {"z", "y", "x"},
               {{"alpha", "gamma"}, {"beta", "beta"}, {"gamma", "alpha"}}));
  add(make_map("appF.s2", "halphen.classic", "halphen.classic", {"x", "z", "y"},
               {"x", "z", "y"},
               {{"alpha", "alpha"}, {"beta", "gamma"}, {"gamma", "beta"}}));
  add(make_map("appF.pi", "halphen.classic", "halphen.classic", {"y", "z", "x"},
               {"z", "x", "y"},
               {{"alpha", "beta"}, {"beta", "gamma"}, {"gamma", "alpha"}}));
  add(make_map("appF4.s1", "halphen.four", "halphen.four", {"y", "x", "z", "w"}, {},
               {{"alpha", "alpha"}, {"beta", "delta"}, {"chi", "epsilon"},
                {"delta", "beta"}, {"epsilon", "chi"}, {"gamma", "gamma"}}));
  add(make_map("appF4.s2", "halphen.four", "halphen.four", {"z", "y", "x", "w"}, {},
               {{"alpha", "delta"}, {"beta", "beta"}, {"chi", "gamma"},
                {"delta", "alpha"}, {"epsilon", "epsilon"}, {"gamma", "chi"}}));
  add(make_map("appF4.s3", "halphen.four", "halphen.four", {"w", "y", "z", "x"}, {},
               {{"alpha", "epsilon"}, {"beta", "gamma"}, {"chi", "chi"},
                {"delta", "delta"}, {"epsilon", "alpha"}, {"gamma", "beta"}}));
  add(make_map("appF4.s4", "halphen.four", "halphen.four", {"x", "z", "y", "w"}, {},
               {{"alpha", "beta"}, {"beta", "alpha"}, {"chi", "chi"},
                {"delta", "delta"}, {"epsilon", "gamma"}, {"gamma", "epsilon"}}));
  add(make_map("appF4.s5", "halphen.four", "halphen.four", {"x", "w", "z", "y"}, {},
               {{"alpha", "chi"}, {"beta", "beta"}, {"chi", "alpha"},
                {"delta", "gamma"}, {"epsilon", "epsilon"}, {"gamma", "delta"}}));
  add(make_map("appF4.s6", "halphen.four", "halphen.four", {"x", "y", "w", "z"}, {},
               {{"alpha", "alpha"}, {"beta", "chi"}, {"chi", "beta"},
                {"delta", "epsilon"}, {"epsilon", "delta"}, {"gamma", "gamma"}}));
  add(make_map("appF4.pi", "halphen.four", "halphen.four", {"y", "z", "w", "x"}, {},
               {{"alpha", "delta"}, {"beta", "epsilon"}, {"chi", "alpha"},
                {"delta", "gamma"}, {"epsilon", "beta"}, {"gamma", "chi"}}));

  // ---------- chart groups ----------
  charts_.emplace("chazy.III.system.charts", internal_charts::chazy_III_charts());
  charts_.emplace("chazy.IX.pde.charts", internal_charts::chazy_IX_pde_charts());
  charts_.emplace("chazy.X.system.charts", internal_charts::chazy_X_charts());
  charts_.emplace("chazy.VIII.system.charts", internal_charts::chazy_VIII_charts());
  charts_.emplace("appC.mmSVIII.charts", internal_charts::appC_charts());
  charts_.emplace("appD.system.charts", internal_charts::appD_charts());
  charts_.emplace("appE.system.charts", internal_charts::appE_charts());
  charts_.emplace("appE.gen.charts", internal_charts::appE_gen_charts());
  charts_.emplace("chazy.I.system.charts", internal_charts::chazy_I_charts());
}

const MapRegistry& MapRegistry::instance() {
  static const MapRegistry reg;
  return reg;
}

std::vector<std::string> MapRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : maps_) out.push_back(k);
  return out;
}

std::vector<std::string> MapRegistry::scalar_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : scalars_) out.push_back(k);
  return out;
}

std::vector<std::string> MapRegistry::chart_group_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : charts_) out.push_back(k);
  return out;
}

const BiMap& MapRegistry::map(const std::string& name) const {
  auto it = maps_.find(name);
  if (it == maps_.end()) throw std::invalid_argument("map registry: unknown map " + name);
  return it->second;
}

const ScalarBT& MapRegistry::scalar(const std::string& name) const {
  auto it = scalars_.find(name);
  if (it == scalars_.end()) throw std::invalid_argument("map registry: unknown BT " + name);
  return it->second;
}

const std::vector<Chart>& MapRegistry::charts(const std::string& group) const {
  auto it = charts_.find(group);
  if (it == charts_.end()) throw std::invalid_argument("map registry: unknown charts " + group);
  return it->second;
}

bool MapRegistry::has_map(const std::string& name) const { return maps_.count(name) > 0; }
bool MapRegistry::has_scalar(const std::string& name) const { return scalars_.count(name) > 0; }
bool MapRegistry::has_charts(const std::string& group) const { return charts_.count(group) > 0; }

}  // namespace chazy
