#include "registry_internal.hpp"

namespace chazy {

namespace internal_charts {

Chart from_strings(const SystemDef& sys, const std::string& name, int boundary,
                   const std::vector<std::string>& cnames,
                   const std::vector<std::string>& to_exprs,
                   const std::vector<std::string>& from_exprs) {
  Chart ch;
  ch.name = name;
  ch.base_vars = sys.vars;
  std::vector<std::string> names = cnames;
  for (int i = sys.dim; i < sys.vars->size(); ++i) names.push_back(sys.vars->name(i));
  ch.chart_vars = VarTable::make(names);
  ch.boundary_index = boundary;
  for (const auto& e : to_exprs) ch.to_chart.push_back(parse_ratfun(sys.vars, e));
  for (const auto& e : from_exprs) ch.from_chart.push_back(parse_ratfun(ch.chart_vars, e));
  if (!ch.roundtrip_ok(sys.dim))
    throw std::logic_error("chart registry: " + name + " round trip failed");
  return ch;
}

std::vector<Chart> chazy_III_charts() {
  const auto& sys = Catalog::instance().system("chazy.III.system");
  std::vector<Chart> out;
  out.push_back(from_strings(sys, "4.2-1", 0, {"x1", "y1", "z1"},
      {"-(x - y)/(2*x)", "x", "(x - y)*(x + 3*y - 2*z)/(4*x)"},
      {"y1", "y1*(1 + 2*x1)", "(z1 + 2*x1*y1 + 3*x1^2*y1)/x1"}));
  out.push_back(from_strings(sys, "4.2-2", 1, {"x1", "y1", "z1"},
      {"x*y", "1/y", "z"}, {"x1*y1", "1/y1", "z1"}));
  out.push_back(from_strings(sys, "4.2-3", 2, {"x1", "y1", "z1"},
      {"x", "(y - x)*z", "1/z"}, {"x1", "x1 + y1*z1", "1/z1"}));
  out.push_back(from_strings(sys, "4.2-4", 2, {"x1", "y1", "z1"},
      {"-(x - y)*x*z", "-1/((x - y)*z)", "1/z"},
      {"x1*y1", "x1*y1 + z1/y1", "1/z1"}));
  return out;
}

std::vector<Chart> chazy_IX_pde_charts() {
  const auto& p = Catalog::instance().pfaffian("chazy.IX.pde");
  SystemDef carrier;  // var table carrier for chart construction
  carrier.name = p.name;
  carrier.vars = p.vars;
  carrier.dim = p.dim;
  for (const auto& f : p.f) carrier.field.emplace_back(f);
  std::vector<Chart> out;
  out.push_back(from_strings(carrier, "IX-1", 0, {"x1", "y1", "z1"},
      {"1/x", "y",
       "-(z*x + 2*(3*(sqrt5 + 3)*y^2 + delta)/(3*(sqrt5 - 1)))*x"},
      {"1/x1", "y1",
       "(-z1*x1 - 2*(3*(sqrt5 + 3)*y1^2 + delta)/(3*(sqrt5 - 1)))*x1"}));
  {
    Chart ch;
    ch.name = "IX-2";
    ch.base_vars = carrier.vars;
    ch.chart_vars = VarTable::make({"x2", "y2", "z2", "delta"});
    ch.boundary_index = 0;
    ch.to_chart = {
        parse_ratfun(carrier.vars, "1/x"), parse_ratfun(carrier.vars, "y - 3*sqrt5*x^2"),
        parse_ratfun(carrier.vars,
                     "-((z - 6*sqrt5*x*y - 9*(sqrt5 - 5)*x^3)*x"
                     " - 2*(-(sqrt5 - 3)*(135*x^4 + 3*y^2) + (90 - 54*sqrt5)*x^2*y + delta)"
                     "/(3*(sqrt5 + 1)))*x")};
    // inverse: x = 1/x2, y = y2 + 3 sqrt5 x^2, z recovered linearly
    RatFun X = parse_ratfun(ch.chart_vars, "1/x2");
    RatFun Y = parse_ratfun(ch.chart_vars, "y2") + parse_ratfun(ch.chart_vars, "3*sqrt5") * X * X;
    RatFun C = parse_ratfun(ch.chart_vars, "2") *
               (parse_ratfun(ch.chart_vars, "-(sqrt5 - 3)") *
                    (parse_ratfun(ch.chart_vars, "135") * X.pow(4) +
                     parse_ratfun(ch.chart_vars, "3") * Y * Y) +
                parse_ratfun(ch.chart_vars, "(90 - 54*sqrt5)") * X * X * Y +
                parse_ratfun(ch.chart_vars, "delta"));
    RatFun z2 = RatFun::var(ch.chart_vars, "z2");
    RatFun B = -z2 / (X * X) + C / (parse_ratfun(ch.chart_vars, "3*(sqrt5 + 1)") * X);
    RatFun Z = B + parse_ratfun(ch.chart_vars, "6*sqrt5") * X * Y +
               parse_ratfun(ch.chart_vars, "9*(sqrt5 - 5)") * X.pow(3);
    ch.from_chart = {X, Y, Z};
    if (!ch.roundtrip_ok(3)) throw std::logic_error("chart registry: IX-2 round trip failed");
    out.push_back(std::move(ch));
  }
  return out;
}

std::vector<Chart> chazy_X_charts() {
  const auto& sys = Catalog::instance().system("chazy.X.system");
  std::vector<Chart> out;
  out.push_back(from_strings(sys, "X-1", 0, {"x1", "y1", "z1"},
      {"1/x", "y",
       "-(z*x - (4/11*(-4 + 3*sqrt3)*y^2 + 1/66*(-21 + 13*sqrt3)*alpha*y"
       " - (1 + 2*sqrt3)/176*alpha^2))*x"},
      {"1/x1", "y1",
       "((4/11*(-4 + 3*sqrt3)*y1^2 + 1/66*(-21 + 13*sqrt3)*alpha*y1"
       " - (1 + 2*sqrt3)/176*alpha^2) - z1*x1)*x1"}));
  {
    Chart ch;
    ch.name = "X-2";
    ch.base_vars = sys.vars;
    ch.chart_vars = VarTable::make({"x2", "y2", "z2", "alpha"});
    ch.boundary_index = 0;
    ch.to_chart = {
        parse_ratfun(sys.vars, "1/x"),
        parse_ratfun(sys.vars,
                     "-((y + (5 + sqrt3)/2*x^2 + (sqrt3 - 1)/8*alpha)*x"
                     " + (-17 + sqrt3)/13*x^3 - (-4 + sqrt3)/13*z"
                     " - (-10 + 9*sqrt3)/52*alpha*x)*x"),
        parse_ratfun(sys.vars, "z - (5 + sqrt3)*x^3 - (2*sqrt3 - 1)/4*alpha*x")};
    RatFun X = parse_ratfun(ch.chart_vars, "1/x2");
    RatFun Z = parse_ratfun(ch.chart_vars, "z2") +
               parse_ratfun(ch.chart_vars, "(5 + sqrt3)") * X.pow(3) +
               parse_ratfun(ch.chart_vars, "(2*sqrt3 - 1)/4*alpha") * X;
    RatFun y2 = RatFun::var(ch.chart_vars, "y2");
    // (y + (5+s3)/2 x^2 + (s3-1)/8 a) x = -y2/x - (-17+s3)/13 x^3
    //                                     + (-4+s3)/13 z + (-10+9 s3)/52 a x
    RatFun rhs = -y2 / X - parse_ratfun(ch.chart_vars, "(-17 + sqrt3)/13") * X.pow(3) +
                 parse_ratfun(ch.chart_vars, "(-4 + sqrt3)/13") * Z +
                 parse_ratfun(ch.chart_vars, "(-10 + 9*sqrt3)/52*alpha") * X;
    RatFun Y = rhs / X - parse_ratfun(ch.chart_vars, "(5 + sqrt3)/2") * X * X -
               parse_ratfun(ch.chart_vars, "(sqrt3 - 1)/8*alpha");
    ch.from_chart = {X, Y, Z};
    if (!ch.roundtrip_ok(3)) throw std::logic_error("chart registry: X-2 round trip failed");
    out.push_back(std::move(ch));
  }
  return out;
}

std::vector<Chart> chazy_VIII_charts() {
  const auto& sys = Catalog::instance().system("chazy.VIII.system");
  std::vector<Chart> out;
  out.push_back(from_strings(sys, "B-1", 0, {"x1", "y1", "z1"},
      {"1/x", "-(y*x - 1/2*(2*z + 4*alpha^2*t - beta))*x", "z"},
      {"1/x1", "-y1*x1^2 + (z1 + 2*alpha^2*t - beta/2)*x1", "z1"}));
  out.push_back(from_strings(sys, "B-2", 0, {"x1", "y1", "z1"},
      {"1/x",
       "-((y + 2*x^2 - 2*alpha^2*t^2 + beta*t + 4*alpha + gamma)*x + z - 2*alpha^2*t"
       " + beta/2)*x",
       "z + 4*alpha*x"},
      {"1/x1",
       "(-y1*x1 - z1 + 4*alpha/x1 + 2*alpha^2*t - beta/2)*x1"
       " - 2/x1^2 + 2*alpha^2*t^2 - beta*t - 4*alpha - gamma",
       "z1 - 4*alpha/x1"}));
  return out;
}

std::vector<Chart> appC_charts() {
  const auto& sys = Catalog::instance().system("appC.mmSVIII");
  std::vector<Chart> out;
  out.push_back(from_strings(sys, "C-1", 0, {"x1", "y1", "z1"},
      {"1/x", "-(y - alpha1)*x", "(z - alpha2)*x"},
      {"1/x1", "alpha1 - y1*x1", "alpha2 + z1*x1"}));
  out.push_back(from_strings(sys, "C-2", 1, {"x1", "y1", "z1"},
      {"(x - alpha3)*y", "1/y", "-(z - alpha4)*y"},
      {"alpha3 + x1*y1", "1/y1", "alpha4 - z1*y1"}));
  out.push_back(from_strings(sys, "C-3", 2, {"x1", "y1", "z1"},
      {"-(x - alpha5)*z", "(y - alpha6)*z", "1/z"},
      {"alpha5 - x1*z1", "alpha6 + y1*z1", "1/z1"}));
  out.push_back(from_strings(sys, "C-4", 0, {"x1", "y1", "z1"},
      {"1/x", "-(y - x + alpha2 - alpha4 + alpha5 - alpha6)*x",
       "(z - x + alpha1 + alpha3 - alpha4 - alpha6)*x"},
      {"1/x1", "1/x1 - (alpha2 - alpha4 + alpha5 - alpha6) - y1*x1",
       "1/x1 - (alpha1 + alpha3 - alpha4 - alpha6) + z1*x1"}));
  return out;
}

std::vector<Chart> appD_charts() {
  const auto& sys = Catalog::instance().system("appD.system");
  std::vector<Chart> out;
  out.push_back(from_strings(sys, "D-1", 0, {"x1", "y1", "z1"},
      {"1/x", "(y - alpha1)*x", "x^3*(z - alpha2)"},
      {"1/x1", "alpha1 + y1*x1", "alpha2 + z1*x1^3"}));
  out.push_back(from_strings(sys, "D-2", 1, {"x1", "y1", "z1"},
      {"(x - (alpha1 - alpha3))*y", "1/y", "z"},
      {"(alpha1 - alpha3) + x1*y1", "1/y1", "z1"}));
  out.push_back(from_strings(sys, "D-3", 2, {"x1", "y1", "z1"},
      {"x", "(y - x - alpha3)*z", "1/z"}, {"x1", "x1 + alpha3 + y1*z1", "1/z1"}));
  {
    Chart ch;
    ch.name = "D-4";
    ch.base_vars = sys.vars;
    ch.chart_vars = VarTable::make({"x1", "y1", "z1", "alpha1", "alpha2", "alpha3"});
    ch.boundary_index = 0;
    ch.to_chart = {
        parse_ratfun(sys.vars, "1/x"),
        parse_ratfun(sys.vars,
                     "-2/3*x^5*(16*x - 6*y - 3*z - 10*alpha1 + 3*alpha2 + 16*alpha3)"),
        parse_ratfun(sys.vars, "x^3*(8*x - 4*y - z - 4*alpha1 + alpha2 + 8*alpha3)")};
    // two linear relations in (y, z): P = 8x - 4y - z, Q = 16x - 6y - 3z
    RatFun X = parse_ratfun(ch.chart_vars, "1/x1");
    RatFun P = RatFun::var(ch.chart_vars, "z1") / X.pow(3) +
               parse_ratfun(ch.chart_vars, "4*alpha1 - alpha2 - 8*alpha3");
    RatFun Q = parse_ratfun(ch.chart_vars, "-3/2") * RatFun::var(ch.chart_vars, "y1") / X.pow(5) +
               parse_ratfun(ch.chart_vars, "10*alpha1 - 3*alpha2 - 16*alpha3");
    RatFun Y = (parse_ratfun(ch.chart_vars, "8") * X - parse_ratfun(ch.chart_vars, "3") * P + Q) /
               parse_ratfun(ch.chart_vars, "6");
    RatFun Z = parse_ratfun(ch.chart_vars, "8") * X - P - parse_ratfun(ch.chart_vars, "4") * Y;
    ch.from_chart = {X, Y, Z};
    if (!ch.roundtrip_ok(3)) throw std::logic_error("chart registry: D-4 round trip failed");
    out.push_back(std::move(ch));
  }
  out.push_back(from_strings(sys, "D-5", 2, {"x1", "y1", "z1"},
      {"-(x - y + alpha3)*(x - alpha1 + alpha3)*z", "-1/((x - y + alpha3)*z)", "1/z"},
      {"alpha1 - alpha3 + x1*y1", "alpha1 + x1*y1 + z1/y1", "1/z1"}));
  return out;
}

std::vector<Chart> appE_charts() {
  const auto& sys = Catalog::instance().system("appE.system");
  std::vector<Chart> out;
  out.push_back(from_strings(sys, "E-1", 0, {"x1", "y1", "z1"},
      {"1/x", "x^2*y", "z/x"}, {"1/x1", "y1*x1^2", "z1/x1"}));
  out.push_back(from_strings(sys, "E-2", 1, {"x1", "y1", "z1"},
      {"(x + z)*y^2", "1/y", "z"}, {"x1*y1^2 - z1", "1/y1", "z1"}));
  out.push_back(from_strings(sys, "E-3", 2, {"x1", "y1", "z1"},
      {"x/z", "y*z^2", "1/z"}, {"x1/z1", "y1*z1^2", "1/z1"}));
  out.push_back(from_strings(sys, "E-4", 0, {"x1", "y1", "z1"},
      {"1/x", "(y - x + 2*z)*x^2", "x*z"},
      {"1/x1", "1/x1 - 2*z1*x1 + y1*x1^2", "z1*x1"}));
  out.push_back(from_strings(sys, "E-5", 0, {"x1", "y1", "z1"},
      {"1/x", "1/(x^2*y)", "(x + z)*x^3*y^2"},
      {"1/x1", "x1^2/y1", "z1*y1^2/x1 - 1/x1"}));
  return out;
}

std::vector<Chart> appE_gen_charts() {
  const auto& sys = Catalog::instance().system("appE.gen");
  const std::string om = "((1 + isqrt3)/2)";
  std::vector<Chart> out;
  out.push_back(from_strings(sys, "Egen-1", 0, {"x1", "y1"},
      {"1/s", "-((c + s + a)*s - alpha1 - alpha2)*s"},
      {"1/x1", "-1/x1 - a - y1*x1^2 + (alpha1 + alpha2)*x1"}));
  out.push_back(from_strings(sys, "Egen-2", 0, {"x1", "y1"},
      {"1/s", "-((c - " + om + "*s + " + om + "^2*a)*s - " + om + "*(" + om +
          "*alpha1 - alpha2))*s"},
      {"1/x1", om + "/x1 - " + om + "^2*a - y1*x1^2 + " + om + "*(" + om +
          "*alpha1 - alpha2)*x1"}));
  out.push_back(from_strings(sys, "Egen-3", 0, {"x1", "y1"},
      {"1/s", "-((c + " + om + "^2*s - " + om + "*a)*s - " + om + "^2*(" + om +
          "^2*alpha1 + alpha2))*s"},
      {"1/x1", "-" + om + "^2/x1 + " + om + "*a - y1*x1^2 + " + om + "^2*(" + om +
          "^2*alpha1 + alpha2)*x1"}));
  return out;
}

std::vector<Chart> chazy_I_charts() {
  const auto& sys = Catalog::instance().system("chazy.I.system");
  Chart ch;
  ch.name = "A-1";
  ch.base_vars = sys.vars;
  ch.chart_vars =
      VarTable::make({"x1", "y1", "z1", "A0", "A1", "B0", "B1", "C0", "C1"});
  ch.boundary_index = 0;
  const auto& V = sys.vars;
  RatFun x = RatFun::var(V, "x"), y = RatFun::var(V, "y"), z = RatFun::var(V, "z");
  RatFun q = (y + x * x) / x;
  auto centers = [&](const VarsPtr& vars, const RatFun& qq) {
    // blow-up centers of the tower, stages 2..6
    std::vector<RatFun> c;
    auto P = [&](const std::string& s) { return parse_ratfun(vars, s); };
    c.push_back(P("-3") * qq);
    c.push_back(P("3/4") * qq.pow(2));
    c.push_back(P("1/8") * (qq.pow(3) - P("16*A0") * qq - P("16*B0")));
    c.push_back(P("1/64") * (P("3") * qq.pow(4) - P("80*A0") * qq.pow(2) -
                             P("32*(2*A1 + 3*B0)") * qq - P("64*B1 + 192*C0")));
    c.push_back(P("1/128") *
                (P("3") * qq.pow(5) - P("128*A0") * qq.pow(3) -
                 P("48*(3*B0 + 4*A1)") * qq.pow(2) -
                 P("64*(4*A0^2 + 4*B1 + 3*C0)") * qq - P("384*C1 + 256*A0*B0")));
    return c;
  };
  RatFun r = z / (x * x) - parse_ratfun(V, "2") * x;  // (z/x^3 - 2) x
  for (const auto& c : centers(V, q)) r = (r - c) * x;
  ch.to_chart = {parse_ratfun(V, "1/x"), q, -r};
  for (int i = 3; i < 9; ++i) ch.to_chart.push_back(RatFun::var(V, V->name(i)));
  // inverse
  const auto& W = ch.chart_vars;
  RatFun X = parse_ratfun(W, "1/x1");
  RatFun Q = RatFun::var(W, "y1");
  RatFun R = -RatFun::var(W, "z1");
  auto cs = centers(W, Q);
  for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k) R = R / X + cs[k];
  RatFun Zb = (R + parse_ratfun(W, "2") * X) * X * X;
  RatFun Yb = Q * X - X * X;
  ch.from_chart = {X, Yb, Zb};
  for (int i = 3; i < 9; ++i) ch.from_chart.push_back(RatFun::var(W, W->name(i)));
  if (!ch.roundtrip_ok(9)) throw std::logic_error("chart registry: A-1 round trip failed");
  return {ch};
}

}  // namespace internal_charts

}  // namespace chazy
