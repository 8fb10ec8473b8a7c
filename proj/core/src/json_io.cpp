#include "chazy/json_io.hpp"

#include <sstream>

namespace chazy {

Json to_json(const QuadExt& x) {
  Json j;
  j["a"] = rat_to_string(x.a());
  j["b"] = rat_to_string(x.b());
  j["d"] = x.d();
  return j;
}

Json to_json(const CScalar& x) { return Json::array({x.real(), x.imag()}); }

Json to_json(const MPoly& f) {
  Json j;
  j["vars"] = f.vars()->names();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t;
    t["e"] = e;
    t["c"] = to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const RatFun& f) {
  if (f.is_polynomial()) return to_json(*f.as_polynomial());
  Json j;
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den());
  return j;
}

Json to_json(const SystemDef& s) {
  Json j;
  j["name"] = s.name;
  j["kind"] = "system";
  j["dim"] = s.dim;
  j["vars"] = s.vars->names();
  j["params"] = s.params;
  j["time_dependent"] = s.has_time;
  Json field = Json::array();
  for (const auto& f : s.field) field.push_back(to_json(f));
  j["field"] = std::move(field);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json to_json(const ScalarODE& s) {
  Json j;
  j["name"] = s.name;
  j["kind"] = "scalar_ode";
  j["order"] = s.order;
  j["vars"] = s.vars->names();
  j["params"] = s.params;
  j["rhs"] = to_json(s.rhs);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json to_json(const PfaffianDef& s) {
  Json j;
  j["name"] = s.name;
  j["kind"] = "pfaffian";
  j["dim"] = s.dim;
  j["vars"] = s.vars->names();
  j["params"] = s.params;
  Json f = Json::array(), g = Json::array();
  for (const auto& c : s.f) f.push_back(to_json(c));
  for (const auto& c : s.g) g.push_back(to_json(c));
  j["dt"] = std::move(f);
  j["ds"] = std::move(g);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json to_json(const AccessiblePoint& p) {
  Json j;
  j["chart"] = p.chart_name;
  j["exact"] = p.exact;
  if (p.exact) {
    Json c = Json::array();
    for (const auto& v : p.coords) c.push_back(to_json(v));
    j["coords"] = std::move(c);
  }
  Json cc = Json::array();
  for (const auto& v : p.coords_c) cc.push_back(to_json(v));
  j["coords_numeric"] = std::move(cc);
  if (!p.multiplicity_note.empty()) j["multiplicity"] = p.multiplicity_note;
  return j;
}

Json to_json(const LocalIndex& idx) {
  Json j;
  Json e = Json::array();
  for (const auto& v : idx.eigenvalues) e.push_back(to_json(v));
  j["eigenvalues"] = std::move(e);
  if (!idx.eigenvalues_c.empty()) {
    Json n = Json::array();
    for (const auto& v : idx.eigenvalues_c) n.push_back(to_json(v));
    j["eigenvalues_numeric"] = std::move(n);
  }
  j["boundary"] = to_json(idx.boundary);
  j["exact"] = idx.all_exact;
  if (idx.boundary_known && !idx.boundary.is_zero() && idx.all_exact) {
    Json r = Json::array();
    for (const auto& v : idx.ratios()) r.push_back(to_json(v));
    j["ratios"] = std::move(r);
    auto rc = ratio_condition(idx);
    j["integer"] = rc.all_integer;
  } else {
    j["integer"] = false;
    if (idx.boundary.is_zero()) j["zero_leading"] = true;
  }
  return j;
}

Json to_json(const LaurentSolution& sol) {
  Json j;
  j["pole_orders"] = sol.pole_orders;
  j["t0"] = to_json(sol.t0_exact);
  j["truncation"] = sol.truncation;
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < sol.series.size(); ++i) {
    Json var = Json::array();
    for (int k = -sol.pole_orders[i]; k < sol.series[i].acc(); ++k) {
      Json term;
      term["k"] = k;
      term["c"] = to_json(sol.series[i].coeff(k));
      var.push_back(std::move(term));
    }
    coeffs.push_back(std::move(var));
  }
  j["coeffs"] = std::move(coeffs);
  Json fp = Json::array();
  for (const auto& slot : sol.free_params) {
    Json s;
    s["order"] = slot.order;
    s["variable"] = slot.variable;
    s["candidates"] = slot.candidates;
    fp.push_back(std::move(s));
  }
  j["free_params"] = std::move(fp);
  return j;
}

std::string pretty_field(const SystemDef& s) {
  std::ostringstream os;
  for (int i = 0; i < s.dim; ++i)
    os << "d" << s.vars->name(i) << "/dt = " << s.field[i].str() << "\n";
  return os.str();
}

}  // namespace chazy
