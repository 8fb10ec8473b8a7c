#include "chazy/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace chazy {

namespace {

std::vector<std::string> chart_names(const SystemDef& sys, const std::string& tag) {
  std::vector<std::string> names;
  for (int i = 0; i < sys.vars->size(); ++i) {
    if (i < sys.dim)
      names.push_back(sys.vars->name(i) + tag);
    else
      names.push_back(sys.vars->name(i));
  }
  return names;
}

void require_bound(const SystemDef& sys) {
  if (!sys.params.empty())
    throw std::invalid_argument(sys.name + ": bind parameters before geometric analysis");
}

std::vector<QuadExt> full_point(const SystemDef& sys, const VarsPtr& vars,
                                const std::vector<QuadExt>& coords) {
  std::vector<QuadExt> pt(vars->size(), QuadExt(0));
  for (int i = 0; i < sys.dim; ++i) pt[i] = coords.at(i);
  return pt;
}

long ambient_d_of(const SystemDef& sys) {
  std::set<long> ds;
  auto scan = [&](const MPoly& f) {
    for (const auto& [e, c] : f.terms())
      if (c.d() != 0) ds.insert(c.d());
  };
  for (const auto& f : sys.field) {
    scan(f.num());
    scan(f.den());
  }
  return ds.size() == 1 ? *ds.begin() : 0;
}

}  // namespace

std::vector<RatFun> Chart::from_chart_image() const {
  std::vector<RatFun> image;
  for (int i = 0; i < base_vars->size(); ++i) {
    if (i < static_cast<int>(from_chart.size()))
      image.push_back(from_chart[i]);
    else
      image.push_back(RatFun::var(chart_vars, chart_vars->name(i)));
  }
  return image;
}

std::vector<RatFun> Chart::to_chart_image() const {
  std::vector<RatFun> image;
  for (int i = 0; i < chart_vars->size(); ++i) {
    if (i < static_cast<int>(to_chart.size()))
      image.push_back(to_chart[i]);
    else
      image.push_back(RatFun::var(base_vars, base_vars->name(i)));
  }
  return image;
}

bool Chart::roundtrip_ok(int dim) const {
  auto inverse = from_chart_image();
  for (int i = 0; i < dim; ++i) {
    RatFun comp = to_chart[i].substitute(inverse);
    RatFun expect = RatFun::var(chart_vars, chart_vars->name(i));
    if (!equal(comp, expect)) return false;
  }
  return true;
}

Chart projective_chart(const SystemDef& sys, int j) {
  if (j < 1 || j > sys.dim) throw std::invalid_argument("projective_chart: j out of range");
  Chart ch;
  ch.name = "U" + std::to_string(j);
  ch.base_vars = sys.vars;
  ch.chart_vars = VarTable::make(chart_names(sys, std::to_string(j)));
  int b = j - 1;
  ch.boundary_index = b;
  RatFun xb = RatFun::var(sys.vars, sys.vars->name(b));
  for (int i = 0; i < sys.dim; ++i) {
    if (i == b)
      ch.to_chart.push_back(RatFun::constant(sys.vars, QuadExt(1)) / xb);
    else
      ch.to_chart.push_back(RatFun::var(sys.vars, sys.vars->name(i)) / xb);
  }
  RatFun cb = RatFun::var(ch.chart_vars, ch.chart_vars->name(b));
  for (int i = 0; i < sys.dim; ++i) {
    if (i == b)
      ch.from_chart.push_back(RatFun::constant(ch.chart_vars, QuadExt(1)) / cb);
    else
      ch.from_chart.push_back(RatFun::var(ch.chart_vars, ch.chart_vars->name(i)) / cb);
  }
  return ch;
}

Chart weighted_jet_chart(const SystemDef& sys, const std::vector<int>& weights) {
  Chart ch;
  ch.name = "jet-weighted";
  ch.base_vars = sys.vars;
  ch.chart_vars = VarTable::make(chart_names(sys, "w"));
  ch.boundary_index = 0;
  RatFun x0 = RatFun::var(sys.vars, sys.vars->name(0));
  for (int i = 0; i < sys.dim; ++i) {
    if (i == 0)
      ch.to_chart.push_back(RatFun::constant(sys.vars, QuadExt(1)) / x0);
    else
      ch.to_chart.push_back(RatFun::var(sys.vars, sys.vars->name(i)) / x0.pow(weights.at(i)));
  }
  RatFun c0 = RatFun::var(ch.chart_vars, ch.chart_vars->name(0));
  for (int i = 0; i < sys.dim; ++i) {
    if (i == 0)
      ch.from_chart.push_back(RatFun::constant(ch.chart_vars, QuadExt(1)) / c0);
    else
      ch.from_chart.push_back(RatFun::var(ch.chart_vars, ch.chart_vars->name(i)) /
                              c0.pow(weights.at(i)));
  }
  return ch;
}

Chart shifted_chart(const SystemDef& sys, int boundary_index) {
  Chart ch;
  ch.name = "identity";
  ch.base_vars = sys.vars;
  ch.chart_vars = sys.vars;
  ch.boundary_index = boundary_index;
  for (int i = 0; i < sys.dim; ++i) {
    ch.to_chart.push_back(RatFun::var(sys.vars, sys.vars->name(i)));
    ch.from_chart.push_back(RatFun::var(sys.vars, sys.vars->name(i)));
  }
  return ch;
}

std::vector<RatFun> transform_field(const SystemDef& sys, const Chart& chart) {
  if (static_cast<int>(chart.to_chart.size()) != sys.dim)
    throw std::invalid_argument("transform_field: chart/system dimension mismatch");
  std::vector<RatFun> out;
  out.reserve(sys.dim);
  auto inverse = chart.from_chart_image();
  int ti = sys.time_index();
  for (int i = 0; i < sys.dim; ++i) {
    RatFun comp = RatFun::constant(sys.vars, QuadExt(0));
    for (int j = 0; j < sys.dim; ++j) {
      RatFun dj = chart.to_chart[i].derivative(j);
      if (dj.is_zero()) continue;
      comp += dj * sys.field[j];
    }
    if (ti >= 0) comp += chart.to_chart[i].derivative(ti);  // dt/dt = 1
    out.push_back(comp.substitute(inverse));
  }
  return out;
}

namespace {

std::vector<RatFun> boundary_H(const SystemDef& sys, const Chart& chart) {
  auto tf = transform_field(sys, chart);
  RatFun b = RatFun::var(chart.chart_vars, chart.chart_vars->name(chart.boundary_index));
  for (auto& comp : tf) comp = b * comp;
  return tf;
}

}  // namespace

bool is_accessible(const SystemDef& sys, const Chart& chart,
                   const std::vector<QuadExt>& coords) {
  require_bound(sys);
  if (!coords.at(chart.boundary_index).is_zero()) return false;
  auto H = boundary_H(sys, chart);
  auto pt = full_point(sys, chart.chart_vars, coords);
  for (int i = 0; i < sys.dim; ++i) {
    QuadExt den = H[i].den().eval(pt);
    if (den.is_zero()) return false;  // pole deeper than the log framework
    if (i == chart.boundary_index) continue;
    if (!H[i].num().eval(pt).is_zero()) return false;
  }
  return true;
}

bool is_accessible_numeric(const SystemDef& sys, const Chart& chart,
                           const std::vector<CScalar>& coords, double tol) {
  require_bound(sys);
  if (std::abs(coords.at(chart.boundary_index)) > tol) return false;
  auto H = boundary_H(sys, chart);
  std::vector<CScalar> pt(chart.chart_vars->size(), CScalar(0, 0));
  for (int i = 0; i < sys.dim; ++i) pt[i] = coords[i];
  for (int i = 0; i < sys.dim; ++i) {
    if (i == chart.boundary_index) continue;
    CScalar den = H[i].den().eval_c(pt);
    if (std::abs(den) < 1e-12) return false;
    if (std::abs(H[i].num().eval_c(pt) / den) > tol) return false;
  }
  return true;
}

LocalIndex local_index(const SystemDef& sys, const Chart& chart,
                       const std::vector<QuadExt>& coords) {
  require_bound(sys);
  auto H = boundary_H(sys, chart);
  auto pt = full_point(sys, chart.chart_vars, coords);
  int n = sys.dim;
  QMatrix A(n, QVector(n, QuadExt(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = H[i].derivative(j).eval(pt);
  LocalIndex idx;
  int b = chart.boundary_index;
  idx.boundary = A[b][b];
  for (int j = 0; j < n; ++j)
    if (j != b && !A[b][j].is_zero()) idx.boundary_known = false;
  auto roots = upoly_roots(char_poly(A), ambient_d_of(sys));
  idx.all_exact = roots.complete_exact();
  std::vector<QuadExt> rest;
  bool boundary_taken = false;
  for (const auto& r : roots.exact) {
    if (!boundary_taken && idx.boundary_known && r == idx.boundary) {
      boundary_taken = true;
      continue;
    }
    rest.push_back(r);
  }
  std::sort(rest.begin(), rest.end());
  if (idx.boundary_known && boundary_taken) idx.eigenvalues.push_back(idx.boundary);
  for (auto& r : rest) idx.eigenvalues.push_back(std::move(r));
  idx.eigenvalues_c = roots.numeric;
  return idx;
}

std::vector<QuadExt> LocalIndex::ratios() const {
  if (boundary.is_zero()) throw std::domain_error("local index: zero boundary eigenvalue");
  std::vector<QuadExt> out;
  out.reserve(eigenvalues.size());
  for (const auto& e : eigenvalues) out.push_back(e / boundary);
  return out;
}

RatioCheck ratio_condition(const LocalIndex& idx) {
  RatioCheck rc;
  if (!idx.boundary_known || idx.boundary.is_zero()) {
    rc.zero_leading = idx.boundary.is_zero();
    rc.all_integer = false;
    return rc;
  }
  rc.all_integer = idx.all_exact && idx.eigenvalues_c.empty();
  for (const auto& e : idx.eigenvalues) {
    QuadExt r = e / idx.boundary;
    rc.ratios.push_back(r);
    if (!r.is_integer()) rc.all_integer = false;
  }
  return rc;
}

bool match_projective(std::vector<QuadExt> computed, std::vector<QuadExt> reference) {
  if (computed.size() != reference.size()) return false;
  auto same_multiset = [](std::vector<QuadExt> a, std::vector<QuadExt> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  for (const auto& c : computed) {
    if (c.is_zero()) continue;
    for (const auto& r : reference) {
      if (r.is_zero()) continue;
      QuadExt scale = r / c;
      std::vector<QuadExt> scaled;
      scaled.reserve(computed.size());
      for (const auto& v : computed) scaled.push_back(v * scale);
      if (same_multiset(scaled, reference)) return true;
    }
  }
  return same_multiset(computed, reference);
}

// ------------------------- find_accessible -------------------------

namespace {

struct RestrictedSystem {
  VarsPtr vars;
  std::vector<int> unknowns;
  std::vector<MPoly> eqs;
};

RestrictedSystem restricted_equations(const SystemDef& sys, const Chart& chart) {
  RestrictedSystem rs;
  rs.vars = chart.chart_vars;
  auto H = boundary_H(sys, chart);
  int b = chart.boundary_index;
  std::map<std::string, RatFun> bind = {
      {chart.chart_vars->name(b), RatFun::constant(chart.chart_vars, QuadExt(0))}};
  for (int i = 0; i < sys.dim; ++i) {
    if (i == b) continue;
    rs.unknowns.push_back(i);
    RatFun r = RatFun(H[i].num()).substitute(bind);
    auto p = r.as_polynomial();
    if (!p) throw std::logic_error("restricted equation not polynomial");
    rs.eqs.push_back(*p);
  }
  return rs;
}

struct ExactSolveState {
  bool complete = true;
  std::vector<std::vector<QuadExt>> solutions;
};

void solve_rec(const RestrictedSystem& rs, std::vector<MPoly> eqs, std::vector<int> unknowns,
               std::map<int, QuadExt> assigned, long ambient_d, ExactSolveState& st) {
  std::vector<MPoly> live;
  for (auto& e : eqs) {
    if (e.is_zero()) continue;
    if (e.is_constant()) return;  // inconsistent branch
    live.push_back(std::move(e));
  }
  if (live.empty()) {
    if (!unknowns.empty()) return;  // free directions: a locus, not an isolated point
    std::vector<QuadExt> full(rs.vars->size(), QuadExt(0));
    for (const auto& [i, v] : assigned) full[i] = v;
    st.solutions.push_back(full);
    return;
  }
  if (unknowns.empty()) return;

  // pick an equation univariate in one unknown
  for (std::size_t ei = 0; ei < live.size(); ++ei) {
    int uni_var = -1;
    bool univariate = true;
    for (const auto& [e, c] : live[ei].terms()) {
      for (int v : unknowns) {
        if (e[v] != 0) {
          if (uni_var < 0) uni_var = v;
          else if (uni_var != v) univariate = false;
        }
      }
      if (!univariate) break;
    }
    if (!univariate || uni_var < 0) continue;
    int deg = live[ei].degree_in(uni_var);
    QVector poly(deg + 1, QuadExt(0));
    for (const auto& [e, c] : live[ei].terms()) poly[e[uni_var]] += c;
    auto roots = upoly_roots(poly, ambient_d);
    if (!roots.complete_exact()) {
      st.complete = false;
      return;
    }
    std::vector<MPoly> rest = live;
    rest.erase(rest.begin() + static_cast<long>(ei));
    std::vector<int> rest_unknowns;
    for (int v : unknowns)
      if (v != uni_var) rest_unknowns.push_back(v);
    std::set<QuadExt> uniq(roots.exact.begin(), roots.exact.end());
    for (const auto& r : uniq) {
      std::map<std::string, RatFun> bind = {
          {rs.vars->name(uni_var), RatFun::constant(rs.vars, r)}};
      std::vector<MPoly> next;
      for (const auto& e : rest) {
        auto p = e.substitute(bind).as_polynomial();
        if (!p) throw std::logic_error("substitution of a constant left a denominator");
        next.push_back(*p);
      }
      auto asg = assigned;
      asg[uni_var] = r;
      solve_rec(rs, next, rest_unknowns, asg, ambient_d, st);
    }
    return;
  }

  // otherwise: an equation linear in some unknown, with branching on the
  // leading coefficient
  for (std::size_t ei = 0; ei < live.size(); ++ei) {
    for (int v : unknowns) {
      if (live[ei].degree_in(v) != 1) continue;
      MPoly c1 = live[ei].coeff_of(v, 1);
      MPoly c0 = live[ei].coeff_of(v, 0);
      std::vector<int> rest_unknowns;
      for (int u : unknowns)
        if (u != v) rest_unknowns.push_back(u);
      // branch: c1 != 0, v = -c0/c1
      {
        RatFun vexpr = RatFun(-c0) / RatFun(c1);
        std::map<std::string, RatFun> bind = {{rs.vars->name(v), vexpr}};
        std::vector<MPoly> rest;
        for (std::size_t j = 0; j < live.size(); ++j) {
          if (j == ei) continue;
          rest.push_back(RatFun(live[j]).substitute(bind).num());
        }
        ExactSolveState sub;
        solve_rec(rs, rest, rest_unknowns, {}, ambient_d, sub);
        if (!sub.complete) st.complete = false;
        for (const auto& sol : sub.solutions) {
          std::vector<QuadExt> pt(rs.vars->size(), QuadExt(0));
          for (int u : rest_unknowns) pt[u] = sol[u];
          QuadExt c1v = c1.eval(pt);
          if (c1v.is_zero()) continue;
          std::vector<QuadExt> full(rs.vars->size(), QuadExt(0));
          for (const auto& [i, val] : assigned) full[i] = val;
          for (int u : rest_unknowns) full[u] = sol[u];
          full[v] = -(c0.eval(pt) / c1v);
          st.solutions.push_back(full);
        }
      }
      // branch: c1 == 0 and c0 == 0 jointly
      {
        std::vector<MPoly> deg_eqs = {c1, c0};
        for (std::size_t j = 0; j < live.size(); ++j)
          if (j != ei) deg_eqs.push_back(live[j]);
        solve_rec(rs, deg_eqs, unknowns, assigned, ambient_d, st);
      }
      return;
    }
  }
  st.complete = false;
}

std::vector<std::string> detect_loci(const RestrictedSystem& rs,
                                     const std::vector<std::vector<QuadExt>>& candidates,
                                     const std::string& chart_name, int boundary) {
  std::vector<std::string> out;
  if (rs.unknowns.size() != 2) return out;
  std::set<QuadExt> values = {QuadExt(0), QuadExt(1), QuadExt(-1)};
  for (const auto& c : candidates)
    for (int u : rs.unknowns) values.insert(c[u]);
  for (int fixed : rs.unknowns) {
    for (const auto& val : values) {
      std::map<std::string, RatFun> bind = {
          {rs.vars->name(fixed), RatFun::constant(rs.vars, val)}};
      bool all_zero = true;
      for (const auto& e : rs.eqs) {
        if (!e.substitute(bind).is_zero()) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) {
        std::ostringstream os;
        os << chart_name << ": locus {" << rs.vars->name(boundary) << "=0, "
           << rs.vars->name(fixed) << "=" << val.str() << "}";
        out.push_back(os.str());
      }
    }
  }
  return out;
}

/// Count preimages of a tiny generic target near the point: the local degree,
/// reported as the multiplicity order of a non-transverse intersection.
int numeric_local_degree(const RestrictedSystem& rs, const std::vector<CScalar>& at,
                         unsigned seed) {
  if (rs.unknowns.size() != 2) return 2;
  std::mt19937_64 rng(seed * 2654435761u + 17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<RatFun> eqs;
  for (const auto& e : rs.eqs) eqs.emplace_back(e);
  std::vector<std::vector<RatFun>> J;
  for (const auto& e : eqs) {
    std::vector<RatFun> row = {e.derivative(rs.unknowns[0]), e.derivative(rs.unknowns[1])};
    J.push_back(row);
  }
  const double eps = 1e-8;
  CScalar t0(eps * u(rng), eps * u(rng)), t1(eps * u(rng), eps * u(rng));
  std::vector<std::pair<CScalar, CScalar>> found;
  for (int s = 0; s < 60; ++s) {
    std::vector<CScalar> pt = at;
    pt[rs.unknowns[0]] += CScalar(1e-3 * u(rng), 1e-3 * u(rng));
    pt[rs.unknowns[1]] += CScalar(1e-3 * u(rng), 1e-3 * u(rng));
    bool ok = false;
    for (int it = 0; it < 80; ++it) {
      CScalar f0 = eqs[0].eval_c(pt) - t0;
      CScalar f1 = eqs[1].eval_c(pt) - t1;
      CScalar a = J[0][0].eval_c(pt), b = J[0][1].eval_c(pt);
      CScalar c = J[1][0].eval_c(pt), d = J[1][1].eval_c(pt);
      CScalar det = a * d - b * c;
      if (std::abs(det) < 1e-30) break;
      CScalar dx = (d * f0 - b * f1) / det, dy = (a * f1 - c * f0) / det;
      pt[rs.unknowns[0]] -= dx;
      pt[rs.unknowns[1]] -= dy;
      if (std::abs(dx) + std::abs(dy) < 1e-14) {
        ok = true;
        break;
      }
    }
    if (!ok) continue;
    CScalar x0 = pt[rs.unknowns[0]], x1 = pt[rs.unknowns[1]];
    if (std::abs(x0 - at[rs.unknowns[0]]) > 0.02 || std::abs(x1 - at[rs.unknowns[1]]) > 0.02)
      continue;
    bool dup = false;
    for (const auto& [y0, y1] : found)
      if (std::abs(y0 - x0) < 1e-8 && std::abs(y1 - x1) < 1e-8) dup = true;
    if (!dup) found.emplace_back(x0, x1);
  }
  return std::max<int>(1, static_cast<int>(found.size()));
}

// tiny univariate polynomial helpers over QuadExt (coefficient vectors)
using UPoly1 = std::vector<QuadExt>;

UPoly1 up_add(const UPoly1& a, const UPoly1& b) {
  UPoly1 r(std::max(a.size(), b.size()), QuadExt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (r.size() > 1 && r.back().is_zero()) r.pop_back();
  return r;
}

UPoly1 up_mul(const UPoly1& a, const UPoly1& b) {
  UPoly1 r(a.size() + b.size() - 1, QuadExt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (r.size() > 1 && r.back().is_zero()) r.pop_back();
  return r;
}

bool up_is_zero(const UPoly1& a) {
  return std::all_of(a.begin(), a.end(), [](const QuadExt& c) { return c.is_zero(); });
}

UPoly1 up_det(std::vector<std::vector<UPoly1>> M) {
  std::size_t n = M.size();
  if (n == 1) return M[0][0];
  UPoly1 det = {QuadExt(0)};
  for (std::size_t c = 0; c < n; ++c) {
    if (up_is_zero(M[0][c])) continue;
    std::vector<std::vector<UPoly1>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<UPoly1> row;
      for (std::size_t c2 = 0; c2 < n; ++c2)
        if (c2 != c) row.push_back(M[r][c2]);
      minor.push_back(std::move(row));
    }
    UPoly1 term = up_mul(M[0][c], up_det(std::move(minor)));
    if (c % 2) for (auto& t : term) t = -t;
    det = up_add(det, term);
  }
  return det;
}

/// Resultant eliminating variable `elim`, as a univariate polynomial in
/// `keep` (both are chart var indices); empty when identically zero.
std::optional<UPoly1> resultant_in(const MPoly& f, const MPoly& g, int elim, int keep) {
  int df = f.degree_in(elim), dg = g.degree_in(elim);
  if (df == 0 || dg == 0) return std::nullopt;
  auto coeffs = [&](const MPoly& p, int deg) {
    std::vector<UPoly1> out(deg + 1, UPoly1{QuadExt(0)});
    for (int k = 0; k <= deg; ++k) {
      MPoly ck = p.coeff_of(elim, k);
      UPoly1 u(ck.degree_in(keep) + 1, QuadExt(0));
      for (const auto& [e, c] : ck.terms()) {
        // everything but `keep` must be constant here
        u[e[keep]] += c;
      }
      while (u.size() > 1 && u.back().is_zero()) u.pop_back();
      out[k] = std::move(u);
    }
    return out;
  };
  auto fc = coeffs(f, df), gc = coeffs(g, dg);
  std::size_t n = static_cast<std::size_t>(df + dg);
  std::vector<std::vector<UPoly1>> S(n, std::vector<UPoly1>(n, UPoly1{QuadExt(0)}));
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= df; ++k) S[r][r + k] = fc[df - k];
  for (int r = 0; r < df; ++r)
    for (int k = 0; k <= dg; ++k) S[dg + r][r + k] = gc[dg - k];
  UPoly1 res = up_det(std::move(S));
  if (up_is_zero(res)) return std::nullopt;
  return res;
}

int vanishing_order(UPoly1 p, const QuadExt& at) {
  int ord = 0;
  while (p.size() > 0) {
    // synthetic division by (x - at); remainder is p(at)
    QuadExt rem(0);
    UPoly1 q(p.size() > 1 ? p.size() - 1 : 0, QuadExt(0));
    QuadExt carry(0);
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
      QuadExt cur = p[k] + carry * at;
      if (k > 0) q[k - 1] = cur;
      else rem = cur;
      carry = cur;
    }
    if (!rem.is_zero()) break;
    ++ord;
    p = q;
    if (ord > 16) break;
  }
  return ord;
}

/// Exact intersection multiplicity via a separating coordinate projection;
/// -1 when no projection separates the point from its peers.
int exact_multiplicity(const RestrictedSystem& rs, const std::vector<QuadExt>& full_pt,
                       const std::vector<std::vector<QuadExt>>& peers) {
  if (rs.unknowns.size() != 2 || rs.eqs.size() != 2) return -1;
  for (int proj = 0; proj < 2; ++proj) {
    int keep = rs.unknowns[proj], elim = rs.unknowns[1 - proj];
    QuadExt v0 = full_pt[keep];
    bool separated = true;
    for (const auto& peer : peers) {
      if (peer == full_pt) continue;
      if (peer[keep] == v0) { separated = false; break; }
    }
    if (!separated) continue;
    auto res = resultant_in(rs.eqs[0], rs.eqs[1], elim, keep);
    if (!res) continue;
    int ord = vanishing_order(*res, v0);
    if (ord >= 1) return ord;
  }
  return -1;
}

std::vector<QuadExt> projective_key(const SystemDef& sys, int chart_j,
                                    const std::vector<QuadExt>& coords) {
  int n = sys.dim;
  std::vector<QuadExt> h(n + 1, QuadExt(0));
  int b = chart_j - 1;
  for (int i = 0; i < n; ++i) h[i + 1] = (i == b) ? QuadExt(1) : coords[i];
  for (int i = 0; i <= n; ++i) {
    if (!h[i].is_zero()) {
      QuadExt inv = h[i].inverse();
      for (auto& v : h) v = v * inv;
      break;
    }
  }
  return h;
}

}  // namespace

PolySolutions solve_poly_system(const VarsPtr& vars, const std::vector<MPoly>& eqs,
                                const std::vector<int>& unknowns, long ambient_d) {
  RestrictedSystem rs;
  rs.vars = vars;
  rs.unknowns = unknowns;
  rs.eqs = eqs;
  ExactSolveState st;
  solve_rec(rs, eqs, unknowns, {}, ambient_d, st);
  PolySolutions out;
  out.complete = st.complete;
  out.solutions = std::move(st.solutions);
  return out;
}

FindResult find_accessible(const SystemDef& sys, const Chart* chart, const FindOptions& opt) {
  require_bound(sys);
  FindResult out;
  std::vector<Chart> charts;
  if (chart) {
    charts.push_back(*chart);
  } else {
    for (int j = 1; j <= sys.dim; ++j) charts.push_back(projective_chart(sys, j));
  }
  std::vector<std::vector<QuadExt>> seen_keys;
  long ambient_d = opt.lift_d ? opt.lift_d : ambient_d_of(sys);

  for (std::size_t ci = 0; ci < charts.size(); ++ci) {
    const Chart& ch = charts[ci];
    RestrictedSystem rs = restricted_equations(sys, ch);
    ExactSolveState st;
    if (opt.prefer_exact) solve_rec(rs, rs.eqs, rs.unknowns, {}, ambient_d, st);
    else st.complete = false;

    std::vector<std::vector<QuadExt>> cands = st.solutions;

    if (!st.complete) {
      out.used_fallback = true;
      int nu = static_cast<int>(rs.unknowns.size());
      std::vector<RatFun> eqs;
      for (const auto& e : rs.eqs) eqs.emplace_back(e);
      std::vector<std::vector<RatFun>> J;
      for (const auto& e : eqs) {
        std::vector<RatFun> row;
        for (int v : rs.unknowns) row.push_back(e.derivative(v));
        J.push_back(row);
      }
      std::vector<std::vector<CScalar>> numeric_found;
      std::vector<CScalar> seedvals;
      for (int g = -opt.grid; g <= opt.grid; ++g) {
        double v = opt.box * g / opt.grid;
        seedvals.emplace_back(v, 0.0);
        if (g != 0) seedvals.emplace_back(0.0, v);
      }
      auto newton = [&](const std::vector<CScalar>& start) {
        std::vector<CScalar> pt(rs.vars->size(), CScalar(0, 0));
        for (int i = 0; i < nu; ++i) pt[rs.unknowns[i]] = start[i];
        for (int it = 0; it < 80; ++it) {
          std::vector<std::vector<CScalar>> A(nu, std::vector<CScalar>(nu));
          std::vector<CScalar> bvec(nu);
          for (int i = 0; i < nu; ++i) {
            bvec[i] = eqs[i].eval_c(pt);
            for (int j = 0; j < nu; ++j) A[i][j] = J[i][j].eval_c(pt);
          }
          for (int col = 0; col < nu; ++col) {
            int piv = col;
            for (int r = col; r < nu; ++r)
              if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
            if (std::abs(A[piv][col]) < 1e-18) return;
            std::swap(A[piv], A[col]);
            std::swap(bvec[piv], bvec[col]);
            for (int r = 0; r < nu; ++r) {
              if (r == col) continue;
              CScalar f = A[r][col] / A[col][col];
              for (int c2 = col; c2 < nu; ++c2) A[r][c2] -= f * A[col][c2];
              bvec[r] -= f * bvec[col];
            }
          }
          double step = 0;
          for (int i = 0; i < nu; ++i) {
            CScalar dx = bvec[i] / A[i][i];
            pt[rs.unknowns[i]] -= dx;
            step += std::abs(dx);
            if (std::abs(pt[rs.unknowns[i]]) > 1e6) return;
          }
          if (step < opt.newton_tol) {
            std::vector<CScalar> sol(nu);
            for (int i = 0; i < nu; ++i) sol[i] = pt[rs.unknowns[i]];
            for (const auto& prev : numeric_found) {
              double dist = 0;
              for (int i = 0; i < nu; ++i) dist += std::abs(prev[i] - sol[i]);
              if (dist < opt.dedup_radius) return;
            }
            numeric_found.push_back(sol);
            return;
          }
        }
      };
      std::function<void(int, std::vector<CScalar>&)> rec = [&](int pos,
                                                                std::vector<CScalar>& cur) {
        if (pos == nu) {
          newton(cur);
          return;
        }
        for (const auto& sv : seedvals) {
          cur[pos] = sv;
          rec(pos + 1, cur);
        }
      };
      std::vector<CScalar> cur(nu);
      rec(0, cur);
      for (const auto& sol : numeric_found) {
        std::vector<QuadExt> exact(rs.vars->size(), QuadExt(0));
        bool lifted = true;
        for (int i = 0; i < nu; ++i) {
          auto li = recognize_quadext(sol[i], ambient_d, 64, 1e-7);
          if (!li) {
            if (auto rr = recognize_rational(sol[i], Int(1'000'000), 1e-7)) li = QuadExt(*rr);
          }
          if (!li) {
            lifted = false;
            break;
          }
          exact[rs.unknowns[i]] = *li;
        }
        if (lifted) {
          std::vector<QuadExt> coords(exact.begin(), exact.begin() + sys.dim);
          bool dup = false;
          for (const auto& c : cands)
            if (c == exact) dup = true;
          if (!dup && is_accessible(sys, ch, coords)) cands.push_back(exact);
          else if (dup) continue;
          else lifted = false;
        }
        if (!lifted) {
          std::vector<CScalar> cc(sys.dim, CScalar(0, 0));
          for (int i = 0; i < nu; ++i) cc[rs.unknowns[i]] = sol[i];
          if (is_accessible_numeric(sys, ch, cc, 1e-7)) {
            AccessiblePoint ap;
            ap.chart_name = ch.name;
            ap.coords_c = cc;
            ap.exact = false;
            out.points.push_back(std::move(ap));
          }
        }
      }
    }

    auto loci = detect_loci(rs, cands, ch.name, ch.boundary_index);
    out.loci.insert(out.loci.end(), loci.begin(), loci.end());

    for (const auto& cand : cands) {
      std::vector<QuadExt> coords(cand.begin(), cand.begin() + sys.dim);
      if (!is_accessible(sys, ch, coords)) continue;
      if (!chart) {
        auto key = projective_key(sys, static_cast<int>(ci) + 1, coords);
        bool dup = false;
        for (const auto& k : seen_keys)
          if (k == key) dup = true;
        if (dup) continue;
        seen_keys.push_back(key);
      }
      AccessiblePoint ap;
      ap.chart_name = ch.name;
      ap.coords = coords;
      for (const auto& c : coords) ap.coords_c.push_back(c.to_complex());
      if (rs.unknowns.size() == 2) {
        std::vector<QuadExt> full(rs.vars->size(), QuadExt(0));
        for (int i = 0; i < sys.dim; ++i) full[i] = coords[i];
        QMatrix Jr(2, QVector(2, QuadExt(0)));
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            Jr[i][j] = RatFun(rs.eqs[i]).derivative(rs.unknowns[j]).eval(full);
        if (qmat_det(Jr).is_zero()) {
          int degm = exact_multiplicity(rs, full, cands);
          if (degm < 0) {
            std::vector<CScalar> at(rs.vars->size(), CScalar(0, 0));
            for (int i = 0; i < sys.dim; ++i) at[i] = coords[i].to_complex();
            degm = numeric_local_degree(rs, at, opt.seed);
          }
          ap.multiplicity_note = "multiple point of order " + std::to_string(degm);
        }
      }
      out.points.push_back(std::move(ap));
    }
  }
  return out;
}

}  // namespace chazy
