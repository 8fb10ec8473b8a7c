#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "chazy/claims.hpp"
#include "chazy/flow.hpp"
#include "chazy/json_io.hpp"
#include "chazy/transforms.hpp"

using namespace chazy;

namespace {

struct GlobalOpts {
  unsigned seed = 1;
  std::string out;
  std::string format = "json";
  double tol = 1e-9;
};

void emit(const GlobalOpts& g, const Json& j, const std::string& pretty = "") {
  std::string payload = g.format == "pretty" && !pretty.empty() ? pretty : j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream os(g.out);
    os << payload;
  }
}

int unknown_name(const std::string& name) {
  std::cerr << "unknown name: " << name << "\nclosest matches:\n";
  for (const auto& s : Catalog::instance().suggest(name)) std::cerr << "  " << s << "\n";
  return 2;
}

std::map<std::string, QuadExt> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, QuadExt> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--param expects name=p/q");
    out.emplace(kv.substr(0, eq), QuadExt(rat_from_string(kv.substr(eq + 1))));
  }
  return out;
}

SystemDef resolve_bound_system(const std::string& name,
                               const std::map<std::string, QuadExt>& params) {
  auto entry = Catalog::instance().get(name, params);
  if (std::holds_alternative<SystemDef>(entry)) return std::get<SystemDef>(entry);
  if (std::holds_alternative<ScalarODE>(entry))
    return jet_system(std::get<ScalarODE>(entry));
  throw std::invalid_argument(name + ": not an ODE system");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catalog, analysis and verification tool for the Chazy equation family"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--out", g.out, "write the report to a file");
  app.add_option("--format", g.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--tol", g.tol, "numeric tolerance override");

  // ---- catalog ----
  auto* cat = app.add_subcommand("catalog", "browse the system registry");
  auto* cat_list = cat->add_subcommand("list", "list registry entries");
  std::string show_name;
  std::vector<std::string> show_params;
  auto* cat_show = cat->add_subcommand("show", "print one entry");
  cat_show->add_option("name", show_name)->required();
  cat_show->add_option("--param", show_params, "bind a parameter, name=p/q");

  // ---- analyze ----
  std::string an_system, an_chart;
  std::vector<std::string> an_params;
  auto* analyze = app.add_subcommand("analyze", "singularity analysis");
  auto* an_sing = analyze->add_subcommand("singular", "accessible points and local indices");
  an_sing->add_option("system", an_system)->required();
  an_sing->add_option("--chart", an_chart, "U1|U2|...|jet-weighted (default: all standard)");
  an_sing->add_option("--param", an_params, "bind a parameter, name=p/q");

  // ---- series ----
  std::string se_system;
  int se_balance = 0, se_order = 8;
  std::vector<std::string> se_params, se_free;
  auto* series_cmd = app.add_subcommand("series", "Laurent expansion of one balance");
  series_cmd->add_option("system", se_system)->required();
  series_cmd->add_option("--balance", se_balance, "balance index from the balance list");
  series_cmd->add_option("--order", se_order, "truncation order N");
  series_cmd->add_option("--param", se_params, "bind a parameter, name=p/q");
  series_cmd->add_option("--free", se_free, "bind a free coefficient, order:var=p/q");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run exact verification checks");
  std::string v_name;
  auto* v_map = verify->add_subcommand("map", "pushforward identity of a registered map");
  v_map->add_option("name", v_name)->required();
  auto* v_bt = verify->add_subcommand("bt", "scalar Backlund transformation");
  v_bt->add_option("name", v_name)->required();
  auto* v_holo = verify->add_subcommand("holomorphy", "chart polynomiality of a system");
  v_holo->add_option("name", v_name)->required();
  auto* v_int = verify->add_subcommand("integral", "first integral of a system");
  v_int->add_option("name", v_name)->required();
  auto* v_compat = verify->add_subcommand("compat", "compatibility of a Pfaffian pair");
  v_compat->add_option("name", v_name)->required();
  auto* v_rel = verify->add_subcommand("relations", "group relations (dh|appB|appC|appE|appF|appF4)");
  v_rel->add_option("name", v_name)->required();
  auto* v_all = verify->add_subcommand("all", "run the whole claim ledger");
  std::vector<std::string> v_ids;
  bool v_timings = false;
  v_all->add_option("--id", v_ids, "restrict to specific claim ids");
  v_all->add_flag("--timings", v_timings,
                  "include per-claim wall times (breaks byte-for-byte determinism)");

  // ---- integrate ----
  std::string in_system, in_ic, in_path;
  std::vector<std::string> in_params;
  double in_rtol = 1e-10, in_atol = 1e-12;
  auto* integ = app.add_subcommand("integrate", "complex-time numerical integration");
  integ->add_option("system", in_system)->required();
  integ->add_option("--ic", in_ic, "initial state, re:im pairs comma separated")->required();
  integ->add_option("--path", in_path, "waypoints re:im comma separated")->required();
  integ->add_option("--rtol", in_rtol);
  integ->add_option("--atol", in_atol);
  integ->add_option("--param", in_params, "bind a parameter, name=value");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto& catalog = Catalog::instance();

    if (cat_list->parsed()) {
      Json j = Json::array();
      std::string pretty;
      for (const auto& name : catalog.names()) {
        const auto& e = catalog.entry(name);
        Json row;
        row["name"] = name;
        row["kind"] = std::holds_alternative<SystemDef>(e)   ? "system"
                      : std::holds_alternative<ScalarODE>(e) ? "scalar_ode"
                                                             : "pfaffian";
        j.push_back(row);
        pretty += name + "  (" + std::string(row["kind"]) + ")\n";
      }
      emit(g, j, pretty);
      return 0;
    }
    if (cat_show->parsed()) {
      if (!catalog.contains(show_name)) return unknown_name(show_name);
      auto entry = catalog.get(show_name, parse_params(show_params));
      Json j = std::visit([](const auto& e) { return to_json(e); }, entry);
      std::string pretty;
      if (std::holds_alternative<SystemDef>(entry))
        pretty = pretty_field(std::get<SystemDef>(entry));
      emit(g, j, pretty);
      return 0;
    }

    if (an_sing->parsed()) {
      if (!catalog.contains(an_system)) return unknown_name(an_system);
      SystemDef sys = resolve_bound_system(an_system, parse_params(an_params));
      FindOptions opt;
      opt.seed = g.seed;
      Json out;
      out["system"] = an_system;
      Json pts = Json::array();
      auto analyze_points = [&](const Chart& ch, const FindResult& fr) {
        for (const auto& p : fr.points) {
          Json row = to_json(p);
          if (p.exact && p.chart_name == ch.name) {
            LocalIndex idx = local_index(sys, ch, p.coords);
            row["local_index"] = to_json(idx);
          }
          pts.push_back(std::move(row));
        }
      };
      if (an_chart.empty()) {
        FindResult fr = find_accessible(sys, nullptr, opt);
        for (const auto& p : fr.points) {
          Json row = to_json(p);
          if (p.exact) {
            int j = std::stoi(p.chart_name.substr(1));
            Chart ch = projective_chart(sys, j);
            row["local_index"] = to_json(local_index(sys, ch, p.coords));
          }
          pts.push_back(std::move(row));
        }
        out["loci"] = fr.loci;
        out["fallback_used"] = fr.used_fallback;
      } else if (an_chart == "jet-weighted") {
        std::vector<int> weights(sys.dim);
        for (int i = 0; i < sys.dim; ++i) weights[i] = i + 1;
        Chart ch = weighted_jet_chart(sys, weights);
        FindResult fr = find_accessible(sys, &ch, opt);
        analyze_points(ch, fr);
        out["loci"] = fr.loci;
        out["fallback_used"] = fr.used_fallback;
      } else {
        int j = std::stoi(an_chart.substr(1));
        Chart ch = projective_chart(sys, j);
        FindResult fr = find_accessible(sys, &ch, opt);
        analyze_points(ch, fr);
        out["loci"] = fr.loci;
        out["fallback_used"] = fr.used_fallback;
      }
      out["points"] = std::move(pts);
      emit(g, out);
      return 0;
    }

    if (series_cmd->parsed()) {
      if (!catalog.contains(se_system)) return unknown_name(se_system);
      SystemDef sys = resolve_bound_system(se_system, parse_params(se_params));
      auto balances = dominant_balances(sys, 6);
      Json out;
      out["system"] = se_system;
      Json blist = Json::array();
      for (const auto& b : balances) {
        Json row;
        row["pole_orders"] = b.pole_orders;
        Json lead = Json::array();
        for (const auto& c : b.leading) lead.push_back(to_json(c));
        row["leading"] = std::move(lead);
        blist.push_back(std::move(row));
      }
      out["balances"] = std::move(blist);
      if (se_balance < 0 || se_balance >= static_cast<int>(balances.size())) {
        std::cerr << "balance index out of range (0.." << balances.size() - 1 << ")\n";
        return 2;
      }
      const Balance& b = balances[se_balance];
      auto kd = kowalevski(sys, b);
      Json res = Json::array();
      for (const auto& r : kd.resonances) res.push_back(to_json(r));
      out["resonances"] = std::move(res);
      FreeValues fv;
      for (const auto& kv : se_free) {
        auto colon = kv.find(':');
        auto eq = kv.find('=');
        if (colon == std::string::npos || eq == std::string::npos)
          throw CLI::ValidationError("--free expects order:var=p/q");
        int order = std::stoi(kv.substr(0, colon));
        std::string var = kv.substr(colon + 1, eq - colon - 1);
        fv[{order, sys.vars->index(var)}] = QuadExt(rat_from_string(kv.substr(eq + 1)));
      }
      try {
        LaurentSolution sol = laurent_extend(sys, b, QuadExt(0), fv, se_order);
        out["solution"] = to_json(sol);
        auto rr = series_residual(sol, sys);
        out["residual_exact_zero"] = rr.exact_zero;
      } catch (const ObstructionError& e) {
        out["obstruction_at_order"] = e.order;
      }
      emit(g, out);
      return 0;
    }

    if (verify->parsed()) {
      const auto& reg = MapRegistry::instance();
      Json out;
      auto finish = [&](bool ok, const std::string& claim, const std::string& witness) {
        out["claim"] = claim;
        out["status"] = ok ? "pass" : "fail";
        if (!witness.empty()) out["witness"] = witness;
        emit(g, out);
        return ok ? 0 : 1;
      };
      if (v_map->parsed()) {
        if (!reg.has_map(v_name)) {
          std::cerr << "unknown map: " << v_name << "\n";
          return 2;
        }
        auto rep = pushforward_check(reg.map(v_name));
        return finish(rep.ok, "pushforward " + v_name, rep.witness);
      }
      if (v_bt->parsed()) {
        if (!reg.has_scalar(v_name)) {
          std::cerr << "unknown scalar transformation: " << v_name << "\n";
          return 2;
        }
        auto rep = bt_check(reg.scalar(v_name));
        return finish(rep.ok, "backlund " + v_name, rep.witness);
      }
      if (v_holo->parsed()) {
        std::string group = v_name + ".charts";
        if (!reg.has_charts(group)) {
          std::cerr << "no chart group registered for " << v_name << "\n";
          return 2;
        }
        const auto& charts = reg.charts(group);
        HolomorphyReport rep;
        if (catalog.contains(v_name) &&
            std::holds_alternative<PfaffianDef>(catalog.entry(v_name)))
          rep = holomorphy_check(catalog.pfaffian(v_name), charts);
        else
          rep = holomorphy_check(catalog.system(v_name), charts);
        std::string witness;
        for (std::size_t i = 0; i < charts.size(); ++i)
          if (!rep.per_chart[i]) witness = rep.witnesses[i];
        return finish(rep.all_polynomial, "holomorphy " + v_name, witness);
      }
      if (v_int->parsed()) {
        auto it = registered_integrals().find(v_name);
        if (it == registered_integrals().end()) {
          std::cerr << "no registered first integral for " << v_name << "\n";
          return 2;
        }
        const auto& sys = catalog.system(v_name);
        auto rep = first_integral_check(sys, parse_ratfun(sys.vars, it->second));
        return finish(rep.ok, "first integral " + v_name, rep.witness);
      }
      if (v_compat->parsed()) {
        if (!catalog.contains(v_name)) return unknown_name(v_name);
        auto rep = compatibility_check(catalog.pfaffian(v_name));
        return finish(rep.ok, "compatibility " + v_name, rep.witness);
      }
      if (v_rel->parsed()) {
        std::vector<std::string> ids;
        if (v_name == "dh") ids = {"sec1-dh-pi3"};
        else if (v_name == "appB") ids = {"appB-pi-decomposition"};
        else if (v_name == "appC") ids = {"appC-sym-s0", "appC-sym-s1", "appC-sym-s2",
                                          "appC-sym-pi"};
        else if (v_name == "appE") ids = {"appE-weyl-squares", "appE-pi-cube"};
        else if (v_name == "appF") ids = {"appF-symmetries"};
        else if (v_name == "appF4") ids = {"appF4-symmetries"};
        else {
          std::cerr << "unknown relation group: " << v_name << "\n";
          return 2;
        }
        auto results = run_claims(ids, g.seed);
        Json rows = Json::array();
        bool all = true;
        for (const auto& r : results) {
          Json row;
          row["claim_id"] = r.id;
          row["status"] = r.pass ? "pass" : "fail";
          if (!r.witness.empty()) row["witness"] = r.witness;
          all = all && r.pass;
          rows.push_back(std::move(row));
        }
        out["results"] = std::move(rows);
        return finish(all, "relations " + v_name, "");
      }
      if (v_all->parsed()) {
        if (!v_ids.empty()) {
          const auto& ledger = claim_ledger();
          for (const auto& id : v_ids) {
            bool known = false;
            for (const auto& c : ledger)
              if (c.id == id) known = true;
            if (!known) {
              std::cerr << "unknown claim id: " << id << "\n";
              return 2;
            }
          }
        }
        auto results = run_claims(v_ids, g.seed);
        Json rows = Json::array();
        bool all = true;
        std::string pretty;
        for (const auto& r : results) {
          Json row;
          row["claim_id"] = r.id;
          row["paper_anchor"] = r.anchor;
          row["status"] = r.pass ? "pass" : "fail";
          if (!r.witness.empty()) row["witness"] = r.witness;
          if (v_timings) row["elapsed"] = r.elapsed_sec;
          all = all && r.pass;
          pretty += (r.pass ? "pass  " : "FAIL  ") + r.id + "\n";
          rows.push_back(std::move(row));
        }
        out["ledger"] = std::move(rows);
        out["total"] = results.size();
        out["status"] = all ? "pass" : "fail";
        emit(g, out, pretty);
        return all ? 0 : 1;
      }
      std::cerr << "verify: choose a subcommand\n";
      return 2;
    }

    if (integ->parsed()) {
      if (!catalog.contains(in_system)) return unknown_name(in_system);
      std::map<std::string, CScalar> pv;
      for (const auto& kv : in_params) {
        auto eq = kv.find('=');
        pv.emplace(kv.substr(0, eq), CScalar(std::stod(kv.substr(eq + 1)), 0));
      }
      // parse complex lists "re:im,re:im,..." (":im" optional)
      auto parse_cvec = [](const std::string& s) {
        std::vector<CScalar> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          auto colon = tok.find(':');
          if (colon == std::string::npos)
            out.emplace_back(std::stod(tok), 0.0);
          else
            out.emplace_back(std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1)));
        }
        return out;
      };
      SystemDef sys = resolve_bound_system(in_system, {});
      IntegratorConfig cfg;
      cfg.rtol = in_rtol;
      cfg.atol = in_atol;
      PathSpec path{parse_cvec(in_path)};
      Trajectory tr = integrate(sys, parse_cvec(in_ic), path, cfg, pv);
      // CSV to stdout or --out; diagnostics JSON alongside
      std::ostringstream csv;
      csv << "t_re,t_im";
      for (int i = 0; i < sys.dim; ++i)
        csv << "," << sys.vars->name(i) << "_re," << sys.vars->name(i) << "_im";
      csv << "\n";
      for (std::size_t k = 0; k < tr.times.size(); ++k) {
        csv << tr.times[k].real() << "," << tr.times[k].imag();
        for (int i = 0; i < sys.dim; ++i)
          csv << "," << tr.states[k][i].real() << "," << tr.states[k][i].imag();
        csv << "\n";
      }
      Json diag;
      diag["system"] = in_system;
      diag["steps_accepted"] = tr.steps_accepted;
      diag["steps_rejected"] = tr.steps_rejected;
      diag["pole_detected"] = tr.pole_detected;
      if (tr.pole_detected) diag["pole_estimate"] = to_json(tr.pole_estimate);
      diag["max_steps_exceeded"] = tr.max_steps_exceeded;
      if (g.out.empty()) {
        std::cout << csv.str();
        std::cerr << diag.dump(2) << "\n";
      } else {
        std::ofstream(g.out) << csv.str();
        std::ofstream(g.out + ".diag.json") << diag.dump(2) << "\n";
      }
      return tr.max_steps_exceeded ? 1 : 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
