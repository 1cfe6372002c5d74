#include "orlicz/reports.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace orlicz {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json entry_json(const ConditionEntry& e) {
  return ordered_json{{"id", e.id},
                      {"verdict", to_string(e.verdict)},
                      {"witness_t", e.witness_t},
                      {"lhs", e.lhs},
                      {"rhs", e.rhs},
                      {"margin", e.margin},
                      {"grid_spec", e.grid_spec}};
}

ordered_json conditions_json(const ConditionReport& rep) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : rep.entries) arr.push_back(entry_json(e));
  return arr;
}

ordered_json delta2_json(const Delta2Report& rep) {
  return ordered_json{{"holds", rep.holds},
                      {"sup_ratio", rep.sup_ratio},
                      {"witness_t", rep.witness_t},
                      {"k_max", rep.k_max},
                      {"grid_spec", rep.grid_spec}};
}

ordered_json trend_json(const TrendReport& rep) {
  return ordered_json{{"trend", rep.trend},
                      {"final_value", rep.final_value},
                      {"verdict", rep.verdict ? "holds-on-samples" : "violated"},
                      {"grid_spec", rep.grid_spec}};
}

ordered_json mesh_json(const MeshSpec& m) {
  return ordered_json{{"nx", m.nx}, {"ny", m.ny}, {"Lx", m.Lx}, {"Ly", m.Ly}};
}

ordered_json family_json(const RunConfig& cfg) {
  const auto& s = cfg.nonlinearity;
  ordered_json j{{"family", s.family}};
  if (s.family == "power_of_phi") j["q"] = s.q;
  if (s.family == "sublinear") {
    j["kappa"] = s.kappa;
    j["s"] = s.s;
    j["reg_eps"] = s.reg_eps;
  }
  if (s.family == "concave_convex") {
    j["lambda"] = s.lambda;
    j["alpha"] = s.alpha;
    j["q"] = s.q;
    j["reg_eps"] = s.reg_eps;
  }
  j["nfunction"] = cfg.nfunction.kind;
  if (cfg.nfunction.kind == "power") j["p"] = cfg.nfunction.p;
  return j;
}

}  // namespace

std::string to_json_text(const ConditionReport& rep) {
  return conditions_json(rep).dump(2) + "\n";
}

std::string to_json_text(const CheckReport& rep, const RunConfig& cfg) {
  ordered_json j;
  j["nfunction"] = cfg.nfunction.kind;
  j["phi_conditions"] = conditions_json(rep.phi_conditions);
  j["delta2"] = delta2_json(rep.delta2);
  j["delta2_conjugate"] = delta2_json(rep.delta2_conjugate);
  j["ps_transform"] = ordered_json{{"e2_all_ok", rep.ps_transform.e2_all_ok},
                                   {"e3_all_ok", rep.ps_transform.e3_all_ok},
                                   {"count_s_positive", rep.ps_transform.count_s_positive},
                                   {"rows", rep.ps_transform.rows.size()},
                                   {"grid_spec", rep.ps_transform.grid_spec}};
  j["f_probes"]["f1"] = trend_json(rep.f1);
  j["f_probes"]["f2"] = ordered_json{{"theta_max", rep.f2.theta_max},
                                     {"positivity_ok", rep.f2.positivity_ok},
                                     {"violation_t", rep.f2.violation_t},
                                     {"grid_spec", rep.f2.grid_spec}};
  j["f_probes"]["superlinearity"] = trend_json(rep.superlinearity);
  if (rep.f3_f4) {
    j["f_probes"]["f3_f4"] = ordered_json{{"b1_est", rep.f3_f4->b1_est},
                                          {"c1_est", rep.f3_f4->c1_est},
                                          {"gamma", rep.f3_f4->gamma},
                                          {"f3_ok", rep.f3_f4->f3_ok},
                                          {"f4_ok", rep.f3_f4->f4_ok},
                                          {"grid_spec", rep.f3_f4->grid_spec}};
  }
  j["mesh_spec"] = mesh_json(cfg.mesh);
  j["any_violation"] = rep.any_violation;
  j["seed"] = cfg.solver.seed;
  return j.dump(2) + "\n";
}

std::string to_json_text(const Solution& sol, const RunConfig& cfg,
                         std::optional<double> lambda_used) {
  ordered_json j;
  j["classification"] = to_string(sol.classification);
  j["energy"] = sol.energy;
  j["residual_inf"] = sol.residual_inf;
  j["iterations"] = sol.iterations;
  if (lambda_used) j["lambda_used"] = *lambda_used;
  if (sol.negativity_probe) j["negativity_probe"] = *sol.negativity_probe;
  j["tol_used"] = sol.tol_used;
  j["trace"] = sol.trace;
  j["mesh_spec"] = mesh_json(cfg.mesh);
  j["family_spec"] = family_json(cfg);
  j["seed"] = cfg.solver.seed;
  return j.dump(2) + "\n";
}

std::string to_csv_text(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "lambda,found_pair,I_min,I_mp,res_min,res_mp,note\n";
  char buf[256];
  for (const auto& r : rows) {
    if (r.found_pair) {
      std::snprintf(buf, sizeof(buf), "%.17g,true,%.17g,%.17g,%.17g,%.17g,\n",
                    r.lambda, r.energy_min, r.energy_mp, r.residual_min, r.residual_mp);
      os << buf;
    } else {
      std::snprintf(buf, sizeof(buf), "%.17g,false,,,,,%s\n", r.lambda, r.note.c_str());
      os << buf;
    }
  }
  return os.str();
}

}  // namespace orlicz
