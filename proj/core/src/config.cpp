#include "orlicz/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace orlicz {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where,
                    const std::set<std::string>& known) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.contains(it.key()))
      throw ConfigError("config: unknown key \"" + it.key() + "\" in " + where);
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) {
    try {
      out = obj.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config: bad value for \"") + key + "\": " + e.what());
    }
  }
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown(j, "top level",
                 {"nfunction", "nonlinearity", "mesh", "solver", "out_dir", "strict",
                  "lambda_list"});

  RunConfig cfg;
  if (j.contains("nfunction")) {
    const auto& o = j.at("nfunction");
    reject_unknown(o, "nfunction", {"kind", "p", "p_growth"});
    read(o, "kind", cfg.nfunction.kind);
    read(o, "p", cfg.nfunction.p);
    cfg.nfunction.p_growth = cfg.nfunction.kind == "power" ? cfg.nfunction.p : 3.0;
    read(o, "p_growth", cfg.nfunction.p_growth);
  }
  if (j.contains("nonlinearity")) {
    const auto& o = j.at("nonlinearity");
    reject_unknown(o, "nonlinearity",
                   {"family", "q", "kappa", "s", "lambda", "alpha", "reg_eps"});
    read(o, "family", cfg.nonlinearity.family);
    read(o, "q", cfg.nonlinearity.q);
    read(o, "kappa", cfg.nonlinearity.kappa);
    read(o, "s", cfg.nonlinearity.s);
    read(o, "lambda", cfg.nonlinearity.lambda);
    read(o, "alpha", cfg.nonlinearity.alpha);
    read(o, "reg_eps", cfg.nonlinearity.reg_eps);
  }
  if (j.contains("mesh")) {
    const auto& o = j.at("mesh");
    reject_unknown(o, "mesh", {"nx", "ny", "Lx", "Ly"});
    read(o, "nx", cfg.mesh.nx);
    read(o, "ny", cfg.mesh.ny);
    read(o, "Lx", cfg.mesh.Lx);
    read(o, "Ly", cfg.mesh.Ly);
  }
  if (j.contains("solver")) {
    const auto& o = j.at("solver");
    reject_unknown(o, "solver",
                   {"tol_res", "max_iter", "armijo", "path_nodes", "t_max",
                    "lambda_sweep", "seed"});
    read(o, "tol_res", cfg.solver.tol_res);
    read(o, "max_iter", cfg.solver.max_iter);
    if (o.contains("armijo")) {
      const auto& a = o.at("armijo");
      reject_unknown(a, "solver.armijo", {"c", "shrink", "step0"});
      read(a, "c", cfg.solver.armijo.c);
      read(a, "shrink", cfg.solver.armijo.shrink);
      read(a, "step0", cfg.solver.armijo.step0);
    }
    read(o, "path_nodes", cfg.solver.path_nodes);
    read(o, "t_max", cfg.solver.t_max);
    if (o.contains("lambda_sweep")) {
      const auto& a = o.at("lambda_sweep");
      reject_unknown(a, "solver.lambda_sweep", {"start", "shrink", "max_halvings"});
      read(a, "start", cfg.solver.lambda_sweep.start);
      read(a, "shrink", cfg.solver.lambda_sweep.shrink);
      read(a, "max_halvings", cfg.solver.lambda_sweep.max_halvings);
    }
    read(o, "seed", cfg.solver.seed);
  }
  read(j, "out_dir", cfg.out_dir);
  read(j, "strict", cfg.strict);
  read(j, "lambda_list", cfg.lambda_list);

  cfg.validate();
  return cfg;
}

RunConfig RunConfig::from_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("config: cannot open " + path.string());
  std::ostringstream buf;
  buf << is.rdbuf();
  return from_json_text(buf.str());
}

void RunConfig::validate() const {
  static const std::set<std::string> kinds = {"exponential", "power"};
  static const std::set<std::string> families = {"power_of_phi", "sublinear",
                                                 "concave_convex", "zero"};
  if (!kinds.contains(nfunction.kind))
    throw ConfigError("config: nfunction.kind must be \"exponential\" or \"power\"");
  if (nfunction.kind == "power" && !(nfunction.p > 1.0))
    throw ConfigError("config: nfunction.p must be > 1");
  if (!families.contains(nonlinearity.family))
    throw ConfigError("config: unknown nonlinearity.family \"" + nonlinearity.family + "\"");
  if (mesh.nx < 1 || mesh.ny < 1) throw ConfigError("config: mesh.nx, mesh.ny must be >= 1");
  if (!(mesh.Lx > 0.0) || !(mesh.Ly > 0.0))
    throw ConfigError("config: mesh.Lx, mesh.Ly must be > 0");
  solver.validate();
}

NFunction make_nfunction(const RunConfig& cfg) {
  if (cfg.nfunction.kind == "power") return NFunction::power(cfg.nfunction.p);
  return NFunction::exponential(cfg.nfunction.p_growth);
}

Nonlinearity make_nonlinearity(const RunConfig& cfg, const NFunction& nf) {
  const auto& s = cfg.nonlinearity;
  if (s.family == "power_of_phi") return make_power_of_phi(nf, s.q);
  if (s.family == "sublinear") {
    const Mesh m(cfg.mesh.nx, cfg.mesh.ny, cfg.mesh.Lx, cfg.mesh.Ly);
    return make_sublinear(nf, s.kappa, s.s, m.poincare_d(), s.reg_eps);
  }
  if (s.family == "concave_convex")
    return make_concave_convex(nf, s.lambda, s.alpha, s.q, s.reg_eps);
  return make_zero();
}

Problem make_problem(const RunConfig& cfg) {
  const Mesh mesh(cfg.mesh.nx, cfg.mesh.ny, cfg.mesh.Lx, cfg.mesh.Ly);
  const NFunction nf = make_nfunction(cfg);
  return Problem(mesh, nf, make_nonlinearity(cfg, nf));
}

}  // namespace orlicz
