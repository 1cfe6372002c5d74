#include "orlicz/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "orlicz/numerics.hpp"
#include "orlicz/reports.hpp"

namespace orlicz {

namespace {

namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open " + path.string() + " for writing");
  os << text;
}

RunConfig with_fixed_lambda(const RunConfig& cfg, double lambda) {
  RunConfig out = cfg;
  out.nonlinearity.lambda = lambda;
  out.solver.lambda_sweep.start = lambda;
  out.solver.lambda_sweep.max_halvings = 0;
  return out;
}

}  // namespace

int run_check(const RunConfig& cfg, const std::string& out_dir, bool strict) {
  const NFunction nf = make_nfunction(cfg);
  const Nonlinearity nl = make_nonlinearity(cfg, nf);
  const Mesh mesh(cfg.mesh.nx, cfg.mesh.ny, cfg.mesh.Lx, cfg.mesh.Ly);
  const double d = mesh.poincare_d();

  CheckReport rep;
  rep.phi_conditions =
      check_phi_conditions(nf, d, nf.p_growth(), ConditionProbe::defaults(nf));

  const double t_hi = nf.kind() == NKind::Exponential ? 3.0 : 100.0;
  const auto delta2_grid = logspace(0.01, t_hi, 257);
  rep.delta2 = check_delta2(nf, delta2_grid);
  rep.delta2_conjugate = check_delta2(conjugate_of(nf), delta2_grid);

  rep.ps_transform = ps_transform_check(nf, logspace(0.01, t_hi, 257));

  rep.f1 = check_f1(nl, nf);
  rep.f2 = check_f2(nl, nf, 1.0, t_hi);
  rep.superlinearity = superlinearity_probe(nl, nf, t_hi);
  if (nl.family() == Family::Sublinear || nl.family() == Family::ConcaveConvex)
    rep.f3_f4 = check_f3_f4(nl, nf, d, 0.5);

  rep.any_violation = rep.phi_conditions.any_violated() || !rep.delta2.holds ||
                      !rep.delta2_conjugate.holds || !rep.ps_transform.e2_all_ok ||
                      !rep.ps_transform.e3_all_ok;

  write_text(fs::path(out_dir) / "check_report.json", to_json_text(rep, cfg));
  if (strict && rep.any_violation) return kExitStrictViolation;
  return kExitOk;
}

int run_solve(const RunConfig& cfg, const std::string& mode,
              const std::string& out_dir) {
  const fs::path out(out_dir);
  const Problem problem = make_problem(cfg);

  if (mode == "concave-convex" && problem.nl.family() != Family::ConcaveConvex) {
    std::cerr << "solve: mode concave-convex needs nonlinearity.family "
                 "\"concave_convex\", got \""
              << to_string(problem.nl.family()) << "\"\n";
    return kExitUsage;
  }

  try {
    if (mode == "global-min") {
      const Solution sol = global_minimize(problem, cfg.solver);
      write_text(out / "solution_report.json", to_json_text(sol, cfg));
      write_csv(sol.field, out / "solution.csv");
    } else if (mode == "mountain-pass") {
      const Solution sol = mountain_pass(problem, cfg.solver);
      write_text(out / "solution_report.json", to_json_text(sol, cfg));
      write_csv(sol.field, out / "solution.csv");
    } else if (mode == "concave-convex") {
      const TwoSolutions two = concave_convex(problem, cfg.solver);
      write_text(out / "solution_report_min.json",
                 to_json_text(two.u_min, cfg, two.lambda_used));
      write_text(out / "solution_report_mp.json",
                 to_json_text(two.w_mp, cfg, two.lambda_used));
      write_csv(two.u_min.field, out / "solution_min.csv");
      write_csv(two.w_mp.field, out / "solution_mp.csv");
    } else {
      std::cerr << "solve: unknown mode \"" << mode
                << "\" (expected global-min | mountain-pass | concave-convex)\n";
      return kExitUsage;
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const GeometryError& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const EvaluationError& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return kExitNonConvergence;
  }
  return kExitOk;
}

int run_sweep(const RunConfig& cfg, const std::string& out_dir) {
  if (cfg.nonlinearity.family != "concave_convex") {
    std::cerr << "sweep: needs nonlinearity.family \"concave_convex\"\n";
    return kExitUsage;
  }
  if (cfg.lambda_list.empty()) {
    std::cerr << "sweep: lambda_list is empty\n";
    return kExitUsage;
  }

  std::vector<SweepRow> rows;
  bool any = false;
  for (double lambda : cfg.lambda_list) {
    SweepRow row;
    row.lambda = lambda;
    try {
      const RunConfig sub = with_fixed_lambda(cfg, lambda);
      const TwoSolutions two = concave_convex(make_problem(sub), sub.solver);
      if (!two.degenerate) {
        row.found_pair = true;
        row.energy_min = two.u_min.energy;
        row.energy_mp = two.w_mp.energy;
        row.residual_min = two.u_min.residual_inf;
        row.residual_mp = two.w_mp.residual_inf;
        any = true;
      } else {
        row.note = "degenerate (lambda = 0)";
      }
    } catch (const Error& e) {
      row.note = e.what();
      for (char& ch : row.note)
        if (ch == ',' || ch == '\n') ch = ';';
    }
    rows.push_back(std::move(row));
  }
  write_text(fs::path(out_dir) / "sweep.csv", to_csv_text(rows));
  return any ? kExitOk : kExitNonConvergence;
}

}  // namespace orlicz
