#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "orlicz/problem.hpp"
#include "orlicz/solvers.hpp"

namespace orlicz {

struct NFunctionSpec {
  std::string kind = "exponential";  // "exponential" | "power"
  double p = 3.0;                    // power kind exponent
  double p_growth = 3.0;             // declared (phi7) exponent
};

struct NonlinearitySpec {
  std::string family = "power_of_phi";  // | "sublinear" | "concave_convex" | "zero"
  double q = 2.0;
  double kappa = 1.0;
  double s = 0.75;
  double lambda = 0.1;
  double alpha = 0.75;
  double reg_eps = 1e-8;
};

struct MeshSpec {
  int nx = 32, ny = 32;
  double Lx = 1.0, Ly = 1.0;
};

/// One run = one validated config document. Unknown keys are rejected at
/// parse time.
struct RunConfig {
  NFunctionSpec nfunction;
  NonlinearitySpec nonlinearity;
  MeshSpec mesh;
  SolverConfig solver;
  std::string out_dir = ".";
  bool strict = false;
  std::vector<double> lambda_list;  // sweep command input

  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_file(const std::filesystem::path& path);

  void validate() const;
};

NFunction make_nfunction(const RunConfig& cfg);
/// Builds the nonlinearity against the given N-function; the sublinear
/// family takes d from the mesh spec.
Nonlinearity make_nonlinearity(const RunConfig& cfg, const NFunction& nf);
Problem make_problem(const RunConfig& cfg);

}  // namespace orlicz
