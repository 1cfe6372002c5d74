#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/problem.hpp"

namespace orlicz {

struct ArmijoConfig {
  double c = 1e-4;
  double shrink = 0.5;
  double step0 = 1.0;
};

struct LambdaSweepConfig {
  double start = 1.0;
  double shrink = 0.5;
  int max_halvings = 20;
};

struct SolverConfig {
  /// Base residual tolerance; the effective threshold is
  /// tol_res * (1 + |I(u0)|) with u0 the solver's starting iterate.
  double tol_res = 1e-6;
  int max_iter = 5000;
  ArmijoConfig armijo;
  int path_nodes = 31;   // P
  double t_max = 50.0;   // e-point scaling cap
  LambdaSweepConfig lambda_sweep;
  std::uint64_t seed = 12345;

  void validate() const;
};

enum class Classification { GlobalMin, LocalMin, MountainPass };

std::string to_string(Classification c);

struct Solution {
  Field field;
  double energy = 0.0;
  double residual_inf = 0.0;
  int iterations = 0;
  Classification classification = Classification::GlobalMin;
  std::vector<double> trace;  // energy per iteration
  double tol_used = 0.0;      // effective residual threshold
  /// min_t I(t v0) over a small-t grid: the independent sign certificate
  /// produced by the minimization pipelines.
  std::optional<double> negativity_probe;
};

/// Armijo-backtracked gradient descent on the interior nodal values,
/// started from 0.1 * sin bump. Stops at residual <= tol; also evaluates the
/// small-t negativity probe along the bump ray.
Solution global_minimize(const Problem& p, const SolverConfig& cfg);

struct EPoint {
  Field e;
  double t_e = 0.0;
  double grad_max = 0.0;  // A = max cell |grad Psi|
  double core_min = 0.0;  // B = min of Psi over the centered quarter domain
  std::vector<std::pair<double, double>> profile;  // (t, I(t Psi))
};

/// Doubles t from 1 until I(t Psi) < 0 with Psi the sin bump; throws
/// GeometryError (with the profile in the message) when t_max is exceeded.
EPoint find_e_point(const Problem& p, const SolverConfig& cfg);

/// Path-deformation saddle search between 0 and the e-point: the max-energy
/// node takes capped Armijo descent steps and the path is re-evened by
/// midpoint insertion next to the max (energy-gap triggered, plus bisection
/// on residual plateaus), thinning lowest-energy valley nodes to keep P
/// fields. Endpoints never move and the max-node energy never increases.
Solution mountain_pass(const Problem& p, const SolverConfig& cfg,
                       std::vector<Field>* final_path = nullptr);

/// Projected Armijo descent inside the modular ball {Q(u) <= r}: trial
/// points leaving the ball are pulled back to the sphere by scalar
/// bisection. Converging on the boundary raises GeometryError (r too small
/// or lambda too large).
Solution local_minimize_ball(const Problem& p, double r, const SolverConfig& cfg);

struct RingEstimate {
  double r = 0.0;    // candidate modular level with the largest sampled min
  double rho = 0.0;  // min sampled I at that level
  bool lambda_ok = false;
  std::uint64_t seed = 0;
};

/// Monte Carlo surrogate for the mountain-pass ring: random low-mode
/// Dirichlet fields are rescaled to each candidate modular level r of a log
/// grid; rho(r) is the sampled minimum of I there.
RingEstimate estimate_mp_ring(const Problem& p, const SolverConfig& cfg);

struct TwoSolutions {
  Solution u_min;
  Solution w_mp;
  double lambda_used = 0.0;
  RingEstimate ring;
  bool degenerate = false;  // lambda == 0: the ball minimizer is trivial
};

/// Theorem-3 style two-solution search: halves lambda until the ring
/// estimate is positive, then runs local_minimize_ball and mountain_pass and
/// certifies I(u_min) < 0 < I(w_mp).
TwoSolutions concave_convex(const Problem& p, const SolverConfig& cfg);

/// Rescale u so that the modular energy equals target (bisection on the
/// scale factor). Returns the scaled field.
Field rescale_to_modular(const Problem& p, const Field& u, double target);

}  // namespace orlicz
