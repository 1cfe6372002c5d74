#include "orlicz/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "orlicz/numerics.hpp"

namespace orlicz {

namespace {

constexpr double kTieWindow = 1e-12;
constexpr int kMaxHalvingsLineSearch = 60;

double sum_sq(const Field& r) {
  double acc = 0.0;
  for (double x : r.values()) acc += x * x;
  return acc;
}

/// Displacement norm of a step along r (grid L2).
double step_norm(const Field& r) { return l2_norm(r); }

struct LineSearchResult {
  bool ok = false;
  double alpha = 0.0;
  Field u;
  double energy = 0.0;
};

template <typename Projector>
LineSearchResult armijo_search(const Problem& p, const Field& u, const Field& r,
                               double I_u, const ArmijoConfig& cfg,
                               double step0, Projector&& project) {
  LineSearchResult res{false, 0.0, u, I_u};
  const double slope = -sum_sq(r);  // directional derivative along -r
  if (slope == 0.0) return res;
  double alpha = step0;
  for (int k = 0; k < kMaxHalvingsLineSearch; ++k) {
    Field trial = u;
    trial.axpy(-alpha, r);
    project(trial);
    const double It = total_energy_or_inf(p, trial);
    if (It <= I_u + cfg.c * alpha * slope) {
      res.ok = true;
      res.alpha = alpha;
      res.u = std::move(trial);
      res.energy = It;
      return res;
    }
    alpha *= cfg.shrink;
  }
  return res;
}

LineSearchResult armijo_search(const Problem& p, const Field& u, const Field& r,
                               double I_u, const ArmijoConfig& cfg, double step0) {
  return armijo_search(p, u, r, I_u, cfg, step0, [](Field&) {});
}

/// min over a small-t log grid of I(t v0); the sign certificate used by the
/// minimization pipelines.
double negativity_probe(const Problem& p, const Field& v0) {
  double best = std::numeric_limits<double>::infinity();
  for (double t : logspace(1e-4, 0.5, 41))
    best = std::min(best, total_energy_or_inf(p, t * v0));
  return best;
}

std::string profile_string(const std::vector<std::pair<double, double>>& prof) {
  std::ostringstream os;
  for (const auto& [t, v] : prof) os << " (" << t << ", " << v << ")";
  return os.str();
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tol_res > 0)) throw ConfigError("solver.tol_res must be > 0");
  if (max_iter < 1) throw ConfigError("solver.max_iter must be >= 1");
  if (!(armijo.c > 0) || !(armijo.shrink > 0) || armijo.shrink >= 1 || !(armijo.step0 > 0))
    throw ConfigError("solver.armijo needs c > 0, shrink in (0,1), step0 > 0");
  if (path_nodes < 3) throw ConfigError("solver.path_nodes must be >= 3");
  if (!(t_max > 0)) throw ConfigError("solver.t_max must be > 0");
  if (lambda_sweep.start < 0 || !(lambda_sweep.shrink > 0) || lambda_sweep.shrink >= 1 ||
      lambda_sweep.max_halvings < 0)
    throw ConfigError("solver.lambda_sweep needs start >= 0, shrink in (0,1), max_halvings >= 0");
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::GlobalMin: return "global-min";
    case Classification::LocalMin: return "local-min";
    case Classification::MountainPass: return "mountain-pass";
  }
  return "?";
}

Solution global_minimize(const Problem& p, const SolverConfig& cfg) {
  cfg.validate();
  const Field v0 = sin_bump(p.mesh);
  Field u = 0.1 * v0;  // 0 is a critical point of the f == 0 part; start off it
  double I = total_energy(p, u);
  const double tol = cfg.tol_res * (1.0 + std::abs(I));
  Solution sol{u, I, 0.0, 0, Classification::GlobalMin, {I}, tol, negativity_probe(p, v0)};
  for (int it = 0; it < cfg.max_iter; ++it) {
    const Field r = residual(p, u);
    const double rn = r.inf_norm();
    if (rn <= tol) {
      sol.field = u;
      sol.energy = I;
      sol.residual_inf = rn;
      sol.iterations = it;
      return sol;
    }
    auto ls = armijo_search(p, u, r, I, cfg.armijo, cfg.armijo.step0);
    if (!ls.ok)
      throw ConvergenceError("global_minimize: line search stalled at residual " +
                                 std::to_string(rn),
                             sol.trace);
    u = std::move(ls.u);
    I = ls.energy;
    sol.trace.push_back(I);
  }
  throw ConvergenceError("global_minimize: max_iter exceeded", sol.trace);
}

EPoint find_e_point(const Problem& p, const SolverConfig& cfg) {
  cfg.validate();
  EPoint ep{Field(p.mesh), 0.0, 0.0, 0.0, {}};
  const Field psi = sin_bump(p.mesh);

  for (const auto& c : gradient_field(p.mesh, psi))
    ep.grad_max = std::max(ep.grad_max, std::hypot(c.gx, c.gy));
  ep.core_min = std::numeric_limits<double>::infinity();
  const Mesh& m = p.mesh;
  for (int j = 0; j <= m.ny; ++j)
    for (int i = 0; i <= m.nx; ++i) {
      const double x = m.node_x(i), y = m.node_y(j);
      if (x >= 0.25 * m.Lx && x <= 0.75 * m.Lx && y >= 0.25 * m.Ly && y <= 0.75 * m.Ly)
        ep.core_min = std::min(ep.core_min, psi.at(i, j));
    }

  for (double t = 1.0; t <= cfg.t_max; t *= 2.0) {
    const double I = total_energy_or_inf(p, t * psi);
    ep.profile.emplace_back(t, I);
    if (I < 0.0) {
      ep.t_e = t;
      ep.e = t * psi;
      return ep;
    }
  }
  throw GeometryError("find_e_point: I(t Psi) stayed nonnegative up to t_max; profile:" +
                      profile_string(ep.profile));
}

namespace {

int argmax_node(const std::vector<double>& E) {
  const double mx = *std::max_element(E.begin(), E.end());
  for (size_t k = 0; k < E.size(); ++k)
    if (E[k] >= mx - kTieWindow) return static_cast<int>(k);
  return 0;
}

/// Arc position of node k along the polyline.
double arc_position(const std::vector<Field>& path, int k) {
  double s = 0.0;
  for (int j = 1; j <= k; ++j) s += l2_distance(path[j - 1], path[j]);
  return s;
}

/// Target arc positions for P nodes on a polyline of chord length total:
/// a geometric ladder of spacings base/2^depth ... base/2 zooming on s_hot
/// from both sides, the rest of the budget spread evenly over the two outer
/// stretches. depth = 0 reduces to the uniform distribution.
std::vector<double> zoom_positions(double total, double s_hot, int P, int depth) {
  const double base = total / (P - 1);
  std::vector<double> pos;
  pos.push_back(0.0);
  pos.push_back(total);
  s_hot = std::clamp(s_hot, 0.0, total);
  if (s_hot > 0.0 && s_hot < total) pos.push_back(s_hot);
  double lo = s_hot, hi = s_hot;
  for (int side : {-1, 1}) {
    double off = 0.0;
    for (int j = depth; j >= 1; --j) {
      off += base / std::pow(2.0, j);
      const double s = s_hot + side * off;
      if (s > 1e-12 * total && s < total * (1.0 - 1e-12)) {
        pos.push_back(s);
        if (side < 0) lo = s;
        if (side > 0) hi = s;
      }
    }
  }
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());

  int remaining = P - static_cast<int>(pos.size());
  if (remaining > 0) {
    const double left = lo, right = total - hi;
    const double whole = left + right;
    int n_left =
        whole > 0.0 ? static_cast<int>(std::round(remaining * left / whole)) : 0;
    n_left = std::clamp(n_left, 0, remaining);
    const int n_right = remaining - n_left;
    for (int i = 1; i <= n_left; ++i) pos.push_back(lo * i / (n_left + 1));
    for (int i = 1; i <= n_right; ++i)
      pos.push_back(hi + (total - hi) * i / (n_right + 1));
    std::sort(pos.begin(), pos.end());
  }
  while (static_cast<int>(pos.size()) > P) pos.erase(pos.end() - 2);
  return pos;
}

/// Resamples the polyline at the given sorted arc positions (first must be 0,
/// last the chord length); endpoint fields are reused verbatim.
void resample_at(const Problem& p, std::vector<Field>& path,
                 std::vector<double>& E, const std::vector<double>& positions) {
  const int n = static_cast<int>(path.size());
  std::vector<double> cum(n, 0.0);
  for (int j = 1; j < n; ++j)
    cum[j] = cum[j - 1] + l2_distance(path[j - 1], path[j]);
  const double total = cum.back();
  if (!(total > 0.0)) return;

  std::vector<Field> npath;
  std::vector<double> nE;
  npath.reserve(positions.size());
  nE.reserve(positions.size());
  npath.push_back(path.front());
  nE.push_back(E.front());
  int j = 0;
  for (size_t i = 1; i + 1 < positions.size(); ++i) {
    const double s = std::min(positions[i], total);
    while (j + 2 < n && cum[j + 1] < s) ++j;
    const double seg = cum[j + 1] - cum[j];
    const double th = seg > 0.0 ? std::clamp((s - cum[j]) / seg, 0.0, 1.0) : 0.0;
    Field f = (1.0 - th) * path[j];
    f.axpy(th, path[j + 1]);
    nE.push_back(total_energy_or_inf(p, f));
    npath.push_back(std::move(f));
  }
  npath.push_back(path.back());
  nE.push_back(E.back());
  path = std::move(npath);
  E = std::move(nE);
}

}  // namespace

Solution mountain_pass(const Problem& p, const SolverConfig& cfg,
                       std::vector<Field>* final_path) {
  cfg.validate();
  const EPoint ep = find_e_point(p, cfg);
  const int P = cfg.path_nodes;

  // The invariant maintained throughout: every interior node sits at the 1D
  // energy maximum of its local tangent line, bracketed by half the adjacent
  // segment, so the node energies are honest local crest values and their
  // maximum estimates the path max from above. The crest node then descends
  // transversally (minimax order); its crest value never rises above the
  // last reported one, which makes the max-energy trace non-increasing by
  // construction. The tangential first-order condition is solved by the line
  // maximization itself, so the full residual at the crest node can reach
  // the tolerance.
  static const bool debug = std::getenv("ORLICZ_MP_DEBUG") != nullptr;

  // golden-section maximum of I(base + s*tau) on s in [-smax, smax]
  auto line_max = [&p](const Field& base, const Field& tau, double smax,
                       double* s_out) {
    auto val = [&](double s) {
      Field u = base;
      u.axpy(s, tau);
      return total_energy_or_inf(p, u);
    };
    constexpr double kGolden = 0.6180339887498949;
    double bs = 0.0, bv = val(0.0);
    for (int i = 0; i <= 8; ++i) {
      const double s = -smax + 2.0 * smax * i / 8.0;
      const double v = val(s);
      if (v > bv) {
        bv = v;
        bs = s;
      }
    }
    double lo = std::max(bs - smax / 4.0, -smax);
    double hi = std::min(bs + smax / 4.0, smax);
    double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
    double f1 = val(x1), f2 = val(x2);
    for (int i = 0; i < 48 && hi - lo > 1e-13 * (1.0 + smax); ++i) {
      if (f1 > f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kGolden * (hi - lo);
        f1 = val(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kGolden * (hi - lo);
        f2 = val(x2);
      }
    }
    const double sm = 0.5 * (lo + hi), vm = val(sm);
    if (vm >= bv) {
      *s_out = sm;
      return vm;
    }
    *s_out = bs;
    return bv;
  };

  auto unit_tangent = [](const std::vector<Field>& pth, int k) {
    Field tau = pth[k + 1] - pth[k - 1];
    const double n = l2_norm(tau);
    if (n > 0.0) tau *= 1.0 / n;
    return tau;
  };

  std::vector<Field> path;
  std::vector<double> E;
  path.reserve(P);
  for (int k = 0; k < P; ++k) {
    path.push_back((static_cast<double>(k) / (P - 1)) * ep.e);
    E.push_back(total_energy_or_inf(p, path.back()));
  }
  const double tol = cfg.tol_res * (1.0 + std::abs(E.front()));

  Solution sol{Field(p.mesh), 0.0, 0.0, 0, Classification::MountainPass, {}, tol, {}};
  int stuck_streak = 0;
  constexpr int kMaxStuck = 500;
  constexpr int kMaintainEvery = 8;

  for (int it = 0; it < cfg.max_iter; ++it) {
    const int kc = argmax_node(E);
    if (kc == 0 || kc + 1 == static_cast<int>(path.size()))
      throw GeometryError("mountain_pass: path collapse (max node hit an endpoint)");
    const double cap = sol.trace.empty() ? E[kc] : sol.trace.back();

    const Field r = residual(p, path[kc]);
    const double rn = r.inf_norm();
    if (rn <= tol) {
      sol.trace.push_back(E[kc]);
      sol.field = path[kc];
      sol.energy = E[kc];
      sol.residual_inf = rn;
      sol.iterations = it;
      if (final_path) *final_path = path;
      return sol;
    }

    const double seg = std::min(l2_distance(path[kc], path[kc - 1]),
                                l2_distance(path[kc], path[kc + 1]));
    const double smax = 0.45 * seg;
    const Field tau = unit_tangent(path, kc);

    if (debug && it % 250 == 0)
      std::cerr << "mp it=" << it << " kc=" << kc << " E=" << E[kc]
                << " rn=" << rn << " tol=" << tol << " seg=" << seg << "\n";

    // transversal descent with crest lookahead; tau is unit in the grid L2
    // norm, so the Euclidean projection needs the explicit Gram value
    Field dir = r;
    {
      double rt = 0.0;
      const std::span<const double> rv = r.values(), tv = tau.values();
      for (size_t m = 0; m < rv.size(); ++m) rt += rv[m] * tv[m];
      const double tt = sum_sq(tau);
      if (tt > 0.0) dir.axpy(-rt / tt, tau);
    }
    const double slope = -sum_sq(dir);
    bool accepted = false;
    if (slope < 0.0) {
      const double dn = step_norm(dir);
      double alpha = cfg.armijo.step0;
      if (dn > 0.0 && seg > 0.0) alpha = std::min(alpha, 0.5 * seg / dn);
      for (int h = 0; h < kMaxHalvingsLineSearch && !accepted; ++h) {
        Field trial = path[kc];
        trial.axpy(-alpha, dir);
        const double It = total_energy_or_inf(p, trial);
        if (It <= E[kc] + cfg.armijo.c * alpha * slope) {
          // ride back up to the crest of the tangent line, within a bracket
          // that scales with the step so backtracking always terminates
          const double bracket = std::min(smax, 8.0 * alpha * dn);
          double s2 = 0.0;
          const double crest2 = line_max(trial, tau, bracket, &s2);
          if (crest2 <= cap) {
            if (crest2 > It) trial.axpy(s2, tau);
            path[kc] = std::move(trial);
            E[kc] = std::max(It, crest2);
            accepted = true;
          }
        }
        if (!accepted) alpha *= cfg.armijo.shrink;
      }
    }
    if (accepted) {
      stuck_streak = 0;
    } else if (++stuck_streak >= kMaxStuck) {
      throw ConvergenceError(
          "mountain_pass: stalled at residual " + std::to_string(rn), sol.trace);
    }

    // maintenance: re-even the witness path when adjacent energy gaps next
    // to the crest exceed 10%, or periodically. New interior nodes are
    // themselves crest-relocated; the result is adopted only if nothing
    // rises above the cap.
    const int km = argmax_node(E);
    const bool gap_trigger =
        std::abs(E[km] - E[km - 1]) > 0.1 * (1.0 + std::abs(E[km])) ||
        std::abs(E[km + 1] - E[km]) > 0.1 * (1.0 + std::abs(E[km]));
    if (gap_trigger || (it + 1) % kMaintainEvery == 0) {
      double total = 0.0;
      for (size_t j = 0; j + 1 < path.size(); ++j)
        total += l2_distance(path[j], path[j + 1]);
      const double s_hot = arc_position(path, km);
      if (total > 0.0 && s_hot > 0.0 && s_hot < total) {
        std::vector<Field> tpath = path;
        std::vector<double> tE = E;
        resample_at(p, tpath, tE, zoom_positions(total, s_hot, P, 0));
        if (*std::max_element(tE.begin(), tE.end()) <= cap) {
          path = std::move(tpath);
          E = std::move(tE);
        }
      }
    }

    sol.trace.push_back(E[argmax_node(E)]);
  }
  throw ConvergenceError("mountain_pass: max_iter exceeded", sol.trace);
}

Field rescale_to_modular(const Problem& p, const Field& u, double target) {
  if (!(target > 0)) throw ConfigError("rescale_to_modular: target must be > 0");
  auto mod = [&](double c) {
    Field w = c * u;
    return modular_energy_or_inf(p, w);
  };
  if (mod(1.0) == 0.0) throw ConfigError("rescale_to_modular: zero field");
  double hi = 1.0;
  while (mod(hi) < target) {
    hi *= 2.0;
    if (hi > 1e12) throw EvaluationError("rescale_to_modular: bracket blew up");
  }
  const double c = bisect_increasing(mod, target, 0.0, hi, 1e-12 * hi);
  return c * u;
}

Solution local_minimize_ball(const Problem& p, double r, const SolverConfig& cfg) {
  cfg.validate();
  if (!(r > 0)) throw ConfigError("local_minimize_ball needs r > 0");

  const Field v0 = sin_bump(p.mesh);
  Field u = 0.1 * v0;
  if (modular_energy_or_inf(p, u) >= r) u = rescale_to_modular(p, u, 0.5 * r);

  auto project = [&](Field& w) {
    if (modular_energy_or_inf(p, w) > r) w = rescale_to_modular(p, w, r);
  };

  double I = total_energy(p, u);
  const double tol = cfg.tol_res * (1.0 + std::abs(I));
  Solution sol{u, I, 0.0, 0, Classification::LocalMin, {I}, tol, negativity_probe(p, v0)};

  const double boundary_band = r * (1.0 - 1e-9);
  for (int it = 0; it < cfg.max_iter; ++it) {
    const Field res = residual(p, u);
    const double rn = res.inf_norm();
    if (rn <= tol) {
      if (modular_energy_or_inf(p, u) >= boundary_band)
        throw GeometryError(
            "local_minimize_ball: iterate pinned to the ball boundary "
            "(r too small or lambda too large)");
      sol.field = u;
      sol.energy = I;
      sol.residual_inf = rn;
      sol.iterations = it;
      return sol;
    }
    auto ls = armijo_search(p, u, res, I, cfg.armijo, cfg.armijo.step0, project);
    if (!ls.ok) {
      if (modular_energy_or_inf(p, u) >= boundary_band)
        throw GeometryError(
            "local_minimize_ball: no feasible descent on the ball boundary "
            "(r too small or lambda too large)");
      throw ConvergenceError("local_minimize_ball: line search stalled", sol.trace);
    }
    u = std::move(ls.u);
    I = ls.energy;
    sol.trace.push_back(I);
  }
  throw ConvergenceError("local_minimize_ball: max_iter exceeded", sol.trace);
}

RingEstimate estimate_mp_ring(const Problem& p, const SolverConfig& cfg) {
  cfg.validate();
  RingEstimate est;
  est.seed = cfg.seed;
  std::mt19937_64 rng(cfg.seed);
  constexpr int kSamples = 200;
  std::vector<Field> base;
  base.reserve(kSamples);
  for (int s = 0; s < kSamples; ++s) base.push_back(random_low_mode_field(p.mesh, rng));

  est.rho = -std::numeric_limits<double>::infinity();
  for (double r : logspace(1e-4, 10.0, 26)) {
    double rho = std::numeric_limits<double>::infinity();
    for (const Field& b : base) {
      const Field w = rescale_to_modular(p, b, r);
      rho = std::min(rho, total_energy_or_inf(p, w));
    }
    if (rho > est.rho) {
      est.rho = rho;
      est.r = r;
    }
  }
  est.lambda_ok = est.rho > 0.0;
  return est;
}

TwoSolutions concave_convex(const Problem& p, const SolverConfig& cfg) {
  cfg.validate();
  if (p.nl.family() != Family::ConcaveConvex)
    throw ConfigError("concave_convex solver needs the concave_convex family");

  for (int k = 0; k <= cfg.lambda_sweep.max_halvings; ++k) {
    const double lam = cfg.lambda_sweep.start * std::pow(cfg.lambda_sweep.shrink, k);
    const Problem pk(p.mesh, p.nf,
                     make_concave_convex(p.nf, lam, p.nl.alpha(), p.nl.q(), p.nl.reg_eps()));
    const RingEstimate ring = estimate_mp_ring(pk, cfg);
    if (!ring.lambda_ok) continue;

    TwoSolutions two{local_minimize_ball(pk, ring.r, cfg), mountain_pass(pk, cfg), lam,
                     ring, lam == 0.0};
    if (!two.degenerate) {
      if (!(two.u_min.energy < 0.0) || !(two.w_mp.energy > 0.0)) {
        std::ostringstream os;
        os << "concave_convex: certificates failed at lambda = " << lam
           << ": I(u_min) = " << two.u_min.energy << ", I(w_mp) = " << two.w_mp.energy;
        throw GeometryError(os.str());
      }
    }
    return two;
  }
  throw GeometryError("concave_convex: lambda sweep exhausted without a positive ring");
}

}  // namespace orlicz
