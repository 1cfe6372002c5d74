#include "orlicz/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/numerics.hpp"

namespace orlicz {

namespace {

std::string spec_of(const std::vector<double>& g) {
  std::ostringstream os;
  os << "grid[" << g.size() << "] in [" << g.front() << ", " << g.back() << "]";
  return os.str();
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::PowerOfPhi: return "power_of_phi";
    case Family::Sublinear: return "sublinear";
    case Family::ConcaveConvex: return "concave_convex";
    case Family::Zero: return "zero";
    case Family::Custom: return "custom";
  }
  return "?";
}

double Nonlinearity::concave_exponent() const {
  if (family_ == Family::Sublinear) return s_;
  if (family_ == Family::ConcaveConvex) return alpha_;
  throw ConfigError("family has no concave exponent");
}

Nonlinearity make_power_of_phi(const NFunction& nf, double q) {
  if (!(q > 1.0)) throw ConfigError("power_of_phi needs q > 1");
  Nonlinearity nl;
  nl.family_ = Family::PowerOfPhi;
  nl.q_ = q;
  nl.F_fn_ = [nf, q](double t) { return std::pow(nf.big_phi(t), q); };
  nl.f_fn_ = [nf, q](double t) {
    if (t == 0.0) return 0.0;
    return q * std::pow(nf.big_phi(t), q - 1.0) * nf.big_phi_prime(t);
  };
  return nl;
}

Nonlinearity make_sublinear(const NFunction& nf, double kappa, double s,
                            double d, double reg_eps) {
  if (!(kappa > 0.0)) throw ConfigError("sublinear needs kappa > 0");
  if (!(s > 0.0 && s < 1.0)) throw ConfigError("sublinear needs s in (0,1)");
  if (!(d > 0.0)) throw ConfigError("sublinear needs d > 0");
  if (reg_eps < 0.0) throw ConfigError("reg_eps must be >= 0");
  if (s <= 0.5 && reg_eps == 0.0)
    throw ConfigError("sublinear with s <= 1/2 needs reg_eps > 0 (f discontinuous at 0)");
  Nonlinearity nl;
  nl.family_ = Family::Sublinear;
  nl.kappa_ = kappa;
  nl.s_ = s;
  nl.d_ = d;
  nl.reg_eps_ = reg_eps;
  const double offset = kappa * std::pow(reg_eps, s);
  nl.F_fn_ = [nf, kappa, s, d, reg_eps, offset](double t) {
    if (t == 0.0) return 0.0;
    return kappa * std::pow(nf.big_phi(t / d) + reg_eps, s) - offset;
  };
  nl.f_fn_ = [nf, kappa, s, d, reg_eps](double t) {
    if (t == 0.0) return 0.0;
    const double inner = nf.big_phi(t / d) + reg_eps;
    return kappa * s * std::pow(inner, s - 1.0) * nf.big_phi_prime(t / d) / d;
  };
  return nl;
}

Nonlinearity make_concave_convex(const NFunction& nf, double lambda,
                                 double alpha, double q, double reg_eps) {
  if (lambda < 0.0) throw ConfigError("concave_convex needs lambda >= 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("concave_convex needs alpha in (0,1)");
  if (!(q > 1.0)) throw ConfigError("concave_convex needs q > 1");
  if (reg_eps < 0.0) throw ConfigError("reg_eps must be >= 0");
  if (alpha <= 0.5 && reg_eps == 0.0 && lambda > 0.0)
    throw ConfigError("concave_convex with alpha <= 1/2 needs reg_eps > 0");
  Nonlinearity nl;
  nl.family_ = Family::ConcaveConvex;
  nl.lambda_ = lambda;
  nl.alpha_ = alpha;
  nl.q_ = q;
  nl.reg_eps_ = reg_eps;
  const double offset = std::pow(reg_eps, alpha);
  nl.F_fn_ = [nf, lambda, alpha, q, reg_eps, offset](double t) {
    if (t == 0.0) return 0.0;
    const double P = nf.big_phi(t);
    return lambda * (std::pow(P + reg_eps, alpha) - offset) / alpha +
           std::pow(P, q) / q;
  };
  nl.f_fn_ = [nf, lambda, alpha, q, reg_eps](double t) {
    if (t == 0.0) return 0.0;
    const double P = nf.big_phi(t);
    const double dP = nf.big_phi_prime(t);
    return lambda * std::pow(P + reg_eps, alpha - 1.0) * dP +
           std::pow(P, q - 1.0) * dP;
  };
  return nl;
}

Nonlinearity make_zero() {
  Nonlinearity nl;
  nl.family_ = Family::Zero;
  nl.F_fn_ = [](double) { return 0.0; };
  nl.f_fn_ = [](double) { return 0.0; };
  return nl;
}

Nonlinearity make_custom(ScalarFn f, ScalarFn F) {
  if (!f || !F) throw ConfigError("custom nonlinearity needs both f and F");
  Nonlinearity nl;
  nl.family_ = Family::Custom;
  nl.f_fn_ = std::move(f);
  nl.F_fn_ = std::move(F);
  return nl;
}

TrendReport check_f1(const Nonlinearity& nl, const NFunction& nf) {
  TrendReport rep;
  rep.grid = logspace(1e-6, 1e-1, 321);
  for (double t : rep.grid) rep.values.push_back(nl.F(t) / nf.big_phi(t));
  // walk toward t -> 0
  std::vector<double> walk(rep.values.rbegin(), rep.values.rend());
  rep.trend = trend_direction(walk);
  rep.final_value = walk.back();
  rep.verdict = rep.trend == "decreasing" && rep.final_value < walk.front();
  rep.grid_spec = spec_of(rep.grid);
  return rep;
}

ThetaReport check_f2(const Nonlinearity& nl, const NFunction& nf, double R,
                     double t_max) {
  if (!(R > 0.0) || !(t_max > R)) throw ConfigError("check_f2 needs 0 < R < t_max");
  ThetaReport rep;
  const auto grid = logspace(R, t_max, 257);
  rep.grid_spec = spec_of(grid);
  rep.theta_max = std::numeric_limits<double>::infinity();
  for (double t : grid) {
    for (double sgn : {1.0, -1.0}) {
      const double x = sgn * t;
      const double Fx = nl.F(x);
      if (!(Fx > 0.0)) {
        rep.positivity_ok = false;
        rep.violation_t = x;
        continue;
      }
      const double ratio = nf.h(x) * nl.f(x) * x / Fx;
      rep.theta_max = std::min(rep.theta_max, ratio);
    }
  }
  return rep;
}

TrendReport superlinearity_probe(const Nonlinearity& nl, const NFunction& nf,
                                 double t_max) {
  TrendReport rep;
  rep.grid = logspace(0.5, t_max, 129);
  bool both_tails = true;
  for (double sgn : {1.0, -1.0}) {
    std::vector<double> v;
    for (double t : rep.grid) v.push_back(nl.F(sgn * t) / nf.big_phi(t));
    const std::string dir = trend_direction(v);
    const bool diverging = dir == "increasing" && v.back() > v.front();
    both_tails = both_tails && diverging;
    if (sgn > 0) {
      rep.values = v;
      rep.trend = dir;
      rep.final_value = v.back();
    }
  }
  rep.verdict = both_tails;
  rep.grid_spec = spec_of(rep.grid) + " (both signs)";
  return rep;
}

F3F4Report check_f3_f4(const Nonlinearity& nl, const NFunction& nf, double d,
                       double delta, double gamma) {
  if (!(d > 0.0) || !(delta > 0.0)) throw ConfigError("check_f3_f4 needs d, delta > 0");
  F3F4Report rep;
  double s = gamma, g = gamma;
  if (gamma == 0.0) {
    s = g = nl.concave_exponent();
  }
  rep.gamma = g;
  const auto grid = logspace(1e-4, 3.0, 257);
  rep.grid_spec = spec_of(grid);
  rep.b1_est = 0.0;
  for (double t : grid) {
    const double denom = std::pow(nf.big_phi(t / d), s);
    if (denom > 0.0) rep.b1_est = std::max(rep.b1_est, nl.F(t) / denom);
  }
  rep.c1_est = std::numeric_limits<double>::infinity();
  for (double t : logspace(1e-4, delta, 257)) {
    const double denom = std::pow(nf.big_phi(t), g);
    if (denom > 0.0) rep.c1_est = std::min(rep.c1_est, nl.F(t) / denom);
  }
  rep.f3_ok = std::isfinite(rep.b1_est);
  rep.f4_ok = rep.c1_est > 1e-8;
  return rep;
}

}  // namespace orlicz
