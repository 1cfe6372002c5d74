#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orlicz/nfunction.hpp"

namespace orlicz {

enum class Family { PowerOfPhi, Sublinear, ConcaveConvex, Zero, Custom };

std::string to_string(Family f);

/// Reaction term pair (f, F) with F(t) = int_0^t f. The built-in families
/// are derived from an N-function:
///
///   power_of_phi(q):          F = Phi^q                        (superlinear)
///   sublinear(kappa, s, d):   F = kappa (Phi(|t|/d) + eps)^s - kappa eps^s
///   concave_convex(lambda, alpha, q):
///                             F = lambda ((Phi+eps)^alpha - eps^alpha)/alpha
///                                 + Phi^q / q
///
/// eps = reg_eps regularizes the concave exponents; it must be positive when
/// the exponent is <= 1/2, otherwise f is discontinuous at 0.
///
/// Immutable; safe to share across threads.
class Nonlinearity {
 public:
  double f(double t) const { return f_fn_(t); }
  double F(double t) const { return F_fn_(t); }

  Family family() const { return family_; }
  double q() const { return q_; }
  double kappa() const { return kappa_; }
  double s() const { return s_; }
  double d() const { return d_; }
  double lambda() const { return lambda_; }
  double alpha() const { return alpha_; }
  double reg_eps() const { return reg_eps_; }

  /// The concave exponent of the family (s or alpha), if it has one.
  double concave_exponent() const;

 private:
  friend Nonlinearity make_power_of_phi(const NFunction&, double);
  friend Nonlinearity make_sublinear(const NFunction&, double, double, double, double);
  friend Nonlinearity make_concave_convex(const NFunction&, double, double, double, double);
  friend Nonlinearity make_zero();
  friend Nonlinearity make_custom(ScalarFn, ScalarFn);

  Family family_ = Family::Custom;
  double q_ = 0, kappa_ = 0, s_ = 0, d_ = 0, lambda_ = 0, alpha_ = 0, reg_eps_ = 0;
  ScalarFn f_fn_, F_fn_;
};

/// F = Phi^q with q > 1; f by the chain rule through Phi'(t) = t phi(t).
Nonlinearity make_power_of_phi(const NFunction& nf, double q);

/// F(t) = kappa ((Phi(|t|/d) + reg_eps)^s - reg_eps^s); s in (0,1), d > 0
/// comes from the mesh (the Poincare constant). Requires s > 1/2 when
/// reg_eps = 0.
Nonlinearity make_sublinear(const NFunction& nf, double kappa, double s,
                            double d, double reg_eps = 1e-8);

/// F = lambda ((Phi+eps)^alpha - eps^alpha)/alpha + Phi^q/q; alpha in (0,1),
/// q > 1, lambda >= 0. Requires alpha > 1/2 when reg_eps = 0.
Nonlinearity make_concave_convex(const NFunction& nf, double lambda,
                                 double alpha, double q, double reg_eps = 1e-8);

/// f = F = 0 (pure modular energy).
Nonlinearity make_zero();

Nonlinearity make_custom(ScalarFn f, ScalarFn F);

/// Trend probe along a sample grid; verdict is condition-specific.
struct TrendReport {
  std::vector<double> grid;
  std::vector<double> values;
  std::string trend;        // toward the limit point
  double final_value = 0.0; // last sampled value toward the limit
  bool verdict = false;
  std::string grid_spec;
};

/// (f1): F(t)/Phi(t) -> 0 as t -> 0. Probes a log grid of small t.
TrendReport check_f1(const Nonlinearity& nl, const NFunction& nf);

/// (f2): the largest theta with theta F(t) <= h(t) f(t) t on |t| >= R.
struct ThetaReport {
  double theta_max = 0.0;     // inf over samples of h f t / F
  bool positivity_ok = true;  // F > 0 held at every sample with |t| >= R
  double violation_t = 0.0;   // witness when positivity fails
  std::string grid_spec;
};

ThetaReport check_f2(const Nonlinearity& nl, const NFunction& nf, double R = 1.0,
                     double t_max = 3.0);

/// (SUPER): F/Phi diverges in both tails |t| -> inf.
TrendReport superlinearity_probe(const Nonlinearity& nl, const NFunction& nf,
                                 double t_max = 3.0);

/// (f3)/(f4) estimates: b1 = sup F/(Phi(t/d))^s, c1 = inf_{(0,delta)} F/Phi^gamma.
/// gamma defaults to the family's concave exponent.
struct F3F4Report {
  double b1_est = 0.0;
  double c1_est = 0.0;
  double gamma = 0.0;
  bool f3_ok = false;  // b1 finite on samples
  bool f4_ok = false;  // c1 positive and bounded away from 0 on samples
  std::string grid_spec;
};

F3F4Report check_f3_f4(const Nonlinearity& nl, const NFunction& nf, double d,
                       double delta, double gamma = 0.0);

}  // namespace orlicz
