#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

using ScalarFn = std::function<double(double)>;

enum class NKind { Exponential, Power, Custom };

/// An N-function pair (Phi, phi) with Phi(t) = int_0^|t| s phi(s) ds.
///
/// The two built-ins are Phi(t) = (exp(t^2) - 1)/2 (density phi(t) = exp(t^2))
/// and Phi(t) = |t|^p / p (density phi(t) = t^(p-2)). Custom densities fall
/// back to central differences for phi' and adaptive quadrature for Phi.
///
/// Immutable after construction; safe to share across threads.
class NFunction {
 public:
  /// Max t*t fed to exp(); beyond this the evaluation throws EvaluationError.
  static constexpr double kExpArgGuard = 700.0;

  static NFunction exponential(double p_growth = 3.0);
  static NFunction power(double p);
  /// dphi and big_phi are optional (pass {}): missing dphi uses central
  /// differences with step h_fd * max(1, |t|); missing big_phi integrates
  /// s phi(s) adaptively.
  static NFunction custom(ScalarFn phi, ScalarFn dphi, ScalarFn big_phi,
                          double p_growth, double h_fd = 1e-6,
                          std::string name = "custom");

  NKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// Exponent of the power kind; throws for other kinds.
  double power_exponent() const;
  /// Declared growth exponent used by the (phi7)-style diagnostics.
  double p_growth() const { return p_growth_; }

  /// Density phi(t), t >= 0.
  double phi(double t) const;
  /// Density derivative phi'(t), t > 0 (closed form or central difference).
  double dphi(double t) const;
  /// Phi(|t|); even extension.
  double big_phi(double t) const;
  /// Phi'(t) = t phi(|t|); odd extension.
  double big_phi_prime(double t) const;

  /// Inverse of Phi on t >= 0 by bisection; y must be >= 0.
  double big_phi_inverse(double y) const;

  /// Legendre conjugate Phi*(s) = max_{t>=0} (s t - Phi(t)), s >= 0.
  /// Closed form s^(p') / p' for the power kind, stationarity bisection
  /// otherwise.
  double conjugate(double s) const;
  /// The maximizer t of s t - Phi(t) (solves t phi(t) = s).
  double conjugate_argmax(double s) const;

  /// h(t) = Phi(t) / (t^2 phi(t)); even in t, undefined at 0 (throws).
  /// The t -> 0 limit equals 1 / l_index().
  double h(double t) const;

  /// Infimum of t^2 phi(t) / Phi(t) over sampled t > 0 (cached at
  /// construction). Exactly p for the power kind, 2 for the exponential.
  double l_index() const { return l_index_; }

 private:
  NFunction() = default;
  void compute_l_index();

  NKind kind_ = NKind::Custom;
  std::string name_;
  double p_ = 0.0;        // power kind exponent
  double p_growth_ = 3.0;
  double h_fd_ = 1e-6;
  double l_index_ = 0.0;
  ScalarFn phi_fn_, dphi_fn_, big_phi_fn_;
};

/// N-function given by the Legendre conjugate of nf. Its Phi is
/// nf.conjugate and its density is t(s)/s with t(s) the conjugate maximizer.
NFunction conjugate_of(const NFunction& nf, double p_growth = 2.0);

enum class Verdict { HoldsOnSamples, Violated };

std::string to_string(Verdict v);

/// One checked condition: verdict plus the worst sampled point.
/// For limit-type conditions, lhs holds the final sampled value of the probed
/// quantity, and trend records the direction observed along the grid.
struct ConditionEntry {
  std::string id;
  Verdict verdict = Verdict::HoldsOnSamples;
  double witness_t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // min over samples of the slack (rhs - lhs, direction-adjusted)
  std::string grid_spec;
  std::string trend;  // empty for pointwise conditions
};

struct ConditionReport {
  std::vector<ConditionEntry> entries;
  const ConditionEntry* find(const std::string& id) const;
  bool any_violated() const;
};

struct Delta2Report {
  bool holds = false;
  double sup_ratio = 0.0;
  double witness_t = 0.0;
  double k_max = 0.0;
  std::string grid_spec;
};

/// sup over the grid of Phi(2t)/Phi(t); verdict "violated" when the ratio
/// exceeds k_max (default 1e6).
Delta2Report check_delta2(const NFunction& nf, std::span<const double> t_grid,
                          double k_max = 1e6);

/// (A, B, exponent) tuples probed by the (phi6)/(phi8) ratio limits.
struct LimitTuple {
  double a = 1.0;
  double b = 1.0;
  double exponent = 2.0;
};

/// Sample grids for check_phi_conditions. Limits are judged as monotone
/// trends along these grids, 64 points per decade by default.
struct ConditionProbe {
  std::vector<double> small_t;  // t -> 0+ probes
  std::vector<double> mid_t;    // pointwise conditions
  std::vector<double> large_t;  // t -> +inf probes
  std::vector<LimitTuple> phi6_tuples;
  std::vector<LimitTuple> phi8_tuples;

  /// Grids adapted to the kind: the large-t grid of the exponential model
  /// stays within the overflow guard headroom.
  static ConditionProbe defaults(const NFunction& nf);
};

/// Evaluates (phi1)-(phi8) exactly as printed on the probe grids.
/// d is the Poincare constant of (phi5); p the declared (phi7) exponent.
ConditionReport check_phi_conditions(const NFunction& nf, double d, double p,
                                     const ConditionProbe& probe);

/// Pointwise transform quantities behind the (E2)/(E3) bounds:
///   v(t) = Phi/(t phi)   checked against t / l_index,
///   g(t) = h(t) (1 + t phi'/phi)  checked against [0, 2],
///   s(t) = 1 - g(t)      sign reported, not asserted.
struct PsTransformRow {
  double t, v, g, s;
  bool e3_ok, e2_ok;
};

struct PsTransformReport {
  std::vector<PsTransformRow> rows;
  bool e2_all_ok = true;
  bool e3_all_ok = true;
  int count_s_positive = 0;
  std::string grid_spec;
};

PsTransformReport ps_transform_check(const NFunction& nf,
                                     std::span<const double> t_grid);

}  // namespace orlicz
