#include "orlicz/nfunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/numerics.hpp"

namespace orlicz {

namespace {

void check_exp_guard(double t) {
  if (t * t > NFunction::kExpArgGuard)
    throw EvaluationError("exponential model overflow guard: |t| = " + std::to_string(t));
}

std::string grid_spec_of(std::span<const double> g) {
  std::ostringstream os;
  if (g.empty()) return "empty";
  os << "grid[" << g.size() << "] in [" << g.front() << ", " << g.back() << "]";
  return os.str();
}

}  // namespace

NFunction NFunction::exponential(double p_growth) {
  NFunction nf;
  nf.kind_ = NKind::Exponential;
  nf.name_ = "exponential";
  nf.p_growth_ = p_growth;
  nf.compute_l_index();
  return nf;
}

NFunction NFunction::power(double p) {
  if (!(p > 1.0)) throw ConfigError("power N-function needs p > 1");
  NFunction nf;
  nf.kind_ = NKind::Power;
  nf.name_ = "power";
  nf.p_ = p;
  nf.p_growth_ = p;
  nf.compute_l_index();
  return nf;
}

NFunction NFunction::custom(ScalarFn phi, ScalarFn dphi, ScalarFn big_phi,
                            double p_growth, double h_fd, std::string name) {
  if (!phi) throw ConfigError("custom N-function needs a density phi");
  if (!dphi && !(h_fd > 0))
    throw ConfigError("custom N-function without phi' needs h_fd > 0");
  NFunction nf;
  nf.kind_ = NKind::Custom;
  nf.name_ = std::move(name);
  nf.p_growth_ = p_growth;
  nf.h_fd_ = h_fd;
  nf.phi_fn_ = std::move(phi);
  nf.dphi_fn_ = std::move(dphi);
  nf.big_phi_fn_ = std::move(big_phi);
  nf.compute_l_index();
  return nf;
}

double NFunction::power_exponent() const {
  if (kind_ != NKind::Power) throw ConfigError("power_exponent: not a power N-function");
  return p_;
}

double NFunction::phi(double t) const {
  switch (kind_) {
    case NKind::Exponential:
      check_exp_guard(t);
      return std::exp(t * t);
    case NKind::Power:
      return std::pow(t, p_ - 2.0);
    case NKind::Custom:
      return phi_fn_(t);
  }
  return 0.0;
}

double NFunction::dphi(double t) const {
  switch (kind_) {
    case NKind::Exponential:
      check_exp_guard(t);
      return 2.0 * t * std::exp(t * t);
    case NKind::Power:
      return (p_ - 2.0) * std::pow(t, p_ - 3.0);
    case NKind::Custom:
      if (dphi_fn_) return dphi_fn_(t);
      {
        const double h = h_fd_ * std::max(1.0, std::abs(t));
        return (phi_fn_(t + h) - phi_fn_(t - h)) / (2.0 * h);
      }
  }
  return 0.0;
}

double NFunction::big_phi(double t) const {
  const double a = std::abs(t);
  switch (kind_) {
    case NKind::Exponential:
      check_exp_guard(a);
      return 0.5 * std::expm1(a * a);
    case NKind::Power:
      return std::pow(a, p_) / p_;
    case NKind::Custom:
      if (big_phi_fn_) return big_phi_fn_(a);
      if (a == 0.0) return 0.0;
      return adaptive_simpson([this](double s) { return s * phi_fn_(s); }, 0.0, a);
  }
  return 0.0;
}

double NFunction::big_phi_prime(double t) const { return t * phi(std::abs(t)); }

double NFunction::big_phi_inverse(double y) const {
  if (y < 0.0) throw ConfigError("big_phi_inverse: y must be >= 0");
  if (y == 0.0) return 0.0;
  const double guard =
      kind_ == NKind::Exponential ? std::sqrt(kExpArgGuard) : 1e100;
  auto g = [this](double t) { return big_phi(t); };
  const double hi = grow_bracket(g, y, 1.0, guard);
  return bisect_increasing(g, y, 0.0, hi);
}

double NFunction::conjugate_argmax(double s) const {
  if (s < 0.0) throw ConfigError("conjugate: s must be >= 0");
  if (s == 0.0) return 0.0;
  const double guard =
      kind_ == NKind::Exponential ? std::sqrt(kExpArgGuard) : 1e100;
  auto g = [this](double t) { return t * phi(t); };
  const double hi = grow_bracket(g, s, 1.0, guard);
  return bisect_increasing(g, s, 0.0, hi);
}

double NFunction::conjugate(double s) const {
  if (s < 0.0) throw ConfigError("conjugate: s must be >= 0");
  if (s == 0.0) return 0.0;
  if (kind_ == NKind::Power) {
    const double pc = p_ / (p_ - 1.0);
    return std::pow(s, pc) / pc;
  }
  const double t = conjugate_argmax(s);
  return s * t - big_phi(t);
}

double NFunction::h(double t) const {
  if (t == 0.0)
    throw ConfigError("h(t) undefined at t = 0; the limit value is 1/l_index");
  const double a = std::abs(t);
  return big_phi(a) / (a * a * phi(a));
}

void NFunction::compute_l_index() {
  // (phi3) says the ratio is monotone, so the infimum sits at small t;
  // sample down to 1e-6 and keep the minimum.
  const double t_hi = kind_ == NKind::Exponential ? 3.0 : 10.0;
  l_index_ = std::numeric_limits<double>::infinity();
  for (double t : logspace(1e-6, t_hi, 415)) {
    const double ratio = t * t * phi(t) / big_phi(t);
    l_index_ = std::min(l_index_, ratio);
  }
}

NFunction conjugate_of(const NFunction& nf, double p_growth) {
  // Density of the conjugate: (Phi*)'(s) = t(s), so phi*(s) = t(s)/s.
  auto density = [nf](double s) {
    if (s <= 0.0) return 0.0;
    return nf.conjugate_argmax(s) / s;
  };
  auto value = [nf](double s) { return nf.conjugate(std::abs(s)); };
  return NFunction::custom(density, {}, value, p_growth, 1e-6,
                           nf.name() + "_conjugate");
}

std::string to_string(Verdict v) {
  return v == Verdict::HoldsOnSamples ? "holds-on-samples" : "violated";
}

const ConditionEntry* ConditionReport::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

bool ConditionReport::any_violated() const {
  return std::any_of(entries.begin(), entries.end(), [](const ConditionEntry& e) {
    return e.verdict == Verdict::Violated;
  });
}

Delta2Report check_delta2(const NFunction& nf, std::span<const double> t_grid,
                          double k_max) {
  if (t_grid.empty()) throw ConfigError("check_delta2: empty grid");
  for (double t : t_grid)
    if (!(t > 0.0)) throw ConfigError("check_delta2: grid entries must be > 0");
  Delta2Report rep;
  rep.k_max = k_max;
  rep.sup_ratio = -std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    const double ratio = nf.big_phi(2.0 * t) / nf.big_phi(t);
    if (ratio > rep.sup_ratio) {
      rep.sup_ratio = ratio;
      rep.witness_t = t;
    }
  }
  rep.holds = rep.sup_ratio <= k_max;
  rep.grid_spec = grid_spec_of(t_grid);
  return rep;
}

ConditionProbe ConditionProbe::defaults(const NFunction& nf) {
  ConditionProbe p;
  p.small_t = logspace(1e-6, 1.0, 385);  // 64 per decade, 6 decades
  p.mid_t = logspace(0.1, 3.0, 120);
  p.mid_t.push_back(1.0);
  p.mid_t.push_back(2.0);
  std::sort(p.mid_t.begin(), p.mid_t.end());
  const double t_hi = nf.kind() == NKind::Exponential ? 3.0 : 1e3;
  p.large_t = logspace(1.0, t_hi, 129);
  p.phi6_tuples = {{1.0, 1.0, 2.0}, {2.0, 1.0, 3.0}, {1.0, 2.0, 1.5}};
  p.phi8_tuples = {{1.0, 1.0, 0.75}, {2.0, 0.5, 0.75}, {0.5, 2.0, 0.75}};
  return p;
}

namespace {

constexpr double kSlack = 1e-12;

ConditionEntry limit_entry(std::string id, const std::vector<double>& grid,
                           const std::vector<double>& values,
                           bool toward_zero, bool expect_diverging,
                           bool expect_vanishing) {
  // Values ordered along the grid; for t -> 0 limits the trend is judged
  // walking toward small t.
  ConditionEntry e;
  e.id = std::move(id);
  e.grid_spec = grid_spec_of(grid);
  std::vector<double> walk = values;
  std::vector<double> twalk = grid;
  if (toward_zero) {
    std::reverse(walk.begin(), walk.end());
    std::reverse(twalk.begin(), twalk.end());
  }
  e.trend = trend_direction(walk);
  const double first = walk.front(), final = walk.back();
  e.witness_t = twalk.back();
  e.lhs = final;
  if (expect_diverging) {
    e.rhs = first;
    e.margin = final - first;
    const bool ok = (e.trend == "increasing") && final > first;
    e.verdict = ok ? Verdict::HoldsOnSamples : Verdict::Violated;
  } else if (expect_vanishing) {
    e.rhs = 0.0;
    e.margin = first - final;
    const bool ok = (e.trend == "decreasing") && final < first;
    e.verdict = ok ? Verdict::HoldsOnSamples : Verdict::Violated;
  } else {
    // finite limit expected: anything not blowing up passes
    e.rhs = first;
    e.margin = first - final;
    e.verdict = e.trend != "increasing" ? Verdict::HoldsOnSamples : Verdict::Violated;
  }
  return e;
}

}  // namespace

ConditionReport check_phi_conditions(const NFunction& nf, double d, double p,
                                     const ConditionProbe& probe) {
  if (!(d > 0.0) || !(p > 0.0))
    throw ConfigError("check_phi_conditions: need d > 0 and p > 0");
  if (probe.small_t.empty() || probe.mid_t.empty() || probe.large_t.empty())
    throw ConfigError("check_phi_conditions: probe grids must be nonempty");

  ConditionReport rep;

  // (phi1): t phi(t) increasing on t > 0, t^2 phi(|t|) convex on R.
  {
    ConditionEntry e;
    e.id = "phi1";
    e.grid_spec = grid_spec_of(probe.mid_t);
    e.margin = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (size_t i = 0; i + 1 < probe.mid_t.size(); ++i) {
      const double t0 = probe.mid_t[i], t1 = probe.mid_t[i + 1];
      if (t1 <= t0) continue;
      const double g0 = t0 * nf.phi(t0), g1 = t1 * nf.phi(t1);
      const double m = g1 - g0;
      if (m < e.margin) {
        e.margin = m;
        e.witness_t = t0;
        e.lhs = g0;
        e.rhs = g1;
      }
      if (m <= 0.0) ok = false;
    }
    // midpoint convexity of t^2 phi(|t|) on a symmetric linear grid
    const double span = probe.mid_t.back();
    const auto sym = linspace(-span, span, 129);
    for (size_t i = 0; i + 2 < sym.size(); ++i) {
      const double a = sym[i], m = sym[i + 1], b = sym[i + 2];
      auto q = [&nf](double t) { return t * t * nf.phi(std::abs(t)); };
      const double lhs = q(m), rhs = 0.5 * (q(a) + q(b));
      if (lhs > rhs + kSlack * (1.0 + std::abs(rhs))) {
        ok = false;
        e.witness_t = m;
        e.lhs = lhs;
        e.rhs = rhs;
        e.margin = std::min(e.margin, rhs - lhs);
      }
    }
    e.verdict = ok ? Verdict::HoldsOnSamples : Verdict::Violated;
    rep.entries.push_back(std::move(e));
  }

  // (phi2): t phi(t) -> 0 at 0+ and -> +inf at +inf.
  {
    std::vector<double> v0, vi;
    for (double t : probe.small_t) v0.push_back(t * nf.phi(t));
    for (double t : probe.large_t) vi.push_back(t * nf.phi(t));
    auto e0 = limit_entry("phi2_zero", probe.small_t, v0, true, false, true);
    auto ei = limit_entry("phi2_inf", probe.large_t, vi, false, true, false);
    ConditionEntry e;
    e.id = "phi2";
    e.grid_spec = e0.grid_spec + " | " + ei.grid_spec;
    e.trend = e0.trend + "/" + ei.trend;
    const bool ok = e0.verdict == Verdict::HoldsOnSamples &&
                    ei.verdict == Verdict::HoldsOnSamples;
    const auto& worst = e0.verdict == Verdict::Violated ? e0 : ei;
    e.witness_t = worst.witness_t;
    e.lhs = worst.lhs;
    e.rhs = worst.rhs;
    e.margin = std::min(e0.margin, ei.margin);
    e.verdict = ok ? Verdict::HoldsOnSamples : Verdict::Violated;
    rep.entries.push_back(std::move(e));
  }

  // (phi3): t^2 phi / Phi non-decreasing with infimum l > 1.
  {
    ConditionEntry e;
    e.id = "phi3";
    std::vector<double> grid(probe.small_t.begin(), probe.small_t.end());
    grid.insert(grid.end(), probe.mid_t.begin(), probe.mid_t.end());
    std::sort(grid.begin(), grid.end());
    e.grid_spec = grid_spec_of(grid);
    double l = std::numeric_limits<double>::infinity();
    double argmin = grid.front();
    bool monotone = true;
    double prev = -std::numeric_limits<double>::infinity();
    double variation = 0.0;
    for (double t : grid) {
      const double r = t * t * nf.phi(t) / nf.big_phi(t);
      if (r < l) {
        l = r;
        argmin = t;
      }
      if (r < prev - kSlack * (1.0 + std::abs(prev))) monotone = false;
      if (prev > -std::numeric_limits<double>::infinity())
        variation = std::max(variation, std::abs(r - prev));
      prev = r;
    }
    e.witness_t = argmin;
    e.lhs = l;
    e.rhs = 1.0;
    e.margin = l - 1.0;
    e.trend = variation <= 1e-9 * std::max(1.0, std::abs(l)) ? "flat" : "increasing";
    e.verdict = (l > 1.0 && monotone) ? Verdict::HoldsOnSamples : Verdict::Violated;
    rep.entries.push_back(std::move(e));
  }

  // (phi4) as printed: t^2 phi/Phi <= 1 + t phi'/phi <= 2 t^2 phi/Phi.
  {
    ConditionEntry e;
    e.id = "phi4";
    e.grid_spec = grid_spec_of(probe.mid_t);
    e.margin = std::numeric_limits<double>::infinity();
    for (double t : probe.mid_t) {
      const double a = t * t * nf.phi(t) / nf.big_phi(t);
      const double b = 1.0 + t * nf.dphi(t) / nf.phi(t);
      const double left = b - a;     // >= 0 when the left inequality holds
      const double right = 2.0 * a - b;
      if (left < e.margin) {
        e.margin = left;
        e.witness_t = t;
        e.lhs = a;
        e.rhs = b;
      }
      if (right < e.margin) {
        e.margin = right;
        e.witness_t = t;
        e.lhs = b;
        e.rhs = 2.0 * a;
      }
    }
    e.verdict = e.margin >= -kSlack ? Verdict::HoldsOnSamples : Verdict::Violated;
    rep.entries.push_back(std::move(e));
  }

  // (phi5): limsup_{t->0+} Phi(t)/Phi(t/d) finite.
  {
    std::vector<double> v;
    for (double t : probe.small_t) v.push_back(nf.big_phi(t) / nf.big_phi(t / d));
    rep.entries.push_back(limit_entry("phi5", probe.small_t, v, true, false, false));
  }

  // (phi6): (Phi(Bt))^q / Phi(At) -> +inf for the probe tuples (A/B < q).
  {
    ConditionEntry e;
    e.id = "phi6";
    e.margin = std::numeric_limits<double>::infinity();
    bool ok = true;
    std::string trends;
    for (const auto& tp : probe.phi6_tuples) {
      std::vector<double> v;
      for (double t : probe.large_t)
        v.push_back(std::pow(nf.big_phi(tp.b * t), tp.exponent) / nf.big_phi(tp.a * t));
      auto sub = limit_entry("phi6", probe.large_t, v, false, true, false);
      if (!trends.empty()) trends += "/";
      trends += sub.trend;
      if (sub.verdict == Verdict::Violated || sub.margin < e.margin) {
        e.witness_t = sub.witness_t;
        e.lhs = sub.lhs;
        e.rhs = sub.rhs;
      }
      e.margin = std::min(e.margin, sub.margin);
      if (sub.verdict == Verdict::Violated) ok = false;
      std::ostringstream os;
      os << grid_spec_of(probe.large_t) << "; tuples(A,B,q) x" << probe.phi6_tuples.size();
      e.grid_spec = os.str();
    }
    e.trend = trends;
    e.verdict = ok ? Verdict::HoldsOnSamples : Verdict::Violated;
    rep.entries.push_back(std::move(e));
  }

  // (phi7): liminf_{t->inf} Phi(t)/t^p > 0.
  {
    std::vector<double> v;
    for (double t : probe.large_t) v.push_back(nf.big_phi(t) / std::pow(t, p));
    auto e = limit_entry("phi7", probe.large_t, v, false, false, false);
    // a decreasing-to-zero tail is the violation; finite or diverging is fine
    const bool vanishing = e.trend == "decreasing" && e.lhs < 1e-6 * e.rhs;
    e.verdict = vanishing ? Verdict::Violated : Verdict::HoldsOnSamples;
    e.id = "phi7";
    rep.entries.push_back(std::move(e));
  }

  // (phi8): (Phi(Bt))^gamma / Phi(At) -> +inf as t -> 0.
  {
    ConditionEntry e;
    e.id = "phi8";
    e.margin = std::numeric_limits<double>::infinity();
    bool ok = true;
    std::string trends;
    for (const auto& tp : probe.phi8_tuples) {
      std::vector<double> v;
      for (double t : probe.small_t)
        v.push_back(std::pow(nf.big_phi(tp.b * t), tp.exponent) / nf.big_phi(tp.a * t));
      auto sub = limit_entry("phi8", probe.small_t, v, true, true, false);
      if (!trends.empty()) trends += "/";
      trends += sub.trend;
      if (sub.verdict == Verdict::Violated || sub.margin < e.margin) {
        e.witness_t = sub.witness_t;
        e.lhs = sub.lhs;
        e.rhs = sub.rhs;
      }
      e.margin = std::min(e.margin, sub.margin);
      if (sub.verdict == Verdict::Violated) ok = false;
    }
    std::ostringstream os;
    os << grid_spec_of(probe.small_t) << "; tuples(A,B,gamma) x" << probe.phi8_tuples.size();
    e.grid_spec = os.str();
    e.trend = trends;
    e.verdict = ok ? Verdict::HoldsOnSamples : Verdict::Violated;
    rep.entries.push_back(std::move(e));
  }

  return rep;
}

PsTransformReport ps_transform_check(const NFunction& nf,
                                     std::span<const double> t_grid) {
  if (t_grid.empty()) throw ConfigError("ps_transform_check: empty grid");
  PsTransformReport rep;
  rep.grid_spec = grid_spec_of(t_grid);
  const double l = nf.l_index();
  for (double t : t_grid) {
    if (!(t > 0.0)) throw ConfigError("ps_transform_check: grid entries must be > 0");
    PsTransformRow row;
    row.t = t;
    const double ht = nf.h(t);
    row.v = ht * t;  // Phi/(t phi)
    row.g = ht * (1.0 + t * nf.dphi(t) / nf.phi(t));
    row.s = 1.0 - row.g;
    const double bound = t / l;
    row.e3_ok = row.v <= bound + kSlack * (1.0 + bound);
    row.e2_ok = row.g >= -kSlack && row.g <= 2.0 + kSlack;
    rep.e3_all_ok = rep.e3_all_ok && row.e3_ok;
    rep.e2_all_ok = rep.e2_all_ok && row.e2_ok;
    if (row.s > 0.0) ++rep.count_s_positive;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace orlicz
