#include "orlicz/numerics.hpp"

#include <cmath>
#include <stdexcept>

#include "orlicz/errors.hpp"

namespace orlicz {

std::vector<double> logspace(double lo, double hi, int n) {
  if (lo <= 0 || hi <= 0 || n < 1) throw ConfigError("logspace: need lo, hi > 0 and n >= 1");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double la = std::log(lo), lb = std::log(hi);
  for (int i = 0; i < n; ++i) out[i] = std::exp(la + (lb - la) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw ConfigError("linspace: need n >= 1");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  return out;
}

double bisect_increasing(const std::function<double(double)>& g, double target,
                         double lo, double hi, double atol, int max_iter) {
  for (int i = 0; i < max_iter && hi - lo > atol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

double grow_bracket(const std::function<double(double)>& g, double target,
                    double hi, double guard) {
  while (g(hi) < target) {
    hi *= 2.0;
    if (hi > guard)
      throw EvaluationError("bracket growth exceeded overflow guard at " + std::to_string(hi));
  }
  return hi;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa,
                   double b, double fb, double m, double fm, double whole,
                   double eps, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth > 48) throw EvaluationError("adaptive quadrature did not converge");
  if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * eps, depth + 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * eps, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rtol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
  const double whole = simpson(f, a, fa, b, fb, m, fm);
  const double scale = std::max({std::abs(whole), std::abs(b - a), 1e-300});
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, rtol * scale, 0);
}

std::string trend_direction(const std::vector<double>& values, double tol) {
  bool up = false, down = false;
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    const double scale = std::max({std::abs(values[i]), std::abs(values[i + 1]), 1e-300});
    const double d = values[i + 1] - values[i];
    if (d > tol * scale) up = true;
    if (d < -tol * scale) down = true;
  }
  if (up && !down) return "increasing";
  if (down && !up) return "decreasing";
  if (!up && !down) return "flat";
  return "mixed";
}

}  // namespace orlicz
