#include <cmath>
#include <vector>

#include "doctest.h"
#include "orlicz/nfunction.hpp"
#include "orlicz/numerics.hpp"

using namespace orlicz;

namespace {

const double kE = std::exp(1.0);

// Independent quadrature oracle: fixed composite Simpson refinement of
// int_0^t s phi(s) ds, no shared code with the library path.
double simpson_big_phi(const NFunction& nf, double t, int n = 4096) {
  const double h = t / n;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = i * h, b = a + h, m = a + 0.5 * h;
    acc += h / 6.0 * (a * nf.phi(a) + 4.0 * m * nf.phi(m) + b * nf.phi(b));
  }
  return acc;
}

}  // namespace

TEST_SUITE_BEGIN("nfunction");

TEST_CASE("big_phi closed forms") {
  const auto ex = NFunction::exponential();
  CHECK(ex.big_phi(0.0) == 0.0);
  CHECK(ex.big_phi(1.0) == doctest::Approx((kE - 1.0) / 2.0).epsilon(1e-12));
  const auto p3 = NFunction::power(3.0);
  CHECK(p3.big_phi(2.0) == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  SUBCASE("even extension is exact") {
    for (double t : {0.3, 1.0, 2.5}) {
      CHECK(ex.big_phi(-t) == ex.big_phi(t));
      CHECK(p3.big_phi(-t) == p3.big_phi(t));
    }
  }
}

TEST_CASE("big_phi agrees with the quadrature oracle") {
  for (const auto& nf : {NFunction::exponential(), NFunction::power(3.0)}) {
    for (double t : logspace(0.1, 3.0, 17)) {
      const double q = simpson_big_phi(nf, t);
      CHECK(nf.big_phi(t) == doctest::Approx(q).epsilon(1e-10));
    }
  }
}

TEST_CASE("custom kind integrates its density") {
  // density of the exponential model supplied as a plain callable
  const auto nf = NFunction::custom([](double t) { return std::exp(t * t); }, {}, {}, 3.0);
  CHECK(nf.big_phi(1.0) == doctest::Approx((kE - 1.0) / 2.0).epsilon(1e-10));
  CHECK(nf.l_index() == doctest::Approx(2.0).epsilon(1e-5));
  // dphi falls back to central differences
  CHECK(nf.dphi(1.0) == doctest::Approx(2.0 * kE).epsilon(1e-7));
}

TEST_CASE("big_phi_inverse") {
  const auto ex = NFunction::exponential();
  const auto p3 = NFunction::power(3.0);
  CHECK(ex.big_phi_inverse(0.0) == 0.0);
  CHECK(p3.big_phi_inverse(9.0) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(ex.big_phi_inverse((kE - 1.0) / 2.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(ex.big_phi_inverse(-1.0), ConfigError);
  SUBCASE("inverse of forward is identity on [0,3]") {
    for (double t : logspace(1e-3, 3.0, 33)) {
      CHECK(ex.big_phi_inverse(ex.big_phi(t)) == doctest::Approx(t).epsilon(1e-8));
      CHECK(p3.big_phi_inverse(p3.big_phi(t)) == doctest::Approx(t).epsilon(1e-8));
    }
  }
}

TEST_CASE("legendre conjugate") {
  const auto ex = NFunction::exponential();
  CHECK(ex.conjugate(0.0) == 0.0);
  // power p=2: Phi* = s^2/2
  CHECK(NFunction::power(2.0).conjugate(3.0) == doctest::Approx(4.5).epsilon(1e-12));
  // stationarity of the exponential model at t=1: t phi(t) = e
  CHECK(ex.conjugate(kE) == doctest::Approx((kE + 1.0) / 2.0).epsilon(1e-8));

  SUBCASE("power conjugate matches the bisection route") {
    // closed form vs the generic stationarity solve, via a custom clone
    const auto p3 = NFunction::power(3.0);
    const auto clone = NFunction::custom([](double t) { return t; }, {}, {}, 3.0);
    for (double s : logspace(0.1, 10.0, 21)) {
      const double pc = 1.5;  // p' = p/(p-1)
      CHECK(p3.conjugate(s) == doctest::Approx(std::pow(s, pc) / pc).epsilon(1e-9));
      CHECK(clone.conjugate(s) == doctest::Approx(std::pow(s, pc) / pc).epsilon(1e-9));
    }
  }
  SUBCASE("overflow guard surfaces as EvaluationError") {
    CHECK_THROWS_AS(ex.conjugate(1e200), EvaluationError);
  }
}

TEST_CASE("young inequality with equality at s = t phi(t)") {
  for (const auto& nf : {NFunction::exponential(), NFunction::power(3.0)}) {
    const auto ts = linspace(3.0 / 64, 3.0, 64);
    for (double t : ts) {
      for (double s : ts) {
        const double st = s * t;
        CHECK(st <= nf.big_phi(t) + nf.conjugate(s) + 1e-8);
      }
      const double s_eq = t * nf.phi(t);
      const double gap = nf.big_phi(t) + nf.conjugate(s_eq) - s_eq * t;
      CHECK(std::abs(gap) <= 1e-8);
    }
  }
}

TEST_CASE("l_index and h") {
  const auto ex = NFunction::exponential();
  const auto p3 = NFunction::power(3.0);
  CHECK(ex.l_index() == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(p3.l_index() == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(ex.h(1.0) == doctest::Approx((kE - 1.0) / (2.0 * kE)).epsilon(1e-12));
  CHECK(ex.h(-1.0) == ex.h(1.0));
  // h -> 1/l as t -> 0
  CHECK(ex.h(1e-4) == doctest::Approx(0.5).epsilon(1e-6));
  for (double t : {0.5, 1.0, 2.0}) CHECK(p3.h(t) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(ex.h(0.0), ConfigError);
}

TEST_CASE("delta2 dichotomy") {
  const auto grid = logspace(0.01, 3.0, 257);
  const auto p3 = check_delta2(NFunction::power(3.0), grid);
  CHECK(p3.holds);
  CHECK(p3.sup_ratio == doctest::Approx(8.0).epsilon(1e-9));

  const auto ex = check_delta2(NFunction::exponential(), grid);
  CHECK_FALSE(ex.holds);
  // ratio at t=3 alone exceeds 1e11
  CHECK(ex.sup_ratio >= std::expm1(36.0) / std::expm1(9.0));
  CHECK(ex.sup_ratio > 1e11);

  SUBCASE("single-point grid returns the pointwise ratio") {
    const std::vector<double> one{0.7};
    const auto r = check_delta2(NFunction::exponential(), one);
    const auto& nf = NFunction::exponential();
    CHECK(r.sup_ratio == doctest::Approx(nf.big_phi(1.4) / nf.big_phi(0.7)));
    CHECK(r.witness_t == 0.7);
  }
  SUBCASE("bad grids are rejected") {
    CHECK_THROWS_AS(check_delta2(NFunction::exponential(), std::vector<double>{}),
                    ConfigError);
    CHECK_THROWS_AS(check_delta2(NFunction::exponential(), std::vector<double>{0.0}),
                    ConfigError);
  }
}

TEST_CASE("delta2 holds for the conjugate of the exponential model") {
  const auto conj = conjugate_of(NFunction::exponential());
  const auto rep = check_delta2(conj, logspace(0.01, 50.0, 129));
  CHECK(rep.holds);
  CHECK(rep.sup_ratio < 10.0);
}

TEST_CASE("phi conditions report") {
  const auto ex = NFunction::exponential();
  const auto p3 = NFunction::power(3.0);
  const double d = 2.0 * std::sqrt(2.0);  // unit square
  const auto rep_ex = check_phi_conditions(ex, d, 3.0, ConditionProbe::defaults(ex));
  const auto rep_p3 = check_phi_conditions(p3, d, 3.0, ConditionProbe::defaults(p3));

  SUBCASE("phi1, phi2 hold for both models") {
    for (const auto* rep : {&rep_ex, &rep_p3}) {
      CHECK(rep->find("phi1")->verdict == Verdict::HoldsOnSamples);
      CHECK(rep->find("phi2")->verdict == Verdict::HoldsOnSamples);
    }
  }
  SUBCASE("phi3 reports the structural index") {
    const auto* e3 = rep_ex.find("phi3");
    CHECK(e3->verdict == Verdict::HoldsOnSamples);
    CHECK(e3->lhs == doctest::Approx(2.0).epsilon(1e-6));
    const auto* p3e = rep_p3.find("phi3");
    CHECK(p3e->verdict == Verdict::HoldsOnSamples);
    CHECK(p3e->lhs == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(p3e->trend == "flat");  // zero variation for the power kind
  }
  SUBCASE("phi4 as printed is violated by both models") {
    const auto* v = rep_p3.find("phi4");
    CHECK(v->verdict == Verdict::Violated);
    // power p: lhs = t^2 phi/Phi = 3, rhs = 1 + t phi'/phi = 2 at every t
    CHECK(v->lhs == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(v->rhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep_ex.find("phi4")->verdict == Verdict::Violated);
  }
  SUBCASE("phi5 trend approaches d^2 for the exponential model") {
    const auto* e = rep_ex.find("phi5");
    CHECK(e->verdict == Verdict::HoldsOnSamples);
    CHECK(e->lhs == doctest::Approx(d * d).epsilon(1e-6));
    CHECK(rep_p3.find("phi5")->verdict == Verdict::HoldsOnSamples);
    CHECK(rep_p3.find("phi5")->lhs == doctest::Approx(std::pow(d, 3.0)).epsilon(1e-9));
  }
  SUBCASE("phi7 and phi8 hold for both models") {
    for (const auto* rep : {&rep_ex, &rep_p3}) {
      CHECK(rep->find("phi7")->verdict == Verdict::HoldsOnSamples);
      CHECK(rep->find("phi8")->verdict == Verdict::HoldsOnSamples);
    }
  }
  SUBCASE("phi6: power model diverges for q > 1 tuples, exponential is tuple-dependent") {
    CHECK(rep_p3.find("phi6")->verdict == Verdict::HoldsOnSamples);
    // (A=2, B=1, q=3) needs q B^2 > A^2 for the exponential model; 3 < 4
    // fails, so the printed condition is violated on the default tuples
    CHECK(rep_ex.find("phi6")->verdict == Verdict::Violated);
  }
  SUBCASE("bad arguments rejected") {
    CHECK_THROWS_AS(check_phi_conditions(ex, -1.0, 3.0, ConditionProbe::defaults(ex)),
                    ConfigError);
  }
}

TEST_CASE("ps transform bounds") {
  const auto ex = NFunction::exponential();
  const auto grid = logspace(0.05, 3.0, 129);
  const auto rep = ps_transform_check(ex, grid);
  CHECK(rep.e2_all_ok);
  CHECK(rep.e3_all_ok);
  // S(t) > 0 everywhere for the exponential model: reported, not suppressed
  CHECK(rep.count_s_positive == static_cast<int>(rep.rows.size()));

  SUBCASE("exponential values at t=1") {
    const auto one = ps_transform_check(ex, std::vector<double>{1.0});
    const double v = (kE - 1.0) / (2.0 * kE);
    CHECK(one.rows[0].v == doctest::Approx(v).epsilon(1e-12));
    CHECK(one.rows[0].g == doctest::Approx(3.0 * v).epsilon(1e-12));
    CHECK(one.rows[0].s == doctest::Approx(1.0 - 3.0 * v).epsilon(1e-10));
    CHECK(one.rows[0].s > 0.0);
  }
  SUBCASE("power model: g = (p-1)/p and s = 1/p") {
    const auto rep3 = ps_transform_check(NFunction::power(3.0), grid);
    CHECK(rep3.e2_all_ok);
    CHECK(rep3.e3_all_ok);  // v(t) = t/p = t/l with equality
    for (const auto& row : rep3.rows) {
      CHECK(row.g == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
      CHECK(row.s == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("exponential overflow guard") {
  const auto ex = NFunction::exponential();
  CHECK_THROWS_AS(ex.big_phi(27.0), EvaluationError);
  CHECK_NOTHROW(ex.big_phi(26.0));
}

TEST_SUITE_END();
