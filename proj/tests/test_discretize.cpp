#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "orlicz/numerics.hpp"
#include "orlicz/problem.hpp"

using namespace orlicz;

namespace {

const double kE = std::exp(1.0);

Problem unit_square_problem(const NFunction& nf, Nonlinearity nl, int n = 8) {
  return Problem(Mesh(n, n, 1.0, 1.0), nf, std::move(nl));
}

Field random_interior(const Mesh& mesh, std::mt19937_64& rng, double amp) {
  Field u = smooth_noise_field(mesh, rng, 1);
  u *= amp;
  return u;
}

}  // namespace

TEST_SUITE_BEGIN("discretize");

TEST_CASE("mesh geometry") {
  const Mesh m(32, 16, 2.0, 1.0);
  CHECK(m.hx() == doctest::Approx(2.0 / 32).epsilon(1e-15));
  CHECK(m.hy() == doctest::Approx(1.0 / 16).epsilon(1e-15));
  CHECK(m.diam() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(m.poincare_d() == doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-15));
  CHECK_THROWS_AS(Mesh(0, 4, 1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(Mesh(4, 4, -1.0, 1.0), ConfigError);

  SUBCASE("node weights tile the domain") {
    double sum = 0.0;
    for (int j = 0; j <= m.ny; ++j)
      for (int i = 0; i <= m.nx; ++i) sum += m.node_weight(i, j);
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-13));
  }
}

TEST_CASE("gradient_field") {
  const Mesh m(8, 8, 1.0, 1.0);
  SUBCASE("zero field") {
    const auto g = gradient_field(m, Field(m));
    for (const auto& c : g) {
      CHECK(c.gx == 0.0);
      CHECK(c.gy == 0.0);
    }
  }
  SUBCASE("linear field is differentiated exactly") {
    const auto u = Field::from_function(m, [](double x, double) { return x; },
                                        /*dirichlet=*/false);
    for (const auto& c : gradient_field(m, u)) {
      CHECK(c.gx == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(c.gy == doctest::Approx(0.0).epsilon(1e-14));
    }
  }
  SUBCASE("matches the bilinear interpolant gradient at cell centers") {
    std::mt19937_64 rng(7);
    const Field u = random_interior(m, rng, 1.0);
    const auto g = gradient_field(m, u);
    for (int j = 0; j < m.ny; ++j) {
      for (int i = 0; i < m.nx; ++i) {
        // bilinear interpolant on the cell, gradient at the center
        const double u00 = u.at(i, j), u10 = u.at(i + 1, j);
        const double u01 = u.at(i, j + 1), u11 = u.at(i + 1, j + 1);
        const double gx =
            ((u10 - u00) * 0.5 + (u11 - u01) * 0.5) / m.hx();
        const double gy =
            ((u01 - u00) * 0.5 + (u11 - u10) * 0.5) / m.hy();
        const auto& c = g[j * m.nx + i];
        CHECK(c.gx == doctest::Approx(gx).epsilon(1e-12));
        CHECK(c.gy == doctest::Approx(gy).epsilon(1e-12));
      }
    }
  }
  SUBCASE("shape mismatch is rejected") {
    CHECK_THROWS_AS(gradient_field(Mesh(4, 4, 1.0, 1.0), Field(m)), ConfigError);
  }
}

TEST_CASE("modular and total energy") {
  const auto linear = [](double x, double) { return x; };
  SUBCASE("constant gradient, power p = 3") {
    const auto prob = unit_square_problem(NFunction::power(3.0), make_zero());
    const auto u = Field::from_function(prob.mesh, linear, false);
    CHECK(modular_energy(prob, u) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  }
  SUBCASE("constant gradient, exponential") {
    const auto prob = unit_square_problem(NFunction::exponential(), make_zero());
    const auto u = Field::from_function(prob.mesh, linear, false);
    CHECK(modular_energy(prob, u) ==
          doctest::Approx((kE - 1.0) / 2.0).epsilon(1e-13));
  }
  SUBCASE("zero reaction: total equals modular") {
    const auto prob = unit_square_problem(NFunction::exponential(), make_zero());
    std::mt19937_64 rng(3);
    const Field u = random_interior(prob.mesh, rng, 0.5);
    CHECK(total_energy(prob, u) == modular_energy(prob, u));
  }
  SUBCASE("zero field") {
    const auto nf = NFunction::exponential();
    const auto prob = unit_square_problem(nf, make_power_of_phi(nf, 2.0));
    CHECK(total_energy(prob, Field(prob.mesh)) == 0.0);
  }
  SUBCASE("bump scaling goes negative on a large domain (e-point geometry)") {
    const auto nf = NFunction::exponential();
    const Problem prob(Mesh(32, 32, 6.0, 6.0), nf, make_power_of_phi(nf, 2.0));
    const Field psi = sin_bump(prob.mesh);
    double first = total_energy(prob, 1.0 * psi);
    double last = first;
    for (double t = 1.0; t <= 8.0; t *= 2.0) last = total_energy(prob, t * psi);
    CHECK(last < 0.0);
  }
}

TEST_CASE("residual is the exact gradient of the energy") {
  const auto nf_ex = NFunction::exponential();
  const auto nf_p3 = NFunction::power(3.0);
  const Mesh m(8, 8, 1.0, 1.0);
  const double d = m.poincare_d();

  SUBCASE("zero field with f(0) = 0") {
    const Problem prob(m, nf_ex, make_power_of_phi(nf_ex, 2.0));
    const Field r = residual(prob, Field(m));
    CHECK(r.inf_norm() == 0.0);
  }
  SUBCASE("central-difference oracle, all models and families") {
    std::mt19937_64 rng(42);
    const std::vector<Problem> probs = {
        Problem(m, nf_ex, make_power_of_phi(nf_ex, 2.0)),
        Problem(m, nf_ex, make_sublinear(nf_ex, 1.0, 0.75, d)),
        Problem(m, nf_ex, make_concave_convex(nf_ex, 0.1, 0.75, 2.0)),
        Problem(m, nf_p3, make_power_of_phi(nf_p3, 2.0)),
        Problem(m, nf_p3, make_sublinear(nf_p3, 1.0, 0.75, d)),
        Problem(m, nf_p3, make_concave_convex(nf_p3, 0.1, 0.75, 2.0)),
    };
    const double eps = 1e-6;
    for (const auto& prob : probs) {
      const Field u = random_interior(m, rng, 0.5);
      const Field r = residual(prob, u);
      for (int j = 1; j < m.ny; ++j) {
        for (int i = 1; i < m.nx; ++i) {
          Field up = u, um = u;
          up.at(i, j) += eps;
          um.at(i, j) -= eps;
          const double fd =
              (total_energy(prob, up) - total_energy(prob, um)) / (2.0 * eps);
          CHECK(std::abs(fd - r.at(i, j)) <= 1e-6);
        }
      }
      // boundary entries forced to zero
      for (int i = 0; i <= m.nx; ++i) CHECK(r.at(i, 0) == 0.0);
    }
  }
  SUBCASE("homogeneity for the power kind with f = 0") {
    const Problem prob(m, nf_p3, make_zero());
    std::mt19937_64 rng(5);
    const Field u = random_interior(m, rng, 0.5);
    const Field r1 = residual(prob, u);
    for (double c : {0.5, 2.0}) {
      const Field rc = residual(prob, c * u);
      const double scale = std::pow(c, 2.0);  // p - 1
      for (size_t k = 0; k < rc.values().size(); ++k) {
        const double want = scale * r1.values()[k];
        CHECK(rc.values()[k] == doctest::Approx(want).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("modular energy is convex along segments") {
  const auto nf = NFunction::exponential();
  const Problem prob(Mesh(8, 8, 1.0, 1.0), nf, make_zero());
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    const Field u = random_interior(prob.mesh, rng, 0.8);
    const Field v = random_interior(prob.mesh, rng, 0.8);
    const double Qu = modular_energy(prob, u), Qv = modular_energy(prob, v);
    for (double t : {0.25, 0.5, 0.75}) {
      Field w = t * u;
      w.axpy(1.0 - t, v);
      CHECK(modular_energy(prob, w) <= t * Qu + (1.0 - t) * Qv + 1e-12);
    }
  }
}

TEST_CASE("luxemburg norm") {
  SUBCASE("zero field") {
    const auto prob = unit_square_problem(NFunction::power(3.0), make_zero(), 4);
    CHECK(luxemburg_norm(prob, Field(prob.mesh), false) == 0.0);
  }
  SUBCASE("constant field closed form, power p = 3 on the unit square") {
    const auto prob = unit_square_problem(NFunction::power(3.0), make_zero(), 32);
    const auto u = Field::from_function(prob.mesh, [](double, double) { return 1.0; },
                                        false);
    // solve Phi(1/lam) = 1: lam = 3^(-1/3)
    CHECK(luxemburg_norm(prob, u, false) ==
          doctest::Approx(std::pow(3.0, -1.0 / 3.0)).epsilon(1e-9));
  }
  SUBCASE("homogeneity") {
    const auto prob = unit_square_problem(NFunction::exponential(), make_zero(), 16);
    std::mt19937_64 rng(23);
    const Field u = random_interior(prob.mesh, rng, 0.7);
    for (bool grad : {false, true}) {
      const double n1 = luxemburg_norm(prob, u, grad);
      for (double c : {0.5, 2.0}) {
        CHECK(luxemburg_norm(prob, c * u, grad) ==
              doctest::Approx(c * n1).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("holder inequality on discrete samples") {
  const auto nf = NFunction::exponential();
  const auto conj = conjugate_of(nf);
  const Mesh m(16, 16, 1.0, 1.0);
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 5; ++rep) {
    const Field u = random_interior(m, rng, 1.0);
    const Field v = random_interior(m, rng, 1.0);
    double dot = 0.0;
    std::vector<double> uu, vv, w;
    for (int j = 0; j <= m.ny; ++j)
      for (int i = 0; i <= m.nx; ++i) {
        const double wt = m.node_weight(i, j);
        dot += wt * u.at(i, j) * v.at(i, j);
        uu.push_back(u.at(i, j));
        vv.push_back(v.at(i, j));
        w.push_back(wt);
      }
    const double nu = luxemburg_norm(nf, uu, w);
    const double nv = luxemburg_norm(conj, vv, w);
    CHECK(std::abs(dot) <= 2.0 * nu * nv + 1e-12);
  }
}

TEST_CASE("poincare inequality") {
  const auto nf = NFunction::exponential();
  const Problem prob(Mesh(32, 32, 1.0, 1.0), nf, make_zero());
  SUBCASE("zero field") {
    const auto res = poincare_check(prob, Field(prob.mesh));
    CHECK(res.lhs == 0.0);
    CHECK(res.rhs == 0.0);
    CHECK(res.holds);
  }
  SUBCASE("sin bump has a wide margin") {
    const auto res = poincare_check(prob, sin_bump(prob.mesh));
    CHECK(res.holds);
    CHECK(res.rhs / res.lhs > 10.0);
  }
  SUBCASE("100 random smooth fields") {
    std::mt19937_64 rng(123456);
    for (int rep = 0; rep < 100; ++rep) {
      const Field u = smooth_noise_field(prob.mesh, rng);
      CHECK(poincare_check(prob, u).holds);
    }
  }
}

TEST_CASE("embedding diagnostic") {
  const auto nf = NFunction::exponential();
  const Problem prob(Mesh(32, 32, 1.0, 1.0), nf, make_zero());
  SUBCASE("zero field") {
    const auto res = embedding_check(prob, Field(prob.mesh), 3.0, 10.0);
    CHECK(res.sup_norm == 0.0);
    CHECK(res.bound == 0.0);
  }
  SUBCASE("sin bump with C = 10, p = 3") {
    const auto res = embedding_check(prob, sin_bump(prob.mesh), 3.0, 10.0);
    CHECK(res.sup_norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.ratio < 1.0);
  }
  SUBCASE("p <= 2 rejected") {
    CHECK_THROWS_AS(embedding_check(prob, Field(prob.mesh), 2.0, 10.0), ConfigError);
  }
}

TEST_CASE("field csv dump") {
  const Mesh m(2, 2, 1.0, 1.0);
  auto u = Field(m);
  u.at(1, 1) = 0.5;
  std::ostringstream os;
  write_csv(u, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "x,y,u");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 9);
  CHECK(os.str().find("0.5,0.5,0.5") != std::string::npos);
}

TEST_CASE("problem consistency checks") {
  const auto nf = NFunction::exponential();
  const Mesh m(8, 8, 1.0, 1.0);
  // sublinear built against a different d than the mesh's 2 diam
  CHECK_THROWS_AS(Problem(m, nf, make_sublinear(nf, 1.0, 0.75, 1.0)), ConfigError);
  CHECK_NOTHROW(Problem(m, nf, make_sublinear(nf, 1.0, 0.75, m.poincare_d())));
}

TEST_SUITE_END();
