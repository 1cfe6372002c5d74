#include "orlicz/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/numerics.hpp"

namespace orlicz {

Problem::Problem(Mesh mesh_, NFunction nf_, Nonlinearity nl_)
    : mesh(mesh_), nf(std::move(nf_)), nl(std::move(nl_)) {
  if (nl.family() == Family::Sublinear) {
    const double d = mesh.poincare_d();
    if (std::abs(nl.d() - d) > 1e-12 * d)
      throw ConfigError("sublinear nonlinearity built with d != 2 diam of this mesh");
  }
}

std::vector<CellGradient> gradient_field(const Mesh& mesh, const Field& u) {
  if (!(u.mesh() == mesh)) throw ConfigError("field does not conform to mesh");
  std::vector<CellGradient> g(static_cast<size_t>(mesh.num_cells()));
  const double ihx = 1.0 / (2.0 * mesh.hx()), ihy = 1.0 / (2.0 * mesh.hy());
  size_t c = 0;
  for (int j = 0; j < mesh.ny; ++j) {
    for (int i = 0; i < mesh.nx; ++i, ++c) {
      const double u00 = u.at(i, j), u10 = u.at(i + 1, j);
      const double u01 = u.at(i, j + 1), u11 = u.at(i + 1, j + 1);
      g[c].gx = (u10 - u00 + u11 - u01) * ihx;
      g[c].gy = (u01 - u00 + u11 - u10) * ihy;
    }
  }
  return g;
}

double modular_energy(const Problem& p, const Field& u) {
  const auto g = gradient_field(p.mesh, u);
  const double area = p.mesh.hx() * p.mesh.hy();
  double acc = 0.0;
  for (const auto& c : g) acc += p.nf.big_phi(std::hypot(c.gx, c.gy));
  return area * acc;
}

double total_energy(const Problem& p, const Field& u) {
  double acc = modular_energy(p, u);
  for (int j = 0; j <= p.mesh.ny; ++j)
    for (int i = 0; i <= p.mesh.nx; ++i)
      acc -= p.mesh.node_weight(i, j) * p.nl.F(u.at(i, j));
  return acc;
}

double modular_energy_or_inf(const Problem& p, const Field& u) {
  try {
    return modular_energy(p, u);
  } catch (const EvaluationError&) {
    return std::numeric_limits<double>::infinity();
  }
}

double total_energy_or_inf(const Problem& p, const Field& u) {
  try {
    return total_energy(p, u);
  } catch (const EvaluationError&) {
    return std::numeric_limits<double>::infinity();
  }
}

Field residual(const Problem& p, const Field& u) {
  if (!(u.mesh() == p.mesh)) throw ConfigError("field does not conform to mesh");
  const Mesh& m = p.mesh;
  Field r(m, u.dirichlet());
  const double area = m.hx() * m.hy();
  const double ihx = 1.0 / (2.0 * m.hx()), ihy = 1.0 / (2.0 * m.hy());
  for (int j = 0; j < m.ny; ++j) {
    for (int i = 0; i < m.nx; ++i) {
      const double u00 = u.at(i, j), u10 = u.at(i + 1, j);
      const double u01 = u.at(i, j + 1), u11 = u.at(i + 1, j + 1);
      const double gx = (u10 - u00 + u11 - u01) * ihx;
      const double gy = (u01 - u00 + u11 - u10) * ihy;
      const double mag = std::hypot(gx, gy);
      if (mag == 0.0) continue;  // phi(m) m -> 0; nothing to add
      const double coef = area * p.nf.phi(mag);
      const double cx = coef * gx * ihx, cy = coef * gy * ihy;
      r.at(i, j) += -cx - cy;
      r.at(i + 1, j) += cx - cy;
      r.at(i, j + 1) += -cx + cy;
      r.at(i + 1, j + 1) += cx + cy;
    }
  }
  for (int j = 0; j <= m.ny; ++j)
    for (int i = 0; i <= m.nx; ++i)
      r.at(i, j) -= m.node_weight(i, j) * p.nl.f(u.at(i, j));
  r.enforce_dirichlet();
  return r;
}

double luxemburg_norm(const NFunction& nf, std::span<const double> values,
                      std::span<const double> weights) {
  if (values.size() != weights.size())
    throw ConfigError("luxemburg_norm: values/weights size mismatch");
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, std::abs(v));
  if (vmax == 0.0) return 0.0;

  // Modular as a decreasing function of lam; overflow means "way above 1".
  auto mod = [&](double lam) {
    double acc = 0.0;
    for (size_t k = 0; k < values.size(); ++k) {
      double term;
      try {
        term = nf.big_phi(std::abs(values[k]) / lam);
      } catch (const EvaluationError&) {
        return std::numeric_limits<double>::infinity();
      }
      acc += weights[k] * term;
      if (!std::isfinite(acc)) return std::numeric_limits<double>::infinity();
    }
    return acc;
  };

  double lo = vmax, hi = vmax;
  while (mod(lo) < 1.0) {
    lo *= 0.5;
    if (lo < 1e-300) return 0.0;
  }
  while (mod(hi) > 1.0) {
    hi *= 2.0;
    if (hi > 1e300) throw EvaluationError("luxemburg_norm: bracket blew up");
  }
  // bisect on the monotone modular
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = mod(mid);
    if (std::abs(v - 1.0) <= 1e-10) return mid;
    if (v > 1.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-12 * std::max(1.0, hi)) break;
  }
  return hi;  // the feasible side: modular(hi) <= 1
}

double luxemburg_norm(const Problem& p, const Field& u, bool use_gradient) {
  std::vector<double> vals, w;
  if (use_gradient) {
    const auto g = gradient_field(p.mesh, u);
    const double area = p.mesh.hx() * p.mesh.hy();
    vals.reserve(g.size());
    w.assign(g.size(), area);
    for (const auto& c : g) vals.push_back(std::hypot(c.gx, c.gy));
  } else {
    vals.reserve(u.values().size());
    w.reserve(u.values().size());
    for (int j = 0; j <= p.mesh.ny; ++j)
      for (int i = 0; i <= p.mesh.nx; ++i) {
        vals.push_back(u.at(i, j));
        w.push_back(p.mesh.node_weight(i, j));
      }
  }
  return luxemburg_norm(p.nf, vals, w);
}

PoincareResult poincare_check(const Problem& p, const Field& u, double tol) {
  PoincareResult res;
  const double d = p.mesh.poincare_d();
  for (int j = 0; j <= p.mesh.ny; ++j)
    for (int i = 0; i <= p.mesh.nx; ++i)
      res.lhs += p.mesh.node_weight(i, j) * p.nf.big_phi(std::abs(u.at(i, j)) / d);
  res.rhs = modular_energy(p, u);
  res.holds = res.lhs <= res.rhs * (1.0 + tol);
  return res;
}

EmbeddingResult embedding_check(const Problem& p, const Field& u, double p_exp,
                                double C) {
  if (!(p_exp > 2.0)) throw ConfigError("embedding_check needs p > N = 2");
  EmbeddingResult res;
  res.sup_norm = u.inf_norm();
  res.bound = C * std::pow(modular_energy(p, u), 1.0 / p_exp);
  res.ratio = res.bound > 0.0 ? res.sup_norm / res.bound
                              : (res.sup_norm > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  return res;
}

}  // namespace orlicz
