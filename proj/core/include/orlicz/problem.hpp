#pragma once

#include <span>
#include <vector>

#include "orlicz/mesh.hpp"
#include "orlicz/nfunction.hpp"
#include "orlicz/nonlinearity.hpp"

namespace orlicz {

/// The discretized Dirichlet problem: mesh + N-function + reaction term.
/// Evaluates the energy I(u) = int Phi(|grad u|) - int F(u), its exact
/// discrete gradient (the weak-form residual) and Orlicz norms.
struct Problem {
  Mesh mesh;
  NFunction nf;
  Nonlinearity nl;

  Problem(Mesh mesh, NFunction nf, Nonlinearity nl);
};

struct CellGradient {
  double gx, gy;
};

/// Bilinear cell-center gradient: per cell, each component is the mean of
/// the two opposing edge differences over the spacing. Exact for fields
/// linear in x and y. Cells ordered row-major (y outer).
std::vector<CellGradient> gradient_field(const Mesh& mesh, const Field& u);

/// Q(u) = sum_cells hx hy Phi(|grad u|).
double modular_energy(const Problem& p, const Field& u);

/// I(u) = Q(u) - sum_nodes w_node F(u_node), lumped dual-cell weights.
double total_energy(const Problem& p, const Field& u);

/// Evaluation-guarded variants: +inf instead of EvaluationError when the
/// overflow guard trips. Used by the line searches and bracket growth, where
/// an out-of-range trial just means "reject".
double modular_energy_or_inf(const Problem& p, const Field& u);
double total_energy_or_inf(const Problem& p, const Field& u);

/// Exact gradient of total_energy with respect to interior nodal values;
/// boundary entries are forced to zero. A zero of this vector is a discrete
/// weak solution.
Field residual(const Problem& p, const Field& u);

/// Luxemburg norm of a sample set: inf{ lam > 0 : sum w Phi(|v|/lam) <= 1 },
/// by bisection on the monotone modular. Returns 0 when all samples vanish.
double luxemburg_norm(const NFunction& nf, std::span<const double> values,
                      std::span<const double> weights);

/// Luxemburg norm of the field (nodal samples, dual-cell weights) or of its
/// gradient magnitude (cell samples, cell areas) when use_gradient is set.
double luxemburg_norm(const Problem& p, const Field& u, bool use_gradient);

struct PoincareResult {
  double lhs = 0.0;  // sum w Phi(|u|/d)
  double rhs = 0.0;  // modular energy
  bool holds = false;
};

/// (PI): int Phi(|u|/d) <= int Phi(|grad u|), d = 2 diam. The tolerance
/// factor (1 + tol) absorbs the quadrature asymmetry between the two sides.
PoincareResult poincare_check(const Problem& p, const Field& u, double tol = 1e-3);

struct EmbeddingResult {
  double sup_norm = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

/// Diagnostic for sup|u| <= C (int Phi(|grad u|))^(1/p); C is supplied, not
/// derived.
EmbeddingResult embedding_check(const Problem& p, const Field& u, double p_exp,
                                double C);

}  // namespace orlicz
