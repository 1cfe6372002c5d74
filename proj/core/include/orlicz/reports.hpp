#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/config.hpp"
#include "orlicz/nfunction.hpp"
#include "orlicz/nonlinearity.hpp"
#include "orlicz/solvers.hpp"

namespace orlicz {

/// JSON array with one object per condition:
/// {id, verdict, witness_t, lhs, rhs, margin, grid_spec}.
std::string to_json_text(const ConditionReport& rep);

/// Full check-command report: phi conditions, delta2 (and delta2 of the
/// conjugate), transform bounds, and the (f)-probes.
struct CheckReport {
  ConditionReport phi_conditions;
  Delta2Report delta2;
  Delta2Report delta2_conjugate;
  PsTransformReport ps_transform;
  TrendReport f1;
  ThetaReport f2;
  TrendReport superlinearity;
  std::optional<F3F4Report> f3_f4;  // needs a concave exponent
  bool any_violation = false;
};

std::string to_json_text(const CheckReport& rep, const RunConfig& cfg);

/// Solver report:
/// {classification, energy, residual_inf, iterations, lambda_used?, trace[],
///  mesh_spec, family_spec, seed}.
std::string to_json_text(const Solution& sol, const RunConfig& cfg,
                         std::optional<double> lambda_used = {});

struct SweepRow {
  double lambda = 0.0;
  bool found_pair = false;
  double energy_min = 0.0;
  double energy_mp = 0.0;
  double residual_min = 0.0;
  double residual_mp = 0.0;
  std::string note;  // failure reason when found_pair is false
};

/// CSV with header lambda,found_pair,I_min,I_mp,res_min,res_mp,note.
std::string to_csv_text(const std::vector<SweepRow>& rows);

}  // namespace orlicz
