#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nevpick/problem.hpp"
#include "nevpick/schurclass.hpp"
#include "nevpick/theta.hpp"

namespace nevpick {

/// Parameter of the linear fractional map: S a Schur function, B a Blaschke
/// product without zeros in common with S.
struct ParamPair {
  RatFun S;
  Blaschke B;

  /// Splits a generalized Schur function E into its Krein-Langer pair.
  static ParamPair from_e(const RatFun& E);
  /// E = S / B (reduced).
  RatFun as_e() const;
  /// Throws InvalidInput when S is not a Schur function or shares a zero with B.
  void validate(double tol = 1e-9) const;
};

struct LftResult {
  RatFun f;
  /// U = Theta11 S + Theta12 B and V = Theta21 S + Theta22 B over the shared
  /// denominator d * den(S) * den(B), not reduced.
  PolyQuotient U;
  PolyQuotient V;
  ReduceInfo reduce_info;
  int cancelled_at_known_points = 0;
};

/// f = (Theta11 S + Theta12 B) / (Theta21 S + Theta22 B). Throws DegenerateDenominator.
LftResult lft_apply(const Theta& theta, const ParamPair& param);

/// E = (f Theta22 - Theta12) / (Theta11 - f Theta21), checked by a round trip
/// at sample points. Throws IdenticallyZeroDenominator or ValidationMismatch.
RatFun lft_invert(const Theta& theta, const RatFun& f);

struct NodeAdmissibility {
  std::size_t node = 0;
  cplx v_value;
  bool v_vanishes = false;
  cplx theta21;
  cplx theta22;
  /// Order of the pole of E = S / B at the node (zero order of B).
  int e_pole_order = 0;
  /// E has a pole here, Theta21 does not vanish and Theta22 does.
  bool pole_clause = false;
  /// E has a pole of order > 1 at a node with n_i > 1: multiplicity
  /// bookkeeping beyond the scalar pole clause.
  bool higher_order_pole = false;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<NodeAdmissibility> nodes;
};

/// V_{S,B}(z_i) != 0 at every node; per-node detail includes the E-form pole clause.
AdmissibilityReport admissible(const Theta& theta, const ParamPair& param, const InterpProblem& problem,
                               double zero_tol = 1e-9);

struct ConditionResidual {
  std::size_t node = 0;
  int order = 0;
  cplx value;
  cplx target;
  double residual = 0.0;
};

struct Verdict {
  bool pass = false;
  std::optional<int> index;
  double boundary_sup = 0.0;
  /// Set when the class index could not be certified.
  std::string class_error;
  bool analytic_at_nodes = true;
  std::vector<std::size_t> poles_at_nodes;
  std::vector<ConditionResidual> residuals;
  double max_residual = 0.0;
};

/// Checks class membership, analyticity at the nodes and every interpolation condition.
Verdict verify_solution(const InterpProblem& problem, const RatFun& f, double tol = 1e-9);

struct RetainedCondition {
  std::size_t node = 0;
  std::vector<int> orders;
};

struct ClassifyReport {
  std::vector<int> m;
  std::vector<std::size_t> I_plus;
  std::vector<std::size_t> I_minus;
  std::vector<std::size_t> I_zero;
  int gamma_m = 0;
  int kappa_tilde = 0;
  int predicted_index = 0;
  std::vector<RetainedCondition> retained_conditions;
  RatFun f;
  int realized_index = 0;
  double retained_residual = 0.0;
  /// Pole orders of the realized f at the nodes of I_minus, in I_minus order.
  std::vector<int> pole_orders;
  /// A cancellation decision in reducing f was close to its threshold.
  bool borderline = false;
  /// Some node has an E pole of order > 1 with n_i > 1.
  bool higher_order_pole = false;
};

struct ClassifyOptions {
  double zero_tol = 1e-9;
  double verify_tol = 1e-9;
};

/// Zero multiplicities of the unreduced V at the nodes, the index sets and
/// the predicted class of the realized function, validated against it.
/// Throws ValidationMismatch when the realized function contradicts the prediction.
ClassifyReport classify_parameter(const Theta& theta, const ParamPair& param, const InterpProblem& problem,
                                  const ClassifyOptions& opts = {});

}  // namespace nevpick
