#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chernob/lagrange.hpp"
#include "chernob/obstruction.hpp"

namespace chernob {

// Knobs for the numeric special-point counter.
struct OracleConfig {
  double lambda_magnitude = 1e-2;  // |lambda| of the deformation w + lambda*l
  double ball_radius = 0.5;        // acceptance ball for the x part
  int starts = 0;                  // 0 = auto: 50 x Bezout bound
  double newton_tol = 1e-12;
  int max_newton_iters = 100;
  double dedup_tol = 1e-8;
  std::uint64_t seed = 0;
};

// One deformed square system w + lambda*l, evaluated numerically. The
// symbolic base and addend parts are combined at evaluation time, so the
// deformation parameter can be any complex scalar.
class DeformedSystem {
 public:
  DeformedSystem(const LagrangeSystem& system, const LinearCollection& l,
                 std::complex<double> lambda);

  int dimension() const { return dimension_; }

  Eigen::VectorXcd evaluate(const Eigen::VectorXcd& z) const;
  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& z) const;

  struct NewtonOutcome {
    Eigen::VectorXcd z;
    double residual = 0.0;
    bool converged = false;
    int iterations = 0;
  };
  NewtonOutcome newton(Eigen::VectorXcd z, double tol, int max_iters) const;

 private:
  // Flat numeric view of a polynomial: parallel coefficient/exponent
  // arrays, evaluated against shared per-point power tables.
  struct Compiled {
    std::vector<std::complex<double>> coefficients;
    std::vector<std::uint32_t> exponents;  // term-major, dimension_ entries per term
  };

  Compiled compile(const Polynomial& p) const;
  std::complex<double> eval_compiled(const Compiled& c,
                                     const std::vector<std::complex<double>>& powers) const;
  std::vector<std::complex<double>> power_table(const Eigen::VectorXcd& z) const;

  int dimension_;
  std::complex<double> lambda_;
  std::vector<std::uint32_t> max_exponent_;   // per variable, over all polynomials
  std::vector<std::uint32_t> power_offset_;   // prefix offsets into the power table
  std::vector<Compiled> base_;
  std::vector<Compiled> addend_;
  std::vector<Compiled> base_jac_;    // row-major dimension_ x dimension_
  std::vector<Compiled> addend_jac_;
};

struct OraclePoint {
  std::vector<std::complex<double>> x;
  double residual = 0.0;
  double jacobian_condition = 0.0;  // sigma_max / sigma_min of the system Jacobian
};

struct RejectionCounts {
  int out_of_ball = 0;
  int on_singular_locus = 0;
  int degenerate = 0;
};

struct OracleReport {
  std::size_t count = 0;
  std::vector<OraclePoint> points;  // accepted points of the first deformation
  RejectionCounts rejected;         // accumulated across deformations
  int deformations_agreeing = 0;
  std::vector<std::size_t> per_deformation_counts;
  std::uint64_t seed = 0;
};

// Counts the non-degenerate special points on X_reg near the origin of a
// small generic deformation w + lambda*l: multistart Newton over random
// complex starts in the polydisk, dedup of converged solutions, and
// acceptance filters (inside the ball, smooth point of X, non-singular
// system Jacobian). Runs three independent deformations and reports the
// count only when all agree.
OracleReport count_special_points(const VarietyGerm& x, const FormCollection& c,
                                  const OracleConfig& cfg);

struct ConservationReport {
  bool pass = false;
  ObstructionReport chern;
  OracleReport oracle;
};

// Checks Ch == the oracle's special-point count; a mismatch is reported,
// never reconciled.
ConservationReport verify_conservation(const VarietyGerm& x, const FormCollection& c,
                                       const TrialConfig& trial_cfg, const OracleConfig& oracle_cfg,
                                       const std::function<void(const std::string&)>& notice = {});

}  // namespace chernob
