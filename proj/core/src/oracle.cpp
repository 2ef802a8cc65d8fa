#include "chernob/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "chernob/detrand.hpp"
#include "chernob/errors.hpp"

namespace chernob {

namespace {

// Stream ids for the independent random draws of one oracle run.
constexpr std::uint64_t kChartStream = 17;
constexpr std::uint64_t kDeformStream = 1000;
constexpr std::uint64_t kPhaseStream = 2000;
constexpr std::uint64_t kStartStream = 3000;

// Relative rank threshold for "x is a smooth point of X".
constexpr double kSmoothRankTol = 1e-6;
// Relative singularity threshold for "the special point is degenerate".
constexpr double kDegenerateTol = 1e-8;

std::complex<double> random_in_disk(DetRand& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform_double());
  const double theta = 2.0 * std::numbers::pi * rng.uniform_double();
  return std::polar(r, theta);
}

// Diagonal row/column equilibration. Points near the germ's singular
// locus mix coordinate scales (tiny x against large multipliers), which
// inflates the raw condition number without any intrinsic rank loss;
// scaling removes that artifact while an exactly singular matrix stays
// singular.
Eigen::MatrixXcd equilibrated(Eigen::MatrixXcd j) {
  for (Eigen::Index r = 0; r < j.rows(); ++r) {
    const double m = j.row(r).cwiseAbs().maxCoeff();
    if (m > 0) j.row(r) /= m;
  }
  for (Eigen::Index c = 0; c < j.cols(); ++c) {
    const double m = j.col(c).cwiseAbs().maxCoeff();
    if (m > 0) j.col(c) /= m;
  }
  return j;
}

// Generic constant collection with coefficients of magnitude <= 1, so
// the deformed special points stay at the lambda scale inside the
// acceptance ball.
LinearCollection draw_unit_scale_collection(const Partition& partition, int variable_count,
                                            std::uint64_t seed, std::uint64_t stream) {
  constexpr int kHeight = 100;
  const LinearCollection raw =
      draw_linear_collection(partition, variable_count, kHeight, seed, stream);
  std::vector<std::vector<OneForm>> blocks;
  for (const auto& block : raw.forms().blocks()) {
    std::vector<OneForm> scaled;
    for (const OneForm& w : block) scaled.push_back(w * Rational(Rational(1) / kHeight));
    blocks.push_back(std::move(scaled));
  }
  return LinearCollection(partition, std::move(blocks));
}

}  // namespace

DeformedSystem::Compiled DeformedSystem::compile(const Polynomial& p) const {
  Compiled c;
  c.coefficients.reserve(p.terms().size());
  c.exponents.reserve(p.terms().size() * static_cast<std::size_t>(dimension_));
  for (const Term& t : p.terms()) {
    c.coefficients.push_back(to_complex(t.coefficient));
    for (int v = 0; v < dimension_; ++v) c.exponents.push_back(t.monomial.exponent(v));
  }
  return c;
}

std::vector<std::complex<double>> DeformedSystem::power_table(const Eigen::VectorXcd& z) const {
  std::vector<std::complex<double>> powers(power_offset_.back());
  for (int v = 0; v < dimension_; ++v) {
    std::complex<double>* column = powers.data() + power_offset_[static_cast<std::size_t>(v)];
    column[0] = {1.0, 0.0};
    for (std::uint32_t e = 1; e <= max_exponent_[static_cast<std::size_t>(v)]; ++e) {
      column[e] = column[e - 1] * z(v);
    }
  }
  return powers;
}

std::complex<double> DeformedSystem::eval_compiled(
    const Compiled& c, const std::vector<std::complex<double>>& powers) const {
  std::complex<double> sum{0.0, 0.0};
  const std::uint32_t* exps = c.exponents.data();
  for (std::size_t t = 0; t < c.coefficients.size(); ++t) {
    std::complex<double> prod = c.coefficients[t];
    for (int v = 0; v < dimension_; ++v) {
      const std::uint32_t e = exps[static_cast<std::size_t>(v)];
      if (e > 0) prod *= powers[power_offset_[static_cast<std::size_t>(v)] + e];
    }
    exps += dimension_;
    sum += prod;
  }
  return sum;
}

DeformedSystem::DeformedSystem(const LagrangeSystem& system, const LinearCollection& l,
                               std::complex<double> lambda)
    : dimension_(system.total_unknowns()), lambda_(lambda) {
  const std::vector<Polynomial>& base = system.equations();
  const std::vector<Polynomial> addend = system.deformation_addend(l);

  max_exponent_.assign(static_cast<std::size_t>(dimension_), 0u);
  auto track = [&](const Polynomial& p) {
    for (const Term& t : p.terms()) {
      for (int v = 0; v < dimension_; ++v) {
        max_exponent_[static_cast<std::size_t>(v)] =
            std::max(max_exponent_[static_cast<std::size_t>(v)], t.monomial.exponent(v));
      }
    }
  };
  for (const Polynomial& p : base) track(p);
  for (const Polynomial& p : addend) track(p);
  power_offset_.resize(static_cast<std::size_t>(dimension_) + 1);
  power_offset_[0] = 0;
  for (int v = 0; v < dimension_; ++v) {
    power_offset_[static_cast<std::size_t>(v) + 1] =
        power_offset_[static_cast<std::size_t>(v)] + max_exponent_[static_cast<std::size_t>(v)] + 1;
  }

  for (int e = 0; e < dimension_; ++e) {
    base_.push_back(compile(base[static_cast<std::size_t>(e)]));
    addend_.push_back(compile(addend[static_cast<std::size_t>(e)]));
    for (int u = 0; u < dimension_; ++u) {
      base_jac_.push_back(compile(differentiate(base[static_cast<std::size_t>(e)], u)));
      addend_jac_.push_back(compile(differentiate(addend[static_cast<std::size_t>(e)], u)));
    }
  }
}

Eigen::VectorXcd DeformedSystem::evaluate(const Eigen::VectorXcd& z) const {
  const auto powers = power_table(z);
  Eigen::VectorXcd out(dimension_);
  for (int e = 0; e < dimension_; ++e) {
    out(e) = eval_compiled(base_[static_cast<std::size_t>(e)], powers) +
             lambda_ * eval_compiled(addend_[static_cast<std::size_t>(e)], powers);
  }
  return out;
}

Eigen::MatrixXcd DeformedSystem::jacobian(const Eigen::VectorXcd& z) const {
  const auto powers = power_table(z);
  Eigen::MatrixXcd out(dimension_, dimension_);
  for (int e = 0; e < dimension_; ++e) {
    for (int u = 0; u < dimension_; ++u) {
      const std::size_t k = static_cast<std::size_t>(e) * static_cast<std::size_t>(dimension_) +
                            static_cast<std::size_t>(u);
      out(e, u) = eval_compiled(base_jac_[k], powers) + lambda_ * eval_compiled(addend_jac_[k], powers);
    }
  }
  return out;
}

DeformedSystem::NewtonOutcome DeformedSystem::newton(Eigen::VectorXcd z, double tol,
                                                     int max_iters) const {
  NewtonOutcome outcome;
  for (int iter = 0; iter < max_iters; ++iter) {
    const Eigen::VectorXcd f = evaluate(z);
    const double residual = f.lpNorm<Eigen::Infinity>();
    if (!std::isfinite(residual)) break;
    if (residual < tol) {
      outcome.z = z;
      outcome.residual = residual;
      outcome.converged = true;
      outcome.iterations = iter;
      return outcome;
    }
    const Eigen::VectorXcd delta = jacobian(z).partialPivLu().solve(f);
    if (!delta.allFinite()) break;
    z -= delta;
    if (z.norm() > 1e10) break;  // diverging into the multiplier chart's horizon
  }
  outcome.z = z;
  outcome.residual = evaluate(z).lpNorm<Eigen::Infinity>();
  outcome.converged = false;
  return outcome;
}

namespace {

bool x_lexicographic_before(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, int n) {
  for (int v = 0; v < n; ++v) {
    if (a(v).real() != b(v).real()) return a(v).real() < b(v).real();
    if (a(v).imag() != b(v).imag()) return a(v).imag() < b(v).imag();
  }
  return false;
}

double x_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, int n) {
  double sum = 0.0;
  for (int v = 0; v < n; ++v) sum += std::norm(a(v) - b(v));
  return std::sqrt(sum);
}

}  // namespace

OracleReport count_special_points(const VarietyGerm& variety, const FormCollection& collection,
                                  const OracleConfig& cfg) {
  if (!(cfg.dedup_tol > cfg.newton_tol)) {
    throw ValidationError("dedup tolerance must exceed the Newton tolerance");
  }
  if (!(cfg.lambda_magnitude < cfg.ball_radius)) {
    throw ValidationError("deformation magnitude must be smaller than the acceptance ball");
  }
  if (cfg.lambda_magnitude <= 0 || cfg.ball_radius <= 0) {
    throw ValidationError("oracle magnitudes must be positive");
  }

  const LagrangeSystem system =
      build_lagrange_system(variety, collection, DetRand(cfg.seed, kChartStream).next_u64());
  const int n_x = system.x_count();
  const int codim = variety.codimension();
  const int dim = system.total_unknowns();

  OracleReport report;
  report.seed = cfg.seed;

  for (std::uint64_t d = 0; d < 3; ++d) {
    const LinearCollection ell =
        draw_unit_scale_collection(collection.partition(), n_x, cfg.seed, kDeformStream + d);
    DetRand phase_rng(cfg.seed, kPhaseStream + d);
    const std::complex<double> lambda =
        std::polar(cfg.lambda_magnitude, 2.0 * std::numbers::pi * phase_rng.uniform_double());
    const DeformedSystem deformed(system, ell, lambda);

    std::uint64_t starts = cfg.starts > 0
                               ? static_cast<std::uint64_t>(cfg.starts)
                               : 50 * system.bezout_bound(ell);
    starts = std::min<std::uint64_t>(starts, 200'000);

    DetRand start_rng(cfg.seed, kStartStream + d);
    std::vector<Eigen::VectorXcd> converged;
    std::vector<double> residuals;
    for (std::uint64_t s = 0; s < starts; ++s) {
      Eigen::VectorXcd z0(dim);
      for (int v = 0; v < n_x; ++v) z0(v) = random_in_disk(start_rng, cfg.ball_radius);
      for (int u = n_x; u < dim; ++u) z0(u) = random_in_disk(start_rng, 1.0);
      const auto outcome = deformed.newton(std::move(z0), cfg.newton_tol, cfg.max_newton_iters);
      if (outcome.converged) {
        converged.push_back(outcome.z);
        residuals.push_back(outcome.residual);
      }
    }

    // Deterministic order, then greedy clustering on the x part.
    std::vector<std::size_t> order(converged.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return x_lexicographic_before(converged[a], converged[b], n_x);
    });
    std::vector<std::size_t> representatives;
    for (std::size_t k : order) {
      bool duplicate = false;
      for (std::size_t rep : representatives) {
        if (x_distance(converged[k], converged[rep], n_x) < cfg.dedup_tol) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) representatives.push_back(k);
    }

    // Acceptance filters.
    std::vector<OraclePoint> accepted;
    for (std::size_t rep : representatives) {
      const Eigen::VectorXcd& z = converged[rep];
      double x_norm = 0.0;
      for (int v = 0; v < n_x; ++v) x_norm += std::norm(z(v));
      x_norm = std::sqrt(x_norm);
      if (x_norm >= cfg.ball_radius) {
        ++report.rejected.out_of_ball;
        continue;
      }
      if (codim > 0) {
        std::vector<std::complex<double>> point(z.data(), z.data() + n_x);
        Eigen::MatrixXcd jac_f(codim, n_x);
        for (int r = 0; r < codim; ++r) {
          for (int v = 0; v < n_x; ++v) {
            jac_f(r, v) = evaluate_complex(
                differentiate(variety.equations()[static_cast<std::size_t>(r)], v), point);
          }
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac_f);
        const double s_max = svd.singularValues()(0);
        const double s_min = svd.singularValues()(svd.singularValues().size() - 1);
        if (s_min <= kSmoothRankTol * std::max(1.0, s_max)) {
          ++report.rejected.on_singular_locus;
          continue;
        }
      }
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(equilibrated(deformed.jacobian(z)));
      const double s_max = svd.singularValues()(0);
      const double s_min = svd.singularValues()(svd.singularValues().size() - 1);
      if (s_min <= kDegenerateTol * s_max) {
        ++report.rejected.degenerate;
        continue;
      }
      OraclePoint point;
      point.x.assign(z.data(), z.data() + n_x);
      point.residual = deformed.evaluate(z).lpNorm<Eigen::Infinity>();
      point.jacobian_condition = s_max / s_min;
      accepted.push_back(std::move(point));
    }

    // Two accepted points suspiciously close together suggest an
    // unresolved multiple point; refuse to count.
    for (std::size_t a = 0; a < accepted.size(); ++a) {
      for (std::size_t b = a + 1; b < accepted.size(); ++b) {
        double dist = 0.0;
        for (int v = 0; v < n_x; ++v) dist += std::norm(accepted[a].x[static_cast<std::size_t>(v)] -
                                                        accepted[b].x[static_cast<std::size_t>(v)]);
        if (std::sqrt(dist) < 10.0 * cfg.dedup_tol) {
          throw OracleError("suspected multiplicity collision between accepted special points");
        }
      }
    }

    report.per_deformation_counts.push_back(accepted.size());
    if (d == 0) report.points = std::move(accepted);
  }

  const std::size_t first = report.per_deformation_counts.front();
  report.deformations_agreeing = 0;
  for (std::size_t c : report.per_deformation_counts) {
    if (c == first) ++report.deformations_agreeing;
  }
  if (report.deformations_agreeing != static_cast<int>(report.per_deformation_counts.size())) {
    std::ostringstream msg;
    msg << "count unstable across deformations:";
    for (std::size_t c : report.per_deformation_counts) msg << " " << c;
    throw OracleError(msg.str());
  }
  report.count = first;
  return report;
}

ConservationReport verify_conservation(const VarietyGerm& x, const FormCollection& c,
                                       const TrialConfig& trial_cfg, const OracleConfig& oracle_cfg,
                                       const std::function<void(const std::string&)>& notice) {
  ConservationReport report;
  report.chern = chern_obstruction(x, c, trial_cfg, notice);
  report.oracle = count_special_points(x, c, oracle_cfg);
  report.pass = report.chern.chern >= 0 &&
                static_cast<std::size_t>(report.chern.chern) == report.oracle.count;
  return report;
}

}  // namespace chernob
