#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chernob/germs.hpp"
#include "chernob/polynomial.hpp"

namespace chernob {

// Dehomogenization chart sum_j c_j * lambda_j = 1 for one block's
// projective multiplier tuple; the pivot entry is eliminated.
struct BlockChart {
  std::vector<std::int64_t> coefficients;
  int pivot = 0;
};

// The square polynomial system whose solutions are the special points of
// the collection on X_reg together with their dependence multipliers.
//
// Unknowns: the N coordinates x, then for each block its n - k_i free
// lambda entries (the pivot entry is the affine function the chart
// dictates), then for each block its N - n entries mu. Equations: f_r = 0
// for every defining equation, then for each block the N coordinate
// equations  sum_j lambda^(i)_j w^(i)_j + sum_r mu^(i)_r df_r = 0.
class LagrangeSystem {
 public:
  LagrangeSystem(const VarietyGerm& x, const FormCollection& c, std::uint64_t chart_seed);

  int total_unknowns() const { return total_unknowns_; }
  int x_count() const { return x_count_; }
  const std::vector<Polynomial>& equations() const { return equations_; }
  const std::vector<BlockChart>& charts() const { return charts_; }
  const std::vector<std::string>& unknown_names() const { return unknown_names_; }

  // The full multiplier tuple of a block as polynomials in the system
  // ring (free entries are variables, the pivot entry is affine).
  const std::vector<Polynomial>& multiplier_tuple(int block) const {
    return lambda_polys_[static_cast<std::size_t>(block)];
  }

  // Per-equation addend turning `equations` into the system of the
  // deformed collection {w + lambda * l}: the caller scales by the
  // complex deformation parameter at evaluation time. The f-equations
  // have zero addend.
  std::vector<Polynomial> deformation_addend(const LinearCollection& l) const;

  // Product of per-equation total degrees (addend-aware upper bound on
  // the solution count for the deformed system).
  std::uint64_t bezout_bound(const LinearCollection& l) const;

 private:
  int x_count_ = 0;
  int total_unknowns_ = 0;
  Partition partition_;
  std::vector<BlockChart> charts_;
  std::vector<Polynomial> equations_;
  std::vector<std::vector<Polynomial>> lambda_polys_;
  std::vector<std::string> unknown_names_;
};

LagrangeSystem build_lagrange_system(const VarietyGerm& x, const FormCollection& c,
                                     std::uint64_t chart_seed);

}  // namespace chernob
