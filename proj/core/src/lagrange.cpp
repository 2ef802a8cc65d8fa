#include "chernob/lagrange.hpp"

#include <algorithm>
#include <cstdlib>

#include "chernob/detrand.hpp"
#include "chernob/errors.hpp"

namespace chernob {

namespace {

std::vector<BlockChart> draw_charts(const Partition& partition, std::uint64_t chart_seed) {
  std::vector<BlockChart> charts;
  charts.reserve(static_cast<std::size_t>(partition.size()));
  for (int i = 0; i < partition.size(); ++i) {
    DetRand rng(chart_seed, static_cast<std::uint64_t>(i));
    BlockChart chart;
    chart.coefficients.resize(static_cast<std::size_t>(partition.block_size(i)));
    do {
      for (auto& c : chart.coefficients) c = rng.uniform_int(-9, 9);
    } while (std::all_of(chart.coefficients.begin(), chart.coefficients.end(),
                         [](std::int64_t c) { return c == 0; }));
    chart.pivot = 0;
    for (int j = 1; j < static_cast<int>(chart.coefficients.size()); ++j) {
      if (std::abs(chart.coefficients[static_cast<std::size_t>(j)]) >
          std::abs(chart.coefficients[static_cast<std::size_t>(chart.pivot)])) {
        chart.pivot = j;
      }
    }
    charts.push_back(std::move(chart));
  }
  return charts;
}

}  // namespace

LagrangeSystem::LagrangeSystem(const VarietyGerm& x, const FormCollection& c,
                               std::uint64_t chart_seed)
    : partition_(c.partition()) {
  if (c.partition().sum() != x.dimension() || c.variable_count() != x.variable_count()) {
    throw ValidationError("shape mismatch between X and the collection");
  }
  const int n_vars = x.variable_count();
  const int codim = x.codimension();
  const int s = partition_.size();
  x_count_ = n_vars;

  charts_ = draw_charts(partition_, chart_seed);

  // Unknown layout: x's, then every block's free lambdas, then every
  // block's mus.
  std::vector<int> lambda_offset(static_cast<std::size_t>(s));
  int cursor = n_vars;
  for (int i = 0; i < s; ++i) {
    lambda_offset[static_cast<std::size_t>(i)] = cursor;
    cursor += partition_.block_size(i) - 1;
  }
  std::vector<int> mu_offset(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    mu_offset[static_cast<std::size_t>(i)] = cursor;
    cursor += codim;
  }
  total_unknowns_ = cursor;

  unknown_names_.reserve(static_cast<std::size_t>(total_unknowns_));
  for (int v = 0; v < n_vars; ++v) unknown_names_.push_back("x" + std::to_string(v + 1));
  for (int i = 0; i < s; ++i) {
    for (int t = 0; t < partition_.block_size(i) - 1; ++t) {
      unknown_names_.push_back("l_" + std::to_string(i + 1) + "_" + std::to_string(t + 1));
    }
  }
  for (int i = 0; i < s; ++i) {
    for (int r = 0; r < codim; ++r) {
      unknown_names_.push_back("m_" + std::to_string(i + 1) + "_" + std::to_string(r + 1));
    }
  }

  // Multiplier tuples: free entries in declaration order skip the pivot;
  // the pivot entry solves the chart equation.
  lambda_polys_.resize(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    const BlockChart& chart = charts_[static_cast<std::size_t>(i)];
    const int b = partition_.block_size(i);
    auto& tuple = lambda_polys_[static_cast<std::size_t>(i)];
    tuple.assign(static_cast<std::size_t>(b), Polynomial::zero(total_unknowns_));
    int t = 0;
    for (int j = 0; j < b; ++j) {
      if (j == chart.pivot) continue;
      tuple[static_cast<std::size_t>(j)] = Polynomial::variable(
          total_unknowns_, lambda_offset[static_cast<std::size_t>(i)] + t);
      ++t;
    }
    Polynomial pivot_num = Polynomial::constant(total_unknowns_, 1);
    for (int j = 0; j < b; ++j) {
      if (j == chart.pivot) continue;
      pivot_num = pivot_num - tuple[static_cast<std::size_t>(j)] *
                                  Rational(chart.coefficients[static_cast<std::size_t>(j)]);
    }
    tuple[static_cast<std::size_t>(chart.pivot)] =
        pivot_num * Rational(Rational(1) /
                             Rational(chart.coefficients[static_cast<std::size_t>(chart.pivot)]));
  }

  // f_r = 0, then per block per coordinate the dependence equation.
  for (const Polynomial& f : x.equations()) {
    equations_.push_back(extend_variables(f, total_unknowns_));
  }
  for (int i = 0; i < s; ++i) {
    const auto& tuple = lambda_polys_[static_cast<std::size_t>(i)];
    for (int m = 0; m < n_vars; ++m) {
      Polynomial eq = Polynomial::zero(total_unknowns_);
      for (int j = 0; j < partition_.block_size(i); ++j) {
        const Polynomial& coeff = c.block(i)[static_cast<std::size_t>(j)].coefficient(m);
        if (!coeff.is_zero()) {
          eq = eq + tuple[static_cast<std::size_t>(j)] * extend_variables(coeff, total_unknowns_);
        }
      }
      for (int r = 0; r < codim; ++r) {
        const Polynomial df =
            differentiate(x.equations()[static_cast<std::size_t>(r)], m);
        if (!df.is_zero()) {
          eq = eq + Polynomial::variable(total_unknowns_,
                                         mu_offset[static_cast<std::size_t>(i)] + r) *
                        extend_variables(df, total_unknowns_);
        }
      }
      equations_.push_back(std::move(eq));
    }
  }

  // Squareness is structural; guard it anyway.
  if (static_cast<int>(equations_.size()) != total_unknowns_) {
    throw std::logic_error("Lagrange system is not square");
  }
}

std::vector<Polynomial> LagrangeSystem::deformation_addend(const LinearCollection& l) const {
  const FormCollection& forms = l.forms();
  if (!(forms.partition() == partition_) || forms.variable_count() != x_count_) {
    throw ValidationError("deformation collection has the wrong shape");
  }
  const int codim = static_cast<int>(equations_.size()) - partition_.size() * x_count_;
  std::vector<Polynomial> addend;
  addend.reserve(equations_.size());
  for (int r = 0; r < codim; ++r) addend.push_back(Polynomial::zero(total_unknowns_));
  for (int i = 0; i < partition_.size(); ++i) {
    const auto& tuple = lambda_polys_[static_cast<std::size_t>(i)];
    for (int m = 0; m < x_count_; ++m) {
      Polynomial eq = Polynomial::zero(total_unknowns_);
      for (int j = 0; j < partition_.block_size(i); ++j) {
        const Polynomial& coeff = forms.block(i)[static_cast<std::size_t>(j)].coefficient(m);
        if (!coeff.is_zero()) {
          eq = eq + tuple[static_cast<std::size_t>(j)] * extend_variables(coeff, total_unknowns_);
        }
      }
      addend.push_back(std::move(eq));
    }
  }
  return addend;
}

std::uint64_t LagrangeSystem::bezout_bound(const LinearCollection& l) const {
  const std::vector<Polynomial> addend = deformation_addend(l);
  std::uint64_t bound = 1;
  for (std::size_t e = 0; e < equations_.size(); ++e) {
    const int deg = std::max({equations_[e].total_degree(), addend[e].total_degree(), 1});
    bound *= static_cast<std::uint64_t>(deg);
    if (bound > 1'000'000) return 1'000'000;  // starts are capped anyway
  }
  return bound;
}

LagrangeSystem build_lagrange_system(const VarietyGerm& x, const FormCollection& c,
                                     std::uint64_t chart_seed) {
  return LagrangeSystem(x, c, chart_seed);
}

}  // namespace chernob
