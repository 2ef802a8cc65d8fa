#pragma once

#include <stdexcept>
#include <vector>

#include "chernob/polynomial.hpp"

namespace chernob {

// A finitely generated ideal; zero generators are dropped on construction.
struct Ideal {
  int variable_count = 0;
  std::vector<Polynomial> generators;

  Ideal(int variable_count, std::vector<Polynomial> gens)
      : variable_count(variable_count) {
    for (Polynomial& g : gens) {
      if (g.is_zero()) continue;
      if (g.variable_count() != variable_count) {
        throw std::invalid_argument("ideal generators disagree on variable count");
      }
      generators.push_back(std::move(g));
    }
  }
};

}  // namespace chernob
