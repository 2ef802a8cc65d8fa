#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chernob/detrand.hpp"
#include "chernob/germs.hpp"
#include "chernob/parser.hpp"
#include "chernob/polynomial.hpp"
#include "chernob/stdbasis.hpp"

namespace testutil {

using namespace chernob;

inline std::vector<std::string> vars(std::initializer_list<const char*> names) {
  return std::vector<std::string>(names.begin(), names.end());
}

inline Polynomial P(const std::string& text, const std::vector<std::string>& names) {
  return parse_polynomial(text, names);
}

inline OneForm F(const std::string& text, const std::vector<std::string>& names) {
  return parse_one_form(text, names);
}

// ---------------------------------------------------------------------
// Independent oracles (deliberately dumber than the implementations they
// check).

// Staircase count by box enumeration: the complement of the leading-term
// ideal lives inside the box bounded by the minimal pure powers, so a
// full scan of that box with a divisibility test is an exhaustive count.
inline std::optional<std::uint64_t> brute_force_staircase(const std::vector<Monomial>& lms,
                                                          int variable_count) {
  std::vector<std::uint32_t> bound(static_cast<std::size_t>(variable_count));
  for (int v = 0; v < variable_count; ++v) {
    std::optional<std::uint32_t> best;
    for (const Monomial& lm : lms) {
      bool pure = true;
      for (int u = 0; u < variable_count && pure; ++u) {
        if (u != v && lm.exponent(u) != 0) pure = false;
      }
      if (pure && (!best || lm.exponent(v) < *best)) best = lm.exponent(v);
    }
    if (!best) return std::nullopt;  // no pure power: infinite staircase
    bound[static_cast<std::size_t>(v)] = *best;
  }
  std::uint64_t count = 0;
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(variable_count), 0u);
  for (;;) {
    Monomial candidate{std::vector<std::uint32_t>(exps)};
    bool divisible = false;
    for (const Monomial& lm : lms) {
      if (lm.divides(candidate)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++count;
    int v = 0;
    while (v < variable_count) {
      if (bound[static_cast<std::size_t>(v)] == 0 ||
          ++exps[static_cast<std::size_t>(v)] >= bound[static_cast<std::size_t>(v)]) {
        exps[static_cast<std::size_t>(v)] = 0;
        ++v;
      } else {
        break;
      }
    }
    if (v == variable_count) break;
  }
  return count;
}

inline std::vector<Monomial> leading_monomials(const StandardBasis& basis) {
  std::vector<Monomial> lms;
  for (const Polynomial& p : basis.elements) lms.push_back(p.leading_term(basis.order).monomial);
  return lms;
}

// Determinant by full permutation expansion.
inline Polynomial permutation_determinant(const std::vector<std::vector<Polynomial>>& rows) {
  const int n = static_cast<int>(rows.size());
  const int var_count = rows.front().front().variable_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  Polynomial det = Polynomial::zero(var_count);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
      }
    }
    Polynomial prod = Polynomial::constant(var_count, 1);
    for (int r = 0; r < n; ++r) {
      prod = prod * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])];
    }
    det = (inversions % 2 == 0) ? det + prod : det - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// ---------------------------------------------------------------------
// Random inputs.

inline Monomial random_monomial(DetRand& rng, int variable_count, std::uint32_t max_exp = 4) {
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(variable_count));
  for (auto& e : exps) e = static_cast<std::uint32_t>(rng.uniform_int(0, max_exp));
  return Monomial(std::move(exps));
}

inline Polynomial random_polynomial(DetRand& rng, int variable_count, int max_terms = 8) {
  std::vector<Term> terms;
  const int count = static_cast<int>(rng.uniform_int(0, max_terms));
  for (int t = 0; t < count; ++t) {
    std::int64_t numerator = rng.uniform_int(-9, 9);
    std::int64_t denominator = rng.uniform_int(1, 9);
    terms.push_back(Term{Rational(numerator, denominator), random_monomial(rng, variable_count)});
  }
  return Polynomial::from_terms(variable_count, std::move(terms));
}

// Low-degree perturbation input (exponents 0/1, couple of terms, small
// integer coefficients); keeps class-invariance ideals desk-sized.
inline Polynomial random_small_polynomial(DetRand& rng, int variable_count) {
  std::vector<Term> terms;
  const int count = static_cast<int>(rng.uniform_int(1, 2));
  for (int t = 0; t < count; ++t) {
    terms.push_back(Term{Rational(rng.uniform_int(-3, 3)),
                         random_monomial(rng, variable_count, 1)});
  }
  return Polynomial::from_terms(variable_count, std::move(terms));
}

// A random small-integer matrix with nonzero determinant.
inline std::vector<std::vector<Rational>> random_invertible_matrix(DetRand& rng, int n) {
  for (;;) {
    std::vector<std::vector<Polynomial>> probe;
    std::vector<std::vector<Rational>> matrix(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<Polynomial> row;
      for (int j = 0; j < n; ++j) {
        const Rational entry(rng.uniform_int(-3, 3));
        matrix[static_cast<std::size_t>(i)].push_back(entry);
        row.push_back(Polynomial::constant(1, entry));
      }
      probe.push_back(std::move(row));
    }
    if (!permutation_determinant(probe).is_zero()) return matrix;
  }
}

// ---------------------------------------------------------------------
// Shared fixtures.

inline VarietyGerm cone() {
  const auto v = vars({"x", "y", "z"});
  return VarietyGerm(3, {P("x^2+y^2+z^2", v)});
}

inline VarietyGerm a2_surface() {
  const auto v = vars({"x", "y", "z"});
  return VarietyGerm(3, {P("x^3+y^2+z^2", v)});
}

inline VarietyGerm a1_threefold() {
  const auto v = vars({"x", "y", "z", "w"});
  return VarietyGerm(4, {P("x^2+y^2+z^2+w^2", v)});
}

inline VarietyGerm whitney_umbrella() {
  const auto v = vars({"x", "y", "z"});
  return VarietyGerm(3, {P("x^2-y^2*z", v)});
}

inline FormCollection single_form(const std::string& text, const std::vector<std::string>& names,
                                  int n) {
  return FormCollection(Partition({n}), {{F(text, names)}});
}

}  // namespace testutil
