#include "chernob/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chernob {

namespace {

// Strictly-decreasing GlobalDegRevLex is the one canonical storage order.
bool canonical_before(const Monomial& a, const Monomial& b) {
  return greater(MonomialOrder::GlobalDegRevLex, a, b);
}

}  // namespace

Polynomial Polynomial::constant(int variable_count, Rational value) {
  return from_term(std::move(value), Monomial::one(variable_count));
}

Polynomial Polynomial::variable(int variable_count, int index) {
  return from_term(Rational(1), Monomial::variable(variable_count, index));
}

Polynomial Polynomial::from_term(Rational coefficient, Monomial monomial) {
  Polynomial p(monomial.variable_count());
  if (!coefficient.is_zero()) {
    p.terms_.push_back(Term{std::move(coefficient), std::move(monomial)});
  }
  return p;
}

Polynomial Polynomial::from_terms(int variable_count, std::vector<Term> terms) {
  std::map<std::vector<std::uint32_t>, Rational> acc;
  for (auto& t : terms) {
    if (t.monomial.variable_count() != variable_count) {
      throw std::invalid_argument("term monomial has wrong variable count");
    }
    acc[t.monomial.exponents()] += t.coefficient;
  }
  Polynomial p(variable_count);
  for (auto& [exps, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(c), Monomial(exps)});
  }
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return canonical_before(a.monomial, b.monomial); });
  return p;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // Canonical order is degree-first, so the front term carries the max.
  return static_cast<int>(terms_.front().monomial.total_degree());
}

const Term& Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  if (order == MonomialOrder::GlobalDegRevLex) return terms_.front();
  const Term* best = &terms_.front();
  for (const Term& t : terms_) {
    if (greater(order, t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(variable_count_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{-t.coefficient, t.monomial});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  assert(variable_count_ == other.variable_count_);
  // Merge of two canonically sorted term lists.
  Polynomial r(variable_count_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = other.terms_[j];
    if (a.monomial == b.monomial) {
      Rational c = a.coefficient + b.coefficient;
      if (!c.is_zero()) r.terms_.push_back(Term{std::move(c), a.monomial});
      ++i, ++j;
    } else if (canonical_before(a.monomial, b.monomial)) {
      r.terms_.push_back(a);
      ++i;
    } else {
      r.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  assert(variable_count_ == other.variable_count_);
  std::map<std::vector<std::uint32_t>, Rational> acc;
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      acc[(a.monomial * b.monomial).exponents()] += a.coefficient * b.coefficient;
    }
  }
  Polynomial r(variable_count_);
  for (auto& [exps, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back(Term{std::move(c), Monomial(exps)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return canonical_before(a.monomial, b.monomial); });
  return r;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  if (scalar.is_zero()) return Polynomial(variable_count_);
  Polynomial r(variable_count_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.coefficient * scalar, t.monomial});
  return r;
}

Polynomial differentiate(const Polynomial& p, int variable_index) {
  if (variable_index < 0 || variable_index >= p.variable_count()) {
    throw std::invalid_argument("differentiate: variable index out of range");
  }
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    const std::uint32_t e = t.monomial.exponent(variable_index);
    if (e == 0) continue;
    auto exps = t.monomial.exponents();
    exps[static_cast<std::size_t>(variable_index)] = e - 1;
    terms.push_back(Term{t.coefficient * Rational(e), Monomial(std::move(exps))});
  }
  return Polynomial::from_terms(p.variable_count(), std::move(terms));
}

std::complex<double> evaluate_complex(const Polynomial& p,
                                      std::span<const std::complex<double>> point) {
  if (static_cast<int>(point.size()) != p.variable_count()) {
    throw std::invalid_argument("evaluate_complex: point has wrong length");
  }
  // Highest exponent per variable, then iterated power tables so each
  // power is produced by one multiplication from the previous one.
  std::vector<std::uint32_t> max_exp(point.size(), 0u);
  for (const Term& t : p.terms()) {
    for (std::size_t i = 0; i < point.size(); ++i) {
      max_exp[i] = std::max(max_exp[i], t.monomial.exponent(static_cast<int>(i)));
    }
  }
  std::vector<std::vector<std::complex<double>>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].resize(max_exp[i] + 1);
    powers[i][0] = {1.0, 0.0};
    for (std::uint32_t e = 1; e <= max_exp[i]; ++e) powers[i][e] = powers[i][e - 1] * point[i];
  }
  std::complex<double> sum{0.0, 0.0};
  for (const Term& t : p.terms()) {
    std::complex<double> prod = to_complex(t.coefficient);
    for (std::size_t i = 0; i < point.size(); ++i) {
      const std::uint32_t e = t.monomial.exponent(static_cast<int>(i));
      if (e > 0) prod *= powers[i][e];
    }
    sum += prod;
  }
  return sum;
}

Polynomial compose_linear(const Polynomial& p,
                          const std::vector<std::vector<Rational>>& matrix) {
  const int n = p.variable_count();
  if (static_cast<int>(matrix.size()) != n) {
    throw std::invalid_argument("compose_linear: matrix has wrong row count");
  }
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[static_cast<std::size_t>(i)].size()) != n) {
      throw std::invalid_argument("compose_linear: matrix has wrong column count");
    }
    Polynomial img = Polynomial::zero(n);
    for (int j = 0; j < n; ++j) {
      img = img + Polynomial::variable(n, j) * matrix[static_cast<std::size_t>(i)]
                                                      [static_cast<std::size_t>(j)];
    }
    images.push_back(std::move(img));
  }
  Polynomial result = Polynomial::zero(n);
  for (const Term& t : p.terms()) {
    Polynomial prod = Polynomial::constant(n, t.coefficient);
    for (int i = 0; i < n; ++i) {
      for (std::uint32_t e = 0; e < t.monomial.exponent(i); ++e) {
        prod = prod * images[static_cast<std::size_t>(i)];
      }
    }
    result = result + prod;
  }
  return result;
}

Polynomial extend_variables(const Polynomial& p, int new_variable_count) {
  if (new_variable_count < p.variable_count()) {
    throw std::invalid_argument("extend_variables: cannot shrink the ring");
  }
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    auto exps = t.monomial.exponents();
    exps.resize(static_cast<std::size_t>(new_variable_count), 0u);
    terms.push_back(Term{t.coefficient, Monomial(std::move(exps))});
  }
  return Polynomial::from_terms(new_variable_count, std::move(terms));
}

namespace {

void append_monomial(std::ostringstream& out, const Monomial& m,
                     std::span<const std::string> variables, bool leading_star) {
  bool first = !leading_star;
  for (int i = 0; i < m.variable_count(); ++i) {
    const std::uint32_t e = m.exponent(i);
    if (e == 0) continue;
    if (!first) out << "*";
    first = false;
    out << variables[static_cast<std::size_t>(i)];
    if (e > 1) out << "^" << e;
  }
}

}  // namespace

std::string to_string(const Polynomial& p, std::span<const std::string> variables) {
  if (static_cast<int>(variables.size()) != p.variable_count()) {
    throw std::invalid_argument("to_string: variable name list has wrong length");
  }
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
    if (t.monomial.is_one()) {
      out << to_string(mag);
    } else if (mag == 1) {
      append_monomial(out, t.monomial, variables, false);
    } else {
      out << to_string(mag);
      append_monomial(out, t.monomial, variables, true);
    }
  }
  return out.str();
}

}  // namespace chernob
