#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chernob/colength.hpp"
#include "chernob/ideal.hpp"
#include "chernob/order.hpp"
#include "chernob/polynomial.hpp"

namespace chernob {

// Resource caps for the completion and reduction loops. Exceeding either
// raises ResourceLimitError rather than returning anything uncertified.
struct EngineLimits {
  std::uint64_t pair_limit = 50'000;        // S-pair reductions in completion
  std::uint64_t reduction_step_limit = 2'000'000;  // single reduction steps
};

// A (standard/Groebner) basis. When `complete` is set, every S-polynomial
// of two elements has normal form 0 with respect to the elements, so the
// leading terms generate the full leading-term ideal (of the localization
// at the origin when the order is local).
struct StandardBasis {
  int variable_count = 0;
  std::vector<Polynomial> elements;
  MonomialOrder order = MonomialOrder::GlobalDegRevLex;
  bool complete = false;
};

// Normal form of p against `basis` under `order`.
//
// Global order: the classical division remainder; no monomial of the
// result is divisible by any basis leading monomial.
//
// Local order: Mora's ecart-driven weak normal form applied to the
// leading term and then to successive tails. The result has no monomial
// divisible by a basis leading monomial and is 0 exactly when p lies in
// the localized ideal of a complete basis; p and the result agree up to
// a unit of the local ring modulo the ideal. Full tail reduction can be
// a genuinely infinite process in local rings (the reduced form may be a
// power series), so the shared step budget caps it.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis,
                       MonomialOrder order, const EngineLimits& limits = {});

// The S-polynomial of two nonzero polynomials under `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

// Buchberger completion (global orders) / Mora standard-basis completion
// (local orders), with the product and chain criteria, normal pair
// selection (minimal lcm degree, sugar tie-break), final minimalization
// and best-effort tail interreduction. Elements are returned monic.
StandardBasis standard_basis(const Ideal& ideal, MonomialOrder order,
                             const EngineLimits& limits = {});

// Number of monomials outside the leading-term ideal of a complete basis.
Colength colength(const StandardBasis& basis);

// True iff the ideal is zero-dimensional in the local ring at the origin,
// i.e. colength under the local order is finite.
bool is_zero_dimensional_local(const Ideal& ideal, const EngineLimits& limits = {});

}  // namespace chernob
