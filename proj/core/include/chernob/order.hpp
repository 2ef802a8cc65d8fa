#pragma once

#include <compare>

#include "chernob/monomial.hpp"

namespace chernob {

// The two monomial orders the engine understands.
//
// GlobalDegRevLex is the usual degree-reverse-lexicographic well-order
// (1 is the unique minimum). LocalNegDegRevLex reverses the degree
// comparison so that 1 is the unique maximum; it is the order that makes
// standard-basis computations see germs at the origin (lowest-degree
// terms lead).
enum class MonomialOrder {
  GlobalDegRevLex,
  LocalNegDegRevLex,
};

// Total, multiplicative comparison of u against v under the given order.
std::strong_ordering compare(MonomialOrder order, const Monomial& u, const Monomial& v);

inline bool less(MonomialOrder order, const Monomial& u, const Monomial& v) {
  return compare(order, u, v) == std::strong_ordering::less;
}
inline bool greater(MonomialOrder order, const Monomial& u, const Monomial& v) {
  return compare(order, u, v) == std::strong_ordering::greater;
}

}  // namespace chernob
