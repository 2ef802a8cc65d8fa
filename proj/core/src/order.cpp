#include "chernob/order.hpp"

#include <cassert>

namespace chernob {

namespace {

// Reverse-lexicographic tie-break shared by both orders: on equal total
// degree, the monomial with the larger exponent in the last differing
// position is the smaller one.
std::strong_ordering revlex_tiebreak(const Monomial& u, const Monomial& v) {
  const auto& a = u.exponents();
  const auto& b = v.exponents();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) {
      return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(MonomialOrder order, const Monomial& u, const Monomial& v) {
  assert(u.variable_count() == v.variable_count());
  if (u.total_degree() != v.total_degree()) {
    const bool u_less = order == MonomialOrder::GlobalDegRevLex
                            ? u.total_degree() < v.total_degree()
                            : u.total_degree() > v.total_degree();
    return u_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return revlex_tiebreak(u, v);
}

}  // namespace chernob
