#include <doctest.h>

#include "chernob/errors.hpp"
#include "chernob/oneform.hpp"
#include "chernob/parser.hpp"
#include "chernob/polynomial.hpp"
#include "helpers.hpp"

using namespace chernob;
using testutil::F;
using testutil::P;
using testutil::vars;

TEST_SUITE_BEGIN("polyring");

TEST_CASE("parse_polynomial: spec examples") {
  const auto xyz = vars({"x", "y", "z"});
  const auto xy = vars({"x", "y"});

  const Polynomial cone = P("x^2+y^2+z^2", xyz);
  CHECK(cone.term_count() == 3);
  for (const Term& t : cone.terms()) CHECK(t.monomial.total_degree() == 2);

  const Polynomial zero = P("0", xy);
  CHECK(zero.is_zero());
  CHECK(zero.term_count() == 0);

  const Polynomial two = P("3*x^2 - 1/2*x*y", xy);
  REQUIRE(two.term_count() == 2);
  CHECK(two.terms()[0].coefficient == Rational(3));
  CHECK(two.terms()[1].coefficient == Rational(-1, 2));
}

TEST_CASE("parse_polynomial: grouping, rationals, implicit-product rejection") {
  const auto xy = vars({"x", "y"});
  CHECK(P("(x+y)*(x-y)", xy) == P("x^2-y^2", xy));
  CHECK(P("2/4", xy) == Polynomial::constant(2, Rational(1, 2)));
  CHECK(P("-x + x", xy).is_zero());
  CHECK_THROWS_AS(P("2x", xy), ParseError);       // product needs '*'
  CHECK_THROWS_AS(P("x^-1", xy), ParseError);     // exponent must be natural
  CHECK_THROWS_AS(P("x^y", xy), ParseError);
  CHECK_THROWS_AS(P("1/0", xy), ParseError);
  CHECK_THROWS_AS(P("q+1", xy), ParseError);      // unknown identifier
  CHECK_THROWS_AS(P("x+", xy), ParseError);
}

TEST_CASE("parse errors carry positions") {
  const auto xy = vars({"x", "y"});
  try {
    P("x + q", xy);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
  }
}

TEST_CASE("parse_one_form: spec examples") {
  const auto xyz = vars({"x", "y", "z"});
  const auto xy = vars({"x", "y"});

  const OneForm dx = F("dx", xyz);
  CHECK(dx.coefficient(0) == Polynomial::constant(3, 1));
  CHECK(dx.coefficient(1).is_zero());
  CHECK(dx.coefficient(2).is_zero());

  const OneForm d_cubic = F("3*x^2*dx + 3*y^2*dy", xy);
  CHECK(d_cubic.coefficient(0) == P("3*x^2", xy));
  CHECK(d_cubic.coefficient(1) == P("3*y^2", xy));

  const OneForm swapped = F("x*dy + y*dx", xy);
  CHECK(swapped.coefficient(0) == P("y", xy));
  CHECK(swapped.coefficient(1) == P("x", xy));
}

TEST_CASE("parse_one_form: errors") {
  const auto xy = vars({"x", "y"});
  CHECK_THROWS_AS(F("dz", xy), ParseError);             // differential of unknown variable
  CHECK_THROWS_AS(F("x + dx", xy), ParseError);         // bare factor term
  CHECK_THROWS_AS(F("dx*x", xy), ParseError);           // differential must end the term
  CHECK_THROWS_WITH_AS(F("dq", xy), doctest::Contains("differential of unknown variable"),
                       ParseError);
  // A variable list that collides with differential syntax is rejected.
  CHECK_THROWS_AS(F("dx", vars({"x", "dx"})), ValidationError);
}

TEST_CASE("differentiate: spec examples") {
  const auto xy = vars({"x", "y"});
  const auto xyz = vars({"x", "y", "z"});
  CHECK(differentiate(P("x^3+y^3", xy), 0) == P("3*x^2", xy));
  CHECK(differentiate(P("5", xy), 0).is_zero());
  CHECK(differentiate(P("x^2+y^2+z^2", xyz), 1) == P("2*y", xyz));
}

TEST_CASE("compare: spec examples") {
  const Monomial one = Monomial::one(3);
  const Monomial x = Monomial::variable(3, 0);
  CHECK(compare(MonomialOrder::GlobalDegRevLex, x, one) == std::strong_ordering::greater);
  CHECK(compare(MonomialOrder::LocalNegDegRevLex, x, one) == std::strong_ordering::less);

  // x*y vs x^2 under degrevlex with x > y: the tie-break looks at the
  // last differing exponent.
  const Monomial xy({1, 1});
  const Monomial x2({2, 0});
  CHECK(compare(MonomialOrder::GlobalDegRevLex, xy, x2) == std::strong_ordering::less);
}

TEST_CASE("order axioms on random triples") {
  DetRand rng(42);
  for (const MonomialOrder order :
       {MonomialOrder::GlobalDegRevLex, MonomialOrder::LocalNegDegRevLex}) {
    const Monomial one = Monomial::one(4);
    for (int iter = 0; iter < 200; ++iter) {
      const Monomial u = testutil::random_monomial(rng, 4);
      const Monomial v = testutil::random_monomial(rng, 4);
      const Monomial w = testutil::random_monomial(rng, 4);

      // Totality and antisymmetry.
      const auto uv = compare(order, u, v);
      const auto vu = compare(order, v, u);
      CHECK((uv == std::strong_ordering::less) == (vu == std::strong_ordering::greater));
      CHECK((uv == std::strong_ordering::equal) == (vu == std::strong_ordering::equal));
      CHECK((uv == std::strong_ordering::equal) == (u == v));

      // Transitivity.
      if (uv != std::strong_ordering::greater &&
          compare(order, v, w) != std::strong_ordering::greater) {
        CHECK(compare(order, u, w) != std::strong_ordering::greater);
      }

      // Multiplicativity.
      if (uv == std::strong_ordering::less) {
        CHECK(compare(order, u * w, v * w) == std::strong_ordering::less);
      }

      // 1 is the global minimum / local maximum.
      if (!(u == one)) {
        const auto against_one = compare(order, u, one);
        if (order == MonomialOrder::GlobalDegRevLex) {
          CHECK(against_one == std::strong_ordering::greater);
        } else {
          CHECK(against_one == std::strong_ordering::less);
        }
      }
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  DetRand rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = static_cast<int>(rng.uniform_int(1, 5));
    const Polynomial a = testutil::random_polynomial(rng, n);
    const Polynomial b = testutil::random_polynomial(rng, n);
    const Polynomial c = testutil::random_polynomial(rng, n);

    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    CHECK(a - b == a + (-b));
  }
}

TEST_CASE("leibniz rule on random pairs") {
  DetRand rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = static_cast<int>(rng.uniform_int(1, 4));
    const int v = static_cast<int>(rng.uniform_int(0, n - 1));
    const Polynomial p = testutil::random_polynomial(rng, n, 5);
    const Polynomial q = testutil::random_polynomial(rng, n, 5);
    CHECK(differentiate(p * q, v) == differentiate(p, v) * q + p * differentiate(q, v));
  }
}

TEST_CASE("parse of print is the identity on 100 random polynomials") {
  DetRand rng(13);
  const auto names = vars({"x", "y", "z", "u", "v"});
  for (int iter = 0; iter < 100; ++iter) {
    const int n = static_cast<int>(rng.uniform_int(1, 5));
    const std::vector<std::string> sub(names.begin(), names.begin() + n);
    const Polynomial p = testutil::random_polynomial(rng, n);
    CHECK(parse_polynomial(to_string(p, sub), sub) == p);
  }
}

TEST_CASE("one-form print round trip") {
  DetRand rng(17);
  const auto names = vars({"x", "y", "z"});
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Polynomial> coeffs;
    for (int v = 0; v < 3; ++v) coeffs.push_back(testutil::random_polynomial(rng, 3, 4));
    const OneForm w(std::move(coeffs));
    CHECK(parse_one_form(to_string(w, names), names) == w);
  }
}

TEST_CASE("evaluate_complex: spec examples") {
  const auto xyz = vars({"x", "y", "z"});
  const auto xy = vars({"x", "y"});
  using C = std::complex<double>;

  const std::vector<C> cone_point{C(1, 0), C(0, 1), C(0, 0)};
  CHECK(evaluate_complex(P("x^2+y^2+z^2", xyz), cone_point) == C(0, 0));

  const std::vector<C> any{C(0.3, -0.2), C(1, 2)};
  CHECK(evaluate_complex(Polynomial::zero(2), any) == C(0, 0));

  const std::vector<C> point{C(2, 0), C(3, 0)};
  CHECK(evaluate_complex(P("x*y", xy), point) == C(6, 0));
}

TEST_CASE("evaluate_complex is ring-compatible within 1e-12 on the unit polydisk") {
  DetRand rng(19);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = static_cast<int>(rng.uniform_int(1, 3));
    const Polynomial p = testutil::random_polynomial(rng, n, 5);
    const Polynomial q = testutil::random_polynomial(rng, n, 5);
    std::vector<std::complex<double>> z;
    for (int v = 0; v < n; ++v) {
      z.push_back(std::polar(rng.uniform_double(), 6.28 * rng.uniform_double()));
    }
    const std::complex<double> lhs = evaluate_complex(p * q, z);
    const std::complex<double> rhs = evaluate_complex(p, z) * evaluate_complex(q, z);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);

    const std::complex<double> sum_lhs = evaluate_complex(p + q, z);
    const std::complex<double> sum_rhs = evaluate_complex(p, z) + evaluate_complex(q, z);
    CHECK(std::abs(sum_lhs - sum_rhs) <= 1e-12 * std::max(1.0, std::abs(sum_rhs)));
  }
}

TEST_CASE("canonical form invariants") {
  DetRand rng(23);
  for (int iter = 0; iter < 50; ++iter) {
    const Polynomial p = testutil::random_polynomial(rng, 3);
    for (std::size_t t = 0; t < p.terms().size(); ++t) {
      CHECK(!p.terms()[t].coefficient.is_zero());
      if (t + 1 < p.terms().size()) {
        CHECK(greater(MonomialOrder::GlobalDegRevLex, p.terms()[t].monomial,
                      p.terms()[t + 1].monomial));
      }
    }
  }
}

TEST_CASE("differential builder") {
  const auto xy = vars({"x", "y"});
  CHECK(differential(P("x^3+y^3", xy)) == F("3*x^2*dx + 3*y^2*dy", xy));
  CHECK(differential(P("x*y", xy)) == F("y*dx + x*dy", xy));
}

TEST_SUITE_END();
