#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "chernob/errors.hpp"
#include "chernob/germs.hpp"
#include "helpers.hpp"

using namespace chernob;
using testutil::F;
using testutil::P;
using testutil::vars;

namespace {

Colength scheme_colength(const VarietyGerm& x, const FormCollection& c) {
  return colength(
      standard_basis(special_scheme_ideal(x, c), MonomialOrder::LocalNegDegRevLex));
}

std::multiset<std::string> generator_strings(const Ideal& ideal,
                                             const std::vector<std::string>& names) {
  std::multiset<std::string> out;
  for (const Polynomial& g : ideal.generators) out.insert(to_string(g, names));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("germs");

TEST_CASE("partition and collection shape validation") {
  CHECK_THROWS_AS(Partition({2, 0}), ValidationError);
  CHECK_THROWS_AS(Partition({}), ValidationError);

  const auto xy = vars({"x", "y"});
  // Partition (2) on C^2 needs exactly one form per block.
  CHECK_THROWS_AS(FormCollection(Partition({2}), {{F("dx", xy), F("dy", xy)}}),
                  ValidationError);
  CHECK_NOTHROW(FormCollection(Partition({1, 1}), {{F("dx", xy), F("dy", xy)},
                                                   {F("dx", xy), F("dy", xy)}}));
}

TEST_CASE("variety germ validation") {
  const auto xy = vars({"x", "y"});
  CHECK_THROWS_WITH_AS(VarietyGerm(2, {P("x+1", xy)}),
                       doctest::Contains("vanish at the origin"), ValidationError);
  CHECK_THROWS_AS(VarietyGerm(2, {P("0", xy)}), ValidationError);
  const VarietyGerm smooth = VarietyGerm::affine_space(2);
  CHECK(smooth.dimension() == 2);
  CHECK(testutil::cone().dimension() == 2);
}

TEST_CASE("build_degeneracy_matrix: spec examples") {
  const auto xyz = vars({"x", "y", "z"});
  const auto xy = vars({"x", "y"});

  SUBCASE("cone with dx") {
    const DegeneracyMatrix m = build_degeneracy_matrix(
        testutil::cone(), testutil::single_form("dx", xyz, 2), 0);
    REQUIRE(m.row_count() == 2);
    CHECK(m.rows[0] == std::vector<Polynomial>{P("2*x", xyz), P("2*y", xyz), P("2*z", xyz)});
    CHECK(m.rows[1] == std::vector<Polynomial>{P("1", xyz), P("0", xyz), P("0", xyz)});
  }

  SUBCASE("smooth plane, radial form: single row") {
    const DegeneracyMatrix m = build_degeneracy_matrix(
        VarietyGerm::affine_space(2), testutil::single_form("x*dx + y*dy", xy, 2), 0);
    REQUIRE(m.row_count() == 1);
    CHECK(m.rows[0] == std::vector<Polynomial>{P("x", xy), P("y", xy)});
  }

  SUBCASE("partition (1,1), block 1 rows") {
    const FormCollection c(Partition({1, 1}), {{F("dx", xy), F("x*dy", xy)},
                                               {F("dy", xy), F("y*dx", xy)}});
    const DegeneracyMatrix m = build_degeneracy_matrix(VarietyGerm::affine_space(2), c, 0);
    REQUIRE(m.row_count() == 2);
    CHECK(m.rows[0] == std::vector<Polynomial>{P("1", xy), P("0", xy)});
    CHECK(m.rows[1] == std::vector<Polynomial>{P("0", xy), P("x", xy)});
  }
}

TEST_CASE("maximal_minors: spec examples") {
  const auto xyz = vars({"x", "y", "z"});
  const auto xy = vars({"x", "y"});

  SUBCASE("cone with dx: column pairs in lexicographic order") {
    const DegeneracyMatrix m = build_degeneracy_matrix(
        testutil::cone(), testutil::single_form("dx", xyz, 2), 0);
    const std::vector<Polynomial> minors = maximal_minors(m);
    REQUIRE(minors.size() == 3);  // C(3, 2)
    CHECK(minors[0] == P("-2*y", xyz));  // columns (1,2)
    CHECK(minors[1] == P("-2*z", xyz));  // columns (1,3)
    CHECK(minors[2].is_zero());          // columns (2,3)
  }

  SUBCASE("repeated row kills every minor") {
    DegeneracyMatrix m;
    m.rows = {{P("x", xy), P("y", xy)}, {P("x", xy), P("y", xy)}};
    for (const Polynomial& minor : maximal_minors(m)) CHECK(minor.is_zero());
  }

  SUBCASE("diagonal 2x2") {
    DegeneracyMatrix m;
    m.rows = {{P("1", xy), P("0", xy)}, {P("0", xy), P("x", xy)}};
    const std::vector<Polynomial> minors = maximal_minors(m);
    REQUIRE(minors.size() == 1);
    CHECK(minors[0] == P("x", xy));
  }
}

TEST_CASE("maximal_minors agrees with permutation determinants") {
  DetRand rng(47);
  for (int iter = 0; iter < 12; ++iter) {
    const int rows = static_cast<int>(rng.uniform_int(1, 3));
    const int cols = rows + static_cast<int>(rng.uniform_int(0, 2));
    DegeneracyMatrix m;
    for (int r = 0; r < rows; ++r) {
      std::vector<Polynomial> row;
      for (int c = 0; c < cols; ++c) row.push_back(testutil::random_polynomial(rng, 2, 3));
      m.rows.push_back(std::move(row));
    }
    const std::vector<Polynomial> minors = maximal_minors(m);

    // Count: C(cols, rows).
    std::uint64_t expected_count = 1;
    for (int k = 0; k < rows; ++k) expected_count = expected_count * (cols - k) / (k + 1);
    CHECK(minors.size() == expected_count);

    // Values: cross-check each subset against the permanent-style oracle.
    std::vector<int> select(static_cast<std::size_t>(cols), 0);
    std::fill(select.begin(), select.begin() + rows, 1);
    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    // Lexicographic subsets, mirroring the implementation's contract.
    std::function<void(int, int)> gen = [&](int start, int remaining) {
      if (remaining == 0) {
        subsets.push_back(current);
        return;
      }
      for (int c = start; c <= cols - remaining; ++c) {
        current.push_back(c);
        gen(c + 1, remaining - 1);
        current.pop_back();
      }
    };
    gen(0, rows);
    REQUIRE(subsets.size() == minors.size());
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      std::vector<std::vector<Polynomial>> sub;
      for (int r = 0; r < rows; ++r) {
        std::vector<Polynomial> row;
        for (int c : subsets[s]) row.push_back(m.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        sub.push_back(std::move(row));
      }
      CHECK(minors[s] == testutil::permutation_determinant(sub));
    }
  }
}

TEST_CASE("special_scheme_ideal: spec examples") {
  const auto xyz = vars({"x", "y", "z"});
  const auto xy = vars({"x", "y"});

  SUBCASE("cone with dx") {
    const Ideal ideal =
        special_scheme_ideal(testutil::cone(), testutil::single_form("dx", xyz, 2));
    REQUIRE(ideal.generators.size() == 3);
    CHECK(ideal.generators[0] == P("x^2+y^2+z^2", xyz));
    CHECK(ideal.generators[1] == P("-2*y", xyz));
    CHECK(ideal.generators[2] == P("-2*z", xyz));
  }

  SUBCASE("smooth plane with the cubic differential") {
    const Ideal ideal = special_scheme_ideal(
        VarietyGerm::affine_space(2), testutil::single_form("3*x^2*dx + 3*y^2*dy", xy, 2));
    REQUIRE(ideal.generators.size() == 2);
    CHECK(ideal.generators[0] == P("3*x^2", xy));
    CHECK(ideal.generators[1] == P("3*y^2", xy));
  }

  SUBCASE("two blocks on the plane") {
    const FormCollection c(Partition({1, 1}), {{F("dx", xy), F("x*dy", xy)},
                                               {F("dy", xy), F("y*dx", xy)}});
    const Ideal ideal = special_scheme_ideal(VarietyGerm::affine_space(2), c);
    REQUIRE(ideal.generators.size() == 2);
    CHECK(ideal.generators[0] == P("x", xy));
    CHECK(ideal.generators[1] == P("-y", xy));
  }

  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(
        special_scheme_ideal(testutil::cone(), testutil::single_form("dx", xyz, 1)),
        ValidationError);
  }
}

TEST_CASE("collection_from_maps: spec examples") {
  const auto xy = vars({"x", "y"});
  const auto xyz = vars({"x", "y", "z"});

  SUBCASE("cubic on the plane") {
    const FormCollection c = collection_from_maps({{P("x^3+y^3", xy)}}, Partition({2}));
    CHECK(c.block(0)[0] == F("3*x^2*dx + 3*y^2*dy", xy));
  }

  SUBCASE("coordinate map on C^3, top partition") {
    const FormCollection c = collection_from_maps({{P("x", xyz)}}, Partition({3}));
    CHECK(c.block(0)[0] == F("dx", xyz));
  }

  SUBCASE("two tuples on the plane") {
    const FormCollection c = collection_from_maps(
        {{P("x", xy), P("x*y", xy)}, {P("y", xy), P("x*y", xy)}}, Partition({1, 1}));
    CHECK(c.block(0)[0] == F("dx", xy));
    CHECK(c.block(0)[1] == F("y*dx + x*dy", xy));
    CHECK(c.block(1)[0] == F("dy", xy));
    CHECK(c.block(1)[1] == F("y*dx + x*dy", xy));
  }

  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS(collection_from_maps({{P("x", xy)}}, Partition({1, 1})),
                         doctest::Contains("tuples"), ValidationError);
    CHECK_THROWS_WITH_AS(collection_from_maps({{P("x", xy), P("y", xy), P("x", xy)},
                                               {P("y", xy), P("x*y", xy)}},
                                              Partition({1, 1})),
                         doctest::Contains("components"), ValidationError);
    CHECK_THROWS_WITH_AS(collection_from_maps({{P("x+1", xy)}}, Partition({2})),
                         doctest::Contains("vanish"), ValidationError);
  }
}

TEST_CASE("is_isolated_special_scheme: spec examples") {
  const auto xyz = vars({"x", "y", "z"});
  const auto xy = vars({"x", "y"});

  CHECK(is_isolated_special_scheme(testutil::cone(), testutil::single_form("dx", xyz, 2)));
  CHECK(!is_isolated_special_scheme(testutil::whitney_umbrella(),
                                    testutil::single_form("dx", xyz, 2)));

  // Constant full-rank blocks: the scheme is empty, which counts as
  // isolated (colength 0).
  const FormCollection constant_blocks(Partition({1, 1}),
                                       {{F("dx", xy), F("dy", xy)},
                                        {F("dx", xy), F("dy", xy)}});
  const VarietyGerm plane = VarietyGerm::affine_space(2);
  CHECK(scheme_colength(plane, constant_blocks) == Colength::finite(0));
  CHECK(is_isolated_special_scheme(plane, constant_blocks));
}

TEST_CASE("minor count matches the binomial coefficient before zero-dropping") {
  const auto xyz = vars({"x", "y", "z"});
  const DegeneracyMatrix m = build_degeneracy_matrix(
      testutil::cone(), testutil::single_form("x*dy", xyz, 2), 0);
  CHECK(maximal_minors(m).size() == 3);
}

TEST_CASE("block-span invariance of the scheme colength") {
  DetRand rng(53);
  const auto xy = vars({"x", "y"});
  const FormCollection base(Partition({1, 1}), {{F("dx", xy), F("x*dy", xy)},
                                                {F("dy", xy), F("y*dx", xy)}});
  const VarietyGerm plane = VarietyGerm::affine_space(2);
  const Colength reference = scheme_colength(plane, base);
  REQUIRE(reference == Colength::finite(1));

  for (int trial = 0; trial < 3; ++trial) {
    const auto u = testutil::random_invertible_matrix(rng, 2);
    std::vector<std::vector<OneForm>> blocks = base.blocks();
    for (auto& block : blocks) {
      const std::vector<OneForm> original = block;
      for (std::size_t r = 0; r < block.size(); ++r) {
        OneForm recombined = original[0] * u[r][0];
        for (std::size_t c = 1; c < original.size(); ++c) {
          recombined = recombined + original[c] * u[r][c];
        }
        block[r] = recombined;
      }
    }
    CHECK(scheme_colength(plane, FormCollection(base.partition(), blocks)) == reference);
  }
}

TEST_CASE("block permutation leaves the generator multiset and colength unchanged") {
  const auto xy = vars({"x", "y"});
  const VarietyGerm plane = VarietyGerm::affine_space(2);
  const FormCollection forward(Partition({1, 1}), {{F("dx", xy), F("x*dy", xy)},
                                                   {F("dy", xy), F("y*dx", xy)}});
  const FormCollection backward(Partition({1, 1}), {{F("dy", xy), F("y*dx", xy)},
                                                    {F("dx", xy), F("x*dy", xy)}});
  CHECK(generator_strings(special_scheme_ideal(plane, forward), xy) ==
        generator_strings(special_scheme_ideal(plane, backward), xy));
  CHECK(scheme_colength(plane, forward) == scheme_colength(plane, backward));
}

TEST_CASE("class invariance: perturbing by f*eta + h*df preserves the colength") {
  DetRand rng(59);
  const auto xyz = vars({"x", "y", "z"});
  const VarietyGerm x = testutil::cone();
  const Polynomial f = x.equations()[0];
  const OneForm df = differential(f);

  const std::vector<FormCollection> fixtures{
      testutil::single_form("dx", xyz, 2),
      testutil::single_form("2*y*dy - 2*z*dz", xyz, 2),
  };
  for (const FormCollection& c : fixtures) {
    const Colength reference = scheme_colength(x, c);
    REQUIRE(reference.is_finite());
    for (int trial = 0; trial < 3; ++trial) {
      // Random polynomial 1-form eta and random h vanishing at 0.
      std::vector<Polynomial> eta_coeffs;
      for (int v = 0; v < 3; ++v) eta_coeffs.push_back(testutil::random_small_polynomial(rng, 3));
      const OneForm eta(eta_coeffs);
      Polynomial h = testutil::random_small_polynomial(rng, 3);
      h = h * Polynomial::variable(3, static_cast<int>(rng.uniform_int(0, 2)));

      std::vector<std::vector<OneForm>> blocks = c.blocks();
      blocks[0][0] = blocks[0][0] + scale(f, eta) + scale(h, df);
      CHECK(scheme_colength(x, FormCollection(c.partition(), blocks)) == reference);
    }
  }
}

TEST_SUITE_END();
