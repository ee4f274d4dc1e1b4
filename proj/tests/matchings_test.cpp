#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "clusterexp/matchings.hpp"

#include <vector>

using namespace clusterexp;
using namespace testing;

TEST_CASE("angle matchings of the fan") {
  Triangulation T = fan3();
  std::vector<AngleMatching> ms = enumerate_angle_matchings(T);

  std::vector<AngleMatching> expected = {
      {{0, 0}, {1, 1}, {2, 2}, {3, 3}},
      {{0, 0}, {1, 2}, {2, 1}, {3, 3}},
      {{0, 0}, {1, 2}, {2, 3}, {3, 1}},
      {{0, 1}, {1, 0}, {2, 2}, {3, 3}}};
  CHECK(ms == expected);

  // Weight of a matching: product of the opposite arcs' variables.
  std::vector<LaurentPoly> weights = {
      term(9, {{3, 1}, {4, 1}, {6, 1}, {9, 1}}),
      term(9, {{1, 1}, {4, 1}, {7, 1}, {9, 1}}),
      term(9, {{1, 1}, {2, 1}, {4, 1}, {8, 1}}),
      term(9, {{2, 1}, {3, 1}, {5, 1}, {9, 1}})};
  for (std::size_t k = 0; k < ms.size(); ++k) {
    LaurentPoly w = LaurentPoly::constant(9, 1);
    for (const Angle& a : ms[k])
      w = mul(w, LaurentPoly::variable(9, opposite_arc(T, a)));
    CHECK(w == weights[k]);
  }
}

TEST_CASE("angle matchings of the square") {
  Triangulation T = triangulation_from_orientation(1, {});
  std::vector<AngleMatching> ms = enumerate_angle_matchings(T);
  std::vector<AngleMatching> expected = {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}};
  CHECK(ms == expected);
}

TEST_CASE("angle formula on the fan") {
  Triangulation T = fan3();
  CHECK(angle_formula(T, 1, 2) == fan3_f12());
  CHECK(angle_formula(T, 1, 3) == fan3_f13());
  CHECK(angle_formula(T, 1, 1) ==
        sum({term(9, {{2, 1}, {5, 1}}), term(9, {{4, 1}, {6, 1}})}));
  CHECK(angle_formula(T, 2, 2) ==
        sum({term(9, {{3, 1}, {6, 1}}), term(9, {{1, 1}, {7, 1}})}));
  CHECK(angle_formula(T, 3, 3) ==
        sum({term(9, {{2, 1}, {8, 1}}), term(9, {{7, 1}, {9, 1}})}));
  CHECK(angle_formula(T, 2, 3) ==
        sum({term(9, {{1, 1}, {7, 1}, {9, 1}}),
             term(9, {{1, 1}, {2, 1}, {8, 1}}),
             term(9, {{3, 1}, {6, 1}, {9, 1}})}));
  CHECK(thrown_code([&] { angle_formula(T, 2, 1); }) == ErrorCode::BAD_INPUT);
}

TEST_CASE("maximal discrete subsets of the prefix pentagon") {
  Triangulation S = subpolygon(fan3(), 1, 2);
  IceQuiver Q = quiver_of_triangulation(S, QuiverMode::ICE);
  REQUIRE(Q.arrows.size() == 7);

  std::vector<DiscreteSubset> expected = {{0, 3, 5}, {1, 2, 6}, {1, 4, 5}};
  CHECK(enumerate_discrete_subsets(S, Q, DiscreteMethod::BRUTE_FORCE) ==
        expected);
  CHECK(enumerate_discrete_subsets(S, Q, DiscreteMethod::VIA_RHO) == expected);

  // Third-arc weights of the three subsets multiply to the f^[1,2] terms.
  std::map<int, ArrowInfo> info = arrow_info(S, Q);
  std::vector<LaurentPoly> weights;
  for (const DiscreteSubset& D : expected) {
    LaurentPoly w = LaurentPoly::constant(9, 1);
    for (int id : D)
      w = mul(w, LaurentPoly::variable(9, info.at(id).third_arc));
    weights.push_back(w);
  }
  CHECK(weights[0] == term(9, {{2, 1}, {3, 1}, {5, 1}}));
  CHECK(weights[1] == term(9, {{1, 1}, {4, 1}, {7, 1}}));
  CHECK(weights[2] == term(9, {{3, 1}, {4, 1}, {6, 1}}));
}

TEST_CASE("rho images of the fan matchings") {
  Triangulation T = fan3();
  IceQuiver Q = quiver_of_triangulation(T, QuiverMode::ICE);

  std::vector<AngleMatching> ms = enumerate_angle_matchings(T);
  std::vector<DiscreteSubset> images;
  for (const AngleMatching& A : ms) images.push_back(rho_image(T, A));
  std::sort(images.begin(), images.end());
  std::vector<DiscreteSubset> expected = {
      {0, 3, 6, 8}, {1, 2, 5, 9}, {1, 2, 7, 8}, {1, 4, 6, 8}};
  CHECK(images == expected);

  CHECK(enumerate_discrete_subsets(T, Q, DiscreteMethod::BRUTE_FORCE) ==
        expected);
}

TEST_CASE("discrete formula on the fan") {
  Triangulation T = fan3();
  CHECK(discrete_formula(T, 1, 2) == fan3_f12());
  CHECK(discrete_formula(T, 1, 3) == fan3_f13());
  CHECK(discrete_formula(T, 1, 1) ==
        sum({term(9, {{2, 1}, {5, 1}}), term(9, {{4, 1}, {6, 1}})}));
}

TEST_CASE("both discrete-subset methods agree on all small intervals") {
  for (int n = 1; n <= 4; ++n)
    for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
      Triangulation T = triangulation_from_orientation(
          n, orientation_bits(n, bits));
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          Triangulation S = subpolygon(T, i, j);
          IceQuiver Q = quiver_of_triangulation(S, QuiverMode::ICE);
          std::vector<DiscreteSubset> brute =
              enumerate_discrete_subsets(S, Q, DiscreteMethod::BRUTE_FORCE);
          std::vector<DiscreteSubset> via_rho =
              enumerate_discrete_subsets(S, Q, DiscreteMethod::VIA_RHO);
          CHECK(brute == via_rho);
          CHECK(!brute.empty());
          // Every maximal discrete subset has one arrow per triangle.
          for (const DiscreteSubset& D : brute)
            CHECK(int(D.size()) == j - i + 2);
          // Matching sizes agree as well.
          for (const AngleMatching& A : enumerate_angle_matchings(S))
            CHECK(int(A.size()) == j - i + 2);
        }
    }
}

TEST_CASE("brute-force scan refuses oversized quivers") {
  std::vector<PathStep> orientation(7, PathStep::FORWARD);
  Triangulation T = triangulation_from_orientation(8, orientation);
  IceQuiver Q = quiver_of_triangulation(T, QuiverMode::ICE);
  REQUIRE(Q.arrows.size() == 25);
  CHECK(thrown_code([&] {
          enumerate_discrete_subsets(T, Q, DiscreteMethod::BRUTE_FORCE);
        }) == ErrorCode::SIZE_LIMIT);
}
