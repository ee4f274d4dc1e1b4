#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

using namespace clusterexp;
using namespace testing;

namespace {

using Ends = std::pair<int, int>;
using ArcMap = std::map<int, Ends>;

TriangulationDocument document_of(const Triangulation& T) {
  TriangulationDocument doc;
  doc.n = T.n;
  doc.corners = T.polygon_size;
  for (const auto& [label, ends] : T.diagonals)
    doc.diagonals.push_back({label, ends});
  for (const auto& [label, ends] : T.boundary_arcs)
    doc.boundary.push_back({label, ends});
  return doc;
}

void check_same_labeling(const Triangulation& a, const Triangulation& b) {
  CHECK(a.n == b.n);
  CHECK(a.polygon_size == b.polygon_size);
  CHECK(a.corners == b.corners);
  CHECK(a.diagonals == b.diagonals);
  CHECK(a.boundary_arcs == b.boundary_arcs);
  CHECK(a.marked_vertices == b.marked_vertices);
  CHECK(a.angles == b.angles);
  REQUIRE(a.triangles.size() == b.triangles.size());
  for (std::size_t k = 0; k < a.triangles.size(); ++k) {
    CHECK(a.triangles[k].corners == b.triangles[k].corners);
    CHECK(a.triangles[k].sides == b.triangles[k].sides);
  }
}

}  // namespace

TEST_CASE("fan triangulation of the hexagon") {
  Triangulation T = fan3();
  CHECK(T.n == 3);
  CHECK(T.polygon_size == 6);
  CHECK(T.num_vars == 9);
  CHECK(T.corners == std::vector<int>{0, 1, 2, 3, 4, 5});

  ArcMap diagonals = {{1, {1, 5}}, {2, {1, 4}}, {3, {1, 3}}};
  ArcMap boundary = {{4, {0, 1}}, {5, {0, 5}}, {6, {4, 5}},
                     {7, {3, 4}}, {8, {2, 3}}, {9, {1, 2}}};
  CHECK(T.diagonals == diagonals);
  CHECK(T.boundary_arcs == boundary);
  CHECK(T.diagonal_chain() == std::vector<int>{1, 2, 3});
  CHECK(T.is_diagonal(2));
  CHECK_FALSE(T.is_diagonal(4));

  REQUIRE(T.triangles.size() == 4);
  CHECK(T.triangles[0].corners == std::array<int, 3>{0, 1, 5});
  CHECK(T.triangles[0].sides == std::array<int, 3>{4, 1, 5});
  CHECK(T.triangles[1].corners == std::array<int, 3>{1, 4, 5});
  CHECK(T.triangles[1].sides == std::array<int, 3>{2, 6, 1});
  CHECK(T.triangles[2].corners == std::array<int, 3>{1, 3, 4});
  CHECK(T.triangles[2].sides == std::array<int, 3>{3, 7, 2});
  CHECK(T.triangles[3].corners == std::array<int, 3>{1, 2, 3});
  CHECK(T.triangles[3].sides == std::array<int, 3>{9, 8, 3});

  CHECK(T.marked_vertices == std::vector<int>{5, 1, 4, 3});

  std::vector<Angle> angles = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2},
                               {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 3}};
  CHECK(T.angles == angles);
  CHECK(int(T.angles.size()) == 3 * T.n + 1);
  CHECK(T.has_angle({2, 3}));
  CHECK_FALSE(T.has_angle({3, 0}));
  CHECK_FALSE(T.has_angle({3, 2}));
}

TEST_CASE("pentagon orientations") {
  SUBCASE("forward step") {
    Triangulation T = triangulation_from_orientation(2, {PathStep::FORWARD});
    ArcMap diagonals = {{1, {1, 4}}, {2, {1, 3}}};
    ArcMap boundary = {
        {3, {0, 1}}, {4, {0, 4}}, {5, {3, 4}}, {6, {2, 3}}, {7, {1, 2}}};
    CHECK(T.diagonals == diagonals);
    CHECK(T.boundary_arcs == boundary);
    CHECK(T.marked_vertices == std::vector<int>{4, 1, 3});
    REQUIRE(T.triangles.size() == 3);
    CHECK(T.triangles[0].corners == std::array<int, 3>{0, 1, 4});
    CHECK(T.triangles[0].sides == std::array<int, 3>{3, 1, 4});
    CHECK(T.triangles[1].corners == std::array<int, 3>{1, 3, 4});
    CHECK(T.triangles[1].sides == std::array<int, 3>{2, 5, 1});
    CHECK(T.triangles[2].corners == std::array<int, 3>{1, 2, 3});
    CHECK(T.triangles[2].sides == std::array<int, 3>{7, 6, 2});
  }
  SUBCASE("backward step") {
    Triangulation T = triangulation_from_orientation(2, {PathStep::BACKWARD});
    ArcMap diagonals = {{1, {1, 4}}, {2, {2, 4}}};
    ArcMap boundary = {
        {3, {0, 4}}, {4, {3, 4}}, {5, {2, 3}}, {6, {1, 2}}, {7, {0, 1}}};
    CHECK(T.diagonals == diagonals);
    CHECK(T.boundary_arcs == boundary);
    CHECK(T.marked_vertices == std::vector<int>{1, 4, 2});
  }
}

TEST_CASE("square triangulation") {
  Triangulation T = triangulation_from_orientation(1, {});
  CHECK(T.n == 1);
  CHECK(T.polygon_size == 4);
  CHECK(T.num_vars == 5);
  ArcMap diagonals = {{1, {1, 3}}};
  ArcMap boundary = {{2, {0, 1}}, {3, {0, 3}}, {4, {2, 3}}, {5, {1, 2}}};
  CHECK(T.diagonals == diagonals);
  CHECK(T.boundary_arcs == boundary);
  CHECK(T.marked_vertices == std::vector<int>{3, 1});
  CHECK(int(T.angles.size()) == 4);
}

TEST_CASE("octagon with mixed orientation") {
  Triangulation T = triangulation_from_orientation(
      5, {PathStep::FORWARD, PathStep::FORWARD, PathStep::BACKWARD,
          PathStep::BACKWARD});
  ArcMap diagonals = {
      {1, {1, 7}}, {2, {1, 6}}, {3, {1, 5}}, {4, {2, 5}}, {5, {3, 5}}};
  ArcMap boundary = {{6, {0, 1}},  {7, {0, 7}},  {8, {6, 7}},  {9, {5, 6}},
                     {10, {4, 5}}, {11, {3, 4}}, {12, {2, 3}}, {13, {1, 2}}};
  CHECK(T.diagonals == diagonals);
  CHECK(T.boundary_arcs == boundary);
  CHECK(T.marked_vertices == std::vector<int>{7, 1, 6, 5, 2, 3});

  std::vector<Angle> angles = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1},
                               {2, 2}, {2, 3}, {3, 1}, {3, 3}, {3, 4}, {4, 3},
                               {4, 4}, {4, 5}, {5, 3}, {5, 5}};
  CHECK(T.angles == angles);
  CHECK(int(T.angles.size()) == 3 * T.n + 1);
}

TEST_CASE("opposite arcs of the fan angles") {
  Triangulation T = fan3();
  std::map<std::pair<int, int>, int> expected = {
      {{0, 0}, 4}, {{0, 1}, 5}, {{1, 0}, 2}, {{1, 1}, 6}, {{1, 2}, 1},
      {{2, 1}, 7}, {{2, 2}, 3}, {{2, 3}, 2}, {{3, 1}, 8}, {{3, 3}, 9}};
  for (const Angle& a : T.angles)
    CHECK(opposite_arc(T, a) == expected.at({a.triangle, a.vertex}));
  CHECK(thrown_code([&] { opposite_arc(T, {3, 0}); }) == ErrorCode::BAD_INPUT);
}

TEST_CASE("arc lookup by corners") {
  Triangulation T = fan3();
  CHECK(T.arc_label(1, 5) == 1);
  CHECK(T.arc_label(5, 1) == 1);
  CHECK(T.arc_label(0, 1) == 4);
  CHECK(T.arc_label(2, 1) == 9);
  for (const auto& [label, ends] : T.diagonals) {
    CHECK(T.arc_ends(label) == ends);
    CHECK(T.arc_label(ends.first, ends.second) == label);
  }
  for (const auto& [label, ends] : T.boundary_arcs) {
    CHECK(T.arc_ends(label) == ends);
    CHECK(T.arc_label(ends.first, ends.second) == label);
  }
  CHECK(thrown_code([&] { T.arc_label(2, 4); }) == ErrorCode::BAD_INPUT);
  CHECK(thrown_code([&] { T.arc_ends(42); }) == ErrorCode::BAD_INPUT);
}

TEST_CASE("document round trip reproduces the canonical labeling") {
  for (int n = 1; n <= 4; ++n)
    for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
      Triangulation T = triangulation_from_orientation(
          n, orientation_bits(n, bits));
      Triangulation R = triangulation_from_document(document_of(T));
      check_same_labeling(T, R);
    }
}

TEST_CASE("document validation") {
  TriangulationDocument fan = document_of(fan3());

  SUBCASE("too few diagonals for the corner count") {
    TriangulationDocument doc;
    doc.n = 1;
    doc.corners = 5;
    doc.diagonals = {{1, {1, 3}}};
    doc.boundary = {
        {2, {0, 1}}, {3, {1, 2}}, {4, {2, 3}}, {5, {3, 4}}, {6, {0, 4}}};
    CHECK(thrown_code([&] { triangulation_from_document(doc); }) ==
          ErrorCode::NOT_MAXIMAL);
  }
  SUBCASE("too many diagonals for the corner count") {
    TriangulationDocument doc;
    doc.n = 2;
    doc.corners = 4;
    doc.diagonals = {{1, {1, 3}}, {2, {0, 2}}};
    doc.boundary = {{3, {0, 1}}, {4, {1, 2}}, {5, {2, 3}}, {6, {0, 3}}};
    CHECK(thrown_code([&] { triangulation_from_document(doc); }) ==
          ErrorCode::BAD_INPUT);
  }
  SUBCASE("diagonal labels must be 1..n") {
    TriangulationDocument doc = fan;
    doc.diagonals[2].first = 10;
    CHECK(thrown_code([&] { triangulation_from_document(doc); }) ==
          ErrorCode::BAD_LABELS);
  }
  SUBCASE("boundary labels must be n+1..2n+3") {
    TriangulationDocument doc = fan;
    doc.boundary[0].first = 1;
    CHECK(thrown_code([&] { triangulation_from_document(doc); }) ==
          ErrorCode::BAD_LABELS);
  }
  SUBCASE("crossing diagonals") {
    TriangulationDocument doc;
    doc.n = 2;
    doc.corners = 5;
    doc.diagonals = {{1, {1, 3}}, {2, {2, 4}}};
    doc.boundary = {
        {3, {0, 1}}, {4, {1, 2}}, {5, {2, 3}}, {6, {3, 4}}, {7, {0, 4}}};
    CHECK(thrown_code([&] { triangulation_from_document(doc); }) ==
          ErrorCode::CROSSING_DIAGONALS);
  }
  SUBCASE("duplicate diagonals") {
    TriangulationDocument doc;
    doc.n = 2;
    doc.corners = 5;
    doc.diagonals = {{1, {1, 3}}, {2, {1, 3}}};
    doc.boundary = {
        {3, {0, 1}}, {4, {1, 2}}, {5, {2, 3}}, {6, {3, 4}}, {7, {0, 4}}};
    CHECK(thrown_code([&] { triangulation_from_document(doc); }) ==
          ErrorCode::CROSSING_DIAGONALS);
  }
  SUBCASE("diagonal labels must follow the chain order") {
    TriangulationDocument doc = fan;
    // Swap the labels of diagonals 2 and 3, so labels 1 and 2 end up on the
    // non-adjacent chords {1,5} and {1,3}.
    for (auto& [label, ends] : doc.diagonals) {
      if (label == 2) ends = {1, 3};
      if (label == 3) ends = {1, 4};
    }
    CHECK(thrown_code([&] { triangulation_from_document(doc); }) ==
          ErrorCode::NON_ACYCLIC_QUIVER);
  }
  SUBCASE("boundary arcs must join adjacent corners") {
    TriangulationDocument doc = fan;
    doc.boundary[0].second = {0, 2};
    CHECK(thrown_code([&] { triangulation_from_document(doc); }) ==
          ErrorCode::BAD_INPUT);
  }
}

TEST_CASE("subpolygons of the fan") {
  Triangulation T = fan3();

  SUBCASE("middle interval gives a square") {
    Triangulation S = subpolygon(T, 2, 2);
    CHECK(S.n == 1);
    CHECK(S.polygon_size == 4);
    CHECK(S.num_vars == 9);
    CHECK(S.corners == std::vector<int>{1, 3, 4, 5});
    ArcMap diagonals = {{2, {1, 4}}};
    ArcMap boundary = {{1, {1, 5}}, {3, {1, 3}}, {6, {4, 5}}, {7, {3, 4}}};
    CHECK(S.diagonals == diagonals);
    CHECK(S.boundary_arcs == boundary);
    // Largest boundary label 7 sits on triangle {1,3,4}, so v_1 = 4.
    CHECK(S.marked_vertices == std::vector<int>{1, 4});
    REQUIRE(S.triangles.size() == 2);
    CHECK(S.triangles[0].corners == std::array<int, 3>{1, 4, 5});
    CHECK(S.triangles[1].corners == std::array<int, 3>{1, 3, 4});
  }
  SUBCASE("first interval squares") {
    Triangulation S = subpolygon(T, 1, 1);
    CHECK(S.corners == std::vector<int>{0, 1, 4, 5});
    ArcMap boundary = {{2, {1, 4}}, {4, {0, 1}}, {5, {0, 5}}, {6, {4, 5}}};
    CHECK(S.boundary_arcs == boundary);
    CHECK(S.marked_vertices == std::vector<int>{1, 5});

    Triangulation L = subpolygon(T, 3, 3);
    CHECK(L.corners == std::vector<int>{1, 2, 3, 4});
    CHECK(L.marked_vertices == std::vector<int>{3, 1});
  }
  SUBCASE("prefix interval gives a pentagon") {
    Triangulation S = subpolygon(T, 1, 2);
    CHECK(S.n == 2);
    CHECK(S.corners == std::vector<int>{0, 1, 3, 4, 5});
    ArcMap diagonals = {{1, {1, 5}}, {2, {1, 4}}};
    ArcMap boundary = {
        {3, {1, 3}}, {4, {0, 1}}, {5, {0, 5}}, {6, {4, 5}}, {7, {3, 4}}};
    CHECK(S.diagonals == diagonals);
    CHECK(S.boundary_arcs == boundary);
    CHECK(S.marked_vertices == std::vector<int>{5, 1, 4});
  }
  SUBCASE("suffix interval marks from the shared corner") {
    Triangulation S = subpolygon(T, 2, 3);
    CHECK(S.corners == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(S.marked_vertices == std::vector<int>{4, 1, 3});
  }
  SUBCASE("full interval is the whole polygon") {
    check_same_labeling(subpolygon(T, 1, 3), T);
  }
  SUBCASE("interval bounds are checked") {
    CHECK(thrown_code([&] { subpolygon(T, 2, 1); }) == ErrorCode::BAD_INPUT);
    CHECK(thrown_code([&] { subpolygon(T, 0, 2); }) == ErrorCode::BAD_INPUT);
    CHECK(thrown_code([&] { subpolygon(T, 1, 4); }) == ErrorCode::BAD_INPUT);
  }
}

TEST_CASE("triangulation counts by polygon size") {
  CHECK(count_triangulations(3) == 1);
  CHECK(count_triangulations(4) == 2);
  CHECK(count_triangulations(5) == 5);
  CHECK(count_triangulations(6) == 14);
  CHECK(count_triangulations(7) == 42);
  CHECK(count_triangulations(8) == 132);
  CHECK(count_triangulations(9) == 429);
  CHECK(thrown_code([] { count_triangulations(2); }) == ErrorCode::BAD_INPUT);
}

TEST_CASE("orientation strings") {
  CHECK(orientation_to_string({}) == "");
  CHECK(orientation_to_string({PathStep::FORWARD, PathStep::FORWARD}) == "FF");
  CHECK(orientation_to_string(orientation_from_string("FFBB")) == "FFBB");
  CHECK(orientation_from_string("B") ==
        std::vector<PathStep>{PathStep::BACKWARD});
  CHECK(thrown_code([] { orientation_from_string("FX"); }) ==
        ErrorCode::BAD_INPUT);
}

TEST_CASE("structural invariants across small orientations") {
  for (int n = 1; n <= 4; ++n)
    for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
      Triangulation T = triangulation_from_orientation(
          n, orientation_bits(n, bits));
      CHECK(int(T.angles.size()) == 3 * n + 1);
      CHECK(int(T.triangles.size()) == n + 1);
      CHECK(int(T.marked_vertices.size()) == n + 1);
      std::set<int> marked(T.marked_vertices.begin(), T.marked_vertices.end());
      CHECK(int(marked.size()) == n + 1);
      // Both ends of every diagonal are marked.
      for (const auto& [label, ends] : T.diagonals) {
        CHECK(marked.count(ends.first) == 1);
        CHECK(marked.count(ends.second) == 1);
      }
      // Angles exist exactly at marked corners of each triangle.
      int expected_angles = 0;
      for (const Triangle& t : T.triangles)
        for (int c : t.corners) expected_angles += marked.count(c);
      CHECK(int(T.angles.size()) == expected_angles);
      // Every interval yields a valid subpolygon with 3m+1 angles.
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          Triangulation S = subpolygon(T, i, j);
          int m = j - i + 1;
          CHECK(S.n == m);
          CHECK(int(S.angles.size()) == 3 * m + 1);
        }
    }
}
