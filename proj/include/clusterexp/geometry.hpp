#ifndef CLUSTEREXP_GEOMETRY_HPP
#define CLUSTEREXP_GEOMETRY_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clusterexp/error.hpp"

namespace clusterexp {

// Angle a_{ij}: the corner of triangle Delta_i at marked vertex v_j.
struct Angle {
  int triangle = 0;
  int vertex = 0;

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.triangle == b.triangle && a.vertex == b.vertex;
  }
  friend bool operator<(const Angle& a, const Angle& b) {
    return a.triangle != b.triangle ? a.triangle < b.triangle
                                    : a.vertex < b.vertex;
  }
};

// One triangle of the triangulation. Corners are polygon corner indices in
// ascending order, which coincides with clockwise order because corners are
// numbered clockwise around the polygon. sides[s] is the arc label joining
// corners[s] and corners[(s+1)%3].
struct Triangle {
  std::array<int, 3> corners{};
  std::array<int, 3> sides{};
};

enum class PathStep { FORWARD, BACKWARD };

// Parsed form of the triangulation input document (see io module for the
// JSON front end).
struct TriangulationDocument {
  int n = 0;
  int corners = 0;
  std::vector<std::pair<int, std::pair<int, int>>> diagonals;
  std::vector<std::pair<int, std::pair<int, int>>> boundary;
};

// Triangulated polygon with the canonical labeling: triangles Delta_0..
// Delta_n chained along the diagonals, marked vertices v_0..v_n, and the
// angle set A(T). Subpolygons keep the arc labels (and corner indices) of
// their parent, so num_vars always refers to the root polygon.
struct Triangulation {
  int n = 0;             // number of diagonals of this (sub)polygon
  int polygon_size = 0;  // n + 3
  int num_vars = 0;      // 2N+3 where N is the root polygon's diagonal count

  std::vector<int> corners;  // ascending = clockwise
  std::map<int, std::pair<int, int>> diagonals;
  std::map<int, std::pair<int, int>> boundary_arcs;

  std::vector<Triangle> triangles;   // Delta_0 .. Delta_n
  std::vector<int> marked_vertices;  // v_0 .. v_n
  std::vector<Angle> angles;         // A(T), sorted

  bool is_diagonal(int label) const { return diagonals.count(label) != 0; }
  std::pair<int, int> arc_ends(int label) const;
  // Label of the arc joining two corners.
  int arc_label(int corner_a, int corner_b) const;
  // Diagonal labels in chain order (ascending).
  std::vector<int> diagonal_chain() const;
  bool has_angle(const Angle& a) const;
};

// Builds the triangulation whose quiver is the path 1-2-...-n with the given
// arrow directions; orientation[k-1] gives the direction between path
// vertices k and k+1 (FORWARD = arrow k -> k+1). Boundary arcs get the
// canonical labels n+1..2n+3.
Triangulation triangulation_from_orientation(
    int n, const std::vector<PathStep>& orientation);

// Validates a document (labels, crossings, maximality, Delta-chain) and
// returns it canonically labeled.
Triangulation triangulation_from_document(const TriangulationDocument& doc);

// The subpolygon T^[i,j] spanned by triangles Delta_{i-1}..Delta_j, with
// diagonals [i,j]. Arcs keep their labels from T; the diagonals i-1 and j+1,
// where present, become boundary arcs.
Triangulation subpolygon(const Triangulation& T, int i, int j);

// Label of the side of Delta_i opposite to the corner v_j.
int opposite_arc(const Triangulation& T, const Angle& a);

// Number of triangulations of a convex polygon, counted by the interval
// recurrence (independent of the Catalan closed form and of exchange-graph
// exploration).
long long count_triangulations(int polygon_size);

std::string orientation_to_string(const std::vector<PathStep>& orientation);
std::vector<PathStep> orientation_from_string(const std::string& s);

}  // namespace clusterexp

#endif
