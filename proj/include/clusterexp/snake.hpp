#ifndef CLUSTEREXP_SNAKE_HPP
#define CLUSTEREXP_SNAKE_HPP

#include <array>
#include <map>
#include <vector>

#include "clusterexp/laurent.hpp"
#include "clusterexp/geometry.hpp"

namespace clusterexp {

enum class EdgeKind { BOUNDARY_EDGE, TILE_DIAGONAL };

struct SnakeEdge {
  int id = 0;
  int v1 = 0, v2 = 0;  // abstract vertex ids
  int label = 0;       // arc label of T (duplicates allowed across edges)
  EdgeKind kind = EdgeKind::BOUNDARY_EDGE;
};

// One square tile. Vertex slots are (A, P, B, Q): P and Q are the ends of the
// tile's diagonal, A and B the apexes of the two triangles glued along it.
// edge_ids follow the quad boundary: (A,P), (P,B), (B,Q), (Q,A).
struct SnakeTile {
  int diagonal_label = 0;
  std::array<int, 4> vertex_ids{};
  std::array<int, 4> edge_ids{};
  int diagonal_edge_id = 0;
};

struct SnakeGraph {
  int num_vertices = 0;
  std::vector<int> vertex_corner;  // polygon corner each abstract vertex unfolds
  std::vector<SnakeEdge> edges;
  std::vector<SnakeTile> tiles;
  // shared_edge_ids[t] joins tiles t and t+1 (size = #tiles - 1).
  std::vector<int> shared_edge_ids;
  // straight_at[t] classifies the triple (t-1, t, t+1): true when the two
  // shared edges sit on opposite sides of tile t (one row/column), false for
  // a zigzag. Only middle tiles carry meaning.
  std::vector<bool> straight_at;

  const SnakeEdge& edge_by_id(int id) const { return edges.at(id); }
};

// The labeled graph of glued tiles for diagonals i..j: tile k is the
// quadrilateral around diagonal k, and consecutive tiles are glued along the
// third side of the triangle containing both diagonals.
SnakeGraph build_snake_graph(const Triangulation& T, int i, int j);

// All perfect matchings of the boundary-edge graph (tile diagonals removed),
// as sorted edge-id sets.
std::vector<std::vector<int>> enumerate_edge_matchings(const SnakeGraph& G);

// f^[i,j] as the sum over perfect matchings of the product of the edge
// labels' variables.
LaurentPoly ms_formula(const Triangulation& T, int i, int j);

struct PhiResult {
  SnakeGraph graph;           // full snake graph of T (interval [1, n])
  std::map<Angle, int> phi;   // angle -> boundary edge id in graph
};

// The bijection A(T) -> boundary edges of the full snake graph, built by the
// same left-to-right induction as the gluing. Weight-compatible:
// label(phi(a)) = opposite_arc(T, a).
PhiResult build_phi(const Triangulation& T);

}  // namespace clusterexp

#endif
