#include "clusterexp/snake.hpp"

#include <algorithm>
#include <functional>

#include "clusterexp/error.hpp"

namespace clusterexp {

namespace {

int apex_corner(const Triangle& tri, const std::pair<int, int>& side_ends) {
  for (int c : tri.corners)
    if (c != side_ends.first && c != side_ends.second) return c;
  fail(ErrorCode::VERIFICATION_FAILED, "triangle lies flat on its own side");
}

int shared_corner(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  if (a.first == b.first || a.first == b.second) return a.first;
  if (a.second == b.first || a.second == b.second) return a.second;
  fail(ErrorCode::VERIFICATION_FAILED, "consecutive diagonals share no corner");
}

int other_end(const std::pair<int, int>& ends, int corner) {
  return ends.first == corner ? ends.second : ends.first;
}

// Builds the glued-tile graph for the whole diagonal chain of S. When phi is
// non-null, records which angle of S each boundary edge realizes; the three
// edges created per gluing step cover exactly the three angles the step's
// triangle pair contributes, so the map comes out bijective.
SnakeGraph build_core(const Triangulation& S, std::map<Angle, int>* phi) {
  const std::vector<int> chain = S.diagonal_chain();
  const int m = static_cast<int>(chain.size());
  require(m >= 1, ErrorCode::BAD_INPUT, "snake graph needs at least one diagonal");

  SnakeGraph G;
  auto add_vertex = [&G](int corner) {
    G.vertex_corner.push_back(corner);
    return G.num_vertices++;
  };
  auto add_edge = [&G](int v1, int v2, int label, EdgeKind kind) {
    SnakeEdge e;
    e.id = static_cast<int>(G.edges.size());
    e.v1 = v1;
    e.v2 = v2;
    e.label = label;
    e.kind = kind;
    G.edges.push_back(e);
    return e.id;
  };
  auto record = [&S, phi](int triangle, int corner, int edge_id) {
    if (phi == nullptr) return;
    const auto& mv = S.marked_vertices;
    const auto it = std::find(mv.begin(), mv.end(), corner);
    require(it != mv.end(), ErrorCode::VERIFICATION_FAILED,
            "tile corner is not a marked vertex");
    (*phi)[Angle{triangle, static_cast<int>(it - mv.begin())}] = edge_id;
  };

  // First tile: the quadrilateral around diagonal 1, P and Q its ends, A and
  // B the apexes of Delta_0 and Delta_1.
  const std::pair<int, int> d1 = S.diagonals.at(chain[0]);
  const int a0 = apex_corner(S.triangles[0], d1);
  const int a1 = apex_corner(S.triangles[1], d1);
  const int v0 = S.marked_vertices[0];
  const int v1 = S.marked_vertices[1];

  SnakeTile first;
  first.diagonal_label = chain[0];
  const int A = add_vertex(a0);
  const int P = add_vertex(v1);
  const int B = add_vertex(a1);
  const int Q = add_vertex(v0);
  first.vertex_ids = {A, P, B, Q};
  first.edge_ids[0] = add_edge(A, P, S.arc_label(a0, v1), EdgeKind::BOUNDARY_EDGE);
  first.edge_ids[1] = add_edge(P, B, S.arc_label(v1, a1), EdgeKind::BOUNDARY_EDGE);
  first.edge_ids[2] = add_edge(B, Q, S.arc_label(a1, v0), EdgeKind::BOUNDARY_EDGE);
  first.edge_ids[3] = add_edge(Q, A, S.arc_label(v0, a0), EdgeKind::BOUNDARY_EDGE);
  first.diagonal_edge_id = add_edge(P, Q, chain[0], EdgeKind::TILE_DIAGONAL);
  G.tiles.push_back(first);
  record(0, v0, first.edge_ids[0]);
  record(1, v0, first.edge_ids[1]);
  record(1, v1, first.edge_ids[2]);
  record(0, v1, first.edge_ids[3]);

  G.straight_at.assign(m, false);
  for (int q = 2; q <= m; ++q) {
    const std::pair<int, int> prev_ends = S.diagonals.at(chain[q - 2]);
    const std::pair<int, int> cur_ends = S.diagonals.at(chain[q - 1]);
    const int s = shared_corner(prev_ends, cur_ends);
    const int u = other_end(prev_ends, s);
    const int w = other_end(cur_ends, s);
    const int b = apex_corner(S.triangles[q], cur_ends);
    require(w == S.marked_vertices[q], ErrorCode::VERIFICATION_FAILED,
            "diagonal chain disagrees with the marked vertices");

    // Glue along the side (u, w) of the previous tile's far triangle. That
    // edge hangs off the previous B together with P or Q, whichever sits at
    // the corner u.
    const SnakeTile prev = G.tiles.back();
    int shared_slot = 0;
    if (G.vertex_corner[prev.vertex_ids[1]] == u)
      shared_slot = 1;
    else if (G.vertex_corner[prev.vertex_ids[3]] == u)
      shared_slot = 2;
    else
      fail(ErrorCode::VERIFICATION_FAILED, "previous tile misses the glued edge");
    require(S.arc_label(s, u) == chain[q - 2], ErrorCode::VERIFICATION_FAILED,
            "glued tile does not close up along the previous diagonal");

    SnakeTile tile;
    tile.diagonal_label = chain[q - 1];
    const int Av = shared_slot == 1 ? prev.vertex_ids[1] : prev.vertex_ids[3];
    const int Pv = prev.vertex_ids[2];
    const int Bv = add_vertex(b);
    const int Qv = add_vertex(s);
    tile.vertex_ids = {Av, Pv, Bv, Qv};
    tile.edge_ids[0] = prev.edge_ids[shared_slot];
    tile.edge_ids[1] = add_edge(Pv, Bv, S.arc_label(w, b), EdgeKind::BOUNDARY_EDGE);
    tile.edge_ids[2] = add_edge(Bv, Qv, S.arc_label(b, s), EdgeKind::BOUNDARY_EDGE);
    tile.edge_ids[3] = add_edge(Qv, Av, chain[q - 2], EdgeKind::BOUNDARY_EDGE);
    tile.diagonal_edge_id = add_edge(Pv, Qv, chain[q - 1], EdgeKind::TILE_DIAGONAL);
    G.shared_edge_ids.push_back(tile.edge_ids[0]);
    G.tiles.push_back(tile);
    record(q, s, tile.edge_ids[1]);
    record(q, w, tile.edge_ids[2]);
    record(q - 1, w, tile.edge_ids[3]);

    // The incoming edge of any later tile is its slot 0, so a middle tile
    // runs straight exactly when its outgoing edge is the opposite slot 2.
    if (q >= 3) G.straight_at[q - 2] = shared_slot == 2;
  }
  return G;
}

}  // namespace

SnakeGraph build_snake_graph(const Triangulation& T, int i, int j) {
  return build_core(subpolygon(T, i, j), nullptr);
}

std::vector<std::vector<int>> enumerate_edge_matchings(const SnakeGraph& G) {
  std::vector<std::vector<std::pair<int, int>>> incident(G.num_vertices);
  for (const SnakeEdge& e : G.edges) {
    if (e.kind != EdgeKind::BOUNDARY_EDGE) continue;
    incident[e.v1].push_back({e.id, e.v2});
    incident[e.v2].push_back({e.id, e.v1});
  }

  std::vector<std::vector<int>> out;
  std::vector<bool> covered(G.num_vertices, false);
  std::vector<int> chosen;
  std::function<void()> extend = [&]() {
    int v = 0;
    while (v < G.num_vertices && covered[v]) ++v;
    if (v == G.num_vertices) {
      std::vector<int> matching = chosen;
      std::sort(matching.begin(), matching.end());
      out.push_back(std::move(matching));
      return;
    }
    covered[v] = true;
    for (const auto& [edge_id, other] : incident[v]) {
      if (covered[other]) continue;
      covered[other] = true;
      chosen.push_back(edge_id);
      extend();
      chosen.pop_back();
      covered[other] = false;
    }
    covered[v] = false;
  };
  extend();
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly ms_formula(const Triangulation& T, int i, int j) {
  const SnakeGraph G = build_snake_graph(T, i, j);
  LaurentPoly f = LaurentPoly::zero(T.num_vars);
  for (const std::vector<int>& matching : enumerate_edge_matchings(G)) {
    ExpVec exps(T.num_vars, 0);
    for (int edge_id : matching) exps[G.edge_by_id(edge_id).label - 1] += 1;
    f.add_term(exps, 1);
  }
  return f;
}

PhiResult build_phi(const Triangulation& T) {
  PhiResult result;
  result.graph = build_core(T, &result.phi);
  require(result.phi.size() == T.angles.size(), ErrorCode::VERIFICATION_FAILED,
          "angle map does not cover every angle");
  return result;
}

}  // namespace clusterexp
