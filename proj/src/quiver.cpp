#include "clusterexp/quiver.hpp"

#include <algorithm>

namespace clusterexp {

std::vector<int> IceQuiver::mutable_vertices() const {
  std::vector<int> out;
  for (int v : vertices)
    if (!is_frozen(v)) out.push_back(v);
  return out;
}

const Arrow& IceQuiver::arrow_by_id(int id) const {
  for (const Arrow& a : arrows)
    if (a.id == id) return a;
  fail(ErrorCode::BAD_INPUT, "unknown arrow id");
}

IceQuiver quiver_of_triangulation(const Triangulation& T, QuiverMode mode) {
  IceQuiver Q;
  if (mode == QuiverMode::ICE) {
    for (const auto& [label, ends] : T.diagonals) {
      (void)ends;
      Q.vertices.push_back(label);
    }
    for (const auto& [label, ends] : T.boundary_arcs) {
      (void)ends;
      Q.vertices.push_back(label);
      Q.frozen.insert(label);
    }
    std::sort(Q.vertices.begin(), Q.vertices.end());
  } else {
    for (const auto& [label, ends] : T.diagonals) {
      (void)ends;
      Q.vertices.push_back(label);
    }
  }

  int next_id = 0;
  for (const Triangle& tri : T.triangles)
    for (int s = 0; s < 3; ++s) {
      int i = tri.sides[s];
      int j = tri.sides[(s + 1) % 3];
      bool di = T.is_diagonal(i), dj = T.is_diagonal(j);
      bool keep = mode == QuiverMode::DIAGONALS_ONLY ? (di && dj) : (di || dj);
      if (keep) Q.arrows.push_back({next_id++, i, j});
    }
  return Q;
}

IceQuiver mutate_quiver(const IceQuiver& Q, int k) {
  require(std::find(Q.vertices.begin(), Q.vertices.end(), k) !=
              Q.vertices.end(),
          ErrorCode::BAD_INPUT, "mutation vertex not in quiver");
  require(!Q.is_frozen(k), ErrorCode::BAD_INPUT,
          "cannot mutate a frozen vertex");

  // Work on (src, tgt) multiplicities; ids are reassigned at the end, so the
  // result is deterministic regardless of input arrow order.
  std::map<std::pair<int, int>, int> count;
  std::vector<int> in, out;
  for (const Arrow& a : Q.arrows) {
    if (a.tgt == k) in.push_back(a.src);
    if (a.src == k) out.push_back(a.tgt);
    if (a.src == k || a.tgt == k)
      ++count[{a.tgt, a.src}];  // step (2): reverse at k
    else
      ++count[{a.src, a.tgt}];
  }
  for (int i : in)
    for (int j : out) {
      require(i != j, ErrorCode::VERIFICATION_FAILED,
              "2-cycle through the mutation vertex");
      ++count[{i, j}];  // step (1): composite arrows
    }

  IceQuiver R;
  R.vertices = Q.vertices;
  R.frozen = Q.frozen;
  std::set<std::pair<int, int>> pairs;
  for (const auto& [edge, c] : count) {
    (void)c;
    pairs.insert(std::minmax(edge.first, edge.second));
  }
  int next_id = 0;
  for (const auto& [i, j] : pairs) {
    auto get = [&](int a, int b) {
      auto it = count.find({a, b});
      return it == count.end() ? 0 : it->second;
    };
    int forward = get(i, j);
    int backward = get(j, i);
    int cancel = std::min(forward, backward);  // step (3)
    forward -= cancel;
    backward -= cancel;
    if (Q.is_frozen(i) && Q.is_frozen(j)) continue;  // step (4)
    for (int r = 0; r < forward; ++r) R.arrows.push_back({next_id++, i, j});
    for (int r = 0; r < backward; ++r) R.arrows.push_back({next_id++, j, i});
  }
  return R;
}

std::vector<std::pair<int, int>> arrow_multiset(const IceQuiver& Q) {
  std::vector<std::pair<int, int>> out;
  out.reserve(Q.arrows.size());
  for (const Arrow& a : Q.arrows) out.emplace_back(a.src, a.tgt);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, ArrowInfo> arrow_info(const Triangulation& T,
                                    const IceQuiver& Q) {
  // Replay the construction walk of quiver_of_triangulation(T, ICE) so slots
  // line up with arrow ids.
  std::map<int, ArrowInfo> info;
  int next_id = 0;
  std::vector<std::array<std::optional<int>, 3>> slot_arrow(T.triangles.size());
  for (std::size_t t = 0; t < T.triangles.size(); ++t) {
    const Triangle& tri = T.triangles[t];
    for (int s = 0; s < 3; ++s) {
      int i = tri.sides[s];
      int j = tri.sides[(s + 1) % 3];
      if (!T.is_diagonal(i) && !T.is_diagonal(j)) continue;
      int id = next_id++;
      require(id < int(Q.arrows.size()) && Q.arrows[id].id == id &&
                  Q.arrows[id].src == i && Q.arrows[id].tgt == j,
              ErrorCode::BAD_INPUT, "quiver was not built from this triangulation");
      slot_arrow[t][s] = id;

      ArrowInfo ai;
      ai.arrow_id = id;
      ai.triangle_index = int(t);
      ai.third_arc = tri.sides[(s + 2) % 3];

      // The arrow sits at the corner where its two sides meet; rho pairs it
      // with the angle of this triangle at that (necessarily marked) corner.
      int corner = tri.corners[(s + 1) % 3];
      int vertex_index = -1;
      for (std::size_t u = 0; u < T.marked_vertices.size(); ++u)
        if (T.marked_vertices[u] == corner) vertex_index = int(u);
      require(vertex_index >= 0, ErrorCode::VERIFICATION_FAILED,
              "quiver arrow at an unmarked corner");
      ai.angle = {int(t), vertex_index};
      info.emplace(id, ai);
    }
  }
  require(next_id == int(Q.arrows.size()), ErrorCode::BAD_INPUT,
          "quiver was not built from this triangulation");

  for (std::size_t t = 0; t < T.triangles.size(); ++t)
    for (int s = 0; s < 3; ++s) {
      if (!slot_arrow[t][s]) continue;
      ArrowInfo& ai = info.at(*slot_arrow[t][s]);
      ai.plus_id = slot_arrow[t][(s + 1) % 3];
      ai.minus_id = slot_arrow[t][(s + 2) % 3];
    }
  return info;
}

std::map<Angle, int> rho_map(const std::map<int, ArrowInfo>& info) {
  std::map<Angle, int> rho;
  for (const auto& [id, ai] : info)
    require(rho.emplace(ai.angle, id).second, ErrorCode::VERIFICATION_FAILED,
            "rho is not injective");
  return rho;
}

}  // namespace clusterexp
