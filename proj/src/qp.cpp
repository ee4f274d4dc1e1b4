#include "clusterexp/qp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "clusterexp/error.hpp"
#include "clusterexp/quiver.hpp"

namespace clusterexp {

QP build_qp(const Triangulation& T) {
  QP qp;
  qp.n = T.n;
  qp.num_vars = T.num_vars;
  for (const auto& [label, ends] : T.diagonals) qp.vertices.push_back(label);
  for (const auto& [label, ends] : T.boundary_arcs) {
    qp.vertices.push_back(label);
    qp.frozen.insert(label);
  }
  std::sort(qp.vertices.begin(), qp.vertices.end());

  // Triangle side arrows, in the same walk order as the ice quiver so that
  // ORIGINAL ids line up with it.
  std::vector<QPArrow> internals;
  for (int t = 0; t < static_cast<int>(T.triangles.size()); ++t) {
    const Triangle& tri = T.triangles[t];
    for (int s = 0; s < 3; ++s) {
      QPArrow a;
      a.src = tri.sides[s];
      a.tgt = tri.sides[(s + 1) % 3];
      a.triangle_index = t;
      a.third_arc = tri.sides[(s + 2) % 3];
      a.corner = tri.corners[(s + 1) % 3];
      if (T.is_diagonal(a.src) || T.is_diagonal(a.tgt)) {
        a.cls = ArrowClass::ORIGINAL;
        a.id = static_cast<int>(qp.arrows.size());
        qp.arrows.push_back(a);
      } else {
        a.cls = ArrowClass::INTERNAL;
        internals.push_back(a);
      }
    }
  }
  const IceQuiver ice = quiver_of_triangulation(T, QuiverMode::ICE);
  require(ice.arrows.size() == qp.arrows.size(), ErrorCode::VERIFICATION_FAILED,
          "side arrows disagree with the ice quiver");
  for (const QPArrow& a : qp.arrows) {
    const Arrow& b = ice.arrow_by_id(a.id);
    require(a.src == b.src && a.tgt == b.tgt, ErrorCode::VERIFICATION_FAILED,
            "side arrows disagree with the ice quiver");
  }
  for (QPArrow a : internals) {
    a.id = static_cast<int>(qp.arrows.size());
    qp.arrows.push_back(a);
  }

  // One external arrow around every marked corner, from the arc towards the
  // clockwise neighbor to the arc towards the counterclockwise one.
  const int size = static_cast<int>(T.corners.size());
  for (int c : T.marked_vertices) {
    const auto it = std::find(T.corners.begin(), T.corners.end(), c);
    require(it != T.corners.end(), ErrorCode::VERIFICATION_FAILED,
            "marked vertex is not a polygon corner");
    const int idx = static_cast<int>(it - T.corners.begin());
    const int prev = T.corners[(idx + size - 1) % size];
    const int next = T.corners[(idx + 1) % size];
    QPArrow a;
    a.cls = ArrowClass::EXTERNAL;
    a.src = T.arc_label(c, next);
    a.tgt = T.arc_label(prev, c);
    a.corner = c;
    a.id = static_cast<int>(qp.arrows.size());
    qp.arrows.push_back(a);
  }

  // Potential, first summand: the clockwise cycle of every triangle.
  for (int t = 0; t < static_cast<int>(T.triangles.size()); ++t) {
    PotentialCycle cyc;
    cyc.sign = 1;
    cyc.triangle_index = t;
    for (const QPArrow& a : qp.arrows)
      if (a.cls != ArrowClass::EXTERNAL && a.triangle_index == t)
        cyc.arrow_ids.push_back(a.id);
    require(cyc.arrow_ids.size() == 3, ErrorCode::VERIFICATION_FAILED,
            "triangle cycle is not a 3-cycle");
    qp.cycles.push_back(cyc);
  }

  // Second summand: one big cycle per marked corner, the external arrow
  // followed head-to-tail by the side arrows turning around that corner.
  for (int c : T.marked_vertices) {
    std::vector<const QPArrow*> at_corner;
    const QPArrow* external = nullptr;
    for (const QPArrow& a : qp.arrows) {
      if (a.corner != c) continue;
      if (a.cls == ArrowClass::EXTERNAL)
        external = &a;
      else
        at_corner.push_back(&a);
    }
    require(external != nullptr, ErrorCode::VERIFICATION_FAILED,
            "marked corner has no external arrow");

    PotentialCycle cyc;
    cyc.sign = -1;
    cyc.corner = c;
    cyc.arrow_ids.push_back(external->id);
    int cursor = external->tgt;
    while (cursor != external->src) {
      require(cyc.arrow_ids.size() <= at_corner.size(),
              ErrorCode::VERIFICATION_FAILED,
              "big cycle does not close up");
      const QPArrow* step = nullptr;
      for (const QPArrow* a : at_corner) {
        if (a->src != cursor) continue;
        require(step == nullptr, ErrorCode::VERIFICATION_FAILED,
                "big cycle branches at a corner");
        step = a;
      }
      require(step != nullptr, ErrorCode::VERIFICATION_FAILED,
              "big cycle does not close up");
      cyc.arrow_ids.push_back(step->id);
      cursor = step->tgt;
    }
    require(cyc.arrow_ids.size() == at_corner.size() + 1,
            ErrorCode::VERIFICATION_FAILED,
            "big cycle misses an arrow at its corner");
    qp.cycles.push_back(cyc);
  }
  return qp;
}

std::vector<std::vector<int>> enumerate_cuts(const QP& qp) {
  const int num_arrows = static_cast<int>(qp.arrows.size());
  require(num_arrows <= 64, ErrorCode::SIZE_LIMIT,
          "cut enumeration is limited to 64 arrows");

  std::vector<uint64_t> cycle_masks;
  for (const PotentialCycle& cyc : qp.cycles) {
    uint64_t mask = 0;
    for (int id : cyc.arrow_ids) mask |= uint64_t{1} << id;
    cycle_masks.push_back(mask);
  }

  // Pick one arrow per cycle in order, excluding the rest of the cycle, so
  // every processed cycle is fully decided and no leaf repeats.
  std::vector<uint64_t> found;
  std::function<void(size_t, uint64_t, uint64_t)> branch =
      [&](size_t idx, uint64_t in, uint64_t out) {
        if (idx == cycle_masks.size()) {
          found.push_back(in);
          return;
        }
        const uint64_t cyc = cycle_masks[idx];
        const uint64_t chosen = cyc & in;
        if (chosen != 0) {
          if ((chosen & (chosen - 1)) != 0) return;
          branch(idx + 1, in, out | (cyc & ~chosen));
          return;
        }
        uint64_t candidates = cyc & ~out;
        while (candidates != 0) {
          const uint64_t bit = candidates & (~candidates + 1);
          candidates ^= bit;
          branch(idx + 1, in | bit, out | (cyc & ~bit));
        }
      };
  branch(0, 0, 0);

  std::vector<std::vector<int>> cuts;
  for (uint64_t mask : found) {
    std::vector<int> cut;
    for (int id = 0; id < num_arrows; ++id)
      if (mask & (uint64_t{1} << id)) cut.push_back(id);
    cuts.push_back(std::move(cut));
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

std::vector<std::vector<int>> minimal_cuts(const QP& qp) {
  const size_t min_size = static_cast<size_t>(qp.n) + 1;
  std::vector<std::vector<int>> minimal;
  for (const std::vector<int>& cut : enumerate_cuts(qp)) {
    bool has_external = false;
    for (int id : cut)
      if (qp.arrow_by_id(id).cls == ArrowClass::EXTERNAL) has_external = true;
    require(cut.size() >= min_size, ErrorCode::VERIFICATION_FAILED,
            "cut below the minimum size");
    require((cut.size() == min_size) == !has_external,
            ErrorCode::VERIFICATION_FAILED,
            "cut size does not track its external arrows");
    if (cut.size() != min_size) continue;
    for (int id : cut)
      require(qp.arrow_by_id(id).cls == ArrowClass::ORIGINAL,
              ErrorCode::VERIFICATION_FAILED,
              "minimal cut uses a non-original arrow");
    minimal.push_back(cut);
  }
  return minimal;
}

LaurentPoly cut_formula(const Triangulation& T, int i, int j) {
  const Triangulation S = subpolygon(T, i, j);
  const QP qp = build_qp(S);
  LaurentPoly f = LaurentPoly::zero(T.num_vars);
  for (const std::vector<int>& cut : minimal_cuts(qp)) {
    ExpVec exps(T.num_vars, 0);
    for (int id : cut) exps[qp.arrow_by_id(id).third_arc - 1] += 1;
    f.add_term(exps, 1);
  }
  return f;
}

}  // namespace clusterexp
