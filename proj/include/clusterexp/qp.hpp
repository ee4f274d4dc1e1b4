#ifndef CLUSTEREXP_QP_HPP
#define CLUSTEREXP_QP_HPP

#include <set>
#include <vector>

#include "clusterexp/laurent.hpp"
#include "clusterexp/geometry.hpp"

namespace clusterexp {

// ORIGINAL arrows also live in the ice quiver; INTERNAL arrows are triangle
// sides joining two boundary arcs; EXTERNAL arrows wrap around a marked
// corner from one incident boundary arc to the other.
enum class ArrowClass { ORIGINAL, INTERNAL, EXTERNAL };

struct QPArrow {
  int id = 0;
  int src = 0;  // arc labels
  int tgt = 0;
  ArrowClass cls = ArrowClass::ORIGINAL;
  int triangle_index = -1;  // -1 for external arrows
  // The side of the arrow's triangle that is neither source nor target; its
  // variable is the arrow's weight. 0 for external arrows.
  int third_arc = 0;
  // The polygon corner the arrow turns around.
  int corner = 0;
};

struct PotentialCycle {
  std::vector<int> arrow_ids;  // head-to-tail cyclic order
  int sign = 1;                // +1 triangle term, -1 big-cycle term
  int triangle_index = -1;     // set for triangle cycles
  int corner = -1;             // set for big cycles
};

struct QP {
  int n = 0;  // diagonal count of the underlying polygon
  int num_vars = 0;
  std::vector<int> vertices;  // sorted arc labels
  std::set<int> frozen;       // the boundary arcs among them
  std::vector<QPArrow> arrows;
  std::vector<PotentialCycle> cycles;  // triangle cycles, then big cycles

  const QPArrow& arrow_by_id(int id) const { return arrows.at(id); }
};

// The quiver with potential of a triangulated polygon: the three side arrows
// of every triangle plus one external arrow per marked corner, with the
// potential's n+1 triangle cycles and n+1 big cycles. ORIGINAL arrow ids
// coincide with quiver_of_triangulation(T, QuiverMode::ICE).
QP build_qp(const Triangulation& T);

// All cuts: arrow subsets meeting every potential cycle exactly once, as
// sorted id sets in lexicographic order. SIZE_LIMIT above 64 arrows.
std::vector<std::vector<int>> enumerate_cuts(const QP& qp);

// The cuts of minimum size n+1. Verifies the size bound |C| >= n+1 for every
// cut, that equality holds exactly for the external-arrow-free cuts, and
// that minimal cuts consist of ORIGINAL arrows only.
std::vector<std::vector<int>> minimal_cuts(const QP& qp);

// f^[i,j] as the sum over minimal cuts of the QP of T^[i,j] of the product
// of the third-arc variables.
LaurentPoly cut_formula(const Triangulation& T, int i, int j);

}  // namespace clusterexp

#endif
