#ifndef CLUSTEREXP_QUIVER_HPP
#define CLUSTEREXP_QUIVER_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "clusterexp/geometry.hpp"

namespace clusterexp {

// Arrows carry stable ids so that discrete subsets and cuts are sets of ids
// rather than (source, target) pairs; parallel arrows can then never be
// conflated even transiently.
struct Arrow {
  int id = 0;
  int src = 0;
  int tgt = 0;
};

struct IceQuiver {
  std::vector<int> vertices;  // sorted arc labels
  std::set<int> frozen;
  std::vector<Arrow> arrows;

  bool is_frozen(int v) const { return frozen.count(v) != 0; }
  std::vector<int> mutable_vertices() const;
  const Arrow& arrow_by_id(int id) const;
};

enum class QuiverMode { DIAGONALS_ONLY, ICE };

// Walks every triangle's sides in clockwise order and adds an arrow i -> j
// for j directly following i. DIAGONALS_ONLY keeps diagonal-diagonal arrows
// only; ICE keeps every arrow touching at least one diagonal (frozen-frozen
// arrows are never created).
IceQuiver quiver_of_triangulation(const Triangulation& T, QuiverMode mode);

// Mutation at a non-frozen vertex k: composite arrows i->j for every path
// i->k->j, reversal at k, cancellation of a maximal set of 2-cycles, and
// removal of frozen-frozen arrows. Involutive up to arrow ids.
IceQuiver mutate_quiver(const IceQuiver& Q, int k);

// Sorted (src, tgt) multiset, the arrow-id-independent fingerprint.
std::vector<std::pair<int, int>> arrow_multiset(const IceQuiver& Q);

struct ArrowInfo {
  int arrow_id = 0;
  int triangle_index = 0;
  // The side of the arrow's triangle that is neither source nor target; its
  // variable is the arrow's weight in the discrete-subset and cut formulas.
  int third_arc = 0;
  // Companions inside the same triangle: alpha_plus leaves this arrow's
  // target, alpha_minus enters this arrow's source.
  std::optional<int> plus_id;
  std::optional<int> minus_id;
  // The angle with rho(angle) = this arrow.
  Angle angle;
};

// Per-arrow metadata for an ICE quiver built from T, including the bijection
// rho : A(T) -> arrows. Fails if the quiver does not match T.
std::map<int, ArrowInfo> arrow_info(const Triangulation& T,
                                    const IceQuiver& Q);

// Inverse direction of rho: angle -> arrow id.
std::map<Angle, int> rho_map(const std::map<int, ArrowInfo>& info);

}  // namespace clusterexp

#endif
