#include "clusterexp/matchings.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace clusterexp {

std::vector<AngleMatching> enumerate_angle_matchings(const Triangulation& T) {
  const int m = int(T.triangles.size());  // = #marked vertices

  // Angles grouped by triangle index; T.angles is sorted by (i, j).
  std::vector<std::vector<int>> by_triangle(m);
  for (const Angle& a : T.angles) by_triangle[a.triangle].push_back(a.vertex);

  std::vector<AngleMatching> out;
  AngleMatching current;
  uint32_t used_vertices = 0;
  auto rec = [&](auto&& self, int tri) -> void {
    if (tri == m) {
      out.push_back(current);
      return;
    }
    for (int j : by_triangle[tri]) {
      if (used_vertices & (1u << j)) continue;
      used_vertices |= 1u << j;
      current.push_back({tri, j});
      self(self, tri + 1);
      current.pop_back();
      used_vertices &= ~(1u << j);
    }
  };
  rec(rec, 0);
  return out;  // lexicographic: triangles ascending, vertices ascending
}

LaurentPoly angle_formula(const Triangulation& T, int i, int j) {
  Triangulation S = subpolygon(T, i, j);
  LaurentPoly sum(S.num_vars);
  for (const AngleMatching& A : enumerate_angle_matchings(S)) {
    LaurentPoly term = LaurentPoly::constant(S.num_vars, 1);
    for (const Angle& a : A)
      term = mul(term, LaurentPoly::variable(S.num_vars, opposite_arc(S, a)));
    sum = add(sum, term);
  }
  return sum;
}

namespace {

// Conflict machinery shared by the brute-force enumeration and the
// rho-image verification. Arrow positions (indices into Q.arrows) are used
// as bit positions.
struct DiscreteContext {
  const IceQuiver& Q;
  std::vector<uint32_t> conflict;  // symmetric closure, self-conflicts on the diagonal

  explicit DiscreteContext(const IceQuiver& Q_) : Q(Q_) {
    const int k = int(Q.arrows.size());
    require(k <= 22, ErrorCode::SIZE_LIMIT,
            "discreteness scan limited to 22 arrows");

    // Reflexive-transitive closure of the non-frozen subquiver: "path"
    // includes length 0, so a shared mutable vertex already conflicts.
    std::vector<int> mut = Q.mutable_vertices();
    std::map<int, int> idx;
    for (std::size_t x = 0; x < mut.size(); ++x) idx[mut[x]] = int(x);
    const int nm = int(mut.size());
    std::vector<std::vector<bool>> reach(nm, std::vector<bool>(nm, false));
    for (int v = 0; v < nm; ++v) reach[v][v] = true;
    for (const Arrow& a : Q.arrows)
      if (!Q.is_frozen(a.src) && !Q.is_frozen(a.tgt))
        reach[idx[a.src]][idx[a.tgt]] = true;
    for (int w = 0; w < nm; ++w)
      for (int u = 0; u < nm; ++u)
        if (reach[u][w])
          for (int v = 0; v < nm; ++v)
            if (reach[w][v]) reach[u][v] = true;

    auto path = [&](int from, int to) {
      return !Q.is_frozen(from) && !Q.is_frozen(to) &&
             reach[idx.at(from)][idx.at(to)];
    };
    conflict.assign(k, 0);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (path(Q.arrows[a].tgt, Q.arrows[b].src))
          conflict[a] |= 1u << b, conflict[b] |= 1u << a;
  }

  bool discrete(uint32_t set) const {
    for (uint32_t rest = set; rest;) {
      int a = __builtin_ctz(rest);
      rest &= rest - 1;
      if (conflict[a] & set) return false;
    }
    return true;
  }

  bool maximal_discrete(uint32_t set) const {
    if (!discrete(set)) return false;
    const int k = int(Q.arrows.size());
    for (int g = 0; g < k; ++g) {
      if (set & (1u << g)) continue;
      if (!(conflict[g] & (set | (1u << g)))) return false;  // extensible
    }
    return true;
  }

  DiscreteSubset ids(uint32_t set) const {
    DiscreteSubset out;
    for (uint32_t rest = set; rest;) {
      int a = __builtin_ctz(rest);
      rest &= rest - 1;
      out.push_back(Q.arrows[a].id);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

std::vector<DiscreteSubset> enumerate_discrete_subsets(const Triangulation& T,
                                                       const IceQuiver& Q,
                                                       DiscreteMethod method) {
  std::vector<DiscreteSubset> out;
  if (method == DiscreteMethod::BRUTE_FORCE) {
    DiscreteContext ctx(Q);
    const uint32_t limit = 1u << Q.arrows.size();
    for (uint32_t set = 0; set < limit; ++set)
      if (ctx.maximal_discrete(set)) out.push_back(ctx.ids(set));
  } else {
    for (const AngleMatching& A : enumerate_angle_matchings(T))
      out.push_back(rho_image(T, A));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiscreteSubset rho_image(const Triangulation& T, const AngleMatching& A) {
  IceQuiver Q = quiver_of_triangulation(T, QuiverMode::ICE);
  std::map<Angle, int> rho = rho_map(arrow_info(T, Q));

  DiscreteContext ctx(Q);
  uint32_t set = 0;
  for (const Angle& a : A) {
    auto it = rho.find(a);
    require(it != rho.end(), ErrorCode::BAD_INPUT, "angle not in A(T)");
    set |= 1u << it->second;  // construction ids coincide with positions
  }
  require(ctx.maximal_discrete(set), ErrorCode::VERIFICATION_FAILED,
          "rho image of a matching is not a maximal discrete subset");
  return ctx.ids(set);
}

LaurentPoly discrete_formula(const Triangulation& T, int i, int j) {
  Triangulation S = subpolygon(T, i, j);
  IceQuiver Q = quiver_of_triangulation(S, QuiverMode::ICE);
  std::map<int, ArrowInfo> info = arrow_info(S, Q);

  LaurentPoly sum(S.num_vars);
  for (const DiscreteSubset& D :
       enumerate_discrete_subsets(S, Q, DiscreteMethod::BRUTE_FORCE)) {
    LaurentPoly term = LaurentPoly::constant(S.num_vars, 1);
    for (int id : D)
      term = mul(term,
                 LaurentPoly::variable(S.num_vars, info.at(id).third_arc));
    sum = add(sum, term);
  }
  return sum;
}

}  // namespace clusterexp
