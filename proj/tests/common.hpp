#ifndef CLUSTEREXP_TESTS_COMMON_HPP
#define CLUSTEREXP_TESTS_COMMON_HPP

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include <doctest.h>

#include "clusterexp/cluster.hpp"
#include "clusterexp/error.hpp"
#include "clusterexp/geometry.hpp"
#include "clusterexp/laurent.hpp"

namespace testing {

using namespace clusterexp;

// One monomial: term(9, {{1,1},{4,1},{7,1}}) is x1*x4*x7.
inline LaurentPoly term(int num_vars,
                        std::initializer_list<std::pair<int, int>> exps,
                        long long coeff = 1) {
  ExpVec e(num_vars, 0);
  for (const auto& [var, exp] : exps) e[var - 1] = exp;
  return LaurentPoly::monomial(num_vars, e, coeff);
}

inline LaurentPoly sum(std::initializer_list<LaurentPoly> ps) {
  LaurentPoly r = LaurentPoly::zero(ps.begin()->num_vars());
  for (const LaurentPoly& p : ps) r = add(r, p);
  return r;
}

// The hexagon fan, the running example: diagonals 1..3 all at corner 1.
inline Triangulation fan3() {
  return triangulation_from_orientation(
      3, {PathStep::FORWARD, PathStep::FORWARD});
}

// f^[1,2] and f^[1,3] of the fan, stated coefficient by coefficient.
inline LaurentPoly fan3_f12() {
  return sum({term(9, {{1, 1}, {4, 1}, {7, 1}}),
              term(9, {{3, 1}, {4, 1}, {6, 1}}),
              term(9, {{2, 1}, {3, 1}, {5, 1}})});
}

inline LaurentPoly fan3_f13() {
  return sum({term(9, {{1, 1}, {4, 1}, {7, 1}, {9, 1}}),
              term(9, {{3, 1}, {4, 1}, {6, 1}, {9, 1}}),
              term(9, {{1, 1}, {2, 1}, {4, 1}, {8, 1}}),
              term(9, {{2, 1}, {3, 1}, {5, 1}, {9, 1}})});
}

// A standalone ice quiver with two mutable vertices and four frozen ones;
// cluster_test walks its five seeds by hand.
inline IceQuiver walkthrough_quiver() {
  IceQuiver Q;
  Q.vertices = {1, 2, 3, 4, 5, 6};
  Q.frozen = {3, 4, 5, 6};
  Q.arrows = {{0, 1, 2}, {1, 3, 1}, {2, 1, 4}, {3, 2, 5}, {4, 6, 2}};
  return Q;
}

inline std::vector<PathStep> orientation_bits(int n, int bits) {
  std::vector<PathStep> orientation;
  for (int k = 0; k < n - 1; ++k)
    orientation.push_back((bits >> k) & 1 ? PathStep::BACKWARD
                                          : PathStep::FORWARD);
  return orientation;
}

inline ErrorCode thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a clusterexp::Error");
  return ErrorCode::BAD_INPUT;
}

inline std::vector<std::pair<int, int>> pair_multiset(
    std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<std::pair<int, int>> v(pairs);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testing

#endif
