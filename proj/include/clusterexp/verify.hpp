#ifndef CLUSTEREXP_VERIFY_HPP
#define CLUSTEREXP_VERIFY_HPP

#include <string>
#include <vector>

#include "clusterexp/geometry.hpp"

namespace clusterexp {

struct TriangulationReport {
  std::string name;  // orientation string, or a caller-supplied label
  int n = 0;
  int intervals = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct RunReport {
  std::vector<TriangulationReport> reports;

  bool ok() const;
  int total_intervals() const;
};

// Cross-checks every way this library computes f^[i,j] on one triangulation:
// the four combinatorial formulas against the seed-mutation table on every
// interval, both discrete-subset enumerations, the angle and edge bijections,
// the QP cycle and cut structure, the counting identities, and coefficient
// positivity. Disagreements are collected in the report, not thrown.
TriangulationReport verify_triangulation(const Triangulation& T,
                                         const std::string& name,
                                         long long max_seeds = 0);

// verify_triangulation over every orientation of every size up to max_n.
RunReport verify_all(int max_n, long long max_seeds = 0);

}  // namespace clusterexp

#endif
