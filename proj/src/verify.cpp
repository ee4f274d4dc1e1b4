#include "clusterexp/verify.hpp"

#include <set>
#include <sstream>

#include "clusterexp/cluster.hpp"
#include "clusterexp/error.hpp"
#include "clusterexp/matchings.hpp"
#include "clusterexp/qp.hpp"
#include "clusterexp/quiver.hpp"
#include "clusterexp/snake.hpp"

namespace clusterexp {

bool RunReport::ok() const {
  for (const TriangulationReport& r : reports)
    if (!r.ok()) return false;
  return true;
}

int RunReport::total_intervals() const {
  int total = 0;
  for (const TriangulationReport& r : reports) total += r.intervals;
  return total;
}

namespace {

std::string interval_tag(int i, int j) {
  std::ostringstream out;
  out << "[" << i << "," << j << "] ";
  return out.str();
}

bool all_coefficients_positive(const LaurentPoly& p) {
  for (const auto& [exps, coeff] : p.terms())
    if (coeff <= 0) return false;
  return true;
}

}  // namespace

TriangulationReport verify_triangulation(const Triangulation& T,
                                         const std::string& name,
                                         long long max_seeds) {
  TriangulationReport report;
  report.name = name;
  report.n = T.n;
  auto check = [&report](bool cond, const std::string& msg) {
    if (!cond) report.failures.push_back(msg);
  };

  const IceQuiver ice = quiver_of_triangulation(T, QuiverMode::ICE);

  // Seed-mutation oracle. Everything below compares against it, so give up
  // on the oracle-dependent checks if it cannot be built at all.
  ClusterVariableTable table;
  bool have_table = false;
  try {
    const ExchangeGraphResult graph = exchange_graph(ice, max_seeds);
    check(static_cast<long long>(graph.seeds.size()) ==
              count_triangulations(T.polygon_size),
          "seed count differs from the triangulation count");
    table = numerator_table(ice, graph);
    have_table = true;
  } catch (const Error& e) {
    check(false, std::string("mutation oracle: ") + e.what());
  }

  if (have_table) {
    check(static_cast<long long>(table.numerators.size()) ==
              static_cast<long long>(T.n) * (T.n + 1) / 2,
          "wrong number of non-initial cluster variables");
    for (const LaurentPoly& x : table.cluster_variables)
      check(all_coefficients_positive(x),
            "cluster variable with a non-positive coefficient");
  }

  try {
    const PhiResult phi = build_phi(T);
    std::set<int> images;
    int boundary_edges = 0;
    for (const SnakeEdge& e : phi.graph.edges)
      if (e.kind == EdgeKind::BOUNDARY_EDGE) ++boundary_edges;
    for (const auto& [angle, edge_id] : phi.phi) {
      images.insert(edge_id);
      const SnakeEdge& e = phi.graph.edge_by_id(edge_id);
      check(e.kind == EdgeKind::BOUNDARY_EDGE,
            "phi maps an angle to a tile diagonal");
      check(e.label == opposite_arc(T, angle),
            "phi image label differs from the opposite arc");
    }
    check(phi.phi.size() == T.angles.size(), "phi misses an angle");
    check(images.size() == phi.phi.size(), "phi is not injective");
    check(static_cast<int>(images.size()) == boundary_edges,
          "phi is not onto the boundary edges");
  } catch (const Error& e) {
    check(false, std::string("phi: ") + e.what());
  }

  for (int i = 1; i <= T.n; ++i) {
    for (int j = i; j <= T.n; ++j) {
      ++report.intervals;
      const std::string tag = interval_tag(i, j);
      try {
        const Triangulation S = subpolygon(T, i, j);
        const int m = j - i + 1;
        check(static_cast<int>(S.angles.size()) == 3 * m + 1,
              tag + "wrong angle count");

        const std::vector<AngleMatching> matchings = enumerate_angle_matchings(S);
        for (const AngleMatching& A : matchings)
          check(static_cast<int>(A.size()) == m + 1, tag + "matching of wrong size");

        const LaurentPoly f_angle = angle_formula(T, i, j);
        const LaurentPoly f_discrete = discrete_formula(T, i, j);
        const LaurentPoly f_cut = cut_formula(T, i, j);
        const LaurentPoly f_ms = ms_formula(T, i, j);
        check(f_discrete == f_angle, tag + "discrete formula disagrees");
        check(f_cut == f_angle, tag + "cut formula disagrees");
        check(f_ms == f_angle, tag + "matching formula disagrees");
        if (have_table) {
          const auto it = table.numerators.find({i, j});
          if (it == table.numerators.end())
            check(false, tag + "missing from the numerator table");
          else
            check(it->second == f_angle, tag + "mutation oracle disagrees");
        }
        check(eval_all_ones(f_angle) ==
                  Coeff(static_cast<long long>(matchings.size())),
              tag + "term total differs from the matching count");

        const IceQuiver sub_ice = quiver_of_triangulation(S, QuiverMode::ICE);
        const std::vector<DiscreteSubset> brute = enumerate_discrete_subsets(
            S, sub_ice, DiscreteMethod::BRUTE_FORCE);
        const std::vector<DiscreteSubset> via_rho = enumerate_discrete_subsets(
            S, sub_ice, DiscreteMethod::VIA_RHO);
        check(brute == via_rho,
              tag + "discrete subsets differ from the rho images");

        const QP qp = build_qp(S);
        int triangle_cycles = 0;
        int big_cycles = 0;
        for (const PotentialCycle& c : qp.cycles)
          (c.sign > 0 ? triangle_cycles : big_cycles) += 1;
        check(triangle_cycles == m + 1, tag + "wrong triangle cycle count");
        check(big_cycles == m + 1, tag + "wrong big cycle count");
        check(minimal_cuts(qp) == brute,
              tag + "minimal cuts differ from the discrete subsets");
      } catch (const Error& e) {
        check(false, tag + e.what());
      }
    }
  }
  return report;
}

RunReport verify_all(int max_n, long long max_seeds) {
  require(max_n >= 1, ErrorCode::BAD_INPUT, "max_n must be at least 1");
  RunReport run;
  for (int n = 1; n <= max_n; ++n) {
    const int steps = n - 1;
    for (int bits = 0; bits < (1 << steps); ++bits) {
      std::vector<PathStep> orientation;
      for (int k = 0; k < steps; ++k)
        orientation.push_back((bits >> k) & 1 ? PathStep::BACKWARD
                                              : PathStep::FORWARD);
      const Triangulation T = triangulation_from_orientation(n, orientation);
      run.reports.push_back(verify_triangulation(
          T, orientation_to_string(orientation), max_seeds));
    }
  }
  return run;
}

}  // namespace clusterexp
