#ifndef CLUSTEREXP_CLUSTER_HPP
#define CLUSTEREXP_CLUSTER_HPP

#include <map>
#include <utility>
#include <vector>

#include "clusterexp/laurent.hpp"
#include "clusterexp/quiver.hpp"

namespace clusterexp {

// A seed: one Laurent polynomial per quiver vertex plus the quiver itself.
// variables[v-1] is the polynomial attached to vertex v; frozen entries stay
// equal to the pure variables x_v forever.
struct Seed {
  std::vector<LaurentPoly> variables;
  IceQuiver quiver;

  const LaurentPoly& variable(int v) const { return variables.at(v - 1); }
};

Seed initial_seed(const IceQuiver& Q);

// Mutation at vertex k: the quiver mutates, and x_k is replaced by
// (product over arrows into k + product over arrows out of k) / x_k.
// The division is exact whenever the seed lies on a mutation orbit of an
// initial seed (Laurent phenomenon); NOT_DIVISIBLE here means a bug.
Seed mutate(const Seed& s, int k);

struct ExchangeGraphResult {
  std::vector<Seed> seeds;  // breadth-first discovery order
  // Distinct polynomials appearing at mutable vertices, discovery order.
  std::vector<LaurentPoly> cluster_variables;
};

// Breadth-first closure of the initial seed under all mutations, with seeds
// deduplicated by the sorted renderings of their mutable variables: the
// cluster determines the seed, and a key built from vertex labels would
// count relabeled copies separately. max_seeds = 0 uses the default guard
// of ten times the triangulation count of the (n+3)-gon.
ExchangeGraphResult exchange_graph(const IceQuiver& Q, long long max_seeds = 0);

struct ClusterVariableTable {
  int n = 0;
  // f^[i,j]: the numerator of the non-initial variable with denominator
  // x_i...x_j.
  std::map<std::pair<int, int>, LaurentPoly> numerators;
  std::vector<LaurentPoly> cluster_variables;  // every distinct one
};

// Runs the exchange graph and indexes every non-initial cluster variable by
// the interval read off its denominator vector. MALFORMED_DENOMINATOR if a
// denominator is not the indicator vector of an interval in [1,n].
ClusterVariableTable numerator_table(const IceQuiver& Q,
                                     long long max_seeds = 0);

// Same, from an already computed exchange graph of Q.
ClusterVariableTable numerator_table(const IceQuiver& Q,
                                     const ExchangeGraphResult& graph);

}  // namespace clusterexp

#endif
