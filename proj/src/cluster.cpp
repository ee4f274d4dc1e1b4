#include "clusterexp/cluster.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace clusterexp {

Seed initial_seed(const IceQuiver& Q) {
  require(!Q.vertices.empty() &&
              Q.vertices.back() == int(Q.vertices.size()),
          ErrorCode::BAD_INPUT,
          "seeds need contiguous vertex labels 1..m");
  const int m = int(Q.vertices.size());
  Seed s;
  s.quiver = Q;
  for (int v = 1; v <= m; ++v)
    s.variables.push_back(LaurentPoly::variable(m, v));
  return s;
}

Seed mutate(const Seed& s, int k) {
  require(k >= 1 && k <= int(s.variables.size()), ErrorCode::BAD_INPUT,
          "mutation vertex out of range");
  require(!s.quiver.is_frozen(k), ErrorCode::BAD_INPUT,
          "cannot mutate a frozen vertex");
  const int m = int(s.variables.size());

  LaurentPoly in = LaurentPoly::constant(m, 1);
  LaurentPoly out = LaurentPoly::constant(m, 1);
  for (const Arrow& a : s.quiver.arrows) {
    if (a.tgt == k) in = mul(in, s.variable(a.src));
    if (a.src == k) out = mul(out, s.variable(a.tgt));
  }

  Seed r;
  r.quiver = mutate_quiver(s.quiver, k);
  r.variables = s.variables;
  r.variables[k - 1] = divide_exact(add(in, out), s.variable(k));
  return r;
}

namespace {

// Two seeds are the same when their clusters coincide as sets; keying on the
// quiver as well would count relabeled copies of one seed separately.
std::string seed_key(const Seed& s) {
  std::vector<std::string> parts;
  for (int v : s.quiver.mutable_vertices())
    parts.push_back(render(s.variable(v)));
  std::sort(parts.begin(), parts.end());
  std::ostringstream key;
  for (const std::string& p : parts) key << p << ";";
  return key.str();
}

}  // namespace

ExchangeGraphResult exchange_graph(const IceQuiver& Q, long long max_seeds) {
  const int n = int(Q.mutable_vertices().size());
  if (max_seeds <= 0) max_seeds = 10 * count_triangulations(n + 3);

  ExchangeGraphResult result;
  std::set<std::string> seen_seeds;
  std::set<std::string> seen_vars;

  auto admit = [&](const Seed& s) {
    if (!seen_seeds.insert(seed_key(s)).second) return false;
    require(int64_t(seen_seeds.size()) <= max_seeds,
            ErrorCode::LIMIT_EXCEEDED, "seed limit exceeded");
    result.seeds.push_back(s);
    for (int v : s.quiver.mutable_vertices())
      if (seen_vars.insert(render(s.variable(v))).second)
        result.cluster_variables.push_back(s.variable(v));
    return true;
  };

  admit(initial_seed(Q));
  std::size_t next = 0;
  while (next < result.seeds.size()) {
    Seed s = result.seeds[next++];  // copy: the vector may reallocate
    for (int k : s.quiver.mutable_vertices()) admit(mutate(s, k));
  }
  return result;
}

ClusterVariableTable numerator_table(const IceQuiver& Q, long long max_seeds) {
  return numerator_table(Q, exchange_graph(Q, max_seeds));
}

ClusterVariableTable numerator_table(const IceQuiver& Q,
                                     const ExchangeGraphResult& g) {
  const int n = int(Q.mutable_vertices().size());
  const int m = int(Q.vertices.size());

  ClusterVariableTable table;
  table.n = n;
  table.cluster_variables = g.cluster_variables;

  for (const LaurentPoly& x : g.cluster_variables) {
    auto [f, d] = strip_monomial(x);

    // Read the interval [i,j] off the denominator vector, which must be an
    // indicator vector of a contiguous range inside [1,n].
    int lo = 0, hi = 0;
    bool bad = false;
    for (int v = 1; v <= m; ++v) {
      int e = d[v - 1];
      if (e == 0) continue;
      if (e != 1 || v > n) bad = true;
      if (lo == 0)
        lo = hi = v;
      else if (v == hi + 1)
        hi = v;
      else
        bad = true;
    }
    require(!bad, ErrorCode::MALFORMED_DENOMINATOR,
            "cluster variable denominator is not an interval: " + render(x));

    if (lo == 0) {
      // No denominator: must be one of the initial variables x_1..x_n.
      bool initial = false;
      for (int v = 1; v <= n; ++v)
        if (x == LaurentPoly::variable(m, v)) initial = true;
      require(initial, ErrorCode::MALFORMED_DENOMINATOR,
              "denominator-free variable is not initial: " + render(x));
      continue;
    }
    require(table.numerators.emplace(std::make_pair(lo, hi), f).second,
            ErrorCode::VERIFICATION_FAILED,
            "two cluster variables share one denominator interval");
  }

  require(int(table.numerators.size()) == n * (n + 1) / 2,
          ErrorCode::VERIFICATION_FAILED,
          "non-initial cluster variable count is not n(n+1)/2");
  return table;
}

}  // namespace clusterexp
