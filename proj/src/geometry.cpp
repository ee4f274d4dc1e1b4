#include "clusterexp/geometry.hpp"

#include <algorithm>
#include <set>

namespace clusterexp {

namespace {

std::pair<int, int> ordered(int a, int b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Map unordered corner pair -> arc label, over diagonals and boundary arcs.
std::map<std::pair<int, int>, int> arc_map(const Triangulation& T) {
  std::map<std::pair<int, int>, int> m;
  for (const auto& [label, ends] : T.diagonals)
    m[ordered(ends.first, ends.second)] = label;
  for (const auto& [label, ends] : T.boundary_arcs)
    m[ordered(ends.first, ends.second)] = label;
  return m;
}

// True when x lies strictly inside the clockwise interval from a to b on a
// polygon with `size` corners.
bool strictly_between(int x, int a, int b, int size) {
  int span = (b - a + size) % size;
  int off = (x - a + size) % size;
  return off > 0 && off < span;
}

bool chords_cross(std::pair<int, int> p, std::pair<int, int> q, int size) {
  if (p.first == q.first || p.first == q.second || p.second == q.first ||
      p.second == q.second)
    return false;
  return strictly_between(q.first, p.first, p.second, size) !=
         strictly_between(q.second, p.first, p.second, size);
}

int other_end(std::pair<int, int> ends, int c) {
  return ends.first == c ? ends.second : ends.first;
}

bool is_end(std::pair<int, int> ends, int c) {
  return ends.first == c || ends.second == c;
}

// Fills triangles, marked vertices, and angles from the arc data. Assumes
// corners/diagonals/boundary_arcs are already set and structurally valid
// (non-crossing, correct counts); the Delta-chain conditions are still
// checked here because they depend on how the diagonals are *labeled*.
void canonicalize(Triangulation& T) {
  auto arcs = arc_map(T);

  // Every 3-clique of the arc graph bounds a face: an arc entering the
  // enclosed region would have to cross one of the clique's chords.
  std::vector<Triangle> found;
  const auto& cs = T.corners;
  for (std::size_t x = 0; x < cs.size(); ++x)
    for (std::size_t y = x + 1; y < cs.size(); ++y) {
      if (!arcs.count(ordered(cs[x], cs[y]))) continue;
      for (std::size_t z = y + 1; z < cs.size(); ++z) {
        auto ab = arcs.find(ordered(cs[x], cs[y]));
        auto bc = arcs.find(ordered(cs[y], cs[z]));
        auto ca = arcs.find(ordered(cs[z], cs[x]));
        if (bc == arcs.end() || ca == arcs.end()) continue;
        Triangle t;
        t.corners = {cs[x], cs[y], cs[z]};
        t.sides = {ab->second, bc->second, ca->second};
        found.push_back(t);
      }
    }
  require(int(found.size()) == T.n + 1, ErrorCode::VERIFICATION_FAILED,
          "triangulation does not decompose into n+1 triangles");

  auto contains_label = [](const Triangle& t, int label) {
    return t.sides[0] == label || t.sides[1] == label || t.sides[2] == label;
  };

  std::vector<int> chain = T.diagonal_chain();
  const int m = int(chain.size());
  std::vector<int> delta(m + 1, -1);  // triangle index per chain slot
  std::vector<bool> used(found.size(), false);

  if (m == 1) {
    // Both triangles contain the single diagonal; break the tie by making
    // Delta_1 the triangle carrying the largest boundary label.
    int best_label = -1, best_tri = -1;
    for (std::size_t t = 0; t < found.size(); ++t)
      for (int s : found[t].sides)
        if (!T.is_diagonal(s) && s > best_label) {
          best_label = s;
          best_tri = int(t);
        }
    delta[1] = best_tri;
    delta[0] = best_tri == 0 ? 1 : 0;
    used[delta[0]] = used[delta[1]] = true;
  } else {
    for (int k = 0; k + 1 < m; ++k) {
      int hit = -1;
      for (std::size_t t = 0; t < found.size(); ++t)
        if (contains_label(found[t], chain[k]) &&
            contains_label(found[t], chain[k + 1])) {
          require(hit < 0 && !used[t], ErrorCode::NON_ACYCLIC_QUIVER,
                  "diagonal labels do not form a triangle chain");
          hit = int(t);
        }
      require(hit >= 0, ErrorCode::NON_ACYCLIC_QUIVER,
              "consecutive diagonals share no triangle");
      delta[k + 1] = hit;
      used[hit] = true;
    }
    for (int endpos : {0, m}) {
      int d = chain[endpos == 0 ? 0 : m - 1];
      int hit = -1;
      for (std::size_t t = 0; t < found.size(); ++t)
        if (!used[t] && contains_label(found[t], d)) {
          require(hit < 0, ErrorCode::NON_ACYCLIC_QUIVER,
                  "diagonal labels do not form a triangle chain");
          hit = int(t);
        }
      require(hit >= 0, ErrorCode::NON_ACYCLIC_QUIVER,
              "end diagonal has no free triangle");
      delta[endpos] = hit;
      used[hit] = true;
    }
  }
  for (bool u : used)
    require(u, ErrorCode::NON_ACYCLIC_QUIVER,
            "triangle chain does not cover the polygon");

  T.triangles.clear();
  for (int k = 0; k <= m; ++k) T.triangles.push_back(found[delta[k]]);

  // Marked vertices. v_0 is the end of the first diagonal not on the second;
  // each later v_k is the end of its diagonal not on the previous one. For a
  // single diagonal, v_1 is the end incident to the largest boundary label
  // (same tie-break as above, so v_1 lies in Delta_1).
  T.marked_vertices.assign(m + 1, -1);
  if (m == 1) {
    auto ends = T.diagonals.at(chain[0]);
    int best_label = -1, best_corner = -1;
    const Triangle& d1 = T.triangles[1];
    for (int s = 0; s < 3; ++s) {
      if (T.is_diagonal(d1.sides[s]) || d1.sides[s] < best_label) continue;
      best_label = d1.sides[s];
      for (int c : {d1.corners[s], d1.corners[(s + 1) % 3]})
        if (is_end(ends, c)) best_corner = c;
    }
    require(best_corner >= 0, ErrorCode::VERIFICATION_FAILED,
            "tie-break arc not incident to the diagonal");
    T.marked_vertices[1] = best_corner;
    T.marked_vertices[0] = other_end(ends, best_corner);
  } else {
    auto d1 = T.diagonals.at(chain[0]);
    auto d2 = T.diagonals.at(chain[1]);
    int v0 = is_end(d2, d1.first) ? d1.second : d1.first;
    T.marked_vertices[0] = v0;
    T.marked_vertices[1] = other_end(d1, v0);
    for (int k = 2; k <= m; ++k) {
      auto dk = T.diagonals.at(chain[k - 1]);
      auto dp = T.diagonals.at(chain[k - 2]);
      require(is_end(dp, dk.first) != is_end(dp, dk.second),
              ErrorCode::NON_ACYCLIC_QUIVER,
              "consecutive diagonals must share exactly one corner");
      T.marked_vertices[k] = is_end(dp, dk.first) ? dk.second : dk.first;
    }
  }
  {
    std::set<int> distinct(T.marked_vertices.begin(), T.marked_vertices.end());
    require(distinct.size() == T.marked_vertices.size(),
            ErrorCode::VERIFICATION_FAILED, "marked vertices not distinct");
  }

  T.angles.clear();
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      const auto& c = T.triangles[i].corners;
      int v = T.marked_vertices[j];
      if (c[0] == v || c[1] == v || c[2] == v) T.angles.push_back({i, j});
    }
}

}  // namespace

std::pair<int, int> Triangulation::arc_ends(int label) const {
  auto it = diagonals.find(label);
  if (it != diagonals.end()) return it->second;
  auto bt = boundary_arcs.find(label);
  require(bt != boundary_arcs.end(), ErrorCode::BAD_INPUT,
          "unknown arc label");
  return bt->second;
}

int Triangulation::arc_label(int corner_a, int corner_b) const {
  auto key = ordered(corner_a, corner_b);
  for (const auto& [label, ends] : diagonals)
    if (ends == key) return label;
  for (const auto& [label, ends] : boundary_arcs)
    if (ends == key) return label;
  fail(ErrorCode::BAD_INPUT, "no arc between these corners");
}

std::vector<int> Triangulation::diagonal_chain() const {
  std::vector<int> chain;
  for (const auto& [label, ends] : diagonals) {
    (void)ends;
    chain.push_back(label);
  }
  return chain;  // std::map iterates in ascending label order
}

bool Triangulation::has_angle(const Angle& a) const {
  return std::binary_search(angles.begin(), angles.end(), a);
}

Triangulation triangulation_from_orientation(
    int n, const std::vector<PathStep>& orientation) {
  require(n >= 1, ErrorCode::BAD_INPUT, "n must be positive");
  require(int(orientation.size()) == n - 1, ErrorCode::BAD_INPUT,
          "orientation must have n-1 entries");

  Triangulation T;
  T.n = n;
  T.polygon_size = n + 3;
  T.num_vars = 2 * n + 3;
  for (int c = 0; c < n + 3; ++c) T.corners.push_back(c);

  // The undone part of the polygon is always the clockwise block [a, b] with
  // diagonal k = {a, b}. FORWARD cuts the triangle at b (so diagonal k+1
  // follows k clockwise in Delta_k), BACKWARD cuts at a.
  int a = 1, b = n + 2;
  T.diagonals[1] = {a, b};
  for (int k = 1; k < n; ++k) {
    if (orientation[k - 1] == PathStep::FORWARD)
      --b;
    else
      ++a;
    T.diagonals[k + 1] = {a, b};
  }

  // Boundary labels run n+1..2n+3 counterclockwise from the arc of Delta_0
  // not incident to v_0. Delta_0 is the triangle {n+2, 0, 1} outside the
  // initial block; v_0 = n+2 unless the first step is BACKWARD (then v_0=1).
  bool v0_high = n == 1 || orientation[0] == PathStep::FORWARD;
  int start = v0_high ? 0 : n + 2;  // arc (start, start+1)
  int label = n + 1;
  for (int step = 0; step < n + 3; ++step) {
    int c = (start - step + (n + 3) * 2) % (n + 3);
    T.boundary_arcs[label++] = ordered(c, (c + 1) % (n + 3));
  }

  canonicalize(T);
  return T;
}

Triangulation triangulation_from_document(const TriangulationDocument& doc) {
  require(doc.n >= 1, ErrorCode::BAD_INPUT, "n must be positive");
  const int n = doc.n;
  const int size = doc.corners;
  require(size >= 4, ErrorCode::BAD_INPUT, "polygon needs at least 4 corners");
  require(size <= n + 3, ErrorCode::NOT_MAXIMAL,
          "fewer than corners-3 diagonals");
  require(size >= n + 3, ErrorCode::BAD_INPUT,
          "more diagonals than a triangulation admits");

  Triangulation T;
  T.n = n;
  T.polygon_size = size;
  T.num_vars = 2 * n + 3;
  for (int c = 0; c < size; ++c) T.corners.push_back(c);

  std::set<int> expected;
  for (int l = 1; l <= n; ++l) expected.insert(l);
  for (const auto& [label, ends] : doc.diagonals) {
    require(expected.erase(label) == 1, ErrorCode::BAD_LABELS,
            "diagonal labels must be exactly 1..n");
    require(ends.first >= 0 && ends.first < size && ends.second >= 0 &&
                ends.second < size,
            ErrorCode::BAD_INPUT, "corner index out of range");
    int gap = (ends.second - ends.first + size) % size;
    require(gap >= 2 && gap <= size - 2, ErrorCode::BAD_INPUT,
            "diagonal must join non-adjacent corners");
    T.diagonals[label] = ordered(ends.first, ends.second);
  }
  require(expected.empty(), ErrorCode::BAD_LABELS,
          "diagonal labels must be exactly 1..n");

  for (int l = n + 1; l <= 2 * n + 3; ++l) expected.insert(l);
  std::set<std::pair<int, int>> seen_sides;
  for (const auto& [label, ends] : doc.boundary) {
    require(expected.erase(label) == 1, ErrorCode::BAD_LABELS,
            "boundary labels must be exactly n+1..2n+3");
    require(ends.first >= 0 && ends.first < size && ends.second >= 0 &&
                ends.second < size,
            ErrorCode::BAD_INPUT, "corner index out of range");
    int gap = (ends.second - ends.first + size) % size;
    require(gap == 1 || gap == size - 1, ErrorCode::BAD_INPUT,
            "boundary arc must join adjacent corners");
    auto key = ordered(ends.first, ends.second);
    require(seen_sides.insert(key).second, ErrorCode::BAD_INPUT,
            "duplicate boundary side");
    T.boundary_arcs[label] = key;
  }
  require(expected.empty(), ErrorCode::BAD_LABELS,
          "boundary labels must be exactly n+1..2n+3");
  require(int(seen_sides.size()) == size, ErrorCode::BAD_INPUT,
          "boundary must cover every polygon side");

  std::vector<std::pair<int, int>> chords;
  for (const auto& [label, ends] : T.diagonals) {
    (void)label;
    chords.push_back(ends);
  }
  for (std::size_t x = 0; x < chords.size(); ++x)
    for (std::size_t y = x + 1; y < chords.size(); ++y) {
      require(chords[x] != chords[y], ErrorCode::CROSSING_DIAGONALS,
              "duplicate diagonal chord");
      require(!chords_cross(chords[x], chords[y], size),
              ErrorCode::CROSSING_DIAGONALS, "diagonals cross");
    }

  canonicalize(T);
  return T;
}

Triangulation subpolygon(const Triangulation& T, int i, int j) {
  require(T.is_diagonal(i) && T.is_diagonal(j) && i <= j, ErrorCode::BAD_INPUT,
          "interval out of range");
  std::vector<int> chain = T.diagonal_chain();
  int pos = int(std::find(chain.begin(), chain.end(), i) - chain.begin());
  const int m = j - i + 1;
  for (int k = 0; k < m; ++k)
    require(pos + k < int(chain.size()) && chain[pos + k] == i + k,
            ErrorCode::BAD_INPUT, "interval not contiguous in the chain");

  Triangulation S;
  S.n = m;
  S.polygon_size = m + 3;
  S.num_vars = T.num_vars;

  std::set<int> corner_set;
  std::set<int> diag_labels;
  for (int k = 0; k < m; ++k) diag_labels.insert(i + k);
  for (int t = pos; t <= pos + m; ++t) {
    const Triangle& tri = T.triangles[t];
    for (int c : tri.corners) corner_set.insert(c);
    for (int s : tri.sides) {
      if (diag_labels.count(s))
        S.diagonals[s] = T.arc_ends(s);
      else
        S.boundary_arcs[s] = T.arc_ends(s);
    }
  }
  S.corners.assign(corner_set.begin(), corner_set.end());
  require(int(S.corners.size()) == m + 3, ErrorCode::VERIFICATION_FAILED,
          "subpolygon corner count mismatch");

  canonicalize(S);
  return S;
}

int opposite_arc(const Triangulation& T, const Angle& a) {
  require(T.has_angle(a), ErrorCode::BAD_INPUT, "angle not in A(T)");
  const Triangle& tri = T.triangles[a.triangle];
  int v = T.marked_vertices[a.vertex];
  for (int p = 0; p < 3; ++p)
    if (tri.corners[p] == v) return tri.sides[(p + 1) % 3];
  fail(ErrorCode::VERIFICATION_FAILED, "angle vertex not on its triangle");
}

long long count_triangulations(int polygon_size) {
  require(polygon_size >= 3, ErrorCode::BAD_INPUT, "polygon too small");
  // t[k] = triangulations of a convex k-gon; fix the triangle on one edge
  // and sum over its apex.
  std::vector<long long> t(polygon_size + 1, 0);
  t[2] = 1;
  for (int k = 3; k <= polygon_size; ++k)
    for (int split = 2; split <= k - 1; ++split)
      t[k] += t[split] * t[k - split + 1];
  return t[polygon_size];
}

std::string orientation_to_string(const std::vector<PathStep>& orientation) {
  std::string s;
  for (PathStep p : orientation) s += p == PathStep::FORWARD ? 'F' : 'B';
  return s;
}

std::vector<PathStep> orientation_from_string(const std::string& s) {
  std::vector<PathStep> out;
  for (char c : s) {
    if (c == 'F' || c == 'f')
      out.push_back(PathStep::FORWARD);
    else if (c == 'B' || c == 'b')
      out.push_back(PathStep::BACKWARD);
    else
      fail(ErrorCode::BAD_INPUT, "orientation must use only F and B");
  }
  return out;
}

}  // namespace clusterexp
