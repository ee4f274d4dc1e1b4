#include "clusterexp/io.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "clusterexp/error.hpp"

namespace clusterexp {

namespace {

int int_field(const Json& j, const char* key) {
  require(j.contains(key), ErrorCode::BAD_INPUT,
          std::string("missing field \"") + key + "\"");
  require(j[key].is_number_integer(), ErrorCode::BAD_INPUT,
          std::string("field \"") + key + "\" must be an integer");
  return j[key].get<int>();
}

std::pair<int, int> ends_field(const Json& j) {
  require(j.contains("ends") && j["ends"].is_array() && j["ends"].size() == 2 &&
              j["ends"][0].is_number_integer() && j["ends"][1].is_number_integer(),
          ErrorCode::BAD_INPUT, "arc \"ends\" must be a pair of corners");
  return {j["ends"][0].get<int>(), j["ends"][1].get<int>()};
}

std::vector<std::pair<int, std::pair<int, int>>> arc_list_field(const Json& j,
                                                                const char* key) {
  require(j.contains(key) && j[key].is_array(), ErrorCode::BAD_INPUT,
          std::string("field \"") + key + "\" must be an array of arcs");
  std::vector<std::pair<int, std::pair<int, int>>> arcs;
  for (const Json& entry : j[key]) {
    require(entry.is_object(), ErrorCode::BAD_INPUT, "arcs must be objects");
    arcs.push_back({int_field(entry, "label"), ends_field(entry)});
  }
  return arcs;
}

Json coeff_to_json(const Coeff& c) {
  if (c >= std::numeric_limits<long long>::min() &&
      c <= std::numeric_limits<long long>::max())
    return Json(c.convert_to<long long>());
  return Json(c.str());
}

Coeff coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return Coeff(j.get<long long>());
  if (j.is_string()) {
    try {
      return Coeff(j.get<std::string>());
    } catch (const std::exception&) {
      fail(ErrorCode::BAD_INPUT, "coefficient string is not an integer");
    }
  }
  fail(ErrorCode::BAD_INPUT, "coefficient must be an integer or a string");
}

const char* edge_kind_name(EdgeKind k) {
  return k == EdgeKind::BOUNDARY_EDGE ? "boundary" : "diagonal";
}

const char* arrow_class_name(ArrowClass c) {
  switch (c) {
    case ArrowClass::ORIGINAL: return "original";
    case ArrowClass::INTERNAL: return "internal";
    case ArrowClass::EXTERNAL: return "external";
  }
  return "unknown";
}

}  // namespace

Json triangulation_to_json(const Triangulation& T) {
  Json j;
  j["n"] = T.n;
  j["corners"] = T.polygon_size;
  Json diagonals = Json::array();
  for (const auto& [label, ends] : T.diagonals)
    diagonals.push_back({{"label", label}, {"ends", {ends.first, ends.second}}});
  Json boundary = Json::array();
  for (const auto& [label, ends] : T.boundary_arcs)
    boundary.push_back({{"label", label}, {"ends", {ends.first, ends.second}}});
  j["diagonals"] = diagonals;
  j["boundary"] = boundary;
  return j;
}

Triangulation triangulation_from_json(const Json& j) {
  require(j.is_object(), ErrorCode::BAD_INPUT,
          "triangulation JSON must be an object");
  if (j.contains("orientation")) {
    require(j["orientation"].is_string(), ErrorCode::BAD_INPUT,
            "field \"orientation\" must be a string");
    const std::vector<PathStep> orientation =
        orientation_from_string(j["orientation"].get<std::string>());
    const int n = static_cast<int>(orientation.size()) + 1;
    if (j.contains("n"))
      require(int_field(j, "n") == n, ErrorCode::BAD_INPUT,
              "\"n\" does not match the orientation length");
    return triangulation_from_orientation(n, orientation);
  }
  TriangulationDocument doc;
  doc.n = int_field(j, "n");
  doc.corners = int_field(j, "corners");
  doc.diagonals = arc_list_field(j, "diagonals");
  doc.boundary = arc_list_field(j, "boundary");
  return triangulation_from_document(doc);
}

Json polynomial_to_json(const LaurentPoly& p) {
  Json j;
  j["vars"] = p.num_vars();
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms())
    terms.push_back({{"coeff", coeff_to_json(coeff)}, {"exps", exps}});
  j["terms"] = terms;
  return j;
}

LaurentPoly polynomial_from_json(const Json& j) {
  require(j.is_object(), ErrorCode::BAD_INPUT, "polynomial JSON must be an object");
  const int vars = int_field(j, "vars");
  require(vars >= 1, ErrorCode::BAD_INPUT, "polynomial needs at least one variable");
  require(j.contains("terms") && j["terms"].is_array(), ErrorCode::BAD_INPUT,
          "field \"terms\" must be an array");
  LaurentPoly p = LaurentPoly::zero(vars);
  for (const Json& term : j["terms"]) {
    require(term.is_object() && term.contains("coeff") && term.contains("exps"),
            ErrorCode::BAD_INPUT, "terms need \"coeff\" and \"exps\"");
    require(term["exps"].is_array() &&
                static_cast<int>(term["exps"].size()) == vars,
            ErrorCode::BAD_INPUT, "\"exps\" must list one exponent per variable");
    ExpVec exps;
    for (const Json& e : term["exps"]) {
      require(e.is_number_integer(), ErrorCode::BAD_INPUT,
              "exponents must be integers");
      exps.push_back(e.get<int32_t>());
    }
    p.add_term(exps, coeff_from_json(term["coeff"]));
  }
  return p;
}

Json quiver_to_json(const IceQuiver& Q) {
  Json j;
  j["vertices"] = Q.vertices;
  j["frozen"] = std::vector<int>(Q.frozen.begin(), Q.frozen.end());
  Json arrows = Json::array();
  for (const Arrow& a : Q.arrows)
    arrows.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
  j["arrows"] = arrows;
  return j;
}

std::string quiver_to_dot(const IceQuiver& Q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  out << "  node [shape=circle];\n";
  for (int v : Q.vertices) {
    out << "  " << v;
    if (Q.is_frozen(v)) out << " [shape=box]";
    out << ";\n";
  }
  for (const Arrow& a : Q.arrows) out << "  " << a.src << " -> " << a.tgt << ";\n";
  out << "}\n";
  return out.str();
}

Json snake_to_json(const SnakeGraph& G) {
  Json j;
  Json vertices = Json::array();
  for (int v = 0; v < G.num_vertices; ++v)
    vertices.push_back({{"id", v}, {"corner", G.vertex_corner[v]}});
  j["vertices"] = vertices;
  Json edges = Json::array();
  for (const SnakeEdge& e : G.edges)
    edges.push_back({{"id", e.id},
                     {"ends", {e.v1, e.v2}},
                     {"label", e.label},
                     {"kind", edge_kind_name(e.kind)}});
  j["edges"] = edges;
  Json tiles = Json::array();
  for (const SnakeTile& t : G.tiles)
    tiles.push_back({{"diagonal", t.diagonal_label},
                     {"vertices", t.vertex_ids},
                     {"edges", t.edge_ids},
                     {"diagonal_edge", t.diagonal_edge_id}});
  j["tiles"] = tiles;
  j["shared_edges"] = G.shared_edge_ids;
  return j;
}

std::string snake_to_dot(const SnakeGraph& G) {
  std::ostringstream out;
  out << "graph snake {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < G.num_vertices; ++v)
    out << "  v" << v << " [label=\"" << G.vertex_corner[v] << "\"];\n";
  for (const SnakeEdge& e : G.edges) {
    out << "  v" << e.v1 << " -- v" << e.v2 << " [label=\"x" << e.label << "\"";
    if (e.kind == EdgeKind::TILE_DIAGONAL) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json qp_to_json(const QP& qp) {
  Json j;
  j["n"] = qp.n;
  j["vertices"] = qp.vertices;
  j["frozen"] = std::vector<int>(qp.frozen.begin(), qp.frozen.end());
  Json arrows = Json::array();
  for (const QPArrow& a : qp.arrows) {
    Json arrow = {{"id", a.id},
                  {"src", a.src},
                  {"tgt", a.tgt},
                  {"class", arrow_class_name(a.cls)},
                  {"corner", a.corner}};
    if (a.cls != ArrowClass::EXTERNAL) {
      arrow["triangle"] = a.triangle_index;
      arrow["third_arc"] = a.third_arc;
    }
    arrows.push_back(arrow);
  }
  j["arrows"] = arrows;
  Json cycles = Json::array();
  for (const PotentialCycle& c : qp.cycles) {
    Json cycle = {{"arrows", c.arrow_ids}, {"sign", c.sign}};
    if (c.triangle_index >= 0) cycle["triangle"] = c.triangle_index;
    if (c.corner >= 0) cycle["corner"] = c.corner;
    cycles.push_back(cycle);
  }
  j["cycles"] = cycles;
  return j;
}

std::string qp_to_dot(const QP& qp) {
  std::ostringstream out;
  out << "digraph qp {\n";
  out << "  node [shape=circle];\n";
  for (int v : qp.vertices) {
    out << "  " << v;
    if (qp.frozen.count(v) != 0) out << " [shape=box]";
    out << ";\n";
  }
  for (const QPArrow& a : qp.arrows) {
    out << "  " << a.src << " -> " << a.tgt;
    std::vector<std::string> attrs;
    if (a.cls == ArrowClass::EXTERNAL) attrs.push_back("style=dashed");
    if (a.third_arc > 0)
      attrs.push_back("label=\"x" + std::to_string(a.third_arc) + "\"");
    if (!attrs.empty()) {
      out << " [";
      for (size_t k = 0; k < attrs.size(); ++k)
        out << (k > 0 ? ", " : "") << attrs[k];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::BAD_INPUT, std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return parse_json_text(buffer.str());
  }
  std::ifstream in(path);
  require(in.good(), ErrorCode::BAD_INPUT, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

}  // namespace clusterexp
