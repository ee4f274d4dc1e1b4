#ifndef CLUSTEREXP_IO_HPP
#define CLUSTEREXP_IO_HPP

#include <string>

#include <json.hpp>

#include "clusterexp/geometry.hpp"
#include "clusterexp/laurent.hpp"
#include "clusterexp/qp.hpp"
#include "clusterexp/quiver.hpp"
#include "clusterexp/snake.hpp"

namespace clusterexp {

using Json = nlohmann::json;

// Document form: {"n", "corners", "diagonals": [{"label", "ends"}], ...}.
Json triangulation_to_json(const Triangulation& T);

// Accepts the document form or the shorthand {"orientation": "FFB"}; an "n"
// next to an orientation must agree with its length.
Triangulation triangulation_from_json(const Json& j);

// {"vars": 9, "terms": [{"coeff": 1, "exps": [...]}]}. Coefficients too wide
// for a JSON integer travel as decimal strings.
Json polynomial_to_json(const LaurentPoly& p);
LaurentPoly polynomial_from_json(const Json& j);

Json quiver_to_json(const IceQuiver& Q);
std::string quiver_to_dot(const IceQuiver& Q);

Json snake_to_json(const SnakeGraph& G);
std::string snake_to_dot(const SnakeGraph& G);

Json qp_to_json(const QP& qp);
std::string qp_to_dot(const QP& qp);

// BAD_INPUT on malformed text or unreadable path; "-" reads standard input.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace clusterexp

#endif
