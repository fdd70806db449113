#pragma once

// JSON forms of bodies, operators and direction lists.
//
// Body: {"ambient_dim": 4, "vertices": [["0","1","1/2","-3/7"], ...]}, with
// an optional "space": "W" | "W_dual" tag. Rationals are "p/q" or integer
// strings (plain JSON integers are accepted on input); decimals are
// rejected. Emitted bodies are canonical: vertices sorted, rationals reduced.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "minkval/valuations.hpp"

namespace minkval::io {

using Json = nlohmann::json;

enum class Space { Unspecified, W, WDual };

/// A parsed body plus the space it was tagged with.
struct TaggedBody {
  Polytope body;
  Space space = Space::Unspecified;
};

Json rational_to_json(const Rational& q);
/// `where` names the source in error messages, e.g. "cube.json: vertices[2][1]".
Rational rational_from_json(const Json& j, const std::string& where);
std::vector<Rational> rationals_from_json(const Json& j, const std::string& where);

Json to_json(const Polytope& p, Space space = Space::Unspecified);
Json to_json(const DualPolytope& q);
/// The materialized output, tagged "W" or "W_dual".
Json to_json(const ValuationOutput& out);

/// Throws ParseError for malformed JSON and DimensionError when a vertex
/// length disagrees with ambient_dim; both name `source` and the field.
TaggedBody body_from_json(const Json& j, const std::string& source);
Json read_json_file(const std::filesystem::path& path);
TaggedBody read_body(const std::filesystem::path& path);
/// Like read_body, but also demands the given ambient dimension.
Polytope read_body(const std::filesystem::path& path, int ambient_dim);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// "proj", "pi_n", ..., and "cov_" + any contravariant kind.
ValuationOp op_from_name(const std::string& name, std::optional<Polytope> m, std::optional<Polytope> n);
/// {"op": "z_combined", "M": <planar body>, "N": <planar body>}.
ValuationOp op_from_json(const Json& j, const std::string& source);
Json op_to_json(const ValuationOp& op);

/// A JSON array of directions, each an array of rationals.
std::vector<std::vector<Rational>> directions_from_json(const Json& j, const std::string& source, int dim);
/// "a,b,c,d".
std::vector<Rational> parse_direction(const std::string& text, int dim, const std::string& where);

}  // namespace minkval::io
