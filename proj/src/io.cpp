#include "minkval/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace minkval::io {

namespace {

const char* space_name(Space s) {
  switch (s) {
    case Space::W: return "W";
    case Space::WDual: return "W_dual";
    default: return nullptr;
  }
}

std::string field(const std::string& source, const std::string& path) { return source + ": " + path; }

const Json& require_field(const Json& j, const char* key, const std::string& source) {
  if (!j.is_object()) throw ParseError(source + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(field(source, key) + " is missing");
  return *it;
}

std::optional<Polytope> optional_planar(const Json& j, const char* key, const std::string& source) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  Polytope p = body_from_json(*it, source + ": " + key).body;
  if (p.ambient_dim() != 2)
    throw DimensionError(field(source, std::string(key) + ".ambient_dim") + " is " + std::to_string(p.ambient_dim()) +
                         ", parameter bodies must be planar (2)");
  return p;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected a rational string \"p/q\" or an integer, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json to_json(const Polytope& p, Space space) {
  std::vector<Point> verts = p.vertices();
  std::sort(verts.begin(), verts.end());
  Json vs = Json::array();
  for (const auto& v : verts) {
    Json row = Json::array();
    for (const auto& x : v.coords()) row.push_back(rational_to_json(x));
    vs.push_back(std::move(row));
  }
  Json out{{"ambient_dim", p.ambient_dim()}};
  if (const char* s = space_name(space)) out["space"] = s;
  out["vertices"] = std::move(vs);
  return out;
}

Json to_json(const DualPolytope& q) { return to_json(q.coordinates(), Space::WDual); }

Json to_json(const ValuationOutput& out) {
  if (const auto* dual = std::get_if<DualSum>(&out)) return to_json(dual->materialize());
  return to_json(std::get<PrimalSum>(out).materialize(), Space::W);
}

TaggedBody body_from_json(const Json& j, const std::string& source) {
  const Json& dim_json = require_field(j, "ambient_dim", source);
  if (!dim_json.is_number_integer()) throw ParseError(field(source, "ambient_dim") + " must be an integer");
  const int dim = dim_json.get<int>();
  if (dim < 2 || dim > 4) throw DimensionError(field(source, "ambient_dim") + " is " + std::to_string(dim) + ", supported: 2, 3, 4");
  TaggedBody out;
  if (const auto it = j.find("space"); it != j.end()) {
    if (*it == "W") out.space = Space::W;
    else if (*it == "W_dual") out.space = Space::WDual;
    else throw ParseError(field(source, "space") + " must be \"W\" or \"W_dual\"");
    if (dim != 4) throw DimensionError(field(source, "space") + " is set but ambient_dim is " + std::to_string(dim));
  }
  const Json& verts = require_field(j, "vertices", source);
  if (!verts.is_array()) throw ParseError(field(source, "vertices") + " must be an array");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string where = field(source, "vertices[" + std::to_string(i) + "]");
    auto coords = rationals_from_json(verts[i], where);
    if (static_cast<int>(coords.size()) != dim)
      throw DimensionError(where + " has " + std::to_string(coords.size()) + " coordinates, ambient_dim is " + std::to_string(dim));
    pts.emplace_back(std::move(coords));
  }
  out.body = pts.empty() ? Polytope::empty(dim) : convex_hull(pts, dim);
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": invalid JSON (" + e.what() + ")");
  }
}

TaggedBody read_body(const std::filesystem::path& path) { return body_from_json(read_json_file(path), path.string()); }

Polytope read_body(const std::filesystem::path& path, int ambient_dim) {
  TaggedBody b = read_body(path);
  if (b.body.ambient_dim() != ambient_dim)
    throw DimensionError(field(path.string(), "ambient_dim") + " is " + std::to_string(b.body.ambient_dim()) + ", expected " +
                         std::to_string(ambient_dim));
  if (b.space == Space::WDual) throw DimensionError(field(path.string(), "space") + " is W_dual, expected a body in W");
  return std::move(b.body);
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot write file");
  out << j.dump() << '\n';
}

ValuationOp op_from_name(const std::string& name, std::optional<Polytope> m, std::optional<Polytope> n) {
  const bool cov = name.rfind("cov_", 0) == 0;
  const OpKind kind = parse_kind(cov ? name.substr(4) : name);
  ValuationOp op{kind, false, std::move(m), std::move(n)};
  op.validate();
  return cov ? covariant_of(op) : op;
}

ValuationOp op_from_json(const Json& j, const std::string& source) {
  const Json& name = require_field(j, "op", source);
  if (!name.is_string()) throw ParseError(field(source, "op") + " must be a string");
  try {
    return op_from_name(name.get<std::string>(), optional_planar(j, "M", source), optional_planar(j, "N", source));
  } catch (const DimensionError&) {
    throw;
  } catch (const ParseError& e) {
    throw ParseError(field(source, "op") + ": " + e.what());
  }
}

Json op_to_json(const ValuationOp& op) {
  Json out{{"op", op.name()}};
  if (op.m) out["M"] = to_json(*op.m);
  if (op.n) out["N"] = to_json(*op.n);
  return out;
}

std::vector<std::vector<Rational>> directions_from_json(const Json& j, const std::string& source, int dim) {
  if (!j.is_array()) throw ParseError(source + ": expected an array of directions");
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = source + ": [" + std::to_string(i) + "]";
    auto d = rationals_from_json(j[i], where);
    if (static_cast<int>(d.size()) != dim)
      throw DimensionError(where + " has " + std::to_string(d.size()) + " coordinates, expected " + std::to_string(dim));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Rational> parse_direction(const std::string& text, int dim, const std::string& where) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (static_cast<int>(out.size()) != dim)
    throw DimensionError(where + " has " + std::to_string(out.size()) + " coordinates, expected " + std::to_string(dim));
  return out;
}

}  // namespace minkval::io
