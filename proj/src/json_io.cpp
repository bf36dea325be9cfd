#include "hstar/json_io.hpp"

#include <fstream>
#include <limits>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

const Int kInt64Max = Int(std::numeric_limits<std::int64_t>::max());
const Int kInt64Min = Int(std::numeric_limits<std::int64_t>::min());

bool is_decimal_string(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

json int_to_json(const Int& x) {
  if (x >= kInt64Min && x <= kInt64Max)
    return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

Int int_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string() && is_decimal_string(j.get<std::string>()))
    return Int(j.get<std::string>());
  throw InputError("field '" + field + "': expected an integer");
}

json rat_to_json(const Rat& x) {
  if (is_integer(x)) return int_to_json(numerator(x));
  return json(to_string(x));
}

Rat rat_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const size_t slash = s.find('/');
    if (slash == std::string::npos) {
      if (is_decimal_string(s)) return Rat(Int(s));
    } else {
      const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      if (is_decimal_string(num) && is_decimal_string(den) && Int(den) != 0)
        return Rat(Int(num), Int(den));
    }
  }
  throw InputError("field '" + field + "': expected an integer or 'p/q' string");
}

json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

IntVector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("field '" + field + "': expected an array");
  IntVector out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(int_from_json(e, field));
  return out;
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

IntMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw InputError("field '" + field + "': expected a nonempty array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, field));
  return IntMatrix(rows);
}

json polytope_to_json(const LatticePolytope& p) {
  json out;
  out["dim"] = p.dim();
  json verts = json::array();
  for (const IntVector& v : p.vertices()) verts.push_back(vector_to_json(v));
  out["vertices"] = std::move(verts);
  json ineqs = json::array();
  for (const HalfSpace& hs : p.hrep().halfspaces)
    ineqs.push_back(json{{"a", vector_to_json(hs.a)}, {"b", int_to_json(hs.b)}});
  out["inequalities"] = std::move(ineqs);
  return out;
}

LatticePolytope polytope_from_json(const json& j) {
  if (!j.is_object()) throw InputError("polytope: expected a JSON object");
  if (!j.contains("dim")) throw InputError("polytope: missing field 'dim'");
  if (!j.contains("vertices")) throw InputError("polytope: missing field 'vertices'");
  if (!j["dim"].is_number_integer())
    throw InputError("field 'dim': expected an integer");
  const int dim = j["dim"].get<int>();
  if (!j["vertices"].is_array())
    throw InputError("field 'vertices': expected an array");
  std::vector<IntVector> verts;
  for (const auto& v : j["vertices"]) {
    IntVector vec = vector_from_json(v, "vertices");
    if (static_cast<int>(vec.size()) != dim)
      throw InputError("field 'vertices': vertex of length " +
                       std::to_string(vec.size()) +
                       " does not match field 'dim' = " + std::to_string(dim));
    verts.push_back(std::move(vec));
  }
  LatticePolytope p(dim, std::move(verts));
  // `inequalities` on input is advisory; the facet description is always
  // recomputed from the vertices, so inconsistent input cannot poison it.
  return p;
}

json map_to_json(const AffineUnimodularMap& m) {
  return json{{"U", matrix_to_json(m.u())}, {"v", vector_to_json(m.v())}};
}

AffineUnimodularMap map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("U") || !j.contains("v"))
    throw InputError("map: expected an object with fields 'U' and 'v'");
  return AffineUnimodularMap(matrix_from_json(j["U"], "U"),
                             vector_from_json(j["v"], "v"));
}

json triangulation_to_json(const Triangulation& t) {
  json out;
  json pts = json::array();
  for (const IntVector& p : t.config.points) pts.push_back(vector_to_json(p));
  out["points"] = std::move(pts);
  out["cells"] = t.cells;
  if (t.heights) {
    json hs = json::array();
    for (const Rat& h : *t.heights) hs.push_back(rat_to_json(h));
    out["heights"] = std::move(hs);
  }
  return out;
}

Triangulation triangulation_from_json(const json& j) {
  if (!j.is_object()) throw InputError("triangulation: expected a JSON object");
  if (!j.contains("points")) throw InputError("triangulation: missing field 'points'");
  if (!j.contains("cells")) throw InputError("triangulation: missing field 'cells'");
  std::vector<IntVector> points;
  for (const auto& p : j["points"]) points.push_back(vector_from_json(p, "points"));
  if (points.empty()) throw InputError("field 'points': expected a nonempty array");
  const int dim = static_cast<int>(points.front().size());
  std::vector<std::vector<int>> cells;
  if (!j["cells"].is_array()) throw InputError("field 'cells': expected an array");
  for (const auto& c : j["cells"]) {
    if (!c.is_array()) throw InputError("field 'cells': expected arrays of indices");
    std::vector<int> cell;
    for (const auto& idx : c) {
      if (!idx.is_number_integer())
        throw InputError("field 'cells': indices must be integers");
      cell.push_back(idx.get<int>());
    }
    cells.push_back(std::move(cell));
  }
  std::optional<std::vector<Rat>> heights;
  if (j.contains("heights")) {
    std::vector<Rat> hs;
    if (!j["heights"].is_array())
      throw InputError("field 'heights': expected an array");
    for (const auto& h : j["heights"]) hs.push_back(rat_from_json(h, "heights"));
    heights = std::move(hs);
  }
  return Triangulation::create(PointConfiguration::create(dim, std::move(points)),
                               std::move(cells), std::move(heights));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace hstar
