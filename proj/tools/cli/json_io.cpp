#include "json_io.hpp"

#include "quasitoric/errors.hpp"

namespace quasitoric::cli {

namespace {

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw SchemaError(where + ": expected a rational as an integer or a \"p/q\" string");
}

}  // namespace

Json to_json(const QuadScalar& x) {
  return {{"r", rational_to_string(x.r())}, {"s", rational_to_string(x.s())}, {"d", x.d()}, {"approx", x.to_double()}};
}

Json to_json(const Vec2& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

Json to_json(const HalfPlane& h) { return {{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}}; }

Json to_json(const Polyhedron2& p) {
  Json hrep = Json::array(), vertices = Json::array(), rays = Json::array();
  for (const auto& h : p.hrep()) hrep.push_back(to_json(h));
  for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
  for (const auto& r : p.rays()) rays.push_back(to_json(r));
  return {{"hrep", hrep},
          {"vertices", vertices},
          {"rays", rays},
          {"bounded", p.bounded()},
          {"simple", p.simple()},
          {"dimension", p.dimension()}};
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    out.push_back(r);
  }
  return out;
}

Json to_json(const GroupDesc& g) {
  return {{"kind", to_string(g.kind)},
          {"order", g.order.str()},
          {"rotation", to_json(g.rotation)},
          {"description", g.describe()}};
}

Json to_json(const Quasilattice& q) {
  Json gens = Json::array();
  for (const auto& g : q.generators()) gens.push_back(to_json(g));
  return {{"generators", gens}, {"rank", group_rank(q)}, {"discrete", is_lattice(q)}};
}

Json to_json(const Fan2& f) {
  Json rays = Json::array(), cones = Json::array();
  for (const auto& r : f.rays()) rays.push_back(to_json(r));
  for (const auto& [i, j] : f.cones()) cones.push_back(Json::array({i, j}));
  return {{"rays", rays}, {"cones", cones}};
}

Json to_json(const PointConfig& p) {
  Json out = Json::array();
  for (const auto& pt : p.points) {
    if (p.m == 1) {
      out.push_back(to_json(pt[0].as_vec()));
      continue;
    }
    Json coords = Json::array();
    for (const auto& c : pt) coords.push_back(to_json(c.as_vec()));
    out.push_back(coords);
  }
  return out;
}

Json to_json(const IndexSet& s) { return Json(std::vector<int>(s.begin(), s.end())); }

Json to_json(const LeafReport& r) {
  Json out{{"a", to_json(r.a)},
           {"generic_leaf", to_string(r.generic_leaf)},
           {"generic_closure", to_string(r.generic_closure)},
           {"leaf_z2z3_nonzero", r.leaf_z2z3_nonzero},
           {"leaf_z2_or_z3_zero", r.leaf_z2_or_z3_zero},
           {"notes", r.notes}};
  out["covering_degree"] = r.covering_degree ? Json(r.covering_degree->str()) : Json(nullptr);
  return out;
}

Json to_json(const ParamSpec& a) {
  Json out{{"value", to_json(a.value)}, {"rational", a.rational}};
  if (a.rational) {
    out["p"] = a.p.str();
    out["q"] = a.q.str();
  }
  return out;
}

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing key \"" + key + "\"");
  return *it;
}

QuadScalar scalar_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return QuadScalar(j.get<long long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_object()) {
      const Rational r = rational_from_json(require(j, "r", where), where + ".r");
      const Rational s = j.contains("s") ? rational_from_json(j["s"], where + ".s") : Rational(0);
      const auto& d = j.contains("d") ? j["d"] : Json(0);
      if (!d.is_number_integer()) throw SchemaError(where + ".d: expected an integer");
      return QuadScalar(r, s, d.get<std::int64_t>());
    }
  } catch (const Error& e) {
    throw SchemaError(where + ": " + e.what());
  }
  throw SchemaError(where + ": expected a scalar (integer, expression string or {r, s, d} object)");
}

Vec2 vec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(where + ": expected a pair [x, y]");
  return {scalar_from_json(j[0], where + "[0]"), scalar_from_json(j[1], where + "[1]")};
}

std::vector<Vec2> vecs_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of pairs");
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<HalfPlane> hrep_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of half-planes");
  std::vector<HalfPlane> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    out.push_back({vec_from_json(require(j[i], "normal", at), at + ".normal"),
                   scalar_from_json(require(j[i], "offset", at), at + ".offset")});
  }
  return out;
}

IndexSet index_set_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of labels");
  IndexSet out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw SchemaError(where + ": labels must be integers");
    out.insert(e.get<int>());
  }
  return out;
}

}  // namespace quasitoric::cli
