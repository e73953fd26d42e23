#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "quasitoric/cut.hpp"
#include "quasitoric/delzant.hpp"
#include "quasitoric/fan.hpp"
#include "quasitoric/foliation.hpp"
#include "quasitoric/gale.hpp"

namespace quasitoric::cli {

using Json = nlohmann::json;

// Input that is not valid JSON or does not follow the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"r": "p/q", "s": "p/q", "d": n, "approx": x}
Json to_json(const QuadScalar& x);
Json to_json(const Vec2& v);
Json to_json(const HalfPlane& h);
Json to_json(const Polyhedron2& p);
Json to_json(const Matrix& m);
Json to_json(const GroupDesc& g);
Json to_json(const Quasilattice& q);
Json to_json(const Fan2& f);
Json to_json(const PointConfig& p);
Json to_json(const IndexSet& s);
Json to_json(const LeafReport& r);
Json to_json(const ParamSpec& a);

// Scalars may be given as an integer, an expression string ("1+sqrt(2)")
// or an object {"r", "s", "d"}.
QuadScalar scalar_from_json(const Json& j, const std::string& where);
Vec2 vec_from_json(const Json& j, const std::string& where);
std::vector<Vec2> vecs_from_json(const Json& j, const std::string& where);
std::vector<HalfPlane> hrep_from_json(const Json& j, const std::string& where);
IndexSet index_set_from_json(const Json& j, const std::string& where);

const Json& require(const Json& j, const std::string& key, const std::string& where);

}  // namespace quasitoric::cli
