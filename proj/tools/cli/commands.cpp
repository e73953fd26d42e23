#include "commands.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/hirzebruch.hpp"
#include "svg.hpp"

namespace quasitoric::cli {

namespace {

// A library error tagged with the pipeline stage that raised it.
class ModuleError : public std::runtime_error {
 public:
  ModuleError(std::string module, const std::string& what) : std::runtime_error(what), module_(std::move(module)) {}
  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

template <class F>
auto in_module(const std::string& module, F&& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw ModuleError(module, e.what());
  }
}

Json error_object(const std::string& kind, const std::string& message, const std::string& module = {}) {
  Json e{{"kind", kind}, {"message", message}};
  if (!module.empty()) e["module"] = module;
  return {{"error", e}};
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

Quasilattice quasilattice_from_json(const Json& in) {
  if (!in.contains("quasilattice")) return Quasilattice::integer_lattice();
  try {
    return Quasilattice(vecs_from_json(in["quasilattice"], "quasilattice"));
  } catch (const Error& e) {
    throw SchemaError(std::string("quasilattice: ") + e.what());
  }
}

Json fan_json(const Fan2& fan, const Quasilattice& q) {
  Json out = to_json(fan);
  out["complete"] = is_complete(fan);
  out["rational"] = is_rational(fan, q);
  if (is_lattice(q)) {
    Json defects = Json::array();
    for (const auto& d : smoothness_defects(fan, q))
      defects.push_back({{"cone", d.cone}, {"determinant", d.determinant ? Json(d.determinant->str()) : Json(nullptr)}});
    out["smooth"] = defects.empty();
    out["smoothness_defects"] = defects;
  } else {
    out["smooth"] = nullptr;
  }
  return out;
}

Json cut_json(const CutResult& r) {
  return {{"kept_piece", to_json(r.kept_piece)},
          {"other_piece", to_json(r.other_piece)},
          {"reduced_face", to_json(r.reduced_face)},
          {"nu", to_json(r.nu)},
          {"level", to_json(r.level)},
          {"augmented_quasilattice", to_json(r.augmented_quasilattice)},
          {"gamma", r.gamma ? to_json(*r.gamma) : Json(nullptr)}};
}

Json presentation_json(const QuasifoldPresentation& p) {
  Json equations = Json::array(), orders = Json::array();
  for (const auto& e : p.level_equations) equations.push_back(e.render());
  for (const auto& d : p.divisor_orders) orders.push_back({{"facet", d.facet}, {"order", d.order.str()}});
  Json constants = Json::array();
  for (const auto& c : p.constants) constants.push_back(to_json(c));
  return {{"d", p.d},
          {"relations", to_json(p.relations)},
          {"constants", constants},
          {"level_equations", equations},
          {"group", p.group.render()},
          {"quasitorus", p.quasitorus},
          {"gamma", p.gamma ? to_json(*p.gamma) : Json(nullptr)},
          {"divisor_orders", orders}};
}

std::vector<SpherePoint> cut_samples(const ParamSpec& a) {
  std::vector<SpherePoint> out;
  const Integer reach = (a.value + 2).floor();
  for (int k = 0; k <= 4 * static_cast<int>(reach); ++k)
    for (int m = 0; m <= 8; ++m) out.push_back({Rational(k, 4), Rational(m, 4) - 1});
  // Points exactly on the cut line |u|^2 = a (z+1)/2 + 1.
  for (int m = 0; m <= 8; ++m) {
    const QuadScalar z = Rational(m, 4) - 1;
    out.push_back({a.value * (z + 1) / QuadScalar(2) + 1, z});
  }
  return out;
}

std::vector<ProjPoint> lvm_samples(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ProjPoint> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Complex> z;
    for (int j = 0; j < 5; ++j) {
      const double r = 0.5 + 1.5 * unit_double(rng);
      const double phi = 2 * 3.141592653589793 * unit_double(rng);
      z.push_back(std::polar(r, phi));
    }
    out.emplace_back(std::move(z));
  }
  return out;
}

}  // namespace

double default_tolerance() {
  if (const char* env = std::getenv("QUASITORIC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1e-9;
}

Report build_report(const ParamSpec& a, double tol) {
  namespace hz = hirzebruch;
  Report report;
  Json& doc = report.document;
  Json checks = Json::object();
  const auto check = [&](const std::string& name, bool passed, const std::string& detail) {
    checks[name] = passed;
    if (!passed) report.failures.push_back(name + ": " + detail);
  };

  doc["a"] = to_json(a);

  const Polyhedron2 p = in_module("polyhedron", [&] { return hz::trapezoid(a); });
  doc["trapezoid"] = to_json(p);
  {
    std::vector<Vec2> expected{{0, 0}, {1, 0}, {a.value + 1, 1}, {0, 1}};
    auto got = p.vertices();
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    check("polyhedron.trapezoid_vertices", got == expected, "vertices differ from (0,0),(1,0),(a+1,1),(0,1)");
  }

  const Quasilattice qa = hz::quasilattice(a);
  const Quasilattice z2 = Quasilattice::integer_lattice();
  const Fan2 fan = in_module("fan", [&] { return normal_fan(p); });
  Json fan_doc = fan_json(fan, z2);
  fan_doc["rational_in_Qa"] = in_module("fan", [&] { return is_rational(fan, qa); });
  doc["fan"] = fan_doc;
  check("fan.complete", fan_doc["complete"].get<bool>(), "normal fan does not cover the plane");
  check("fan.rational_in_Qa", fan_doc["rational_in_Qa"].get<bool>(), "a ray misses Q_a");

  Json lattice_doc = to_json(qa);
  lattice_doc["gamma"] = to_json(gamma_quotient(qa));
  doc["quasilattice"] = lattice_doc;

  const VectorConfig v = in_module("gale", [&] { return hz::vector_config(a); });
  doc["vector_config"] = {{"vectors", Json::array()}, {"ghosts", to_json(v.ghosts)},
                          {"balanced", is_balanced(v)}, {"odd", is_odd(v)}};
  for (const auto& u : v.vectors) doc["vector_config"]["vectors"].push_back(to_json(u));
  const Matrix relations = in_module("gale", [&] { return relation_basis(v); });
  const PointConfig lambda = in_module("gale", [&] { return gale_dual(v); });
  const VirtualChamber chamber = in_module("gale", [&] { return chamber_from_triangulation(hz::triangulation(), 5); });
  const PolytopalityResult polytopal = in_module("gale", [&] { return is_polytopal(lambda, chamber); });
  doc["relations"] = to_json(relations);
  doc["gale_dual"] = to_json(lambda);
  doc["chamber"] = Json::array();
  for (const auto& s : chamber.subsets) doc["chamber"].push_back(to_json(s));
  doc["polytopality"] = {{"polytopal", polytopal.polytopal},
                         {"witness", polytopal.witness ? to_json(*polytopal.witness) : Json(nullptr)}};
  check("gale.affine_equivalent", affine_equivalent(lambda, standard_lambda(a)),
        "Gale dual is not affinely equivalent to (i, 1, 1+ia, i, 0)");
  check("gale.polytopal", polytopal.polytopal, "chamber triangles have no common interior point");

  const PolytopeTriple triple = in_module("delzant", [&] { return hz::triple(a); });
  const QuasifoldPresentation pres = in_module("delzant", [&] { return presentation(triple); });
  doc["presentation"] = presentation_json(pres);
  const MomentMap mm = in_module("delzant", [&] { return hz::moment_map(a); });
  Json components = Json::array();
  for (const auto& c : mm.components) {
    Json coeffs = Json::array();
    for (const auto& e : c.coefficients) coeffs.push_back(to_json(e));
    components.push_back({{"coefficients", coeffs}, {"constant", to_json(c.constant)}, {"formula", c.render()}});
  }
  const PolytopeTriple presymplectic = in_module("delzant", [&] { return hz::presymplectic_triple(a); });
  doc["moment_map"] = {{"components", components},
                       {"residual_action", residual_action_weights(presymplectic, relations).render()}};
  {
    const auto level = moment_map_coeffs(triple, pres.relations);
    bool all = true;
    for (const auto& vertex : p.vertices()) all = all && level_set_member_exact(level, squared_moduli_at(triple, vertex));
    check("delzant.vertex_level_sets", all, "a vertex pattern point misses the level set");
  }

  const CutResult cut = in_module("cut", [&] { return cut_polyhedron(hz::strip(), z2, hz::cut_direction(a), hz::cut_level()); });
  const Polyhedron2 blown =
      in_module("cut", [&] { return blowup_corner(hz::triangle(a), hz::triangle_corner(a), hz::blowup_direction(), hz::blowup_amount(a)); });
  doc["cut"] = cut_json(cut);
  doc["blowup"] = {{"triangle", to_json(hz::triangle(a))},
                   {"corner", to_json(hz::triangle_corner(a))},
                   {"direction", to_json(hz::blowup_direction())},
                   {"amount", to_json(hz::blowup_amount(a))},
                   {"result", to_json(blown)}};
  check("cut.three_way_equality", same_vrep(p, cut.kept_piece) && same_vrep(p, blown),
        "direct, cut and blow-up polytopes differ");
  check("cut.augmented_is_Qa", membership_equivalent(cut.augmented_quasilattice, qa),
        "augmenting Z^2 by the cut direction does not give Q_a");
  {
    const auto r = in_module("cut", [&] { return cut_decomposition_check(cut, a, cut_samples(a)); });
    check("cut.decomposition", r.ok(), r.ok() ? "" : r.mismatches.front());
  }

  doc["leaves"] = to_json(classify_leaves(a));
  {
    const LVMDatum datum = in_module("foliation", [&] { return hz::lvm_datum(a); });
    const std::vector<Complex> ts{{0.37, 0.21}, {-0.5, 0.1}, {0.25, -0.4}};
    const auto r = in_module("foliation", [&] { return verify_projection_invariance(datum, lvm_samples(8, 20261015), ts, tol); });
    doc["projection_invariance"] = {{"checks", r.checks}, {"failures", r.failures}, {"max_residual", r.max_residual}};
    check("foliation.projection_invariance", r.ok(), "projected orbit leaves its F_a class");
  }

  doc["checks"] = checks;
  doc["warnings"] = mm.warnings;

  report.figures["trapezoid_fan.svg"] = polytope_fan_figure(p, fan, {-1.0, 0.5});
  report.figures["chamber.svg"] = chamber_figure(lambda, chamber, polytopal.witness);
  report.figures["cut.svg"] = cut_figure(hz::strip(), cut);
  report.figures["blowup.svg"] = blowup_figure(hz::triangle(a), blown);
  return report;
}

std::string render_text(const Json& r) {
  std::ostringstream os;
  const auto scalar = [](const Json& s) { return scalar_from_json(s, "report").to_string(); };
  const auto pair = [&](const Json& v) { return "(" + scalar(v[0]) + ", " + scalar(v[1]) + ")"; };

  os << "F_a with a = " << scalar(r["a"]["value"]) << (r["a"]["rational"].get<bool>() ? " (rational)" : " (irrational)") << "\n\n";
  os << "trapezoid P_a\n  vertices:";
  for (const auto& v : r["trapezoid"]["vertices"]) os << " " << pair(v);
  os << "\nnormal fan\n  rays:";
  for (const auto& v : r["fan"]["rays"]) os << " " << pair(v);
  os << "\n  complete: " << r["fan"]["complete"] << ", rational in Z^2: " << r["fan"]["rational"]
     << ", rational in Q_a: " << r["fan"]["rational_in_Qa"] << ", smooth in Z^2: " << r["fan"]["smooth"] << "\n";
  os << "quasilattice Q_a\n  rank " << r["quasilattice"]["rank"] << ", Gamma_a: " << r["quasilattice"]["gamma"]["description"].get<std::string>() << "\n";
  os << "Gale dual\n  Lambda:";
  for (const auto& v : r["gale_dual"]) os << " " << pair(v);
  os << "\n  chamber:";
  for (const auto& s : r["chamber"]) os << " " << s.dump();
  os << "\n  polytopal: " << r["polytopality"]["polytopal"];
  if (!r["polytopality"]["witness"].is_null()) os << ", witness " << pair(r["polytopality"]["witness"]);
  os << "\nquasifold presentation\n";
  for (const auto& e : r["presentation"]["level_equations"]) os << "  " << e.get<std::string>() << "\n";
  os << "  group N: " << r["presentation"]["group"].get<std::string>() << "\n";
  os << "  quasitorus: " << r["presentation"]["quasitorus"].get<std::string>() << "\n";
  for (const auto& d : r["presentation"]["divisor_orders"])
    os << "  singular divisor on facet " << d["facet"] << " of order " << d["order"].get<std::string>() << "\n";
  os << "moment map\n";
  for (const auto& c : r["moment_map"]["components"]) os << "  " << c["formula"].get<std::string>() << "\n";
  os << "  residual R^2 action: " << r["moment_map"]["residual_action"].get<std::string>() << "\n";
  os << "cut of the strip by " << pair(r["cut"]["nu"]) << " at level " << scalar(r["cut"]["level"]) << "\n  kept piece:";
  for (const auto& v : r["cut"]["kept_piece"]["vertices"]) os << " " << pair(v);
  if (!r["cut"]["gamma"].is_null()) os << "\n  Gamma: " << r["cut"]["gamma"]["description"].get<std::string>();
  os << "\nblow-up of T_a at " << pair(r["blowup"]["corner"]) << " by " << scalar(r["blowup"]["amount"]) << "\n  result:";
  for (const auto& v : r["blowup"]["result"]["vertices"]) os << " " << pair(v);
  const Json& leaves = r["leaves"];
  os << "\nleaves\n  generic leaf: " << leaves["generic_leaf"].get<std::string>()
     << ", closure: " << leaves["generic_closure"].get<std::string>() << "\n  z2 z3 != 0: " << leaves["leaf_z2z3_nonzero"].get<std::string>()
     << "; z2 = 0 or z3 = 0: " << leaves["leaf_z2_or_z3_zero"].get<std::string>() << "\n";
  if (!leaves["covering_degree"].is_null()) os << "  covering degree: " << leaves["covering_degree"].get<std::string>() << "\n";
  os << "checks\n";
  for (const auto& [name, passed] : r["checks"].items()) os << "  " << (passed.get<bool>() ? "ok  " : "FAIL") << " " << name << "\n";
  for (const auto& w : r["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  return os.str();
}

Json cmd_normal_fan(const Json& in) {
  const auto hrep = hrep_from_json(require(in, "hrep", "input"), "hrep");
  const Quasilattice q = quasilattice_from_json(in);
  const Polyhedron2 p = in_module("polyhedron", [&] { return vrep_from_hrep(hrep); });
  return {{"polyhedron", to_json(p)}, {"fan", fan_json(normal_fan(p), q)}};
}

Json cmd_gale_dual(const Json& in) {
  VectorConfig v{vecs_from_json(require(in, "vectors", "input"), "vectors"), {}};
  if (in.contains("ghosts")) v.ghosts = index_set_from_json(in["ghosts"], "ghosts");
  v.validate();
  const bool augmented = !is_balanced(v) || !is_odd(v);
  if (augmented) v = augment_ghosts(v);
  const PointConfig lambda = gale_dual(v);
  Json out{{"augmented", augmented},
           {"vectors", Json::array()},
           {"ghosts", to_json(v.ghosts)},
           {"balanced", is_balanced(v)},
           {"odd", is_odd(v)},
           {"relations", to_json(relation_basis(v))},
           {"lambda", to_json(lambda)}};
  for (const auto& u : v.vectors) out["vectors"].push_back(to_json(u));
  if (in.contains("triangulation")) {
    const Json& t = in["triangulation"];
    if (!t.is_array()) throw SchemaError("triangulation: expected an array of label sets");
    Triangulation tri;
    for (std::size_t i = 0; i < t.size(); ++i) tri.subsets.push_back(index_set_from_json(t[i], "triangulation[" + std::to_string(i) + "]"));
    const VirtualChamber chamber = chamber_from_triangulation(tri, v.size());
    Json ch = Json::array();
    for (const auto& s : chamber.subsets) ch.push_back(to_json(s));
    out["chamber"] = ch;
    if (lambda.m == 1) {
      const auto r = is_polytopal(lambda, chamber);
      out["polytopality"] = {{"polytopal", r.polytopal}, {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
    }
  }
  return out;
}

Json cmd_cut(const Json& in) {
  const auto hrep = hrep_from_json(require(in, "hrep", "input"), "hrep");
  const Vec2 nu = vec_from_json(require(in, "nu", "input"), "nu");
  const QuadScalar c = scalar_from_json(require(in, "c", "input"), "c");
  const Quasilattice q = quasilattice_from_json(in);
  const Polyhedron2 p = in_module("polyhedron", [&] { return vrep_from_hrep(hrep); });
  return cut_json(cut_polyhedron(p, q, nu, c));
}

Json cmd_blowup(const Json& in) {
  const auto hrep = hrep_from_json(require(in, "hrep", "input"), "hrep");
  const Vec2 vertex = vec_from_json(require(in, "vertex", "input"), "vertex");
  const Vec2 nu = vec_from_json(require(in, "nu", "input"), "nu");
  const QuadScalar eps = scalar_from_json(require(in, "epsilon", "input"), "epsilon");
  const Polyhedron2 p = in_module("polyhedron", [&] { return vrep_from_hrep(hrep); });
  return {{"polyhedron", to_json(blowup_corner(p, vertex, nu, eps))}};
}

Json cmd_classify_leaves(const ParamSpec& a) { return to_json(classify_leaves(a)); }

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toric data for the generalized Hirzebruch surfaces F_a", "quasitoric"};
  app.require_subcommand(1);
  std::string a_text, input_path = "-", svg_dir;
  bool json = false;
  double tol = default_tolerance();

  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Emit JSON");
    sub->add_option("--tol", tol, "Floating tolerance (env QUASITORIC_TOL)")->check(CLI::PositiveNumber);
  };
  CLI::App* report = app.add_subcommand("report", "Run the full pipeline for F_a");
  report->add_option("--a", a_text, "Parameter a, e.g. 2, 3/2, sqrt(2), 1+sqrt(2)")->required();
  report->add_option("--svg-dir", svg_dir, "Write figures into this directory");
  add_common(report);
  CLI::App* leaves = app.add_subcommand("classify-leaves", "Leaf types of the LVM foliation");
  leaves->add_option("--a", a_text, "Parameter a")->required();
  add_common(leaves);
  std::map<std::string, Json (*)(const Json&)> json_commands{
      {"normal-fan", cmd_normal_fan}, {"gale-dual", cmd_gale_dual}, {"cut", cmd_cut}, {"blowup", cmd_blowup}};
  const std::map<std::string, std::string> modules{
      {"report", "report"}, {"classify-leaves", "foliation"}, {"normal-fan", "fan"},
      {"gale-dual", "gale"}, {"cut", "cut"}, {"blowup", "cut"}};
  for (const auto& [name, fn] : json_commands) {
    CLI::App* sub = app.add_subcommand(name, "Read a JSON document and run " + name);
    sub->add_option("--input", input_path, "JSON input file ('-' for stdin)");
    add_common(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << error_object("usage", e.what()).dump(2) << "\n";
    return parse_error;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  const std::string module = modules.at(command);

  try {
    if (command == "report" || command == "classify-leaves") {
      ParamSpec a;
      try {
        a = ParamSpec::parse(a_text);
      } catch (const Error& e) {
        out << error_object("parse", e.what(), "scalar").dump(2) << "\n";
        return parse_error;
      }
      if (command == "classify-leaves") {
        out << cmd_classify_leaves(a).dump(2) << "\n";
        return ok;
      }
      const Report r = build_report(a, tol);
      if (!svg_dir.empty()) {
        std::filesystem::create_directories(svg_dir);
        for (const auto& [name, svg] : r.figures) write_text_file((std::filesystem::path(svg_dir) / name).string(), svg);
      }
      out << (json ? r.document.dump(2) + "\n" : render_text(r.document));
      for (const auto& f : r.failures) err << "consistency failure in " << f << "\n";
      return r.failures.empty() ? ok : consistency_error;
    }

    Json doc;
    try {
      if (input_path == "-") {
        doc = Json::parse(in);
      } else {
        std::ifstream file(input_path);
        if (!file) throw SchemaError("cannot open input file " + input_path);
        doc = Json::parse(file);
      }
    } catch (const Json::parse_error& e) {
      throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    out << in_module(module, [&] { return json_commands.at(command)(doc); }).dump(2) << "\n";
    return ok;
  } catch (const SchemaError& e) {
    out << error_object("schema", e.what(), module).dump(2) << "\n";
    return parse_error;
  } catch (const ModuleError& e) {
    out << error_object("domain", e.what(), e.module()).dump(2) << "\n";
    return domain_error;
  } catch (const Error& e) {
    out << error_object("domain", e.what(), module).dump(2) << "\n";
    return domain_error;
  } catch (const std::exception& e) {
    out << error_object("io", e.what(), module).dump(2) << "\n";
    return domain_error;
  }
}

}  // namespace quasitoric::cli
