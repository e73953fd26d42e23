#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace {

using quasitoric::cli::Json;
using quasitoric::cli::run;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* strip_hrep = R"j([{"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": 0}, {"normal": [0, -1], "offset": -1}])j";

TEST(Cli, ReportBranches) {
  const auto r2 = call({"report", "--a", "2", "--json"});
  ASSERT_EQ(r2.code, 0) << r2.err;
  const Json d2 = Json::parse(r2.out);
  for (const auto& [name, passed] : d2["checks"].items()) EXPECT_TRUE(passed.get<bool>()) << name;
  EXPECT_EQ(d2["quasilattice"]["gamma"]["kind"], "trivial");

  const Json d32 = Json::parse(call({"report", "--a", "3/2", "--json"}).out);
  EXPECT_EQ(d32["quasilattice"]["gamma"]["kind"], "finite_cyclic");
  EXPECT_EQ(d32["quasilattice"]["gamma"]["order"], "2");

  const auto rr = call({"report", "--a", "sqrt(2)", "--json"});
  ASSERT_EQ(rr.code, 0);
  const Json dr = Json::parse(rr.out);
  EXPECT_EQ(dr["quasilattice"]["gamma"]["kind"], "dense_cyclic");
  EXPECT_EQ(dr["leaves"]["generic_leaf"], "cylinder_S1xR");
}

TEST(Cli, ReportIsDeterministic) {
  const auto a = call({"report", "--a", "1+sqrt(2)", "--json"});
  const auto b = call({"report", "--a", "1+sqrt(2)", "--json"});
  EXPECT_EQ(a.out, b.out);
  const auto t1 = call({"report", "--a", "5/3"});
  const auto t2 = call({"report", "--a", "5/3"});
  EXPECT_EQ(t1.out, t2.out);
  EXPECT_NE(t1.out.find("checks"), std::string::npos);
}

TEST(Cli, WritesFigures) {
  const auto dir = std::filesystem::temp_directory_path() / "quasitoric_cli_figs";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(call({"report", "--a", "sqrt(2)", "--svg-dir", dir.string()}).code, 0);
  int svgs = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream f(entry.path());
    std::string head(5, '\0');
    f.read(head.data(), 5);
    EXPECT_EQ(head, "<?xml");
    ++svgs;
  }
  EXPECT_EQ(svgs, 4);
  std::filesystem::remove_all(dir);
}

TEST(Cli, BadParameterIsAParseError) {
  for (const char* a : {"-1", "0", "banana"}) {
    const auto r = call({"report", "--a", a});
    EXPECT_EQ(r.code, 2) << a;
    EXPECT_TRUE(Json::parse(r.out).contains("error"));
  }
  EXPECT_EQ(call({"report"}).code, 2);
  EXPECT_EQ(call({"no-such-command"}).code, 2);
}

TEST(Cli, ClassifyLeaves) {
  const auto r = call({"classify-leaves", "--a", "5/3"});
  ASSERT_EQ(r.code, 0);
  const Json d = Json::parse(r.out);
  EXPECT_EQ(d["covering_degree"], "3");
  EXPECT_EQ(d["leaf_z2z3_nonzero"], "C/(Z+i3Z)");
  EXPECT_TRUE(Json::parse(call({"classify-leaves", "--a", "sqrt(3)"}).out)["covering_degree"].is_null());
}

TEST(Cli, GaleDual) {
  const auto r = call({"gale-dual"}, R"j({"vectors": [[1, 0], [0, 1], [0, -1], [-1, "sqrt(2)"]],
                                         "triangulation": [[1, 2], [2, 4], [3, 4], [1, 3], [1], [2], [3], [4], []]})j");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json d = Json::parse(r.out);
  EXPECT_TRUE(d["augmented"].get<bool>());
  const auto& l = d["lambda"];
  ASSERT_EQ(l.size(), 5u);
  const std::vector<std::pair<std::string, std::string>> expected{{"0", "1"}, {"1", "0"}, {"1", "sqrt(2)"}, {"0", "1"}, {"0", "0"}};
  for (std::size_t j = 0; j < 5; ++j) {
    const auto show = [](const Json& x) {
      return x["s"] == "0" ? x["r"].get<std::string>() : (x["r"] == "0" ? "" : x["r"].get<std::string>() + "+") + (x["s"] == "1" ? "" : x["s"].get<std::string>() + "*") + "sqrt(" + std::to_string(x["d"].get<int>()) + ")";
    };
    EXPECT_EQ(show(l[j][0]), expected[j].first) << j;
    EXPECT_EQ(show(l[j][1]), expected[j].second) << j;
  }
  EXPECT_EQ(d["chamber"].size(), 4u);
  EXPECT_TRUE(d["polytopality"]["polytopal"].get<bool>());
}

TEST(Cli, CutAndBlowup) {
  const auto r = call({"cut"}, std::string(R"j({"hrep": )j") + strip_hrep + R"j(, "nu": [-1, 2], "c": -1})j");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json d = Json::parse(r.out);
  EXPECT_EQ(d["kept_piece"]["vertices"].size(), 4u);
  EXPECT_EQ(d["kept_piece"]["vertices"][2][0]["r"], "3");

  const auto b = call({"blowup"}, R"j({"hrep": [{"normal": [1, 0], "offset": 0}, {"normal": [0, -1], "offset": -1},
                                                {"normal": [-1, 2], "offset": -1}],
                                      "vertex": [0, "-1/2"], "nu": [0, 1], "epsilon": "1/2"})j");
  ASSERT_EQ(b.code, 0) << b.out;
  EXPECT_EQ(Json::parse(b.out)["polyhedron"]["vertices"].size(), 4u);
}

TEST(Cli, ErrorsCarryModuleAndExitCode) {
  const auto bad_json = call({"cut"}, "{not json");
  EXPECT_EQ(bad_json.code, 2);
  EXPECT_EQ(Json::parse(bad_json.out)["error"]["kind"], "schema");

  const auto missing = call({"cut"}, std::string(R"j({"hrep": )j") + strip_hrep + "}");
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(Json::parse(missing.out)["error"]["message"].get<std::string>().find("nu"), std::string::npos);

  const auto nothing = call({"cut"}, std::string(R"j({"hrep": )j") + strip_hrep + R"j(, "nu": [0, 1], "c": 5})j");
  EXPECT_EQ(nothing.code, 1);
  EXPECT_EQ(Json::parse(nothing.out)["error"]["module"], "cut");

  const auto infeasible = call({"normal-fan"}, R"j({"hrep": [{"normal": [1, 0], "offset": 1}, {"normal": [-1, 0], "offset": 0}]})j");
  EXPECT_EQ(infeasible.code, 1);
  EXPECT_EQ(Json::parse(infeasible.out)["error"]["module"], "polyhedron");
}

TEST(Cli, NormalFan) {
  const auto r = call({"normal-fan"}, R"j({"hrep": [{"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": 0},
                                                   {"normal": [0, -1], "offset": -1}, {"normal": [-1, "sqrt(2)"], "offset": -1}]})j");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json d = Json::parse(r.out);
  EXPECT_EQ(d["fan"]["rays"].size(), 4u);
}

}  // namespace
