#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cwidth/cli.hpp"
#include "cwidth/errors.hpp"
#include "cwidth/focal.hpp"

using namespace cwidth;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cwidth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("cwidth_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_config(const std::string& name, const Json& j) {
  const fs::path p = scratch() / (name + ".json");
  std::ofstream(p) << j.dump();
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json family(double a, double b, double C) { return {{"support", {{"type", "example"}, {"a", a}, {"b", b}, {"C", C}}}}; }

std::vector<std::array<double, 3>> read_csv(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "R,z,t");
  std::vector<std::array<double, 3>> rows;
  while (std::getline(in, line)) {
    std::array<double, 3> r{};
    char c;
    std::istringstream(line) >> r[0] >> c >> r[1] >> c >> r[2];
    rows.push_back(r);
  }
  return rows;
}

std::vector<std::array<double, 3>> read_obj_vertices(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::array<double, 3>> v;
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag != "v") continue;
    std::array<double, 3> p{};
    ls >> p[0] >> p[1] >> p[2];
    v.push_back(p);
  }
  return v;
}

}  // namespace

TEST_CASE("config errors") {
  CHECK(run({"measure"}).code == kExitConfigError);
  CHECK(run({"measure", "--config", (scratch() / "missing.json").string()}).code == kExitConfigError);
  const fs::path bad = scratch() / "bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run({"measure", "--config", bad.string()}).code == kExitConfigError);
  CHECK(run({"measure", "--config", write_config("notype", {{"support", {{"a", 1}}}})}).code == kExitConfigError);
  CHECK(run({"measure", "--config", write_config("unknown", {{"support", {{"type", "cube"}}}})}).code ==
        kExitConfigError);
  const std::string ok = write_config("ok", family(3, 3, 0));
  CHECK(run({"measure", "--config", ok, "--grid", "64"}).code == kExitConfigError);
  CHECK(run({"measure", "--config", ok, "--grid", "4x8"}).code == kExitConfigError);
  CHECK(run({"symmetrize", "--config", ok, "--orientation", "1,0,0"}).code == kExitConfigError);
  CHECK(run({"export", "--config", ok, "--what", "nothing"}).code == kExitConfigError);
  CHECK(run({"frobnicate"}).code == kExitConfigError);
  CHECK_THROWS_AS(scene_from_json({{"support", {{"type", "sphere"}, {"width", 1}}}, {"format", "stl"}}),
                  InvalidInputError);
}

TEST_CASE("measure") {
  const std::string cfg = write_config("fam", family(3, 3, 0));
  const Run a = run({"measure", "--config", cfg});
  const Run b = run({"measure", "--config", cfg});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const Json j = a.json();
  CHECK(j.at("ratio_I").get<double>() == doctest::Approx(32.0 / 35).epsilon(1e-10));
  CHECK(j.at("width").get<double>() == doctest::Approx(1.0));
  for (const char* key : {"area", "volume", "width", "ratio_I", "deficit"}) CHECK(j.contains(key));

  const Run s = run({"measure", "--config", write_config("sph", {{"support", {{"type", "sphere"}, {"width", 1}}}})});
  CHECK(s.json().at("ratio_I").get<double>() == 1.0);
  CHECK(run({"measure", "--config", write_config("f241", family(2, 4, 1))}).json().at("ratio_I").get<double>() ==
        doctest::Approx(104.0 / 105).epsilon(1e-10));
}

TEST_CASE("width violations exit with 2") {
  // r = 1/(1 + |xi|^2)^2 is not of constant width.
  const Json cfg = {{"support",
                     {{"type", "rational"},
                      {"A", {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}},
                      {"B", {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}}}}};
  const std::string path = write_config("violation", cfg);
  CHECK(run({"measure", "--config", path}).code == kExitWidthViolation);
  CHECK(run({"check", "--config", path}).code == kExitWidthViolation);
  CHECK(run({"shrink", "--config", path}).code == kExitWidthViolation);
  CHECK(run({"check", "--config", write_config("fam_check", family(2, 1, 0.5))}).code == kExitOk);
}

TEST_CASE("shrink") {
  const std::string prefix = (scratch() / "s43").string();
  const Run r = run({"shrink", "--config", write_config("f43", family(4, 3, 0)), "--out", prefix});
  REQUIRE(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j.at("C_star").get<double>() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(j.at("I_at_limit").get<double>() == doctest::Approx(32.0 / 35).epsilon(1e-7));
  for (const char* suffix : {"_critical.json", "_critical.obj", "_critical_focal_plus.obj", "_critical_focal_minus.obj"})
    CHECK(fs::exists(prefix + suffix));

  // Measuring the emitted critical body reproduces the limit ratio.
  const Run m = run({"measure", "--config", prefix + "_critical.json"});
  REQUIRE(m.code == kExitOk);
  CHECK(std::abs(m.json().at("ratio_I").get<double>() - j.at("I_at_limit").get<double>()) < 1e-9);

  // Cross-section of the critical body: the surface touches a focal branch
  // at the cusp rows R = 0 and sqrt(3). The cusp at 1/sqrt(3) stays inside.
  const std::string xs = (scratch() / "xs43").string();
  REQUIRE(run({"export", "--config", prefix + "_critical.json", "--what", "cross_section", "--out", xs}).code == kExitOk);
  const auto surf = read_csv(xs + "_cross_section.csv");
  const auto plus = read_csv(xs + "_focal_plus.csv");
  const auto minus = read_csv(xs + "_focal_minus.csv");
  REQUIRE(surf.size() == plus.size());
  REQUIRE(surf.size() == minus.size());
  const SupportFunction crit = support_from_json(load_scene(prefix + "_critical.json").support);
  int cusp_rows = 0;
  for (std::size_t i = 0; i < surf.size(); ++i) {
    const double R = surf[i][0];
    if (std::abs(R - std::sqrt(3.0)) > 1e-9 && R != 0.0) continue;
    ++cusp_rows;
    CHECK(std::abs(focal_radii(crit, ChartPoint::from_xi(R)).margin) < 1e-8);
    auto d = [&](const std::array<double, 3>& f) { return std::hypot(surf[i][1] - f[1], surf[i][2] - f[2]); };
    CHECK(std::min(d(plus[i]), d(minus[i])) < 1e-8);
  }
  CHECK(cusp_rows == 2);

  CHECK(run({"shrink", "--config", write_config("sph1", {{"support", {{"type", "sphere"}, {"width", 1}}}})}).code ==
        kExitDegenerate);
}

TEST_CASE("export") {
  const std::string cfg = write_config("f33", family(3, 3, 0));
  const std::string prefix = (scratch() / "e33").string();
  const Run c = run({"export", "--config", cfg, "--what", "cusps", "--out", prefix});
  REQUIRE(c.code == kExitOk);
  const auto cusps = c.json().at("cusps").get<std::vector<double>>();
  REQUIRE(cusps.size() == 3);
  CHECK(std::abs(cusps[0]) < 1e-12);
  CHECK(cusps[1] == doctest::Approx(0.5773502692).epsilon(1e-10));
  CHECK(cusps[2] == doctest::Approx(1.7320508076).epsilon(1e-10));
  CHECK(Json::parse(read_file(prefix + "_cusps.json")).at("cusps") == c.json().at("cusps"));

  REQUIRE(run({"export", "--config", cfg, "--what", "surface", "--out", prefix}).code == kExitOk);
  CHECK(read_obj_vertices(prefix + "_surface.obj").size() == 64u * 128u + 2);

  const Json sphere = {{"support", {{"type", "translate"}, {"base", {{"type", "sphere"}, {"width", 2}}}, {"p", {0.5, -1, 2}}}},
                       {"grid", {{"n_theta", 16}, {"n_phi", 32}}}};
  const std::string sp = (scratch() / "sphere").string();
  REQUIRE(run({"export", "--config", write_config("tsph", sphere), "--what", "focal", "--out", sp}).code == kExitOk);
  for (const char* branch : {"_focal_plus.obj", "_focal_minus.obj"}) {
    const auto v = read_obj_vertices(sp + branch);
    REQUIRE(!v.empty());
    for (const auto& p : v) CHECK(std::hypot(p[0] - 0.5, p[1] + 1, p[2] - 2) < 1e-9);
  }
  CHECK(run({"export", "--config", write_config("sph_cusps", sphere), "--what", "cusps", "--out", sp}).code ==
        kExitConfigError);
}

TEST_CASE("symmetrize") {
  Json cfg = family(3, 3, 0);
  cfg["grid"] = {{"n_theta", 32}, {"n_phi", 64}};
  const std::string prefix = (scratch() / "tet").string();
  const Run r = run({"symmetrize", "--config", write_config("tet", cfg), "--out", prefix});
  REQUIRE(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j.at("order").get<int>() == 12);
  CHECK(j.at("width_max_dev").get<double>() < 1e-9);
  CHECK(j.at("invariance_dev").get<double>() < 1e-9);
  CHECK(j.at("I_at_limit").get<double>() < 32.0 / 35);
  CHECK(std::abs(j.at("I_at_limit").get<double>() - 0.8794644289) < 1e-2);
  const Run m = run({"measure", "--config", prefix + "_symmetrized.json"});
  REQUIRE(m.code == kExitOk);
  CHECK(m.json().at("ratio_I").get<double>() == doctest::Approx(j.at("ratio_I").get<double>()).epsilon(1e-11));

  const Run o = run({"symmetrize", "--config", write_config("tet", cfg), "--orientation", "0.9,0.1,-0.3,0.2"});
  REQUIRE(o.code == kExitOk);
  CHECK(o.json().at("width_max_dev").get<double>() < 1e-9);
  // The average is a ball plus a multiple of xyz, so the limit shape does
  // not depend on the orientation.
  CHECK(o.json().at("I_at_limit").get<double>() == doctest::Approx(197.0 / 224).epsilon(1e-10));
  CHECK(j.at("I_at_limit").get<double>() == doctest::Approx(197.0 / 224).epsilon(1e-10));
  // With the seed axis on a 2-fold axis of the tetrahedron the odd part of
  // the seed averages out and the result is a ball.
  CHECK(run({"symmetrize", "--config", write_config("tet", cfg), "--orientation", "1,0,0,0"}).code == kExitDegenerate);
}
