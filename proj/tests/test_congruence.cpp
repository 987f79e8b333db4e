#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cwidth/congruence.hpp"
#include "cwidth/errors.hpp"
#include "cwidth/measures.hpp"
#include "cwidth/symmetry.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cwidth;
using std::numbers::pi;

namespace {

double line_distance(const OrientedLine& L, const oracle::Vec3& c) {
  const EuclideanPoint p0 = line_to_point(L, 0.0);
  const oracle::Vec3 d{c[0] - p0.x(), c[1] - p0.y(), c[2] - p0.t};
  return oracle::norm(oracle::cross(d, oracle::unit_of(L.xi)));
}

void check_point(const EuclideanPoint& p, const oracle::Vec3& q, double tol) {
  CHECK(p.x() == doctest::Approx(q[0]).epsilon(tol));
  CHECK(p.y() == doctest::Approx(q[1]).epsilon(tol));
  CHECK(p.t == doctest::Approx(q[2]).epsilon(tol));
}

}  // namespace

TEST_CASE("normal lines") {
  const SupportFunction sphere = SupportFunction::sphere(1.0);
  CHECK(std::abs(normal_line(sphere, {Complex(0.3, 0.8)}).eta) < 1e-15);

  const SupportFunction moved = translate(sphere, Complex(0.4, -0.2), 1.1);
  std::mt19937_64 rng(201);
  for (int i = 0; i < 100; ++i) {
    const Complex xi = oracle::xi_of(oracle::random_unit(rng));
    CHECK(line_distance(normal_line(moved, {xi}), {0.4, -0.2, 1.1}) < 1e-12);
  }

  // On the real axis the normal line of a rotationally symmetric support has
  // eta = (1/4)(1 + R^2)^2 dr/dR.
  const SupportFunction fam = example_family(2.0, 1.5, 0.1);
  for (double R : {0.2, 0.7, 1.0, 1.8, 3.5}) {
    const double h = 1e-6;
    const double dr = (eval_jet(fam, DirectionCoord{R + h}).r - eval_jet(fam, DirectionCoord{R - h}).r) / (2 * h);
    const Complex eta = normal_line(fam, {R}).eta;
    CHECK(std::abs(eta.imag()) < 1e-14);
    CHECK(eta.real() == doctest::Approx(0.25 * (1 + R * R) * (1 + R * R) * dr).epsilon(1e-8));
  }
}

TEST_CASE("embedding matches the gradient of the support function") {
  std::mt19937_64 rng(203);
  const gen::CwInstance inst = gen::random_cw_instance(rng, 4, false);
  const std::vector<SupportFunction> cases = {
      example_family(2.0, 1.5, 0.1), inst.s, translate(inst.s, Complex(0.3, 0.1), -0.4),
      average_support(example_family(3, 3, 0.2), tetrahedral_group(), default_tetrahedral_orientation())};
  for (const auto& s : cases)
    for (int i = 0; i < 60; ++i) {
      const oracle::Vec3 n = oracle::random_unit(rng);
      const ChartPoint p = ChartPoint::from_vector(n);
      check_point(embed(s, p), oracle::surface_point(s, n), 1e-8);
    }
  // The south pole is reachable through the south chart.
  const SupportFunction fam = example_family(3, 3, 0);
  check_point(embed(fam, ChartPoint::south_pole()), oracle::surface_point(fam, {0, 0, -1}), 1e-8);
}

TEST_CASE("example family embedding") {
  // Sphere case a = b - 1: centre (0, 0, b - 3/2), radius C + 1/2.
  const double b = 2.2, C = 0.3;
  const SupportFunction s = example_family(b - 1, b, C);
  std::mt19937_64 rng(207);
  for (int i = 0; i < 500; ++i) {
    const EuclideanPoint p = embed(s, ChartPoint::from_vector(oracle::random_unit(rng)));
    const double d = std::hypot(p.x(), p.y(), p.t - (b - 1.5));
    CHECK(d == doctest::Approx(C + 0.5).epsilon(1e-12));
  }

  // Closed-form parametrization.
  const EuclideanPoint top = rotsym_parametric(3, 3, 0, 0.0, 0.0);
  CHECK(std::abs(top.z) < 1e-15);
  CHECK(top.t == doctest::Approx(3.0));
  // (12a + 4b - 12)/16 at a = b = 3
  CHECK(rotsym_parametric(3, 3, 0, 1.0, 0.0).t == doctest::Approx(2.25));
  const EuclideanPoint sph = rotsym_parametric(b - 1, b, C, 0.8, 1.1);
  CHECK(std::hypot(sph.x(), sph.y(), sph.t - (b - 1.5)) == doctest::Approx(C + 0.5));

  std::uniform_real_distribution<double> R(0.0, 4.0), T(0.0, 2 * pi);
  const SupportFunction fam = example_family(2.5, -1.0, 0.7);
  for (int i = 0; i < 100; ++i) {
    const double r = R(rng), th = T(rng);
    const EuclideanPoint a = embed(fam, DirectionCoord{std::polar(r, th)});
    const EuclideanPoint e = rotsym_parametric(2.5, -1.0, 0.7, r, th);
    CHECK(distance(a, e) < 1e-10);
  }
}

TEST_CASE("translation displaces the surface") {
  const SupportFunction s = example_family(2.0, 1.0, 0.4);
  const Complex pz(0.7, -1.2);
  const double pt = 0.9;
  const SupportFunction t = translate(s, pz, pt);
  std::mt19937_64 rng(209);
  for (int i = 0; i < 100; ++i) {
    const ChartPoint p = ChartPoint::from_vector(oracle::random_unit(rng));
    const EuclideanPoint d = embed(t, p) - embed(s, p);
    CHECK(std::abs(d.z - pz) < 1e-12);
    CHECK(d.t == doctest::Approx(pt).epsilon(1e-12));
  }
  const QuadratureGrid grid = build_quadrature(16, 32);
  CHECK(check_constant_width(t, grid).width == doctest::Approx(check_constant_width(s, grid).width));
}

TEST_CASE("meshes") {
  const SurfaceMesh m = mesh(SupportFunction::sphere(1.0), 16, 32);
  CHECK(m.vertices.size() == 16u * 32u + 2);
  CHECK(m.faces.size() == 2u * 32u * 16u);
  CHECK(m.convex);
  for (const auto& v : m.vertices) CHECK(v.norm() == doctest::Approx(0.5).epsilon(1e-12));

  double prev = 1.0;
  for (int n : {16, 32, 64}) {
    const double err = std::abs(mesh_volume(mesh(SupportFunction::sphere(1.0), n, 2 * n)) - pi / 6);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-3);

  // Non-convex bodies are flagged.
  CHECK_FALSE(mesh(example_family(3, 3, -0.2), 32, 64).convex);
}

TEST_CASE("OBJ and CSV output") {
  const SurfaceMesh m = mesh(example_family(3, 3, 0), 8, 8);
  std::ostringstream out;
  write_obj(out, m);
  std::istringstream in(out.str());
  std::string tag;
  std::size_t nv = 0, nf = 0;
  int max_index = 0, min_index = 1 << 30;
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    ls >> tag;
    if (tag == "v") {
      ++nv;
    } else if (tag == "f") {
      ++nf;
      for (int i = 0, k; i < 3; ++i) {
        ls >> k;
        max_index = std::max(max_index, k);
        min_index = std::min(min_index, k);
      }
    }
  }
  CHECK(nv == m.vertices.size());
  CHECK(nf == m.faces.size());
  CHECK(min_index == 1);
  CHECK(max_index == static_cast<int>(nv));

  std::ostringstream csv;
  write_cross_section_csv(csv, {0.0, 1.0}, {EuclideanPoint{0.0, 3.0}, EuclideanPoint{1.5, 0.25}});
  CHECK(csv.str() == "R,z,t\n0,0,3\n1,1.5,0.25\n");
  CHECK_THROWS_AS(write_cross_section_csv(csv, {0.0}, {}), InvalidInputError);

  const auto R = meridian_samples(8, {std::sqrt(3.0), 0.0});
  CHECK(std::is_sorted(R.begin(), R.end()));
  CHECK(std::find(R.begin(), R.end(), std::sqrt(3.0)) != R.end());
  CHECK(R.front() == 0.0);
}
