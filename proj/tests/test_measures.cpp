#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cwidth/errors.hpp"
#include "cwidth/measures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cwidth;
using std::numbers::pi;

namespace {

const QuadratureGrid& grid() {
  static const QuadratureGrid g = build_quadrature(64, 128);
  return g;
}

// Unit cube [0,1]^3 as 12 outward triangles.
SurfaceMesh cube() {
  SurfaceMesh m;
  for (int i = 0; i < 8; ++i) m.vertices.push_back({Complex(i & 1, (i >> 1) & 1), static_cast<double>((i >> 2) & 1)});
  m.faces = {{0, 2, 1}, {1, 2, 3}, {4, 5, 6}, {5, 7, 6}, {0, 1, 4}, {1, 5, 4},
             {2, 6, 3}, {3, 6, 7}, {0, 4, 2}, {2, 4, 6}, {1, 3, 5}, {3, 7, 5}};
  return m;
}

}  // namespace

TEST_CASE("sphere calibration") {
  const SupportFunction s = SupportFunction::sphere(1.0);
  CHECK(area(s, grid()) == doctest::Approx(pi).epsilon(1e-12));
  CHECK(volume_cw(s, grid()) == doctest::Approx(pi / 6).epsilon(1e-12));
  CHECK(iso_ratio(s, grid()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(width_deficit(s, grid())) < 1e-12);
  CHECK(std::abs(dI_dC(s, grid())) < 1e-12);
}

TEST_CASE("example family closed forms") {
  const SupportFunction s = example_family(3, 3, 0);
  CHECK(area(s, grid()) == doctest::Approx(34 * pi / 35).epsilon(1e-10));
  CHECK(volume_cw(s, grid()) == doctest::Approx(16 * pi / 105).epsilon(1e-10));
  CHECK(iso_ratio(s, grid()) == doctest::Approx(32.0 / 35).epsilon(1e-10));
  CHECK(width_deficit(s, grid()) == doctest::Approx(pi / 35).epsilon(1e-10));
  CHECK(dI_dC(s, grid()) == doctest::Approx(12.0 / 35).epsilon(1e-10));
  CHECK(iso_ratio(example_family(2, 4, 1), grid()) == doctest::Approx(104.0 / 105).epsilon(1e-10));
  for (double C : {0.0, 0.3, 1.2})
    CHECK(width_deficit(example_family(2.5, 1.0, C), grid()) == doctest::Approx(pi * 2.5 * 2.5 / 35).epsilon(1e-10));
}

TEST_CASE("area equals the integral of the product of principal radii") {
  // Radii from finite differences of the homogeneous support function.
  std::mt19937_64 rng(301);
  const gen::CwInstance inst = gen::random_cw_instance(rng, 3, false);
  const QuadratureGrid g = build_quadrature(12, 24);
  for (const SupportFunction& s : {inst.s, example_family(2.0, 0.5, 0.6)}) {
    const double oracle_area = g.integrate([&](const QuadratureNode& n) {
      const auto k = oracle::principal_radii(s, n.point.unit_vector());
      return k[0] * k[1];
    });
    CHECK(area(s, g) == doctest::Approx(oracle_area).epsilon(1e-6));
  }
}

TEST_CASE("deficit identity and derivative") {
  std::mt19937_64 rng(303);
  for (int m = 2; m <= 5; ++m) {
    const gen::CwInstance inst = gen::random_cw_instance(rng, m, false);
    const double w = check_constant_width(inst.s, grid()).width;
    const double D = width_deficit(inst.s, grid());
    CHECK(D > 0);
    CHECK(area(inst.s, grid()) == doctest::Approx(pi * w * w - D).epsilon(1e-10));
    const double h = 1e-4;
    const double fd = (iso_ratio(shift(inst.s, h), grid()) - iso_ratio(shift(inst.s, -h), grid())) / (2 * h);
    CHECK(dI_dC(inst.s, grid()) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("measure report") {
  const SupportFunction s = example_family(4, 3, 0.5);
  const MeasureReport r = measure(s, grid());
  CHECK(r.area == doctest::Approx(area(s, grid())));
  CHECK(r.volume == doctest::Approx(volume_cw(s, grid())));
  CHECK(r.ratio_I == doctest::Approx(32.0 / 35).epsilon(1e-10));
  CHECK(r.width == doctest::Approx(2.0));
  CHECK(r.deficit == doctest::Approx(width_deficit(s, grid())));
  CHECK(r.width_max_dev < 1e-12);
}

TEST_CASE("width violations are rejected") {
  BivariatePolynomial A(1), B(1);
  A.at(0, 0) = 1.0;
  B.at(0, 0) = 1.0;
  B.at(1, 1) = 2.0;
  B = B.padded(2);
  B.at(2, 2) = 1.0;
  const SupportFunction s = SupportFunction::rational(RationalSupport(A, B));  // r = 1/(1 + |xi|^2)^2
  CHECK_THROWS_AS(volume_cw(s, grid()), WidthViolationError);
  CHECK_THROWS_AS(iso_ratio(s, grid()), WidthViolationError);
  CHECK_THROWS_AS(width_deficit(s, grid()), WidthViolationError);
  CHECK_NOTHROW(area(s, grid()));
}

TEST_CASE("mesh volume") {
  CHECK(mesh_volume(cube()) == doctest::Approx(1.0).epsilon(1e-14));
  SurfaceMesh open = cube();
  open.faces.pop_back();
  CHECK_THROWS_AS(mesh_volume(open), InvalidInputError);
  SurfaceMesh flipped = cube();
  std::swap(flipped.faces[0][1], flipped.faces[0][2]);
  CHECK_THROWS_AS(mesh_volume(flipped), InvalidInputError);

  for (const SupportFunction& s : {example_family(3, 3, 0), example_family(1, 0, 0.3)}) {
    const double blaschke = volume_cw(s, grid());
    const double coarse = std::abs(mesh_volume(mesh(s, 64, 128)) - blaschke) / blaschke;
    const double fine = std::abs(mesh_volume(mesh(s, 128, 256)) - blaschke) / blaschke;
    // Second-order convergence of the inscribed polyhedron.
    CHECK(coarse < 2e-3);
    CHECK(fine < coarse / 3);
  }
}
