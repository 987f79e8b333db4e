#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cwidth/measures.hpp"
#include "cwidth/symmetry.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cwidth;
using std::numbers::pi;

namespace {

const QuadratureGrid& grid() {
  static const QuadratureGrid g = build_quadrature(32, 64);
  return g;
}

// Vertex directions (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1), normalized.
std::vector<oracle::Vec3> vertices() {
  const double k = 1 / std::sqrt(3.0);
  return {{k, k, k}, {k, -k, -k}, {-k, k, -k}, {-k, -k, k}};
}

}  // namespace

TEST_CASE("tetrahedral group") {
  const PointGroup G = tetrahedral_group();
  CHECK(G.order() == 12);
  CHECK(G.is_closed());
  const auto V = vertices();
  for (const auto& g : G.elements) {
    std::vector<int> image;
    for (const auto& v : V) {
      const Complex x = moebius_rotate(g, DirectionCoord{oracle::xi_of(v)}).xi;
      int hit = -1;
      for (int j = 0; j < 4; ++j)
        if (std::abs(x - oracle::xi_of(V[j])) < 1e-12) hit = j;
      CHECK(hit >= 0);
      image.push_back(hit);
    }
    std::sort(image.begin(), image.end());
    CHECK(image == std::vector<int>{0, 1, 2, 3});
  }
  // The default orientation sends the x3-axis to a vertex.
  const auto e = oracle::apply(default_tetrahedral_orientation().rotation_matrix(), {0, 0, 1});
  for (int i = 0; i < 3; ++i) CHECK(e[i] == doctest::Approx(V[0][i]).epsilon(1e-14));
}

TEST_CASE("cyclic groups") {
  const PointGroup C1 = cyclic_group(1);
  REQUIRE(C1.order() == 1);
  const Complex x(0.3, -0.7);
  CHECK(std::abs(moebius_rotate(C1.elements[0], DirectionCoord{x}).xi - x) < 1e-15);
  for (int n : {2, 3, 5}) {
    CHECK(cyclic_group(n).order() == static_cast<std::size_t>(n));
    CHECK(cyclic_group(n).is_closed());
  }
  CHECK_THROWS(cyclic_group(0));
}

TEST_CASE("cyclic average equals the direct phi-average") {
  std::mt19937_64 rng(501);
  const gen::CwInstance inst = gen::random_cw_instance(rng, 3, false);
  for (int n : {2, 3, 4}) {
    const SupportFunction avg = average_support(inst.s, cyclic_group(n));
    for (int i = 0; i < 20; ++i) {
      const oracle::Vec3 v = oracle::random_unit(rng);
      double direct = 0;
      for (int k = 0; k < n; ++k) {
        const double a = 2 * pi * k / n;
        const oracle::Vec3 u{std::cos(a) * v[0] - std::sin(a) * v[1], std::sin(a) * v[0] + std::cos(a) * v[1], v[2]};
        direct += oracle::support_value(inst.s, u);
      }
      CHECK(oracle::support_value(avg, v) == doctest::Approx(direct / n).epsilon(1e-12));
    }
  }
}

TEST_CASE("trivial and spherical averages") {
  std::mt19937_64 rng(503);
  const gen::CwInstance inst = gen::random_cw_instance(rng, 4, false);
  const SupportFunction triv = average_support(inst.s, cyclic_group(1));
  const SupportFunction ball = average_support(SupportFunction::sphere(0.8), tetrahedral_group());
  for (int i = 0; i < 30; ++i) {
    const ChartPoint p = ChartPoint::from_vector(oracle::random_unit(rng));
    const RawJet a = inst.s.raw(p), b = triv.raw(p);
    CHECK(b.r == doctest::Approx(a.r).epsilon(1e-13));
    CHECK(std::abs(b.r_w - a.r_w) < 1e-12);
    CHECK(std::abs(b.r_ww - a.r_ww) < 1e-12);
    CHECK(ball.raw(p).r == doctest::Approx(0.4).epsilon(1e-13));
  }
}

TEST_CASE("tetrahedral average of the example family") {
  const SupportFunction seed = example_family(3, 3, 0);
  const PointGroup G = tetrahedral_group();
  const SupportFunction avg = average_support(seed, G, default_tetrahedral_orientation());
  const WidthReport wr = check_constant_width(avg, grid());
  CHECK(wr.max_dev < 1e-9);
  CHECK(wr.width == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(verify_invariance(avg, G, grid()) < 1e-9);
  CHECK(verify_invariance(seed, G, grid()) > 0.1);
  CHECK(verify_invariance(SupportFunction::sphere(1.0), G, grid()) < 1e-15);

  // Averaging commutes with shifts.
  const SupportFunction a1 = average_support(shift(seed, 0.3), G, default_tetrahedral_orientation());
  const SupportFunction a2 = shift(avg, 0.3);
  std::mt19937_64 rng(505);
  for (int i = 0; i < 30; ++i) {
    const ChartPoint p = ChartPoint::from_vector(oracle::random_unit(rng));
    CHECK(a1.raw(p).r == doctest::Approx(a2.raw(p).r).epsilon(1e-12));
  }
}

TEST_CASE("orientation changes the body but not its width") {
  const SupportFunction seed = example_family(4, 2, 0.5);
  const Quaternion q = Quaternion::from_axis_angle({0.2, -0.5, 0.8}, 0.9);
  const SupportFunction avg = average_support(seed, tetrahedral_group(), q);
  CHECK(check_constant_width(avg, grid()).max_dev < 1e-9);
  CHECK(check_constant_width(avg, grid()).width == doctest::Approx(check_constant_width(seed, grid()).width));
}
