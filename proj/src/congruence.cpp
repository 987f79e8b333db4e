#include "cwidth/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "cwidth/errors.hpp"

namespace cwidth {

OrientedLine normal_line(const SupportFunction& s, const DirectionCoord& xi) {
  return {xi.xi, eval_jet(s, xi).F};
}

EuclideanPoint point_on_normal(const SupportFunction& s, const ChartPoint& p, double r) {
  const LocalSlopes local = slopes(s.raw(p), p.w);
  const EuclideanPoint x = line_to_point({p.w, local.F}, r);
  return p.chart == Chart::North ? x : reflect_t(x);
}

EuclideanPoint embed(const SupportFunction& s, const ChartPoint& p) {
  const RawJet raw = s.raw(p);
  const LocalSlopes local = slopes(raw, p.w);
  const EuclideanPoint x = line_to_point({p.w, local.F}, raw.r);
  return p.chart == Chart::North ? x : reflect_t(x);
}

EuclideanPoint embed(const SupportFunction& s, const DirectionCoord& xi) {
  return embed(s, ChartPoint::from_xi(xi.xi));
}

EuclideanPoint rotsym_parametric(double a, double b, double C, double R, double theta) {
  if (R < 0) throw InvalidInputError("R must be nonnegative");
  const double R2 = R * R, R4 = R2 * R2, R6 = R4 * R2, R8 = R4 * R4;
  const double den = std::pow(1 + R2, 4);
  const double radial = ((a - b + 2 * C + 2) * (3 + R4) * R2 - (a - b - 2 * C) * (1 + 3 * R4)) * R / den;
  const double x3 = ((a - C - 1) * R8 + (5 * a - b - 2 * C - 2) * R6 + (6 * b - 9) * R4 +
                     (5 * a - b + 2 * C) * R2 + a + C) /
                    den;
  return {std::polar(radial, theta), x3};
}

namespace detail {

// Vertex 0 is the north pole, then rings in order of increasing theta,
// then the south pole.
std::vector<ChartPoint> sphere_vertices(int n_theta, int n_phi) {
  const QuadratureGrid grid(n_theta, n_phi);
  std::vector<ChartPoint> v;
  v.reserve(grid.size() + 2);
  v.push_back({Chart::North, 0.0});
  for (const auto& n : grid.nodes()) v.push_back(n.point);
  v.push_back(ChartPoint::south_pole());
  return v;
}

std::vector<std::array<int, 3>> sphere_faces(int n_theta, int n_phi) {
  std::vector<std::array<int, 3>> f;
  auto ring = [&](int i, int j) { return 1 + i * n_phi + (j % n_phi); };
  const int south = 1 + n_theta * n_phi;
  for (int j = 0; j < n_phi; ++j) f.push_back({0, ring(0, j), ring(0, j + 1)});
  for (int i = 0; i + 1 < n_theta; ++i)
    for (int j = 0; j < n_phi; ++j) {
      f.push_back({ring(i, j), ring(i + 1, j), ring(i + 1, j + 1)});
      f.push_back({ring(i, j), ring(i + 1, j + 1), ring(i, j + 1)});
    }
  for (int j = 0; j < n_phi; ++j) f.push_back({south, ring(n_theta - 1, j + 1), ring(n_theta - 1, j)});
  return f;
}

}  // namespace detail

SurfaceMesh mesh(const SupportFunction& s, int n_theta, int n_phi) {
  bool convex = true;
  SurfaceMesh m = mesh_with(n_theta, n_phi, [&](const ChartPoint& p) {
    const RawJet raw = s.raw(p);
    const LocalSlopes local = slopes(raw, p.w);
    if (raw.r + local.psi - std::abs(local.sigma) < 0) convex = false;
    const EuclideanPoint x = line_to_point({p.w, local.F}, raw.r);
    return p.chart == Chart::North ? x : reflect_t(x);
  });
  m.convex = convex;
  return m;
}

void write_obj(std::ostream& out, const SurfaceMesh& m) {
  char buf[128];
  for (const auto& v : m.vertices) {
    std::snprintf(buf, sizeof buf, "v %.9f %.9f %.9f\n", v.x(), v.y(), v.t);
    out << buf;
  }
  for (const auto& f : m.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void write_cross_section_csv(std::ostream& out, const std::vector<double>& R,
                             const std::vector<EuclideanPoint>& points) {
  if (R.size() != points.size()) throw InvalidInputError("cross-section sizes differ");
  out << "R,z,t\n";
  char buf[128];
  for (std::size_t i = 0; i < R.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", R[i], points[i].x(), points[i].t);
    out << buf;
  }
}

std::vector<double> meridian_samples(int n, const std::vector<double>& extra) {
  std::vector<double> R;
  for (int i = 0; i < n; ++i) R.push_back(std::tan(0.5 * M_PI * i / n));
  for (double e : extra)
    if (e >= 0) R.push_back(e);
  std::sort(R.begin(), R.end());
  R.erase(std::unique(R.begin(), R.end(), [](double a, double b) { return std::abs(a - b) < 1e-14; }), R.end());
  return R;
}

}  // namespace cwidth
