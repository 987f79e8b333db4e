#include "cwidth/measures.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "cwidth/errors.hpp"

namespace cwidth {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWidthTolerance = 1e-8;

double checked_width(const SupportFunction& s, const QuadratureGrid& grid) {
  const WidthReport rep = check_constant_width(s, grid);
  if (rep.max_dev > kWidthTolerance * std::max(1.0, std::abs(rep.width)))
    throw WidthViolationError("support function does not have constant width");
  return rep.width;
}

}  // namespace

double area(const SupportFunction& s, const QuadratureGrid& grid) {
  return grid.integrate([&](const QuadratureNode& n) {
    const LocalSlopes l = slopes(s.raw(n.point), n.point.w);
    const double a = l.r + l.psi;
    return a * a - std::norm(l.sigma);
  });
}

double volume_cw(const SupportFunction& s, const QuadratureGrid& grid) {
  const double w = checked_width(s, grid);
  return 0.5 * w * area(s, grid) - kPi * w * w * w / 3;
}

double mesh_volume(const SurfaceMesh& m) {
  // Every directed edge must be matched by its reverse exactly once.
  std::map<std::pair<int, int>, int> edges;
  const int nv = static_cast<int>(m.vertices.size());
  for (const auto& f : m.faces)
    for (int e = 0; e < 3; ++e) {
      const int a = f[e], b = f[(e + 1) % 3];
      if (a < 0 || a >= nv || b < 0 || b >= nv) throw InvalidInputError("face references a missing vertex");
      ++edges[{a, b}];
    }
  for (const auto& [e, count] : edges) {
    auto rev = edges.find({e.second, e.first});
    if (count != 1 || rev == edges.end() || rev->second != 1)
      throw InvalidInputError("mesh is not closed and consistently oriented");
  }
  double acc = 0.0;
  for (const auto& f : m.faces) {
    const auto& a = m.vertices[f[0]];
    const auto& b = m.vertices[f[1]];
    const auto& c = m.vertices[f[2]];
    // a . (b x c)
    acc += a.x() * (b.y() * c.t - b.t * c.y()) - a.y() * (b.x() * c.t - b.t * c.x()) +
           a.t * (b.x() * c.y() - b.y() * c.x());
  }
  return acc / 6.0;
}

double iso_ratio(const SupportFunction& s, const QuadratureGrid& grid) {
  const double w = checked_width(s, grid);
  if (w <= 0) throw DegenerateError("nonpositive width");
  const double vol = 0.5 * w * area(s, grid) - kPi * w * w * w / 3;
  return vol / (kPi * w * w * w / 6);
}

double width_deficit(const SupportFunction& s, const QuadratureGrid& grid) {
  const double w = checked_width(s, grid);
  return grid.integrate([&](const QuadratureNode& n) {
    const LocalSlopes l = slopes(s.raw(n.point), n.point.w);
    const double a = l.r - 0.5 * w + l.psi;
    return std::norm(l.sigma) - a * a;
  });
}

double dI_dC(const SupportFunction& s, const QuadratureGrid& grid) {
  const double w = checked_width(s, grid);
  if (w <= 0) throw DegenerateError("nonpositive width");
  return 12.0 * width_deficit(s, grid) / (kPi * w * w * w);
}

MeasureReport measure(const SupportFunction& s, const QuadratureGrid& grid) {
  MeasureReport rep;
  const WidthReport wr = check_constant_width(s, grid);
  rep.width = wr.width;
  rep.width_max_dev = wr.max_dev;
  const double w = wr.width;
  double A = 0.0, D = 0.0;
  for (const auto& n : grid.nodes()) {
    const LocalSlopes l = slopes(s.raw(n.point), n.point.w);
    const double a = l.r + l.psi;
    const double b = l.r - 0.5 * w + l.psi;
    A += n.weight * (a * a - std::norm(l.sigma));
    D += n.weight * (std::norm(l.sigma) - b * b);
    if (a - std::abs(l.sigma) < 0) rep.convex = false;
  }
  rep.area = A;
  rep.deficit = D;
  rep.volume = 0.5 * w * A - kPi * w * w * w / 3;
  rep.ratio_I = w > 0 ? rep.volume / (kPi * w * w * w / 6) : NAN;
  return rep;
}

}  // namespace cwidth
