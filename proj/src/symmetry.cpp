#include "cwidth/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwidth/errors.hpp"

namespace cwidth {

namespace {

bool same_element(const RotationElement& a, const RotationElement& b, double tol) {
  if (a.improper != b.improper) return false;
  const double plus = std::abs(a.q.w - b.q.w) + std::abs(a.q.x - b.q.x) + std::abs(a.q.y - b.q.y) +
                      std::abs(a.q.z - b.q.z);
  const double minus = std::abs(a.q.w + b.q.w) + std::abs(a.q.x + b.q.x) + std::abs(a.q.y + b.q.y) +
                       std::abs(a.q.z + b.q.z);
  return std::min(plus, minus) <= tol;
}

}  // namespace

bool PointGroup::is_closed(double tol) const {
  auto contains = [&](const RotationElement& g) {
    return std::any_of(elements.begin(), elements.end(), [&](const auto& e) { return same_element(e, g, tol); });
  };
  if (!contains(RotationElement{})) return false;
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!contains(compose(a, b))) return false;
  return true;
}

PointGroup tetrahedral_group() {
  PointGroup g{"tetrahedral", {}};
  g.elements.push_back({Quaternion{1, 0, 0, 0}, false});
  // Half turns about the coordinate axes.
  g.elements.push_back({Quaternion{0, 1, 0, 0}, false});
  g.elements.push_back({Quaternion{0, 0, 1, 0}, false});
  g.elements.push_back({Quaternion{0, 0, 0, 1}, false});
  // Third turns about the body diagonals.
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) g.elements.push_back({Quaternion{0.5, 0.5 * sx, 0.5 * sy, 0.5 * sz}, false});
  return g;
}

PointGroup cyclic_group(int n) {
  if (n < 1) throw InvalidInputError("cyclic group order must be >= 1");
  PointGroup g{"cyclic", {}};
  for (int k = 0; k < n; ++k)
    g.elements.push_back({Quaternion::from_axis_angle({0, 0, 1}, 2 * std::numbers::pi * k / n), false});
  return g;
}

Quaternion default_tetrahedral_orientation() {
  // Axis e3 x (1,1,1) = (-1, 1, 0); angle between e3 and the diagonal.
  return Quaternion::from_axis_angle({-1.0, 1.0, 0.0}, std::acos(1.0 / std::sqrt(3.0)));
}

SupportFunction average_support(const SupportFunction& s, const PointGroup& G, const Quaternion& orientation) {
  if (G.elements.empty()) throw InvalidInputError("empty point group");
  const RotationElement inv{orientation.normalized().conjugate(), false};
  std::vector<RotationElement> elements;
  elements.reserve(G.order());
  for (const auto& g : G.elements) elements.push_back(compose(inv, g));
  return SupportFunction::averaged(s, std::move(elements));
}

double verify_invariance(const SupportFunction& s, const PointGroup& G, const QuadratureGrid& grid) {
  double dev = 0.0;
  for (const auto& n : grid.nodes()) {
    const double here = s.raw(n.point).r;
    for (const auto& g : G.elements) {
      const ChartTransfer tr = chart_transfer(g, n.point);
      dev = std::max(dev, std::abs(s.raw(tr.image).r - here));
    }
  }
  return dev;
}

}  // namespace cwidth
