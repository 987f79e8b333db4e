#pragma once

#include <string>
#include <vector>

#include "cwidth/support.hpp"

namespace cwidth {

struct PointGroup {
  std::string name;
  std::vector<RotationElement> elements;

  std::size_t order() const { return elements.size(); }
  /// Identity present and closed under composition (quaternions up to sign).
  bool is_closed(double tol = 1e-10) const;
};

/// Rotations of the regular tetrahedron with vertices at the cube corners
/// (+-1, +-1, +-1) having an even number of minus signs.
PointGroup tetrahedral_group();

/// n rotations about the x3-axis.
PointGroup cyclic_group(int n);

/// Rotation taking the x3-axis to (1, 1, 1)/sqrt(3), a vertex direction of
/// the tetrahedron.
Quaternion default_tetrahedral_orientation();

/// r(n) = (1/#G) sum_g s(o^{-1} g n): the seed is first rotated by the
/// orientation o, then averaged. The result is G-invariant and keeps the
/// width of s.
SupportFunction average_support(const SupportFunction& s, const PointGroup& G,
                                const Quaternion& orientation = Quaternion{});

/// max over grid nodes and g in G of |r(g xi) - r(xi)|.
double verify_invariance(const SupportFunction& s, const PointGroup& G, const QuadratureGrid& grid);

}  // namespace cwidth
