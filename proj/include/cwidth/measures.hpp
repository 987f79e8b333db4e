#pragma once

#include "cwidth/congruence.hpp"
#include "cwidth/support.hpp"

namespace cwidth {

struct MeasureReport {
  double area = 0.0;
  double volume = 0.0;
  double width = 0.0;
  double ratio_I = 0.0;
  double deficit = 0.0;
  // Not part of the serialized report.
  double width_max_dev = 0.0;
  bool convex = true;
};

/// Surface area: integral of (r + psi)^2 - |sigma|^2, the product of the
/// principal radii, over the round sphere.
double area(const SupportFunction& s, const QuadratureGrid& grid);

/// Blaschke's volume formula Vol = w A / 2 - pi w^3 / 3. Throws
/// WidthViolationError if the width deviation on the grid exceeds 1e-8.
double volume_cw(const SupportFunction& s, const QuadratureGrid& grid);

/// Enclosed volume of a closed oriented triangle mesh (divergence theorem).
/// Throws InvalidInputError for open or inconsistently oriented meshes.
double mesh_volume(const SurfaceMesh& m);

/// Volume over the volume pi w^3 / 6 of the ball of equal width.
double iso_ratio(const SupportFunction& s, const QuadratureGrid& grid);

/// D = integral of |sigma|^2 - (r - w/2 + psi)^2; A = pi w^2 - D for
/// constant-width bodies, and D >= 0 with equality only for spheres.
double width_deficit(const SupportFunction& s, const QuadratureGrid& grid);

/// Rate of change of the volume ratio under r -> r + C: 12 D / (pi w^3).
double dI_dC(const SupportFunction& s, const QuadratureGrid& grid);

MeasureReport measure(const SupportFunction& s, const QuadratureGrid& grid);

}  // namespace cwidth
