#pragma once

#include <utility>
#include <vector>

#include "cwidth/support.hpp"

namespace cwidth {

/// Focal parameters along one normal line.
struct FocalData {
  double r_plus = 0.0;   // -psi + |sigma|
  double r_minus = 0.0;  // -psi - |sigma|
  double margin = 0.0;   // r - r_plus = r + psi - |sigma|; > 0 where locally convex
};

FocalData focal_radii(const SupportFunction& s, const DirectionCoord& xi);
FocalData focal_radii(const SupportFunction& s, const ChartPoint& p);

/// The two focal points (r_plus first, then r_minus) on the normal line.
std::pair<EuclideanPoint, EuclideanPoint> focal_points(const SupportFunction& s, const DirectionCoord& xi);
std::pair<EuclideanPoint, EuclideanPoint> focal_points(const SupportFunction& s, const ChartPoint& p);

/// Closed-form focal set of a rotationally symmetric congruence at
/// xi = R (the phi = 0 meridian): a point of the swept curve and a point on
/// the symmetry axis.
struct RotSymFocal {
  EuclideanPoint curve_point;
  EuclideanPoint axis_point;
};
/// Throws InvalidInputError for R <= 0 (the axis branch needs R > 0).
RotSymFocal rotsym_focal(const RotSymSupport& s, double R);

enum class FocalBranch { Plus, Minus };
/// Which generic focal branch (r_plus or r_minus) lies nearest to `point`
/// on the normal line of direction p.
FocalBranch nearest_branch(const SupportFunction& s, const ChartPoint& p, const EuclideanPoint& point);

struct MarginMinimum {
  double min_margin = 0.0;
  ChartPoint argmin;
  /// North-chart coordinate; throws ChartExitError if the argmin is the
  /// south pole.
  DirectionCoord argmin_xi() const { return {argmin.xi()}; }
};

/// Global minimum of the convexity margin: a scan seeded by the grid nodes
/// and both poles, then local refinement (golden section along a meridian for
/// rotationally symmetric supports, compass search otherwise).
MarginMinimum convexity_margin(const SupportFunction& s, const QuadratureGrid& grid);

struct ShrinkResult {
  double C_star = 0.0;      // shift that brings the body into contact with its focal set
  double I_at_limit = 0.0;  // volume ratio of the critical body
  double limit_width = 0.0;
  ChartPoint argmin;        // contact direction
};

/// Shrinks (or grows) a constant-width body along its normals until it just
/// touches its focal set. Throws DegenerateError if the width reaches zero
/// first (the sphere shrinks to a point).
ShrinkResult shrink_limit(const SupportFunction& s, const QuadratureGrid& margin_grid,
                          const QuadratureGrid& measure_grid);

/// Nonnegative roots R of (1 + R^2) r''' + 6 R r'' + 6 r' = 0, the cusps of
/// the focal set of a rotationally symmetric support. Throws DegenerateError
/// when the equation vanishes identically (umbilic spheres).
std::vector<double> rotsym_cusps(const RotSymSupport& s);

/// The left-hand side above at R, from the exact radial derivatives.
double rotsym_cusp_residual(const RotSymSupport& s, double R);

}  // namespace cwidth
