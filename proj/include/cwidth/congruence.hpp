#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "cwidth/support.hpp"

namespace cwidth {

/// Triangulated surface with one vertex per generating direction.
struct SurfaceMesh {
  std::vector<EuclideanPoint> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<ChartPoint> directions;  // generating direction of each vertex
  bool convex = true;                  // false if some vertex has negative margin
};

/// The oriented normal line with direction xi: eta = F(xi, conj xi).
OrientedLine normal_line(const SupportFunction& s, const DirectionCoord& xi);

/// Surface point with outward normal xi.
EuclideanPoint embed(const SupportFunction& s, const DirectionCoord& xi);
EuclideanPoint embed(const SupportFunction& s, const ChartPoint& p);

/// Point on the normal line of direction p at affine parameter r (measured
/// from the foot of the perpendicular from the origin).
EuclideanPoint point_on_normal(const SupportFunction& s, const ChartPoint& p, double r);

/// Closed-form surface point of the example family at xi = R e^{i theta}.
EuclideanPoint rotsym_parametric(double a, double b, double C, double R, double theta);

/// Triangulates the surface over the quadrature grid nodes plus two pole
/// caps. Faces are oriented so that normals point outward.
SurfaceMesh mesh(const SupportFunction& s, int n_theta, int n_phi);

/// Same connectivity with vertices chosen by `place`.
template <class Place>
SurfaceMesh mesh_with(int n_theta, int n_phi, Place&& place);

void write_obj(std::ostream& out, const SurfaceMesh& m);

/// Meridian cross-section at phi = 0: rows "R,z,t" for each R (R = tan(theta/2)),
/// where z is x1 and t is x3 of the surface point.
void write_cross_section_csv(std::ostream& out, const std::vector<double>& R,
                             const std::vector<EuclideanPoint>& points);

/// Sample parameters R for a meridian: n uniform polar angles in [0, pi)
/// merged with the extra values, ascending.
std::vector<double> meridian_samples(int n, const std::vector<double>& extra = {});

// --- implementation ---

namespace detail {
std::vector<std::array<int, 3>> sphere_faces(int n_theta, int n_phi);
std::vector<ChartPoint> sphere_vertices(int n_theta, int n_phi);
}  // namespace detail

template <class Place>
SurfaceMesh mesh_with(int n_theta, int n_phi, Place&& place) {
  SurfaceMesh m;
  m.directions = detail::sphere_vertices(n_theta, n_phi);
  m.vertices.reserve(m.directions.size());
  for (const auto& d : m.directions) m.vertices.push_back(place(d));
  m.faces = detail::sphere_faces(n_theta, n_phi);
  return m;
}

}  // namespace cwidth
