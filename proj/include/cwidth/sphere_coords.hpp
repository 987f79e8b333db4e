#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace cwidth {

using Complex = std::complex<double>;

/// Stereographic coordinate xi = tan(theta/2) e^{i phi} of a unit direction,
/// projected from the south pole. The south direction itself is not
/// representable; |xi| grows without bound as theta -> pi.
struct DirectionCoord {
  Complex xi{};
};

/// Spherical polar angles, theta in [0, pi), phi in [0, 2 pi).
struct SphereAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Oriented line (xi, eta): xi is the direction, eta the complex
/// perpendicular-displacement coordinate.
struct OrientedLine {
  Complex xi{};
  Complex eta{};
};

/// Point of E^3 as (z = x1 + i x2, t = x3).
struct EuclideanPoint {
  Complex z{};
  double t = 0.0;

  double x() const { return z.real(); }
  double y() const { return z.imag(); }
  double norm() const;
  EuclideanPoint operator+(const EuclideanPoint& o) const { return {z + o.z, t + o.t}; }
  EuclideanPoint operator-(const EuclideanPoint& o) const { return {z - o.z, t - o.t}; }
};

double distance(const EuclideanPoint& a, const EuclideanPoint& b);

struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  Quaternion normalized() const;
  static Quaternion from_axis_angle(const std::array<double, 3>& axis, double angle);
  /// Active rotation matrix (row-major).
  std::array<std::array<double, 3>, 3> rotation_matrix() const;
};

Quaternion operator*(const Quaternion& a, const Quaternion& b);

/// Element of O(3): the rotation q, optionally preceded by the reflection
/// x2 -> -x2 (which acts on xi as complex conjugation).
struct RotationElement {
  Quaternion q{};
  bool improper = false;

  /// Throws InvalidInputError unless |q| = 1 within 1e-12.
  void validate() const;
};

/// Composition a * b (apply b first).
RotationElement compose(const RotationElement& a, const RotationElement& b);

/// Which stereographic chart a ChartPoint lives in.
///   North: w = xi = tan(theta/2) e^{i phi}
///   South: w = 1/conj(xi) = cot(theta/2) e^{i phi}; this is the north
///          coordinate of the direction mirrored through the x1x2-plane.
enum class Chart { North, South };

/// A direction on S^2 in whichever chart keeps |w| <= 1 (or as given).
struct ChartPoint {
  Chart chart = Chart::North;
  Complex w{};

  static ChartPoint from_angles(double theta, double phi);
  static ChartPoint from_xi(Complex xi);
  static ChartPoint from_vector(const std::array<double, 3>& n);
  static ChartPoint south_pole() { return {Chart::South, 0.0}; }

  std::array<double, 3> unit_vector() const;
  /// Polar angles; phi = 0 at the poles.
  SphereAngles angles() const;
  /// The north-chart coordinate; throws ChartExitError at the south pole.
  Complex xi() const;
  /// The antipodal direction. Always representable: the antipode of a
  /// north point w is the south point -w and vice versa.
  ChartPoint antipode() const { return {chart == Chart::North ? Chart::South : Chart::North, -w}; }
  /// Re-expressed in the chart where |w| <= 1.
  ChartPoint balanced() const;
};

/// Holomorphic or antiholomorphic fractional linear map
/// v = (a z + b)/(c z + d) with z = u or z = conj(u).
struct MobiusMap {
  std::array<Complex, 4> m{1.0, 0.0, 0.0, 1.0};
  bool anti = false;

  Complex operator()(Complex u) const;
  /// First and second complex derivatives of the holomorphic part
  /// z -> (a z + b)/(c z + d), evaluated at z.
  Complex derivative(Complex z) const;
  Complex second_derivative(Complex z) const;
};

MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner);

/// SU(2) matrix entries (alpha, beta) for a unit quaternion:
/// alpha = q0 + i q3, beta = q2 - i q1.
std::array<Complex, 2> su2_entries(const Quaternion& q);

/// Map from the chart coordinate of `from` to the chart coordinate of the
/// image direction g(from), with the target chart chosen so that the image
/// has |v| <= 1.
struct ChartTransfer {
  MobiusMap map;
  ChartPoint image;
};
ChartTransfer chart_transfer(const RotationElement& g, const ChartPoint& from);

DirectionCoord from_angles(const SphereAngles& a);
SphereAngles to_angles(const DirectionCoord& d);
/// tau(xi) = -1/conj(xi). Throws ChartExitError for xi = 0.
DirectionCoord antipodal(const DirectionCoord& d);
/// Action of g on directions in the north chart.
/// Throws ChartExitError when the image is the south direction.
DirectionCoord moebius_rotate(const RotationElement& g, const DirectionCoord& d);

/// The map Phi: line (xi, eta) and affine parameter r to the point of E^3.
EuclideanPoint line_to_point(const OrientedLine& line, double r);

/// Reflection x3 -> -x3.
inline EuclideanPoint reflect_t(const EuclideanPoint& p) { return {p.z, -p.t}; }

struct QuadratureNode {
  double theta = 0.0;
  double phi = 0.0;
  double weight = 0.0;
  ChartPoint point;

  DirectionCoord direction() const { return {point.xi()}; }
};

/// Product rule on S^2: Gauss-Legendre in cos(theta), uniform in phi.
/// Weights integrate against the round area element (total mass 4 pi).
class QuadratureGrid {
 public:
  QuadratureGrid(int n_theta, int n_phi);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  const std::vector<QuadratureNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  const QuadratureNode& node(int i_theta, int i_phi) const {
    return nodes_[static_cast<std::size_t>(i_theta) * n_phi_ + i_phi];
  }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (const auto& n : nodes_) acc += n.weight * f(n);
    return acc;
  }

 private:
  int n_theta_;
  int n_phi_;
  std::vector<QuadratureNode> nodes_;
};

QuadratureGrid build_quadrature(int n_theta, int n_phi);

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace cwidth
