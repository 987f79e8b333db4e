#include "cwidth/sphere_coords.hpp"

#include <cmath>
#include <numbers>

#include "cwidth/errors.hpp"

namespace cwidth {

namespace {

constexpr double kPi = std::numbers::pi;

using Mat2 = std::array<Complex, 4>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 conj(const Mat2& a) { return {std::conj(a[0]), std::conj(a[1]), std::conj(a[2]), std::conj(a[3])}; }

const Mat2 kIdentity{1.0, 0.0, 0.0, 1.0};
const Mat2 kSwap{0.0, 1.0, 1.0, 0.0};

Mat2 su2_matrix(const Quaternion& q) {
  auto [alpha, beta] = su2_entries(q);
  return {alpha, beta, -std::conj(beta), std::conj(alpha)};
}

}  // namespace

double EuclideanPoint::norm() const { return std::sqrt(std::norm(z) + t * t); }

double distance(const EuclideanPoint& a, const EuclideanPoint& b) { return (a - b).norm(); }

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion Quaternion::normalized() const {
  double n = norm();
  if (n == 0.0) throw InvalidInputError("zero quaternion");
  return {w / n, x / n, y / n, z / n};
}

Quaternion Quaternion::from_axis_angle(const std::array<double, 3>& axis, double angle) {
  double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (n == 0.0) throw InvalidInputError("zero rotation axis");
  double s = std::sin(angle / 2) / n;
  return {std::cos(angle / 2), axis[0] * s, axis[1] * s, axis[2] * s};
}

std::array<std::array<double, 3>, 3> Quaternion::rotation_matrix() const {
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
           {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
           {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

void RotationElement::validate() const {
  if (std::abs(q.norm() - 1.0) > 1e-12) throw InvalidInputError("rotation quaternion is not unit length");
}

RotationElement compose(const RotationElement& a, const RotationElement& b) {
  // Conjugating a rotation by the x2-reflection negates the x1 and x3
  // components of its axis and reverses the angle.
  Quaternion qb = b.q;
  if (a.improper) qb = {qb.w, -qb.x, qb.y, -qb.z};
  return {a.q * qb, a.improper != b.improper};
}

std::array<Complex, 2> su2_entries(const Quaternion& q) {
  return {Complex(q.w, q.z), Complex(q.y, -q.x)};
}

Complex MobiusMap::operator()(Complex u) const {
  Complex z = anti ? std::conj(u) : u;
  return (m[0] * z + m[1]) / (m[2] * z + m[3]);
}

Complex MobiusMap::derivative(Complex z) const {
  Complex den = m[2] * z + m[3];
  return (m[0] * m[3] - m[1] * m[2]) / (den * den);
}

Complex MobiusMap::second_derivative(Complex z) const {
  Complex den = m[2] * z + m[3];
  return -2.0 * m[2] * (m[0] * m[3] - m[1] * m[2]) / (den * den * den);
}

MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner) {
  return {mul(outer.m, outer.anti ? conj(inner.m) : inner.m), outer.anti != inner.anti};
}

ChartPoint ChartPoint::from_angles(double theta, double phi) {
  if (theta <= kPi / 2) return {Chart::North, std::polar(std::tan(theta / 2), phi)};
  return {Chart::South, std::polar(1.0 / std::tan(theta / 2), phi)};
}

ChartPoint ChartPoint::from_xi(Complex xi) {
  if (std::abs(xi) <= 1.0) return {Chart::North, xi};
  return {Chart::South, 1.0 / std::conj(xi)};
}

ChartPoint ChartPoint::from_vector(const std::array<double, 3>& n) {
  double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (len == 0.0) throw InvalidInputError("zero direction vector");
  Complex planar(n[0] / len, n[1] / len);
  double h = n[2] / len;
  if (h >= 0.0) return {Chart::North, planar / (1.0 + h)};
  return {Chart::South, planar / (1.0 - h)};
}

std::array<double, 3> ChartPoint::unit_vector() const {
  double u = std::norm(w);
  double s = chart == Chart::North ? 1.0 : -1.0;
  return {2 * w.real() / (1 + u), 2 * w.imag() / (1 + u), s * (1 - u) / (1 + u)};
}

SphereAngles ChartPoint::angles() const {
  double rho = std::abs(w);
  double phi = rho == 0.0 ? 0.0 : std::arg(w);
  if (phi < 0) phi += 2 * kPi;
  double half = std::atan(rho);
  return {chart == Chart::North ? 2 * half : kPi - 2 * half, phi};
}

Complex ChartPoint::xi() const {
  if (chart == Chart::North) return w;
  if (w == Complex(0.0)) throw ChartExitError("south direction has no north-chart coordinate");
  return 1.0 / std::conj(w);
}

ChartPoint ChartPoint::balanced() const {
  if (std::abs(w) <= 1.0) return *this;
  return {chart == Chart::North ? Chart::South : Chart::North, 1.0 / std::conj(w)};
}

ChartTransfer chart_transfer(const RotationElement& g, const ChartPoint& from) {
  // chart coordinate -> homogeneous north coordinate [x : y]
  MobiusMap to_xi = from.chart == Chart::North ? MobiusMap{kIdentity, false} : MobiusMap{kSwap, true};
  MobiusMap act{su2_matrix(g.q), g.improper};
  MobiusMap to_image = compose(act, to_xi);

  Complex z = to_image.anti ? std::conj(from.w) : from.w;
  Complex x = to_image.m[0] * z + to_image.m[1];
  Complex y = to_image.m[2] * z + to_image.m[3];
  if (std::abs(x) <= std::abs(y)) return {to_image, {Chart::North, x / y}};
  MobiusMap to_south{kSwap, true};
  return {compose(to_south, to_image), {Chart::South, std::conj(y / x)}};
}

DirectionCoord from_angles(const SphereAngles& a) {
  if (a.theta == kPi) throw ChartExitError("the south direction is outside the north chart");
  if (!(a.theta >= 0.0 && a.theta < kPi)) throw InvalidInputError("theta must lie in [0, pi)");
  return {std::polar(std::tan(a.theta / 2), a.phi)};
}

SphereAngles to_angles(const DirectionCoord& d) { return ChartPoint{Chart::North, d.xi}.angles(); }

DirectionCoord antipodal(const DirectionCoord& d) {
  if (d.xi == Complex(0.0)) throw ChartExitError("antipode of the north pole is the south direction");
  return {-1.0 / std::conj(d.xi)};
}

DirectionCoord moebius_rotate(const RotationElement& g, const DirectionCoord& d) {
  auto [alpha, beta] = su2_entries(g.q);
  Complex z = g.improper ? std::conj(d.xi) : d.xi;
  Complex den = -std::conj(beta) * z + std::conj(alpha);
  Complex num = alpha * z + beta;
  if (std::abs(den) <= 1e-300 * std::max(1.0, std::abs(num)))
    throw ChartExitError("rotation maps the direction to the south pole");
  return {num / den};
}

EuclideanPoint line_to_point(const OrientedLine& line, double r) {
  const Complex xi = line.xi;
  const Complex eta = line.eta;
  const double u = std::norm(xi);
  const double den = (1 + u) * (1 + u);
  Complex z = (2.0 * (eta - std::conj(eta) * xi * xi) + 2.0 * xi * (1 + u) * r) / den;
  double t = (-2.0 * (eta * std::conj(xi) + std::conj(eta) * xi).real() + (1 - u * u) * r) / den;
  return {z, t};
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    double wgt = 2.0 / ((1 - x * x) * dp * dp);
    nodes[n - 1 - i] = x;
    nodes[i] = -x;
    weights[i] = weights[n - 1 - i] = wgt;
  }
}

QuadratureGrid::QuadratureGrid(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta < 2 || n_phi < 4) throw InvalidInputError("quadrature needs n_theta >= 2 and n_phi >= 4");
  std::vector<double> x, wx;
  gauss_legendre(n_theta, x, wx);
  nodes_.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  const double dphi = 2 * kPi / n_phi;
  // theta ascending from the north pole: cos(theta) descending.
  for (int i = n_theta - 1; i >= 0; --i) {
    double theta = std::acos(x[i]);
    for (int j = 0; j < n_phi; ++j) {
      double phi = j * dphi;
      nodes_.push_back({theta, phi, wx[i] * dphi, ChartPoint::from_angles(theta, phi)});
    }
  }
}

QuadratureGrid build_quadrature(int n_theta, int n_phi) { return QuadratureGrid(n_theta, n_phi); }

}  // namespace cwidth
