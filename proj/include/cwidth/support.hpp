#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cwidth/polynomial.hpp"
#include "cwidth/sphere_coords.hpp"

namespace cwidth {

/// Chart-native derivatives of a support function at a ChartPoint: r and its
/// Wirtinger derivatives in the chart coordinate w.
struct RawJet {
  double r = 0.0;
  Complex r_w{};
  Complex r_ww{};
  double r_wwbar = 0.0;
};

/// Support data at one direction, expressed in the north chart.
struct SupportJet {
  double r = 0.0;
  Complex r_xi{};
  Complex r_xibar{};
  Complex r_xixi{};
  Complex r_xixibar{};
  Complex F{};       // eta of the normal line, (1/2)(1 + |xi|^2)^2 dr/dxibar
  double psi = 0.0;  // (1/2)(1 + |xi|^2)^2 d2r/dxi dxibar
  Complex sigma{};   // -dFbar/dxi
};

/// Chart-native congruence data. `F` and `sigma` are valid in the chart of
/// the point they were computed at; `psi` and |sigma| are chart independent.
struct LocalSlopes {
  double r = 0.0;
  double psi = 0.0;
  Complex sigma{};
  Complex F{};
};

LocalSlopes slopes(const RawJet& j, Complex w);

/// r = P/Q with P, Q Hermitian (m+1) x (m+1) coefficient matrices in
/// (xi, conj xi). P is zero-padded to the size of Q.
class RationalSupport {
 public:
  RationalSupport(BivariatePolynomial P, BivariatePolynomial Q);

  int m() const { return Q_.m(); }
  const BivariatePolynomial& numerator() const { return P_; }
  const BivariatePolynomial& denominator() const { return Q_; }

  RawJet raw(const ChartPoint& p) const;
  /// Minimum of |Q| / (1 + |xi|^2)^m over a dense grid; > 0 for a valid support.
  double min_denominator(int n_theta = 64, int n_phi = 128) const;

 private:
  BivariatePolynomial P_, Q_;
  BivariatePolynomial P_south_, Q_south_;
};

/// Rotationally symmetric r = p(R^2)/q(R^2) + shift, R = |xi|.
class RotSymSupport {
 public:
  RotSymSupport(Polynomial p, Polynomial q, double shift = 0.0);

  const Polynomial& p() const { return p_; }
  const Polynomial& q() const { return q_; }
  double shift() const { return shift_; }
  RotSymSupport shifted(double c) const { return {p_, q_, shift_ + c}; }

  RawJet raw(const ChartPoint& p) const;
  /// r and its first three derivatives in R along a meridian.
  std::array<double, 4> radial_derivatives(double R) const;
  /// The same for the south chart profile (R = cot(theta/2)).
  std::array<double, 4> radial_derivatives_south(double R) const;

 private:
  Polynomial p_, q_;
  double shift_;
  Polynomial p_south_, q_south_;
};

namespace detail {
struct SupportNode;
}

enum class SupportKind { Rational, RotSym, Shifted, Translated, Averaged };

/// Immutable support function. Copies share the underlying representation.
class SupportFunction {
 public:
  static SupportFunction rational(RationalSupport s);
  static SupportFunction rotsym(RotSymSupport s);
  static SupportFunction sphere(double width);
  /// Average of base over the given O(3) elements, r(n) = mean_g base(g n).
  static SupportFunction averaged(SupportFunction base, std::vector<RotationElement> elements);

  SupportKind kind() const;
  RawJet raw(const ChartPoint& p) const;

  /// Profile of a rotationally symmetric support (rotsym, rational with
  /// diagonal coefficients, and shifts of those); nullopt otherwise.
  std::optional<RotSymSupport> rotsym_profile() const;

  /// Accessors for the variant payload.
  const RationalSupport* as_rational() const;
  const RotSymSupport* as_rotsym() const;
  const SupportFunction* base() const;
  double shift_amount() const;
  std::pair<Complex, double> translation() const;
  const std::vector<RotationElement>* group_elements() const;

  friend SupportFunction shift(const SupportFunction& s, double c);
  friend SupportFunction translate(const SupportFunction& s, Complex p_z, double p_t);

 private:
  explicit SupportFunction(std::shared_ptr<const detail::SupportNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::SupportNode> node_;
};

/// r' = r + c: moves every point a distance c along its outward normal.
SupportFunction shift(const SupportFunction& s, double c);
/// Support of the body translated by (p_z, p_t).
SupportFunction translate(const SupportFunction& s, Complex p_z, double p_t);

/// The support jet at direction xi; charts are switched internally so the
/// result stays well conditioned for large |xi|.
SupportJet eval_jet(const SupportFunction& s, const DirectionCoord& xi);
SupportJet eval_jet(const SupportFunction& s, const ChartPoint& p);

/// w = r(xi) + r(tau xi). Defined at every direction, the north pole included.
double width_at(const SupportFunction& s, const DirectionCoord& xi);
double width_at(const SupportFunction& s, const ChartPoint& p);

struct WidthReport {
  double max_dev = 0.0;      // max |w(xi) - mean width|
  double width = 0.0;        // mean width over the grid
  double reflection_dev = 0.0;  // max deviation from F(tau xi) = -conj(F(xi))/conj(xi)^2
};
WidthReport check_constant_width(const SupportFunction& s, const QuadratureGrid& grid);

struct RationalWidthReport {
  bool is_cw = false;
  double K = 0.0;
  double w = 0.0;
};
RationalWidthReport check_rational_cw(const RationalSupport& s, double tol = 1e-12);

/// Entries of the numerator chosen freely, keyed by (k, l). Each index
/// orbit {(k,l), (l,k), (m-k,m-l), (m-l,m-k)} takes its value from at most
/// one entry; orbits without an entry start from zero. Anti-diagonal
/// entries (k + l = m) are fixed by the width condition; a given value
/// must agree with it.
using FreeCoefficients = std::map<std::pair<int, int>, Complex>;

/// Numerator completing B to a rational support of constant width w.
RationalSupport make_cw_numerator(const BivariatePolynomial& B, const FreeCoefficients& free_entries, double w);

/// Rotationally symmetric variant: B and the free A_k are coefficients of
/// powers of R^2.
RotSymSupport make_cw_numerator_rotsym(const Polynomial& B, const std::map<int, double>& free_entries, double w);

/// r = (a + b R^2 + (3-b) R^4 + (1-a) R^6)/(1 + R^2)^3 + C; width 1 + 2C.
SupportFunction example_family(double a, double b, double C);
RotSymSupport example_family_profile(double a, double b, double C);

}  // namespace cwidth
