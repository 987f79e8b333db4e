#include "cwidth/support.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "cwidth/errors.hpp"

namespace cwidth {

LocalSlopes slopes(const RawJet& j, Complex w) {
  const double D = 1.0 + std::norm(w);
  LocalSlopes s;
  s.r = j.r;
  s.F = 0.5 * D * D * std::conj(j.r_w);
  s.psi = 0.5 * D * D * j.r_wwbar;
  s.sigma = -(D * std::conj(w) * j.r_w + 0.5 * D * D * j.r_ww);
  return s;
}

// --- RationalSupport -------------------------------------------------------

namespace {

RawJet quotient_jet(const BivariatePolynomial& P, const BivariatePolynomial& Q, Complex w) {
  const Complex wb = std::conj(w);
  const auto p = P.jet(w, wb);
  const auto q = Q.jet(w, wb);
  if (std::abs(q.value) == 0.0) throw InvalidInputError("support denominator vanishes");
  RawJet j;
  const Complex r = p.value / q.value;
  j.r = r.real();
  j.r_w = (p.dx - j.r * q.dx) / q.value;
  const Complex r_wb = std::conj(j.r_w);
  j.r_ww = (p.dxx - 2.0 * j.r_w * q.dx - j.r * q.dxx) / q.value;
  j.r_wwbar = ((p.dxy - j.r_w * q.dy - r_wb * q.dx - j.r * q.dxy) / q.value).real();
  return j;
}

}  // namespace

RationalSupport::RationalSupport(BivariatePolynomial P, BivariatePolynomial Q) {
  if (P.m() > Q.m()) throw InvalidInputError("numerator degree exceeds denominator degree");
  if (!P.is_hermitian(1e-12) || !Q.is_hermitian(1e-12))
    throw InvalidInputError("coefficient matrices must be Hermitian (real-valued polynomials)");
  P_ = P.padded(Q.m());
  Q_ = std::move(Q);
  P_south_ = P_.reflected();
  Q_south_ = Q_.reflected();
  if (Q_.max_abs_coeff() == 0.0) throw InvalidInputError("zero denominator");
  if (min_denominator(32, 64) <= 1e-12 * Q_.max_abs_coeff())
    throw InvalidInputError("denominator has zeros on the sphere");
}

RawJet RationalSupport::raw(const ChartPoint& p) const {
  return p.chart == Chart::North ? quotient_jet(P_, Q_, p.w) : quotient_jet(P_south_, Q_south_, p.w);
}

double RationalSupport::min_denominator(int n_theta, int n_phi) const {
  double best = INFINITY;
  auto probe = [&](const ChartPoint& p) {
    const auto& Q = p.chart == Chart::North ? Q_ : Q_south_;
    double scale = std::pow(1.0 + std::norm(p.w), m());
    best = std::min(best, std::abs(Q(p.w, std::conj(p.w))) / scale);
  };
  for (int i = 0; i <= n_theta; ++i) {
    double theta = M_PI * i / n_theta;
    for (int j = 0; j < (i == 0 || i == n_theta ? 1 : n_phi); ++j)
      probe(ChartPoint::from_angles(theta, 2 * M_PI * j / n_phi));
  }
  return best;
}

// --- RotSymSupport ---------------------------------------------------------

namespace {

struct ProfileDerivs {
  double g, g1, g2, g3;
};

ProfileDerivs profile(const Polynomial& p, const Polynomial& q, double u) {
  const Polynomial p1 = p.derivative(), p2 = p1.derivative(), p3 = p2.derivative();
  const Polynomial q1 = q.derivative(), q2 = q1.derivative(), q3 = q2.derivative();
  const double qv = q(u);
  if (qv == 0.0) throw InvalidInputError("support denominator vanishes");
  ProfileDerivs d{};
  d.g = p(u) / qv;
  d.g1 = (p1(u) - d.g * q1(u)) / qv;
  d.g2 = (p2(u) - 2 * d.g1 * q1(u) - d.g * q2(u)) / qv;
  d.g3 = (p3(u) - 3 * d.g2 * q1(u) - 3 * d.g1 * q2(u) - d.g * q3(u)) / qv;
  return d;
}

std::array<double, 4> radial(const ProfileDerivs& d, double R, double shift) {
  return {d.g + shift, 2 * R * d.g1, 2 * d.g1 + 4 * R * R * d.g2, 12 * R * d.g2 + 8 * R * R * R * d.g3};
}

}  // namespace

RotSymSupport::RotSymSupport(Polynomial p, Polynomial q, double shift)
    : p_(std::move(p)), q_(std::move(q)), shift_(shift) {
  if (q_.is_zero()) throw InvalidInputError("zero denominator");
  if (p_.degree() > q_.degree()) throw InvalidInputError("numerator degree exceeds denominator degree");
  const int n = q_.degree();
  p_south_ = p_.is_zero() ? Polynomial{} : p_.reversed(n);
  q_south_ = q_.reversed(n);
  if (q_(0.0) == 0.0 || q_south_(0.0) == 0.0) throw InvalidInputError("denominator vanishes at a pole");
  // q(u) > 0 is needed for every u >= 0; check the two halves u <= 1, u >= 1.
  for (const Polynomial* poly : {&q_, &q_south_}) {
    Polynomial t = poly->trimmed(1e-15);
    if (t.degree() >= 1 && !real_roots(t, 0.0, 1.0, 1e-14, 0.0).empty())
      throw InvalidInputError("denominator has a zero for some R >= 0");
  }
}

RawJet RotSymSupport::raw(const ChartPoint& pt) const {
  const double u = std::norm(pt.w);
  const bool north = pt.chart == Chart::North;
  const ProfileDerivs d = profile(north ? p_ : p_south_, north ? q_ : q_south_, u);
  const Complex wb = std::conj(pt.w);
  RawJet j;
  j.r = d.g + shift_;
  j.r_w = d.g1 * wb;
  j.r_ww = d.g2 * wb * wb;
  j.r_wwbar = d.g1 + u * d.g2;
  return j;
}

std::array<double, 4> RotSymSupport::radial_derivatives(double R) const {
  return radial(profile(p_, q_, R * R), R, shift_);
}

std::array<double, 4> RotSymSupport::radial_derivatives_south(double R) const {
  return radial(profile(p_south_, q_south_, R * R), R, shift_);
}

// --- SupportFunction nodes -------------------------------------------------

namespace detail {

struct SupportNode {
  virtual ~SupportNode() = default;
  virtual SupportKind kind() const = 0;
  virtual RawJet raw(const ChartPoint& p) const = 0;
};

namespace {

struct RationalNode final : SupportNode {
  explicit RationalNode(RationalSupport s) : support(std::move(s)) {}
  SupportKind kind() const override { return SupportKind::Rational; }
  RawJet raw(const ChartPoint& p) const override { return support.raw(p); }
  RationalSupport support;
};

struct RotSymNode final : SupportNode {
  explicit RotSymNode(RotSymSupport s) : support(std::move(s)) {}
  SupportKind kind() const override { return SupportKind::RotSym; }
  RawJet raw(const ChartPoint& p) const override { return support.raw(p); }
  RotSymSupport support;
};

struct ShiftNode final : SupportNode {
  ShiftNode(SupportFunction b, double c) : base(std::move(b)), amount(c) {}
  SupportKind kind() const override { return SupportKind::Shifted; }
  RawJet raw(const ChartPoint& p) const override {
    RawJet j = base.raw(p);
    j.r += amount;
    return j;
  }
  SupportFunction base;
  double amount;
};

struct TranslateNode final : SupportNode {
  TranslateNode(SupportFunction b, Complex z, double t) : base(std::move(b)), p_z(z), p_t(t) {}
  SupportKind kind() const override { return SupportKind::Translated; }
  RawJet raw(const ChartPoint& p) const override {
    RawJet j = base.raw(p);
    // The south chart sees the body mirrored in x3.
    const double pt = p.chart == Chart::North ? p_t : -p_t;
    const Complex w = p.w, wb = std::conj(w), pc = std::conj(p_z);
    const double u = std::norm(w);
    const double D = 1.0 + u;
    const double lin = (pc * w + p_z * wb).real();  // 2 Re(conj(p_z) w)
    j.r += lin / D + pt * (1 - u) / D;
    j.r_w += pc / D - lin * wb / (D * D) - 2.0 * pt * wb / (D * D);
    j.r_ww += -2.0 * pc * wb / (D * D) + 2.0 * lin * wb * wb / (D * D * D) + 4.0 * pt * wb * wb / (D * D * D);
    j.r_wwbar += -2.0 * lin / (D * D * D) + 2.0 * pt * (u - 1) / (D * D * D);
    return j;
  }
  SupportFunction base;
  Complex p_z;
  double p_t;
};

struct AverageNode final : SupportNode {
  AverageNode(SupportFunction b, std::vector<RotationElement> e) : base(std::move(b)), elements(std::move(e)) {}
  SupportKind kind() const override { return SupportKind::Averaged; }
  RawJet raw(const ChartPoint& p) const override {
    RawJet acc;
    for (const auto& g : elements) {
      const ChartTransfer tr = chart_transfer(g, p);
      const RawJet in = base.raw(tr.image);
      const Complex z = tr.map.anti ? std::conj(p.w) : p.w;
      const Complex d1 = tr.map.derivative(z);
      const Complex d2 = tr.map.second_derivative(z);
      acc.r += in.r;
      acc.r_wwbar += in.r_wwbar * std::norm(d1);
      if (!tr.map.anti) {
        acc.r_w += in.r_w * d1;
        acc.r_ww += in.r_ww * d1 * d1 + in.r_w * d2;
      } else {
        const Complex k1 = std::conj(d1), k2 = std::conj(d2);
        acc.r_w += std::conj(in.r_w) * k1;
        acc.r_ww += std::conj(in.r_ww) * k1 * k1 + std::conj(in.r_w) * k2;
      }
    }
    const double n = static_cast<double>(elements.size());
    acc.r /= n;
    acc.r_w /= n;
    acc.r_ww /= n;
    acc.r_wwbar /= n;
    return acc;
  }
  SupportFunction base;
  std::vector<RotationElement> elements;
};

}  // namespace
}  // namespace detail

SupportFunction SupportFunction::rational(RationalSupport s) {
  return SupportFunction(std::make_shared<detail::RationalNode>(std::move(s)));
}

SupportFunction SupportFunction::rotsym(RotSymSupport s) {
  return SupportFunction(std::make_shared<detail::RotSymNode>(std::move(s)));
}

SupportFunction SupportFunction::sphere(double width) {
  return rotsym(RotSymSupport(Polynomial{width / 2}, Polynomial{1.0}));
}

SupportFunction SupportFunction::averaged(SupportFunction base, std::vector<RotationElement> elements) {
  if (elements.empty()) throw InvalidInputError("averaging over an empty set of elements");
  for (const auto& g : elements) g.validate();
  return SupportFunction(std::make_shared<detail::AverageNode>(std::move(base), std::move(elements)));
}

SupportKind SupportFunction::kind() const { return node_->kind(); }

RawJet SupportFunction::raw(const ChartPoint& p) const { return node_->raw(p); }

const RationalSupport* SupportFunction::as_rational() const {
  auto* n = dynamic_cast<const detail::RationalNode*>(node_.get());
  return n ? &n->support : nullptr;
}

const RotSymSupport* SupportFunction::as_rotsym() const {
  auto* n = dynamic_cast<const detail::RotSymNode*>(node_.get());
  return n ? &n->support : nullptr;
}

const SupportFunction* SupportFunction::base() const {
  if (auto* n = dynamic_cast<const detail::ShiftNode*>(node_.get())) return &n->base;
  if (auto* n = dynamic_cast<const detail::TranslateNode*>(node_.get())) return &n->base;
  if (auto* n = dynamic_cast<const detail::AverageNode*>(node_.get())) return &n->base;
  return nullptr;
}

double SupportFunction::shift_amount() const {
  auto* n = dynamic_cast<const detail::ShiftNode*>(node_.get());
  return n ? n->amount : 0.0;
}

std::pair<Complex, double> SupportFunction::translation() const {
  auto* n = dynamic_cast<const detail::TranslateNode*>(node_.get());
  return n ? std::pair{n->p_z, n->p_t} : std::pair{Complex(0.0), 0.0};
}

const std::vector<RotationElement>* SupportFunction::group_elements() const {
  auto* n = dynamic_cast<const detail::AverageNode*>(node_.get());
  return n ? &n->elements : nullptr;
}

std::optional<RotSymSupport> SupportFunction::rotsym_profile() const {
  switch (kind()) {
    case SupportKind::RotSym:
      return *as_rotsym();
    case SupportKind::Shifted: {
      auto b = base()->rotsym_profile();
      if (!b) return std::nullopt;
      return b->shifted(shift_amount());
    }
    case SupportKind::Rational: {
      const auto& P = as_rational()->numerator();
      const auto& Q = as_rational()->denominator();
      std::vector<double> p(P.m() + 1), q(Q.m() + 1);
      for (int k = 0; k <= Q.m(); ++k) {
        for (int l = 0; l <= Q.m(); ++l) {
          if (k == l) continue;
          if (P.at(k, l) != Complex(0.0) || Q.at(k, l) != Complex(0.0)) return std::nullopt;
        }
        p[k] = P.at(k, k).real();
        q[k] = Q.at(k, k).real();
      }
      return RotSymSupport(Polynomial(p), Polynomial(q));
    }
    default:
      return std::nullopt;
  }
}

SupportFunction shift(const SupportFunction& s, double c) {
  return SupportFunction(std::make_shared<detail::ShiftNode>(s, c));
}

SupportFunction translate(const SupportFunction& s, Complex p_z, double p_t) {
  return SupportFunction(std::make_shared<detail::TranslateNode>(s, p_z, p_t));
}

// --- evaluation ------------------------------------------------------------

SupportJet eval_jet(const SupportFunction& s, const ChartPoint& p) {
  const RawJet raw = s.raw(p);
  const LocalSlopes local = slopes(raw, p.w);
  SupportJet j;
  j.r = raw.r;
  j.psi = local.psi;
  if (p.chart == Chart::North) {
    j.r_xi = raw.r_w;
    j.r_xixi = raw.r_ww;
    j.r_xixibar = raw.r_wwbar;
    j.F = local.F;
    j.sigma = local.sigma;
  } else {
    // xi = 1/conj(w): an antiholomorphic change of chart.
    const Complex w = p.w, wb = std::conj(w);
    if (w == Complex(0.0)) throw ChartExitError("south direction has no north-chart jet");
    j.r_xi = -wb * wb * std::conj(raw.r_w);
    j.r_xixi = std::conj(2.0 * w * w * w * raw.r_w + w * w * w * w * raw.r_ww);
    j.r_xixibar = std::norm(w) * std::norm(w) * raw.r_wwbar;
    j.F = -std::conj(local.F) / (wb * wb);
    j.sigma = (wb * wb) / (w * w) * std::conj(local.sigma);
  }
  j.r_xibar = std::conj(j.r_xi);
  return j;
}

SupportJet eval_jet(const SupportFunction& s, const DirectionCoord& xi) {
  return eval_jet(s, ChartPoint::from_xi(xi.xi));
}

double width_at(const SupportFunction& s, const ChartPoint& p) { return s.raw(p).r + s.raw(p.antipode()).r; }

double width_at(const SupportFunction& s, const DirectionCoord& xi) {
  return width_at(s, ChartPoint::from_xi(xi.xi));
}

WidthReport check_constant_width(const SupportFunction& s, const QuadratureGrid& grid) {
  std::vector<double> widths;
  widths.reserve(grid.size());
  WidthReport rep;
  double mass = 0.0, acc = 0.0;
  for (const auto& n : grid.nodes()) {
    const ChartPoint a = n.point.antipode();
    const RawJet here = s.raw(n.point);
    const RawJet there = s.raw(a);
    widths.push_back(here.r + there.r);
    acc += n.weight * widths.back();
    mass += n.weight;
    // Differentiated constant width: F at the antipode, read in the
    // opposite chart at -w, equals F here.
    const Complex f_here = slopes(here, n.point.w).F;
    const Complex f_there = slopes(there, a.w).F;
    rep.reflection_dev = std::max(rep.reflection_dev, std::abs(f_here - f_there));
  }
  rep.width = acc / mass;
  for (double w : widths) rep.max_dev = std::max(rep.max_dev, std::abs(w - rep.width));
  return rep;
}

// --- rational constant-width conditions ------------------------------------

namespace {

double sign_of(int k, int l) { return (k + l) % 2 == 0 ? 1.0 : -1.0; }

// Solves B[k][l] = K (-1)^{k+l} B[m-l][m-k]; nullopt when inconsistent.
// (xi conj(xi))^m Q(-1/conj(xi)) has coefficient (-1)^{k+l} B[m-l][m-k] at
// xi^k conj(xi)^l, so this says Q is mapped to Q / K by the antipode.
std::optional<double> palindromic_constant(const BivariatePolynomial& B, double tol) {
  const int m = B.m();
  const double scale = B.max_abs_coeff();
  std::optional<Complex> K;
  for (int k = 0; k <= m && !K; ++k)
    for (int l = 0; l <= m && !K; ++l) {
      const Complex b = B.at(k, l), partner = B.at(m - l, m - k);
      if (std::abs(b) > tol * scale && std::abs(partner) > tol * scale) K = sign_of(k, l) * b / partner;
    }
  if (!K || std::abs(K->imag()) > tol * std::max(1.0, std::abs(*K))) return std::nullopt;
  const double k_real = K->real();
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= m; ++l) {
      const Complex resid = B.at(k, l) - k_real * sign_of(k, l) * B.at(m - l, m - k);
      if (std::abs(resid) > tol * scale * std::max(1.0, std::abs(k_real))) return std::nullopt;
    }
  return k_real;
}

}  // namespace

RationalWidthReport check_rational_cw(const RationalSupport& s, double tol) {
  RationalWidthReport rep;
  const auto& A = s.numerator();
  const auto& B = s.denominator();
  const int m = B.m();
  auto K = palindromic_constant(B, tol);
  if (!K) return rep;
  rep.K = *K;

  const double scale = std::max({1.0, A.max_abs_coeff(), B.max_abs_coeff()});
  const double bscale = B.max_abs_coeff();
  std::optional<double> w;
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= m; ++l) {
      const Complex lhs = A.at(k, l) + sign_of(k, l) * rep.K * A.at(m - l, m - k);
      const Complex b = B.at(k, l);
      if (std::abs(b) > tol * bscale) {
        const Complex wk = lhs / b;
        if (std::abs(wk.imag()) > tol * scale) return rep;
        if (!w) {
          w = wk.real();
        } else if (std::abs(wk.real() - *w) > tol * scale * std::max(1.0, std::abs(*w))) {
          return rep;
        }
      } else if (std::abs(lhs) > tol * scale * std::max(1.0, std::abs(rep.K))) {
        return rep;
      }
    }
  rep.w = w.value_or(0.0);
  rep.is_cw = true;
  return rep;
}

RationalSupport make_cw_numerator(const BivariatePolynomial& B, const FreeCoefficients& free_entries, double w) {
  const int m = B.m();
  if (!B.is_hermitian(1e-12)) throw InvalidInputError("denominator coefficients must be Hermitian");
  const auto K = palindromic_constant(B, 1e-12);
  if (!K) throw InvalidInputError("denominator fails the antipodal palindromic condition");
  for (const auto& [kl, v] : free_entries)
    if (kl.first < 0 || kl.second < 0 || kl.first > m || kl.second > m)
      throw InvalidInputError("free coefficient index out of range");

  BivariatePolynomial A(m);
  std::vector<bool> done(static_cast<std::size_t>(m + 1) * (m + 1), false);
  auto mark = [&](int k, int l) { done[static_cast<std::size_t>(k) * (m + 1) + l] = true; };
  auto is_done = [&](int k, int l) { return done[static_cast<std::size_t>(k) * (m + 1) + l]; };
  const double eps = 1e-12;

  for (int k0 = 0; k0 <= m; ++k0)
    for (int l0 = 0; l0 <= m; ++l0) {
      if (is_done(k0, l0)) continue;
      const std::set<std::pair<int, int>> orbit{{k0, l0}, {l0, k0}, {m - k0, m - l0}, {m - l0, m - k0}};
      std::optional<std::pair<std::pair<int, int>, Complex>> given;
      for (const auto& idx : orbit) {
        auto it = free_entries.find(idx);
        if (it == free_entries.end()) continue;
        if (given) throw InvalidInputError("two free coefficients given for one index orbit");
        given = *it;
      }
      const auto [k, l] = given ? given->first : std::pair{k0, l0};
      Complex v = given ? given->second : Complex(0.0);
      const double s = sign_of(k, l);
      const Complex wb = w * B.at(k, l);

      if (k + l == m) {
        // Self-paired (anti-diagonal) entry: (1 + s K) A = w B.
        const double f = 1.0 + s * *K;
        if (std::abs(f) > eps) {
          const Complex forced = wb / f;
          if (given && std::abs(v - forced) > 1e-9 * std::max(1.0, std::abs(forced)))
            throw InvalidInputError("free anti-diagonal coefficient contradicts the width condition");
          v = forced;
        } else if (std::abs(wb) > eps * std::max(1.0, B.max_abs_coeff())) {
          throw InvalidInputError("anti-diagonal coefficient condition is unsatisfiable");
        }
        if (k == l) v = v.real();
        A.at(k, l) = v;
        A.at(l, k) = std::conj(v);
      } else {
        if (k == l) v = v.real();
        const Complex dep = s * (wb - v) / *K;
        A.at(k, l) = v;
        A.at(l, k) = std::conj(v);
        A.at(m - l, m - k) = dep;
        A.at(m - k, m - l) = std::conj(dep);
      }
      for (const auto& [a, b] : orbit) mark(a, b);
    }
  return RationalSupport(std::move(A), B);
}

RotSymSupport make_cw_numerator_rotsym(const Polynomial& B, const std::map<int, double>& free_entries, double w) {
  const int m = B.degree();
  for (int k = 0; k <= m; ++k)
    if (std::abs(B[k] - B[m - k]) > 1e-12 * B.max_abs_coeff())
      throw InvalidInputError("rotationally symmetric denominator must be palindromic");
  std::vector<double> A(m + 1, 0.0);
  std::vector<bool> done(m + 1, false);
  for (int k = 0; k <= m; ++k) {
    if (done[k]) continue;
    const int partner = m - k;
    auto it_k = free_entries.find(k), it_p = free_entries.find(partner);
    if (k == partner) {
      A[k] = w * B[k] / 2;
      if (it_k != free_entries.end() && std::abs(it_k->second - A[k]) > 1e-9 * std::max(1.0, std::abs(A[k])))
        throw InvalidInputError("free centre coefficient contradicts the width condition");
    } else if (it_k != free_entries.end() && it_p != free_entries.end()) {
      throw InvalidInputError("both coefficients of a pair given");
    } else if (it_p != free_entries.end()) {
      A[partner] = it_p->second;
      A[k] = w * B[k] - A[partner];
    } else {
      A[k] = it_k != free_entries.end() ? it_k->second : 0.0;
      A[partner] = w * B[k] - A[k];
    }
    done[k] = done[partner] = true;
  }
  return RotSymSupport(Polynomial(A), B);
}

RotSymSupport example_family_profile(double a, double b, double C) {
  return RotSymSupport(Polynomial{a, b, 3 - b, 1 - a}, Polynomial{1, 3, 3, 1}, C);
}

SupportFunction example_family(double a, double b, double C) {
  return SupportFunction::rotsym(example_family_profile(a, b, C));
}

}  // namespace cwidth
