#include "cwidth/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "cwidth/errors.hpp"

namespace cwidth {

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reversed(int n) const {
  if (n < degree()) throw InvalidInputError("reversal degree below polynomial degree");
  std::vector<double> r(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t k = 0; k < c_.size(); ++k) r[n - k] = c_[k];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::in_square() const {
  if (c_.empty()) return {};
  std::vector<double> r(2 * c_.size() - 1, 0.0);
  for (std::size_t k = 0; k < c_.size(); ++k) r[2 * k] = c_[k];
  return Polynomial(std::move(r));
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

Polynomial Polynomial::trimmed(double tol) const {
  double scale = max_abs_coeff();
  std::vector<double> r = c_;
  while (!r.empty() && std::abs(r.back()) <= tol * scale) r.pop_back();
  for (double& v : r)
    if (std::abs(v) <= tol * scale) v = 0.0;
  return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial operator*(double s, const Polynomial& a) {
  std::vector<double> r = a.c_;
  for (double& v : r) v *= s;
  return Polynomial(std::move(r));
}

Polynomial binomial_power(int m) {
  Polynomial p{1.0};
  for (int i = 0; i < m; ++i) p = p * Polynomial{1.0, 1.0};
  return p;
}

double root_bound(const Polynomial& p) {
  int n = p.degree();
  if (n < 1) return 0.0;
  double lead = std::abs(p[n]);
  double b = 0.0;
  for (int k = 1; k <= n; ++k) {
    double ratio = std::abs(p[n - k]) / lead;
    if (k == n) ratio /= 2;
    b = std::max(b, std::pow(ratio, 1.0 / k));
  }
  return 2 * b;
}

namespace {

double bisect(const Polynomial& p, double a, double b, double tol) {
  double fa = p(a);
  for (int i = 0; i < 200 && b - a > tol; ++i) {
    double mid = 0.5 * (a + b);
    double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Magnitude scale of p near x, used to judge whether p(x) is zero.
double local_scale(const Polynomial& p, double x) {
  double acc = 0.0;
  double ax = std::abs(x);
  for (int k = p.degree(); k >= 0; --k) acc = acc * ax + std::abs(p[k]);
  return acc;
}

}  // namespace

std::vector<double> real_roots(const Polynomial& p, double lo, double hi, double tol, double zero_tol) {
  std::vector<double> roots;
  if (p.is_zero()) throw DegenerateError("zero polynomial has no isolated roots");
  if (p.degree() == 0) return roots;
  if (p.degree() == 1) {
    double x = -p[0] / p[1];
    if (x >= lo && x <= hi) roots.push_back(x);
    return roots;
  }

  // Critical points split [lo, hi] into intervals where p is monotone.
  std::vector<double> cuts{lo};
  for (double c : real_roots(p.derivative(), lo, hi, tol, zero_tol))
    if (c > cuts.back()) cuts.push_back(c);
  if (hi > cuts.back()) cuts.push_back(hi);

  auto is_zero_at = [&](double x) { return std::abs(p(x)) <= zero_tol * local_scale(p, x); };
  auto push = [&](double x) {
    if (roots.empty() || x - roots.back() > 10 * tol) roots.push_back(x);
  };

  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (is_zero_at(cuts[i])) push(cuts[i]);
    if (i + 1 == cuts.size()) break;
    double a = cuts[i], b = cuts[i + 1];
    double fa = p(a), fb = p(b);
    if (is_zero_at(a) || is_zero_at(b)) continue;
    if ((fa < 0) != (fb < 0)) push(bisect(p, a, b, tol * std::max(1.0, std::abs(b))));
  }
  return roots;
}

BivariatePolynomial::BivariatePolynomial(int m)
    : m_(m), c_(static_cast<std::size_t>(m + 1) * (m + 1), Complex(0.0)) {
  if (m < 0) throw InvalidInputError("negative polynomial degree");
}

BivariatePolynomial::BivariatePolynomial(int m, std::vector<Complex> coeffs) : m_(m), c_(std::move(coeffs)) {
  if (m < 0 || c_.size() != static_cast<std::size_t>(m + 1) * (m + 1))
    throw InvalidInputError("coefficient matrix must be (m+1) x (m+1)");
}

BivariatePolynomial BivariatePolynomial::padded(int n) const {
  if (n < m_) throw InvalidInputError("cannot pad to a smaller degree");
  BivariatePolynomial r(n);
  for (int k = 0; k <= m_; ++k)
    for (int l = 0; l <= m_; ++l) r.at(k, l) = at(k, l);
  return r;
}

BivariatePolynomial BivariatePolynomial::reflected() const {
  BivariatePolynomial r(m_);
  for (int i = 0; i <= m_; ++i)
    for (int j = 0; j <= m_; ++j) r.at(i, j) = at(m_ - j, m_ - i);
  return r;
}

bool BivariatePolynomial::is_hermitian(double tol) const {
  double scale = std::max(1.0, max_abs_coeff());
  for (int k = 0; k <= m_; ++k)
    for (int l = 0; l <= m_; ++l)
      if (std::abs(at(k, l) - std::conj(at(l, k))) > tol * scale) return false;
  return true;
}

double BivariatePolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

BivariatePolynomial::Jet BivariatePolynomial::jet(Complex x, Complex y) const {
  std::vector<Complex> px(m_ + 1), py(m_ + 1);
  px[0] = py[0] = 1.0;
  for (int k = 1; k <= m_; ++k) {
    px[k] = px[k - 1] * x;
    py[k] = py[k - 1] * y;
  }
  auto pow_or_zero = [](const std::vector<Complex>& p, int e) { return e < 0 ? Complex(0.0) : p[e]; };
  Jet j{};
  for (int k = 0; k <= m_; ++k) {
    for (int l = 0; l <= m_; ++l) {
      const Complex c = at(k, l);
      if (c == Complex(0.0)) continue;
      const double dk = k, dl = l;
      j.value += c * px[k] * py[l];
      j.dx += c * dk * pow_or_zero(px, k - 1) * py[l];
      j.dy += c * dl * px[k] * pow_or_zero(py, l - 1);
      j.dxx += c * dk * (dk - 1) * pow_or_zero(px, k - 2) * py[l];
      j.dxy += c * dk * dl * pow_or_zero(px, k - 1) * pow_or_zero(py, l - 1);
    }
  }
  return j;
}

}  // namespace cwidth
