#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cwidth {

/// Real polynomial, coefficients in ascending powers.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<double> coeffs);  // NOLINT(google-explicit-constructor)
  Polynomial(std::initializer_list<double> coeffs) : Polynomial(std::vector<double>(coeffs)) {}

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }
  double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
  bool is_zero() const { return c_.empty(); }

  double operator()(double x) const;
  Polynomial derivative() const;
  /// x^n p(1/x) with n >= degree().
  Polynomial reversed(int n) const;
  /// p(x^2).
  Polynomial in_square() const;
  /// Drops trailing coefficients with |c| <= tol * max|c|.
  Polynomial trimmed(double tol) const;
  double max_abs_coeff() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& a);

 private:
  std::vector<double> c_;
};

Polynomial binomial_power(int m);  // (1 + x)^m

/// All real roots of p in [lo, hi], ascending, each refined to within `tol`.
/// Roots of even multiplicity are reported when |p| at a critical point is
/// below `zero_tol` relative to the coefficient scale.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi, double tol = 1e-13,
                               double zero_tol = 1e-12);

/// Upper bound on the magnitude of every root (Fujiwara).
double root_bound(const Polynomial& p);

/// Bivariate complex polynomial sum_{k,l} c[k][l] x^k y^l, stored as an
/// (m+1) x (m+1) row-major matrix.
class BivariatePolynomial {
 public:
  using Complex = std::complex<double>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(int m);
  BivariatePolynomial(int m, std::vector<Complex> coeffs);

  int m() const { return m_; }
  Complex& at(int k, int l) { return c_[static_cast<std::size_t>(k) * (m_ + 1) + l]; }
  Complex at(int k, int l) const { return c_[static_cast<std::size_t>(k) * (m_ + 1) + l]; }
  const std::vector<Complex>& coeffs() const { return c_; }

  /// Zero-padded copy of size n >= m.
  BivariatePolynomial padded(int n) const;
  /// c'[i][j] = c[m-j][m-i]: the polynomial (x y)^m p(1/y, 1/x).
  BivariatePolynomial reflected() const;
  bool is_hermitian(double tol) const;
  double max_abs_coeff() const;

  struct Jet {
    Complex value;
    Complex dx;
    Complex dy;
    Complex dxx;
    Complex dxy;
  };
  /// Value and exact partial derivatives at (x, y).
  Jet jet(Complex x, Complex y) const;
  Complex operator()(Complex x, Complex y) const { return jet(x, y).value; }

 private:
  int m_ = 0;
  std::vector<Complex> c_{Complex(0.0)};
};

}  // namespace cwidth
