#include "cwidth/focal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwidth/congruence.hpp"
#include "cwidth/errors.hpp"
#include "cwidth/measures.hpp"

namespace cwidth {

namespace {

constexpr double kPi = std::numbers::pi;

double margin_at(const SupportFunction& s, const ChartPoint& p) {
  const LocalSlopes l = slopes(s.raw(p), p.w);
  return l.r + l.psi - std::abs(l.sigma);
}

template <class F>
std::pair<double, double> golden_section(F&& f, double a, double b, double tol) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  // Endpoints may beat the interior (minimum on the boundary).
  std::pair<double, double> best{0.5 * (a + b), f(0.5 * (a + b))};
  for (double x : {a, b})
    if (double v = f(x); v < best.second) best = {x, v};
  return best;
}

std::array<double, 3> normalize(std::array<double, 3> v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

MarginMinimum refine_compass(const SupportFunction& s, const ChartPoint& seed, double step) {
  const auto n0 = seed.unit_vector();
  const std::array<double, 3> helper = std::abs(n0[2]) < 0.9 ? std::array<double, 3>{0, 0, 1}
                                                              : std::array<double, 3>{1, 0, 0};
  const auto e1 = normalize(cross(n0, helper));
  const auto e2 = cross(n0, e1);
  auto at = [&](double a, double b) {
    return ChartPoint::from_vector({n0[0] + a * e1[0] + b * e2[0], n0[1] + a * e1[1] + b * e2[1],
                                    n0[2] + a * e1[2] + b * e2[2]});
  };
  double a = 0, b = 0, best = margin_at(s, seed);
  static constexpr double dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  // Moves must beat rounding noise, otherwise the search can creep along a
  // flat valley at the smallest step.
  for (int moves = 0; step > 1e-10 && moves < 20000;) {
    bool moved = false;
    for (const auto& d : dirs) {
      const double na = a + step * d[0], nb = b + step * d[1];
      const double v = margin_at(s, at(na, nb));
      if (v < best - 1e-15 * (1 + std::abs(best))) {
        ++moves;
        best = v;
        a = na;
        b = nb;
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  return {best, at(a, b).balanced()};
}

MarginMinimum rotsym_margin(const SupportFunction& s) {
  constexpr int kScan = 4096;
  auto f = [&](double theta) { return margin_at(s, ChartPoint::from_angles(theta, 0.0)); };
  std::vector<double> vals(kScan + 1);
  for (int i = 0; i <= kScan; ++i) vals[i] = f(kPi * i / kScan);
  std::vector<int> minima;
  for (int i = 0; i <= kScan; ++i) {
    const bool left = i == 0 || vals[i] <= vals[i - 1];
    const bool right = i == kScan || vals[i] <= vals[i + 1];
    if (left && right) minima.push_back(i);
  }
  std::sort(minima.begin(), minima.end(), [&](int x, int y) { return vals[x] < vals[y]; });
  if (minima.size() > 8) minima.resize(8);
  MarginMinimum best{INFINITY, {}};
  for (int i : minima) {
    const double lo = kPi * std::max(0, i - 1) / kScan, hi = kPi * std::min(kScan, i + 1) / kScan;
    auto [theta, v] = golden_section(f, lo, hi, 1e-12);
    if (v < best.min_margin) best = {v, ChartPoint::from_angles(theta, 0.0)};
  }
  return best;
}

}  // namespace

FocalData focal_radii(const SupportFunction& s, const ChartPoint& p) {
  const LocalSlopes l = slopes(s.raw(p), p.w);
  const double a = std::abs(l.sigma);
  return {-l.psi + a, -l.psi - a, l.r + l.psi - a};
}

FocalData focal_radii(const SupportFunction& s, const DirectionCoord& xi) {
  return focal_radii(s, ChartPoint::from_xi(xi.xi));
}

std::pair<EuclideanPoint, EuclideanPoint> focal_points(const SupportFunction& s, const ChartPoint& p) {
  const LocalSlopes l = slopes(s.raw(p), p.w);
  const double a = std::abs(l.sigma);
  EuclideanPoint plus = line_to_point({p.w, l.F}, -l.psi + a);
  EuclideanPoint minus = line_to_point({p.w, l.F}, -l.psi - a);
  if (p.chart == Chart::South) return {reflect_t(plus), reflect_t(minus)};
  return {plus, minus};
}

std::pair<EuclideanPoint, EuclideanPoint> focal_points(const SupportFunction& s, const DirectionCoord& xi) {
  return focal_points(s, ChartPoint::from_xi(xi.xi));
}

RotSymFocal rotsym_focal(const RotSymSupport& s, double R) {
  if (!(R > 0)) throw InvalidInputError("axis branch requires R > 0");
  const auto d = s.radial_derivatives(R);
  const double r1 = d[1], r2 = d[2];
  const double R2 = R * R;
  RotSymFocal f;
  f.curve_point = {0.5 * (-R * (1 + R2) * r2 + (1 - 3 * R2) * r1),
                   0.25 * (-(1 - R2 * R2) * r2 - 2 * R * (3 - R2) * r1)};
  f.axis_point = {0.0, -(1 + R2) * (1 + R2) / (4 * R) * r1};
  return f;
}

FocalBranch nearest_branch(const SupportFunction& s, const ChartPoint& p, const EuclideanPoint& point) {
  const auto [plus, minus] = focal_points(s, p);
  return distance(plus, point) <= distance(minus, point) ? FocalBranch::Plus : FocalBranch::Minus;
}

MarginMinimum convexity_margin(const SupportFunction& s, const QuadratureGrid& grid) {
  if (s.rotsym_profile()) return rotsym_margin(s);

  const int nt = grid.n_theta(), np = grid.n_phi();
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = margin_at(s, grid.nodes()[i].point);

  // Discrete local minima over the (theta, phi) neighbourhood.
  std::vector<std::pair<double, ChartPoint>> seeds;
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < np; ++j) {
      const double v = vals[static_cast<std::size_t>(i) * np + j];
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          const int ii = i + di;
          if ((di == 0 && dj == 0) || ii < 0 || ii >= nt) continue;
          if (vals[static_cast<std::size_t>(ii) * np + (j + dj + np) % np] < v) {
            is_min = false;
            break;
          }
        }
      if (is_min) seeds.emplace_back(v, grid.node(i, j).point);
    }
  for (const ChartPoint& pole : {ChartPoint{Chart::North, 0.0}, ChartPoint::south_pole()})
    seeds.emplace_back(margin_at(s, pole), pole);
  std::sort(seeds.begin(), seeds.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  if (seeds.size() > 16) seeds.resize(16);

  const double step = kPi / nt;
  MarginMinimum best{INFINITY, {}};
  for (const auto& [v, p] : seeds) {
    MarginMinimum m = refine_compass(s, p, step);
    if (m.min_margin < best.min_margin) best = m;
  }
  return best;
}

ShrinkResult shrink_limit(const SupportFunction& s, const QuadratureGrid& margin_grid,
                          const QuadratureGrid& measure_grid) {
  const WidthReport wr = check_constant_width(s, measure_grid);
  if (wr.max_dev > 1e-8 * std::max(1.0, std::abs(wr.width)))
    throw WidthViolationError("shrinking requires a constant-width support");
  // psi and sigma do not change under r -> r + C, so the margin moves by C.
  const MarginMinimum mm = convexity_margin(s, margin_grid);
  ShrinkResult res;
  res.C_star = -mm.min_margin;
  res.argmin = mm.argmin;
  res.limit_width = wr.width + 2 * res.C_star;
  if (res.limit_width <= 1e-9 * std::max(1.0, std::abs(wr.width)))
    throw DegenerateError("body shrinks to a point before losing convexity");
  res.I_at_limit = iso_ratio(shift(s, res.C_star), measure_grid);
  return res;
}

double rotsym_cusp_residual(const RotSymSupport& s, double R) {
  const auto d = s.radial_derivatives(R);
  return (1 + R * R) * d[3] + 6 * R * d[2] + 6 * d[1];
}

std::vector<double> rotsym_cusps(const RotSymSupport& s) {
  // r(R) = N/D with N = p(R^2) + shift q(R^2), D = q(R^2). Successive
  // derivatives are N_k / D^{k+1}; clearing D^4 leaves a polynomial.
  // The cusp condition is dz/dR = dt/dR = 0 on the focal curve; both are
  // multiples of (1 + R^2) r''' + 6 R r'' + 6 r'.
  const Polynomial D = s.q().in_square();
  const Polynomial N = s.p().in_square() + s.shift() * D;
  const Polynomial Dp = D.derivative();
  const Polynomial N1 = N.derivative() * D - N * Dp;
  const Polynomial N2 = N1.derivative() * D - 2.0 * (N1 * Dp);
  const Polynomial N3 = N2.derivative() * D - 3.0 * (N2 * Dp);
  const Polynomial t1 = Polynomial{1, 0, 1} * N3;
  const Polynomial t2 = 6.0 * (Polynomial{0, 1} * N2 * D);
  const Polynomial t3 = 6.0 * (N1 * (D * D));
  const Polynomial E = t1 + t2 + t3;
  const double scale = std::max({t1.max_abs_coeff(), t2.max_abs_coeff(), t3.max_abs_coeff()});
  if (scale == 0.0 || E.max_abs_coeff() <= 1e-9 * scale)
    throw DegenerateError("cusp equation vanishes identically (umbilic sphere)");
  const Polynomial Et = E.trimmed(1e-12);
  return real_roots(Et, 0.0, std::max(1.0, root_bound(Et)), 1e-13, 1e-12);
}

}  // namespace cwidth
