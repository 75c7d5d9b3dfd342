#include "nonrigid/numerics/ode.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

#include "nonrigid/error.hpp"
#include "nonrigid/numerics/special.hpp"

namespace nonrigid::numerics {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex integrate_segment(const ComplexField& field, Complex y, const Segment& seg,
                          const QuadratureConfig& cfg) {
  if (segment_length(seg) == 0.0) return y;
  auto rhs = [&](double u, Complex yy) { return field(point_at(seg, u), yy) * tangent_at(seg, u); };

  const long budget = 50L * cfg.max_subdivisions;
  double u = 0.0;
  double h = 1.0 / 64;
  Complex k1 = rhs(u, y);
  long steps = 0;
  while (u < 1.0) {
    if (++steps > budget) {
      throw Error(ErrorKind::StepFailure, "step budget exhausted");
    }
    if (u + h > 1.0) h = 1.0 - u;
    if (h < 1e-14) {
      throw Error(ErrorKind::StepFailure, "step size underflow near x=" +
                                              std::to_string(std::abs(point_at(seg, u))));
    }
    const Complex k2 = rhs(u + c2 * h, y + h * (a21 * k1));
    const Complex k3 = rhs(u + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const Complex k4 = rhs(u + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Complex k5 = rhs(u + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Complex k6 =
        rhs(u + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Complex y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Complex k7 = rhs(u + h, y_new);
    const Complex err_vec = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double scale = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y), std::abs(y_new));
    const double err = finite(err_vec) && finite(y_new) ? std::abs(err_vec) / scale
                                                        : std::numeric_limits<double>::infinity();
    if (err <= 1.0) {
      u = (1.0 - u - h < 1e-15) ? 1.0 : u + h;
      y = y_new;
      k1 = k7;  // first-same-as-last
    }
    const double factor =
        err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= std::isfinite(factor) ? factor : 0.2;
  }
  return y;
}

}  // namespace

double gamma_half_integer(int a) {
  switch (a) {
    case 1: return std::sqrt(std::numbers::pi);
    case 2: return 1.0;
    case 3: return 0.5 * std::sqrt(std::numbers::pi);
    case 4: return 1.0;
    default:
      throw Error(ErrorKind::OutOfRange, "gamma_half_integer supports a in {1,2,3,4}, got " +
                                             std::to_string(a));
  }
}

Complex foliation_field(const FoliationParameter& alpha, Complex x, Complex y) noexcept {
  static const Complex inv_i_pi = 1.0 / Complex{0.0, std::numbers::pi};
  static const Complex inv_i_sqrt2pi = 1.0 / Complex{0.0, std::sqrt(2.0 * std::numbers::pi)};
  const Complex x2 = x * x;
  const Complex x3 = x2 * x;
  return (y - x2 * inv_i_pi - alpha.alpha * x3 * inv_i_sqrt2pi) / x3;
}

Complex integrate_along_path(const ComplexField& field, Complex y0, const Path& path,
                             const QuadratureConfig& cfg) {
  cfg.validate();
  Complex y = y0;
  for (const auto& seg : path.segments()) {
    y = integrate_segment(field, y, seg, cfg);
    if (!finite(y)) throw Error(ErrorKind::StepFailure, "solution left the finite range");
  }
  return y;
}

Complex ode_transport(const FoliationParameter& alpha, Complex start_x, Complex start_y,
                      const Path& path, const QuadratureConfig& cfg) {
  if (path.empty()) return start_y;
  if (path.removable_start() || path.removable_end()) {
    throw Error(ErrorKind::InvalidPath, "transport path may not touch x = 0");
  }
  const Complex p0 = path.start();
  if (std::abs(p0 - start_x) > 1e-12 * std::max(1.0, std::abs(start_x))) {
    throw Error(ErrorKind::InvalidPath, "transport path does not start at the given point");
  }
  return integrate_along_path(
      [&alpha](Complex x, Complex y) { return foliation_field(alpha, x, y); }, start_y, path, cfg);
}

}  // namespace nonrigid::numerics
