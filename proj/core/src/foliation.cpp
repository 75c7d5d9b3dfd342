#include "nonrigid/foliation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nonrigid/error.hpp"
#include "nonrigid/numerics/special.hpp"

namespace nonrigid::foliation {

namespace {

using numerics::Arc;
using numerics::Line;
using numerics::Segment;

constexpr double kPi = std::numbers::pi;
constexpr double kHalfAperture = 3.0 * kPi / 4.0;
constexpr Complex kI{0.0, 1.0};

const Complex kInvIPi = 1.0 / Complex{0.0, kPi};
const Complex kInvISqrt2Pi = 1.0 / Complex{0.0, std::sqrt(2.0 * kPi)};

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

void require_nonzero(Complex x, const char* what) {
  if (x == Complex{0.0, 0.0}) {
    throw Error(ErrorKind::ZeroInput, std::string(what) + " requires x != 0");
  }
}

// h(z) exp(E(z) - shift) / z, returning 0 where the exponential underflows.
Complex shifted_integrand(const FoliationParameter& alpha, Complex z, Complex shift) {
  if (std::abs(z) < 1e-150) return Complex{0.0, 0.0};
  const Complex w = 1.0 / z;
  const Complex e = 0.5 * w * w - shift;
  if (!(e.real() > -745.0)) return Complex{0.0, 0.0};
  const Complex h = kInvIPi + alpha.alpha * z * kInvISqrt2Pi;
  return h * std::exp(e) * w;
}

void check_leaf_domain(Sector tag, Complex x, const LeafConfig& cfg) {
  require_nonzero(x, "leaf evaluation");
  if (!sector_contains(tag, x, cfg.aperture_slack)) {
    throw Error(ErrorKind::OutsideSector,
                "x=" + fmt(x) + " is outside sector " + (tag == Sector::Plus ? "+" : "-"));
  }
  const double r = std::abs(x);
  if (r < cfg.r_min || r > cfg.r_max) {
    std::ostringstream os;
    os << "|x|=" << r << " outside evaluation annulus [" << cfg.r_min << ", " << cfg.r_max << "]";
    throw Error(ErrorKind::OutsideAnnulus, os.str());
  }
}

}  // namespace

NormalizedData convert_from_original(Complex alpha_orig, std::optional<Complex> y_orig) {
  NormalizedData out;
  out.alpha = std::sqrt(2.0 / kPi) * alpha_orig;
  // Original y equals -i pi times the normalized y.
  if (y_orig) out.y = *y_orig / Complex{0.0, -kPi};
  return out;
}

double sector_offset(Sector tag, Complex x) {
  require_nonzero(x, "sector_offset");
  return wrap_angle(std::arg(x) - sector_center(tag));
}

bool sector_contains(Sector tag, Complex x) { return sector_contains(tag, x, 0.0); }

bool sector_contains(Sector tag, Complex x, double slack) {
  return std::abs(sector_offset(tag, x)) < kHalfAperture + slack;
}

Path base_path(Sector tag, Complex x) {
  require_nonzero(x, "base_path");
  if (!sector_contains(tag, x)) {
    throw Error(ErrorKind::OutsideSector, "base_path: x=" + fmt(x) + " outside the sector");
  }
  const double r = std::abs(x);
  const double center = sector_center(tag);
  const double d = sector_offset(tag, x);
  std::vector<Segment> segs;
  segs.emplace_back(Line{Complex{0.0, 0.0}, std::polar(r, center)});
  if (d != 0.0) segs.emplace_back(Arc{Complex{0.0, 0.0}, r, center, center + d});
  return Path(std::move(segs), /*removable_start=*/true);
}

Path integration_path(Sector tag, Complex x, double detour_radius) {
  require_nonzero(x, "integration_path");
  const double r = std::abs(x);
  const double center = sector_center(tag);
  const double d = sector_offset(tag, x);
  std::vector<Segment> segs;
  if (std::abs(d) <= kPi / 2) {
    segs.emplace_back(Line{Complex{0.0, 0.0}, std::polar(r, center)});
    if (d != 0.0) segs.emplace_back(Arc{Complex{0.0, 0.0}, r, center, center + d});
  } else {
    const double outer = std::max(r, detour_radius);
    segs.emplace_back(Line{Complex{0.0, 0.0}, std::polar(outer, center)});
    segs.emplace_back(Arc{Complex{0.0, 0.0}, outer, center, center + d});
    if (outer > r) segs.emplace_back(Line{std::polar(outer, center + d), x});
  }
  return Path(std::move(segs), /*removable_start=*/true);
}

SectorialIntegral sectorial_integral(const FoliationParameter& alpha, Sector tag, Complex x,
                                     const LeafConfig& cfg) {
  check_leaf_domain(tag, x, cfg);
  const Complex shift = exponent_at(x);
  const Path path = integration_path(tag, x);
  const auto res = numerics::integrate_path(
      [&](Complex z) { return shifted_integrand(alpha, z, shift); }, path, cfg.quad);
  return SectorialIntegral{res.value, shift, res.error_estimate};
}

Complex weak_separatrix(const FoliationParameter& alpha, Sector tag, Complex x,
                        const LeafConfig& cfg) {
  return -sectorial_integral(alpha, tag, x, cfg).shifted;
}

Complex leaf_value(const FoliationParameter& alpha, Sector tag, Complex c, Complex x,
                   const LeafConfig& cfg) {
  const auto si = sectorial_integral(alpha, tag, x, cfg);
  if (-si.exponent.real() > 700.0) {
    throw Error(ErrorKind::Overflow, "exp(-1/(2x^2)) overflows at x=" + fmt(x));
  }
  const Complex y = c * std::exp(-si.exponent) - si.shifted;
  if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) {
    throw Error(ErrorKind::Overflow, "leaf value not representable at x=" + fmt(x));
  }
  return y;
}

Complex leaf_invert(const FoliationParameter& alpha, Sector tag, Complex x, Complex y,
                    const LeafConfig& cfg) {
  const auto si = sectorial_integral(alpha, tag, x, cfg);
  if (si.exponent.real() > cfg.exponent_cap) {
    std::ostringstream os;
    os << "Re(1/(2x^2))=" << si.exponent.real() << " exceeds cap " << cfg.exponent_cap;
    throw Error(ErrorKind::Overflow, os.str());
  }
  // c = y exp(1/(2x^2)) + I(x) with I(x) = J(x) exp(1/(2x^2)).
  return (y + si.shifted) * std::exp(si.exponent);
}

Complex weak_separatrix_from_infinity(const FoliationParameter& alpha, Sector tag, Complex s,
                                      const QuadratureConfig& quad) {
  require_nonzero(s, "weak_separatrix_from_infinity");
  if (std::abs(s) > 1.0) {
    throw Error(ErrorKind::OutOfRange, "ray representation needs |s| <= 1");
  }
  const Complex x = 1.0 / s;
  if (!sector_contains(tag, x, 0.5)) {
    throw Error(ErrorKind::OutsideSector, "1/s outside the sector for s=" + fmt(s));
  }
  const double a = s.real();
  const double b = s.imag();
  const double down = tag == Sector::Plus ? 1.0 : -1.0;
  // w = s - down*i*t; stop once Re(w^2/2) < -40.
  const double t_end = std::max(1.0, down * b + std::sqrt(80.0 + a * a));
  const Complex end = s - down * kI * t_end;
  const Path ray({Line{s, end}});
  const Complex shift = 0.5 * s * s;
  auto integrand = [&](Complex w) -> Complex {
    const Complex e = 0.5 * w * w - shift;
    if (!(e.real() > -745.0)) return Complex{0.0, 0.0};
    const Complex h = kInvIPi + alpha.alpha * kInvISqrt2Pi / w;
    return h * std::exp(e) / w;
  };
  const auto res = numerics::integrate_path(integrand, ray, quad);
  return -res.value;
}

Complex stokes_estimate(const FoliationParameter& alpha, HalfPlane half_plane, Complex x,
                        Complex c, const LeafConfig& cfg) {
  require_nonzero(x, "stokes_estimate");
  const bool neg = half_plane == HalfPlane::ReNeg;
  if ((neg && !(x.real() < 0.0)) || (!neg && !(x.real() > 0.0))) {
    throw Error(ErrorKind::WrongHalfPlane, "x=" + fmt(x) + " is in the wrong half-plane");
  }
  const Complex yp = leaf_value(alpha, Sector::Plus, c, x, cfg);
  const Complex ym = leaf_value(alpha, Sector::Minus, c, x, cfg);
  const Complex diff = neg ? yp - ym : ym - yp;
  return diff * std::exp(exponent_at(x));
}

Complex stokes_constant(const FoliationParameter& alpha, HalfPlane half_plane) {
  return half_plane == HalfPlane::ReNeg ? -(1.0 - alpha.alpha) : -(1.0 + alpha.alpha);
}

Complex hankel_closed_form(int a, int j) {
  if (j != 0 && j != 1) throw Error(ErrorKind::OutOfRange, "hankel: j must be 0 or 1");
  const double g = numerics::gamma_half_integer(a);
  const double sign = ((a * j) % 2 == 0) ? 1.0 : -1.0;
  return Complex{0.0, -2.0 * kPi} / g * std::pow(0.5, 0.5 * a) * sign;
}

Complex hankel_numeric(int a, int j, const QuadratureConfig& quad) {
  if (a < 1 || a > 4) throw Error(ErrorKind::OutOfRange, "hankel: a must be in {1,2,3,4}");
  if (j != 0 && j != 1) throw Error(ErrorKind::OutOfRange, "hankel: j must be 0 or 1");
  // Clockwise circle through 0; 0 sits at angle pi (center 1) or 0 (center -1).
  const Complex center = j == 0 ? Complex{1.0, 0.0} : Complex{-1.0, 0.0};
  const double start = j == 0 ? kPi : 0.0;
  const Path circle({Arc{center, 1.0, start, start - 2.0 * kPi}}, true, true);
  auto integrand = [a](Complex z) -> Complex {
    if (std::abs(z) < 1e-150) return Complex{0.0, 0.0};
    const Complex w = 1.0 / z;
    const Complex e = 0.5 * w * w;
    if (!(e.real() > -745.0)) return Complex{0.0, 0.0};
    return std::exp(e) * std::pow(w, 3 - a);
  };
  return numerics::integrate_path(integrand, circle, quad).value;
}

MartinetRamisModulus modulus(const FoliationParameter& alpha) {
  return MartinetRamisModulus{Complex{0.0, 0.0}, 1.0 + alpha.alpha, 1.0 - alpha.alpha};
}

RegionClass classify_region(Complex x, double epsilon) {
  require_nonzero(x, "classify_region");
  if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
  const double re = (1.0 / (x * x)).real();
  RegionKind kind = RegionKind::Neutral;
  if (re > epsilon) {
    kind = RegionKind::Node;
  } else if (re < -epsilon) {
    kind = RegionKind::Saddle;
  }
  return RegionClass{kind, epsilon};
}

}  // namespace nonrigid::foliation
