#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nonrigid/numerics/quadrature.hpp"
#include "nonrigid/parameter.hpp"

namespace nonrigid::foliation {

using numerics::Path;
using numerics::QuadratureConfig;

/// Evaluation policy for sectorial leaves.
struct LeafConfig {
  /// Direct evaluation is restricted to r_min <= |x| <= r_max so every
  /// exponential stays below exp(1/(2 r_min^2)).
  double r_min = 0.2;
  double r_max = 1.5;
  /// Re(1/(2x^2)) above this raises Overflow in leaf inversion.
  double exponent_cap = 40.0;
  /// Extra angle (radians) accepted beyond the 3pi/4 half-aperture. The
  /// sectorial solutions continue analytically a little past the sector;
  /// the conjugacy needs this because X may rotate slightly out of it.
  double aperture_slack = 0.0;
  QuadratureConfig quad{};
};

struct NormalizedData {
  Complex alpha;
  std::optional<Complex> y;
};

/// Maps (alpha, y) of x^3 y' = y + x^2 + alpha x^3 to the normalized form
/// x^3 y' = y - x^2/(i pi) - alpha x^3/(i sqrt(2 pi)).
NormalizedData convert_from_original(Complex alpha_orig, std::optional<Complex> y_orig = {});

/// Signed angle of x from the sector's center direction, in (-pi, pi].
double sector_offset(Sector tag, Complex x);
bool sector_contains(Sector tag, Complex x);
bool sector_contains(Sector tag, Complex x, double slack);

/// Imaginary-axis segment from the removable point 0 to +-i|x| followed by
/// the arc of radius |x| to x inside the sector.
Path base_path(Sector tag, Complex x);

/// Path actually used for the sectorial integral. Equal to base_path when x
/// is within pi/2 of the sector center; otherwise the arc is taken on the
/// outer radius max(|x|, detour_radius) and closed by a radial segment, so
/// the integrand never peaks in the interior of the path.
Path integration_path(Sector tag, Complex x, double detour_radius = 1.5);

/// exp(1/(2x^2)) exponent.
inline Complex exponent_at(Complex x) { return 0.5 / (x * x); }

/// J(x) = exp(-1/(2x^2)) * integral_{+-0i}^{x} h(z) exp(1/(2z^2)) dz / z with
/// h(z) = 1/(i pi) + alpha z/(i sqrt(2 pi)), evaluated in shifted form
/// (integrand exp(1/(2z^2) - 1/(2x^2))). The weak separatrix is y_{alpha,0} = -J.
struct SectorialIntegral {
  Complex shifted;       // J(x)
  Complex exponent;      // 1/(2x^2)
  double error_estimate = 0.0;
};

SectorialIntegral sectorial_integral(const FoliationParameter& alpha, Sector tag, Complex x,
                                     const LeafConfig& cfg = {});

/// The sectorial weak separatrix y^{tag}_{alpha,0}(x).
Complex weak_separatrix(const FoliationParameter& alpha, Sector tag, Complex x,
                        const LeafConfig& cfg = {});

/// y^{tag}_{alpha,c}(x).
Complex leaf_value(const FoliationParameter& alpha, Sector tag, Complex c, Complex x,
                   const LeafConfig& cfg = {});

/// The leaf coordinate c with y^{tag}_{alpha,c}(x) = y.
Complex leaf_invert(const FoliationParameter& alpha, Sector tag, Complex x, Complex y,
                    const LeafConfig& cfg = {});

/// y^{tag}_{alpha,0}(1/s) from the representation
///   -exp(-s^2/2) * integral_s^{-+i inf} (1/(i pi) + alpha/(i sqrt(2 pi) w)) exp(w^2/2) dw / w
/// along the vertical ray from s (downward for Plus, upward for Minus),
/// truncated once Re(w^2/2) < -40. Valid for any s != 0 with 1/s in the
/// (slack-widened) sector and |s| <= 1.
Complex weak_separatrix_from_infinity(const FoliationParameter& alpha, Sector tag, Complex s,
                                      const QuadratureConfig& quad = {});

enum class HalfPlane { ReNeg, RePos };

/// ReNeg: (y+_c - y-_c)(x) exp(1/(2x^2)); RePos: (y-_c - y+_c)(x) exp(1/(2x^2)).
Complex stokes_estimate(const FoliationParameter& alpha, HalfPlane half_plane, Complex x,
                        Complex c, const LeafConfig& cfg = {});

/// Closed-form value of stokes_estimate. The two sectorial integrals differ
/// by a Hankel loop: ReNeg gives -(1 - alpha), RePos gives -(1 + alpha).
/// Equivalently y+_c = y-_{c+1+alpha} on Re x > 0 and y-_c = y+_{c+1-alpha}
/// on Re x < 0.
Complex stokes_constant(const FoliationParameter& alpha, HalfPlane half_plane);

/// Contour integral of z^a exp(1/(2z^2)) dz/z^3 over the circle of radius 1
/// centered at (-1)^j, traversed clockwise, starting and ending at 0.
Complex hankel_numeric(int a, int j, const QuadratureConfig& quad = {});
/// -(2 i pi / Gamma(a/2)) (1/2)^{a/2} (-1)^{aj}.
Complex hankel_closed_form(int a, int j);

struct MartinetRamisModulus {
  Complex mu;
  Complex tau0;
  Complex tau1;
  // phi_0 and phi_1 are identically zero germs for this family.

  friend bool operator==(const MartinetRamisModulus&, const MartinetRamisModulus&) = default;
};

MartinetRamisModulus modulus(const FoliationParameter& alpha);

enum class RegionKind { Node, Saddle, Neutral };

struct RegionClass {
  RegionKind kind;
  double epsilon;
};

RegionClass classify_region(Complex x, double epsilon = 0.05);

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients a_0..a_{n_max} of the unique formal solution of
/// x^3 f' = (1 + 3x^2) f - x^6, from a_n = (n - 5) a_{n-2} + [n = 6].
std::vector<BigInt> formal_series_coefficients(int n_max);

}  // namespace nonrigid::foliation
