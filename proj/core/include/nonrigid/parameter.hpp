#pragma once

#include <complex>

namespace nonrigid {

using Complex = std::complex<double>;

/// Which of the two sectors V+ = {|arg x - pi/2| < 3pi/4} and
/// V- = {|arg x + pi/2| < 3pi/4} a sectorial object lives on.
enum class Sector { Plus, Minus };

inline constexpr Sector other(Sector s) noexcept {
  return s == Sector::Plus ? Sector::Minus : Sector::Plus;
}

inline constexpr double sector_center(Sector s) noexcept {
  return s == Sector::Plus ? 1.5707963267948966 : -1.5707963267948966;
}

/// Largest |alpha| for which the transverse maps and the conjugacy are built.
inline constexpr double kAlphaBound = 0.1;

/// The normalized parameter of x^3 y' = y - x^2/(i pi) - alpha x^3/(i sqrt(2 pi)).
struct FoliationParameter {
  Complex alpha{0.0, 0.0};

  FoliationParameter() = default;
  constexpr FoliationParameter(Complex a) : alpha(a) {}  // NOLINT(google-explicit-constructor)
  constexpr FoliationParameter(double a) : alpha(a, 0.0) {}  // NOLINT(google-explicit-constructor)

  bool in_conjugacy_regime() const noexcept { return std::abs(alpha) < kAlphaBound; }
  bool is_zero() const noexcept { return alpha == Complex{0.0, 0.0}; }

  friend bool operator==(const FoliationParameter&, const FoliationParameter&) = default;
};

}  // namespace nonrigid
