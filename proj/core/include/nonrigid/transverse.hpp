#pragma once

#include <cstdint>

#include "nonrigid/parameter.hpp"

namespace nonrigid::transverse {

/// The 2-periodic trapezoid g: 0 on [0, eta], rising on [eta, 2 eta], 1 on
/// [2 eta, 2 - 2 eta], falling on [2 - 2 eta, 2 - eta], 0 on [2 - eta, 2].
class BumpProfile {
 public:
  explicit BumpProfile(double eta);

  double eta() const noexcept { return eta_; }
  double operator()(double t) const noexcept;
  /// One-sided (right) derivative; 0, +-1/eta.
  double slope(double t) const noexcept;

 private:
  double eta_;
};

/// eta = (1 - |Re alpha|) / 3; AlphaTooLarge unless |alpha| < 1/10.
double eta_of(Complex alpha);

/// psi+(c) = c + alpha g(Re c),  psi-(c) = c - alpha + alpha g(1 + Re(c - alpha)).
class TransverseMap {
 public:
  TransverseMap(Complex alpha, Sector side);

  Complex alpha() const noexcept { return alpha_; }
  Sector side() const noexcept { return side_; }
  const BumpProfile& profile() const noexcept { return profile_; }

  /// psi(c) - c; depends only on Re c and has modulus <= |alpha|.
  Complex offset(Complex c) const noexcept;
  Complex apply(Complex c) const noexcept { return c + offset(c); }
  /// Exact inverse of the piecewise-affine map.
  Complex invert(Complex w) const;

 private:
  double real_offset_argument(double re_c) const noexcept;

  Complex alpha_;
  Sector side_;
  BumpProfile profile_;
};

struct TransversePair {
  TransverseMap plus;
  TransverseMap minus;

  explicit TransversePair(Complex alpha)
      : plus(alpha, Sector::Plus), minus(alpha, Sector::Minus) {}

  const TransverseMap& operator[](Sector s) const noexcept {
    return s == Sector::Plus ? plus : minus;
  }
};

struct SystemReport {
  double translation_plus = 0.0;   // max |psi+(c+1-alpha) - psi-(c) - 1|
  double translation_minus = 0.0;  // max |psi-(c+1+alpha) - psi+(c) - 1|
  double fixed_point = 0.0;        // |psi+(0)| + |psi-(0)|
  double near_zero = 0.0;          // max |psi(c)/c - 1| over |c| = 1e-3
  double far_ratio = 0.0;          // max |psi(c)/c - 1| |c| / |alpha| over |c| in {1e3, 1e6}
  bool limits_ok = true;

  double max_identity_deviation() const noexcept;
};

/// Random-sample check of the intertwining system on c in [-3, 3]^2.
SystemReport check_system(Complex alpha, int n_samples, std::uint64_t seed);

}  // namespace nonrigid::transverse
