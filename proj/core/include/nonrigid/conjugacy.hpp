#pragma once

#include <utility>

#include "nonrigid/foliation.hpp"
#include "nonrigid/parameter.hpp"
#include "nonrigid/transverse.hpp"

namespace nonrigid::conjugacy {

/// delta: chi_2 = 1 wherever |cos 2 theta| > delta.
/// r: xi_1 = 1 on [0, r], falling affinely to 0 at |x| = 1.
struct CutoffConfig {
  double delta = 0.2;
  double r = 0.5;

  void validate() const;
};

/// Piecewise-affine partition of unity on the circle with chi_1 = 1 at the
/// four directions pi/4 + k pi/2 and chi_1 = 0 where |cos 2 theta| > delta.
std::pair<double, double> chi_pair(const CutoffConfig& cfg, double theta);

/// xi_1(|x|).
double xi_inner(const CutoffConfig& cfg, double radius);

/// Plus when arg x is at least as close to pi/2 as to -pi/2.
Sector sector_select(Complex x);

struct Image {
  Complex X;
  Complex Y;

  friend bool operator==(const Image&, const Image&) = default;
};

/// The homeomorphism phi = (X, Y) of C^2 sending leaves of F_alpha to
/// leaves of F_0:
///
///   X = x (1 - 2x^2 log f^(x, c))^{-1/2}
///   Y = y_{0,0}(X) + f^(x, c) psi(c) exp(-1/(2x^2)),   c = c(x, y).
///
/// Y is evaluated as
///   y + [y_{0,0}(X) - y_{alpha,0}(x)] + (f^ - 1)(y - y_{alpha,0}(x))
///     + f^ (psi(c) - c) exp(-1/(2x^2)),
/// which is the same expression with the large terms cancelled by hand; in
/// particular alpha = 0 yields the identity bit for bit.
class ConjugacyMap {
 public:
  explicit ConjugacyMap(FoliationParameter alpha, CutoffConfig cutoffs = {},
                        foliation::LeafConfig leaf = {});

  const FoliationParameter& alpha() const noexcept { return alpha_; }
  const CutoffConfig& cutoffs() const noexcept { return cutoffs_; }
  const foliation::LeafConfig& leaf_config() const noexcept { return leaf_; }
  const transverse::TransverseMap& psi(Sector tag) const noexcept { return psi_[tag]; }

  Complex f_sector(Sector tag, Complex x, Complex c) const;
  Complex f_hat(Sector tag, Complex x, Complex c) const;
  /// X from a given leaf coordinate c.
  Complex x_map(Sector tag, Complex x, Complex c) const;
  Complex y_map(Sector tag, Complex x, Complex y) const;

  /// Full map with the deterministic sector choice; x = 0 is fixed pointwise.
  Image phi(Complex x, Complex y) const;
  /// The sectorial formula evaluated on a forced sector.
  Image phi_sector(Sector tag, Complex x, Complex y) const;

  /// y^{tag}_{a,0}(x) by the route appropriate to |x|: the sectorial
  /// integral up to r_max, the ray from infinity beyond.
  Complex separatrix(const FoliationParameter& a, Sector tag, Complex x) const;

 private:
  Complex x_from_fhat(Complex x, Complex fhat) const;

  FoliationParameter alpha_;
  CutoffConfig cutoffs_;
  foliation::LeafConfig leaf_;
  foliation::LeafConfig image_leaf_;  // relaxed domain for evaluation at X
  transverse::TransversePair psi_;
};

}  // namespace nonrigid::conjugacy
