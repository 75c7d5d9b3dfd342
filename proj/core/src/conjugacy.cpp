#include "nonrigid/conjugacy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nonrigid/error.hpp"

namespace nonrigid::conjugacy {

namespace {

constexpr double kPi = std::numbers::pi;

void require_nonzero(Complex x, const char* what) {
  if (x == Complex{0.0, 0.0}) throw Error(ErrorKind::ZeroInput, std::string(what) + " requires x != 0");
}

}  // namespace

void CutoffConfig::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "CutoffConfig: delta must lie in (0, 1)");
  }
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "CutoffConfig: r must lie in (0, 1)");
  }
}

std::pair<double, double> chi_pair(const CutoffConfig& cfg, double theta) {
  const double d = std::abs(std::remainder(theta - kPi / 4, kPi / 2));
  const double w = 0.5 * std::asin(cfg.delta);
  const double chi1 = std::max(0.0, 1.0 - d / w);
  return {chi1, 1.0 - chi1};
}

double xi_inner(const CutoffConfig& cfg, double radius) {
  if (radius <= cfg.r) return 1.0;
  if (radius >= 1.0) return 0.0;
  return (1.0 - radius) / (1.0 - cfg.r);
}

Sector sector_select(Complex x) {
  require_nonzero(x, "sector_select");
  const double d_plus = std::abs(foliation::sector_offset(Sector::Plus, x));
  const double d_minus = std::abs(foliation::sector_offset(Sector::Minus, x));
  return d_plus <= d_minus ? Sector::Plus : Sector::Minus;
}

ConjugacyMap::ConjugacyMap(FoliationParameter alpha, CutoffConfig cutoffs,
                           foliation::LeafConfig leaf)
    : alpha_(alpha), cutoffs_(cutoffs), leaf_(leaf), image_leaf_(leaf), psi_(alpha.alpha) {
  if (!alpha_.in_conjugacy_regime()) {
    throw Error(ErrorKind::AlphaTooLarge, "conjugacy requires |alpha| < 1/10");
  }
  cutoffs_.validate();
  // |X/x - 1| stays below ~0.2 for |x| <= 1 and arg X moves by less than
  // 0.2 rad, so a modest widening of the domain suffices at X.
  image_leaf_.r_min = 0.75 * leaf_.r_min;
  image_leaf_.aperture_slack = std::max(leaf_.aperture_slack, 0.25);
}

Complex ConjugacyMap::f_sector(Sector tag, Complex x, Complex c) const {
  require_nonzero(x, "f_sector");
  const Complex off = psi_[tag].offset(c);
  if (off == Complex{0.0, 0.0}) return Complex{1.0, 0.0};
  const double chi1 = chi_pair(cutoffs_, std::arg(x)).first;
  if (chi1 == 0.0) return Complex{1.0, 0.0};
  // chi1 c/psi(c) + chi2 = 1 - chi1 (psi(c) - c)/psi(c)
  return 1.0 - chi1 * off / (c + off);
}

Complex ConjugacyMap::f_hat(Sector tag, Complex x, Complex c) const {
  require_nonzero(x, "f_hat");
  const double xi = xi_inner(cutoffs_, std::abs(x));
  if (xi == 0.0) return Complex{1.0, 0.0};
  const Complex f = f_sector(tag, x, c);
  if (f == Complex{1.0, 0.0}) return f;
  return 1.0 + xi * (f - 1.0);
}

Complex ConjugacyMap::x_from_fhat(Complex x, Complex fhat) const {
  if (fhat == Complex{1.0, 0.0}) return x;
  const Complex radicand = 1.0 - 2.0 * x * x * std::log(fhat);
  if (!(radicand.real() > 0.0)) {
    std::ostringstream os;
    os << "radicand " << radicand << " left the right half-plane";
    throw Error(ErrorKind::BranchViolation, os.str());
  }
  return x / std::sqrt(radicand);
}

Complex ConjugacyMap::x_map(Sector tag, Complex x, Complex c) const {
  return x_from_fhat(x, f_hat(tag, x, c));
}

Complex ConjugacyMap::separatrix(const FoliationParameter& a, Sector tag, Complex x) const {
  if (std::abs(x) > leaf_.r_max) {
    return foliation::weak_separatrix_from_infinity(a, tag, 1.0 / x, leaf_.quad);
  }
  return foliation::weak_separatrix(a, tag, x, image_leaf_);
}

Complex ConjugacyMap::y_map(Sector tag, Complex x, Complex y) const {
  return phi_sector(tag, x, y).Y;
}

Image ConjugacyMap::phi_sector(Sector tag, Complex x, Complex y) const {
  if (x == Complex{0.0, 0.0} || alpha_.is_zero()) return Image{x, y};
  const double r = std::abs(x);
  if (r < leaf_.r_min) {
    std::ostringstream os;
    os << "|x|=" << r << " lies in (0, " << leaf_.r_min << "), not evaluated";
    throw Error(ErrorKind::AnnulusGap, os.str());
  }

  const FoliationParameter zero{0.0};
  Complex sep_alpha;
  Complex c;
  const Complex expo = foliation::exponent_at(x);
  if (r > leaf_.r_max) {
    sep_alpha = separatrix(alpha_, tag, x);
    c = (y - sep_alpha) * std::exp(expo);
  } else {
    if (!foliation::sector_contains(tag, x, leaf_.aperture_slack)) {
      throw Error(ErrorKind::OutsideSector, "phi_sector: x outside the requested sector");
    }
    const auto si = foliation::sectorial_integral(alpha_, tag, x, leaf_);
    if (si.exponent.real() > leaf_.exponent_cap) {
      throw Error(ErrorKind::Overflow, "phi_sector: exponent above cap");
    }
    sep_alpha = -si.shifted;
    c = (y + si.shifted) * std::exp(si.exponent);
  }

  const Complex fh = f_hat(tag, x, c);
  const Complex X = x_from_fhat(x, fh);
  const Complex sep_zero = separatrix(zero, tag, X);
  const Complex off = psi_[tag].offset(c);
  const Complex decay = off == Complex{0.0, 0.0} ? Complex{0.0, 0.0} : std::exp(-expo);
  const Complex Y = y + (sep_zero - sep_alpha) + (fh - 1.0) * (y - sep_alpha) + fh * off * decay;
  return Image{X, Y};
}

Image ConjugacyMap::phi(Complex x, Complex y) const {
  if (x == Complex{0.0, 0.0}) return Image{x, y};
  return phi_sector(sector_select(x), x, y);
}

}  // namespace nonrigid::conjugacy
