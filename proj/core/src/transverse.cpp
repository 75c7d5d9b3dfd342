#include "nonrigid/transverse.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "nonrigid/error.hpp"

namespace nonrigid::transverse {

namespace {

double periodic_reduce(double t) noexcept { return t - 2.0 * std::floor(0.5 * t); }

}  // namespace

BumpProfile::BumpProfile(double eta) : eta_(eta) {
  if (!(eta > 0.0) || eta > 1.0 / 3.0 + 1e-15) {
    throw Error(ErrorKind::InvalidArgument, "bump width must lie in (0, 1/3]");
  }
}

double BumpProfile::operator()(double t) const noexcept {
  const double u = periodic_reduce(t);
  if (u <= eta_) return 0.0;
  if (u < 2.0 * eta_) return (u - eta_) / eta_;
  if (u <= 2.0 - 2.0 * eta_) return 1.0;
  if (u < 2.0 - eta_) return (2.0 - eta_ - u) / eta_;
  return 0.0;
}

double BumpProfile::slope(double t) const noexcept {
  const double u = periodic_reduce(t);
  if (u >= eta_ && u < 2.0 * eta_) return 1.0 / eta_;
  if (u >= 2.0 - 2.0 * eta_ && u < 2.0 - eta_) return -1.0 / eta_;
  return 0.0;
}

double eta_of(Complex alpha) {
  if (!(std::abs(alpha) < kAlphaBound)) {
    throw Error(ErrorKind::AlphaTooLarge, "|alpha| must be < 1/10");
  }
  return (1.0 - std::abs(alpha.real())) / 3.0;
}

TransverseMap::TransverseMap(Complex alpha, Sector side)
    : alpha_(alpha), side_(side), profile_(eta_of(alpha)) {}

double TransverseMap::real_offset_argument(double re_c) const noexcept {
  return side_ == Sector::Plus ? re_c : 1.0 + (re_c - alpha_.real());
}

Complex TransverseMap::offset(Complex c) const noexcept {
  const double g = profile_(real_offset_argument(c.real()));
  return side_ == Sector::Plus ? alpha_ * g : alpha_ * (g - 1.0);
}

Complex TransverseMap::invert(Complex w) const {
  // Re w = F(u) := u + Re(offset(u)), strictly increasing and piecewise affine
  // with F(u + 2) = F(u) + 2, so the root lies within |Re alpha| of Re w.
  const double target = w.real();
  const double ra = std::abs(alpha_.real());
  const double lo = target - ra - 1e-12;
  const double hi = target + ra + 1e-12;
  auto F = [this](double u) { return u + offset(Complex{u, 0.0}).real(); };

  const double eta = profile_.eta();
  const std::array<double, 5> base = {0.0, eta, 2.0 * eta, 2.0 - 2.0 * eta, 2.0 - eta};
  const double shift = side_ == Sector::Plus ? 0.0 : alpha_.real() - 1.0;
  std::vector<double> knots{lo, hi};
  for (double k = std::floor(0.5 * (lo - shift)) - 1; k <= std::ceil(0.5 * (hi - shift)) + 1; ++k) {
    for (double b : base) {
      const double u = b + shift + 2.0 * k;
      if (u > lo && u < hi) knots.push_back(u);
    }
  }
  std::sort(knots.begin(), knots.end());

  double u = target;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i];
    const double b = knots[i + 1];
    const double fa = F(a);
    const double fb = F(b);
    if (target >= fa && target <= fb) {
      if (target == fa) {
        u = a;
      } else if (target == fb) {
        u = b;
      } else {
        u = a + (target - fa) * (b - a) / (fb - fa);
      }
      break;
    }
  }
  const Complex off = offset(Complex{u, 0.0});
  return Complex{u, w.imag() - off.imag()};
}

double SystemReport::max_identity_deviation() const noexcept {
  return std::max({translation_plus, translation_minus, fixed_point, near_zero});
}

SystemReport check_system(Complex alpha, int n_samples, std::uint64_t seed) {
  const TransversePair psi(alpha);
  SystemReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int i = 0; i < n_samples; ++i) {
    const Complex c{coord(rng), coord(rng)};
    rep.translation_plus = std::max(
        rep.translation_plus, std::abs(psi.plus.apply(c + 1.0 - alpha) - psi.minus.apply(c) - 1.0));
    rep.translation_minus = std::max(
        rep.translation_minus, std::abs(psi.minus.apply(c + 1.0 + alpha) - psi.plus.apply(c) - 1.0));
  }
  rep.fixed_point = std::abs(psi.plus.apply(0.0)) + std::abs(psi.minus.apply(0.0));

  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double a = std::abs(alpha);
  for (int i = 0; i < std::max(1, n_samples / 10); ++i) {
    const double th = angle(rng);
    for (const TransverseMap* m : {&psi.plus, &psi.minus}) {
      const Complex small = std::polar(1e-3, th);
      rep.near_zero = std::max(rep.near_zero, std::abs(m->apply(small) / small - 1.0));
      for (double radius : {1e3, 1e6}) {
        const Complex big = std::polar(radius, th);
        const double dev = std::abs(m->apply(big) / big - 1.0);
        if (a > 0.0) rep.far_ratio = std::max(rep.far_ratio, dev * radius / a);
        if (dev > a / radius * (1.0 + 1e-9) + 1e-15) rep.limits_ok = false;
      }
    }
  }
  return rep;
}

}  // namespace nonrigid::transverse
