#include "nonrigid/projective.hpp"

#include <cmath>

#include "nonrigid/error.hpp"
#include "nonrigid/foliation.hpp"

namespace nonrigid::projective {

namespace {

constexpr Complex kZero{0.0, 0.0};

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::ChartUndefined, what);
}

// Everything goes through XY first; the transitions are all involutive
// combinations of z -> 1/z and products.
std::pair<Complex, Complex> to_xy(const ProjectivePoint& p) {
  switch (p.chart) {
    case Chart::XY:
      return {p.first, p.second};
    case Chart::ST:
      require(p.first != kZero, "ST point with s = 0 lies on the line at infinity");
      return {1.0 / p.first, p.second / p.first};
    case Chart::UV:
      require(p.second != kZero, "UV point with v = 0 lies on the line at infinity");
      return {p.first / p.second, 1.0 / p.second};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown chart");
}

}  // namespace

const char* to_string(Chart chart) noexcept {
  switch (chart) {
    case Chart::XY: return "xy";
    case Chart::ST: return "st";
    case Chart::UV: return "uv";
  }
  return "?";
}

ProjectivePoint chart_transition(const ProjectivePoint& p, Chart target) {
  if (p.chart == target) return p;
  // Direct formulas between ST and UV so points at infinity survive.
  if (p.chart == Chart::ST && target == Chart::UV) {
    require(p.second != kZero, "ST -> UV needs t != 0");
    return {Chart::UV, 1.0 / p.second, p.first / p.second};
  }
  if (p.chart == Chart::UV && target == Chart::ST) {
    require(p.first != kZero, "UV -> ST needs u != 0");
    return {Chart::ST, p.second / p.first, 1.0 / p.first};
  }
  const auto [x, y] = to_xy(p);
  switch (target) {
    case Chart::XY:
      return {Chart::XY, x, y};
    case Chart::ST:
      require(x != kZero, "XY -> ST needs x != 0");
      return {Chart::ST, 1.0 / x, y / x};
    case Chart::UV:
      require(y != kZero, "XY -> UV needs y != 0");
      return {Chart::UV, x / y, 1.0 / y};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown chart");
}

Complex weak_separatrix_at_infinity(const FoliationParameter& alpha, Sector tag, Complex s,
                                    const numerics::QuadratureConfig& quad) {
  if (s == kZero) throw Error(ErrorKind::ZeroInput, "weak_separatrix_at_infinity requires s != 0");
  if (std::abs(s) > 1.0) throw Error(ErrorKind::OutOfRange, "weak_separatrix_at_infinity needs |s| <= 1");
  if (!foliation::sector_contains(tag, 1.0 / s)) {
    throw Error(ErrorKind::OutsideSector, "1/s is outside the sector");
  }
  return foliation::weak_separatrix_from_infinity(alpha, tag, s, quad);
}

std::pair<Complex, Complex> phi_st(const conjugacy::ConjugacyMap& map, Complex s, Complex t) {
  if (s == kZero || map.alpha().is_zero()) return {s, t};
  if (std::abs(s) > 1.0) throw Error(ErrorKind::ChartUndefined, "phi_st: |s| > 1 belongs to the XY chart");
  const FoliationParameter zero{0.0};
  const Complex x = 1.0 / s;
  const Sector tag = conjugacy::sector_select(x);
  const auto& quad = map.leaf_config().quad;
  const Complex sep_alpha = foliation::weak_separatrix_from_infinity(map.alpha(), tag, s, quad);
  const Complex sep_zero = foliation::weak_separatrix_from_infinity(zero, tag, s, quad);
  const Complex half_s2 = 0.5 * s * s;
  // y = t/s, c = (y - y_{alpha,0}) exp(s^2/2)
  const Complex c = (t / s - sep_alpha) * std::exp(half_s2);
  const Complex off = map.psi(tag).offset(c);
  const Complex T = t + s * (sep_zero - sep_alpha) + s * off * std::exp(-half_s2);
  return {s, T};
}

UvImage phi_uv(const conjugacy::ConjugacyMap& map, Complex u, Complex v) {
  if (u == kZero && v == kZero) return {kZero, kZero, kZero};
  require(u != kZero && v != kZero, "phi_uv needs u != 0 and v != 0 away from the origin");
  const Complex x = u / v;
  const Complex y = 1.0 / v;
  const auto img = map.phi(x, y);
  require(img.Y != kZero, "image lies on the line y = 0 of the UV chart");
  const Complex V = 1.0 / img.Y;
  return {V * img.X, V, v * img.Y - 1.0};
}

std::vector<ProjectivePoint> singularity_inventory() {
  return {
      {Chart::XY, kZero, kZero},  // [0:0:1]
      {Chart::UV, kZero, kZero},  // [0:1:0]
      {Chart::ST, kZero, kZero},  // [1:0:0]
  };
}

}  // namespace nonrigid::projective
