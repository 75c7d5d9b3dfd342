#include <cmath>
#include <numbers>
#include <variant>

#include "support.hpp"

#include "nonrigid/error.hpp"
#include "nonrigid/foliation.hpp"

using namespace nonrigid;
using namespace nonrigid::foliation;
using testing::Complex;
using testing::kind_of;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};
}  // namespace

TEST_SUITE("foliation") {

TEST_CASE("normalization of the original equation") {
  CHECK(std::abs(convert_from_original(0.1 * std::sqrt(kPi / 2)).alpha - 0.1) < 1e-16);
  CHECK(convert_from_original(0.0).alpha == Complex(0.0));
  // y_orig = -i pi y_norm: substituting into x^3 y' = y + x^2 + a x^3 gives
  // the normalized equation, so y_orig = 1 maps to i/pi.
  const auto d = convert_from_original(0.0, Complex(1.0));
  REQUIRE(d.y.has_value());
  CHECK_CLOSE(*d.y, Complex(0.0, 1.0 / kPi), 1e-16);
  CHECK_FALSE(convert_from_original(1.0).y.has_value());
}

TEST_CASE("sector membership") {
  CHECK(sector_contains(Sector::Plus, kI));
  CHECK_FALSE(sector_contains(Sector::Plus, -kI));
  CHECK(sector_contains(Sector::Plus, 1.0));
  CHECK(sector_contains(Sector::Minus, 1.0));
  CHECK(sector_contains(Sector::Minus, -1.0));
  CHECK_FALSE(sector_contains(Sector::Minus, std::polar(1.0, kPi / 2 + 0.1)));
  CHECK(kind_of([] { sector_contains(Sector::Plus, 0.0); }) == ErrorKind::ZeroInput);
}

TEST_CASE("base paths") {
  {
    const Path p = base_path(Sector::Plus, kI);
    REQUIRE(p.segments().size() == 1);
    CHECK(std::holds_alternative<numerics::Line>(p.segments()[0]));
    CHECK_CLOSE(p.end(), kI, 1e-15);
  }
  {
    const Path p = base_path(Sector::Plus, std::polar(1.0, kPi / 4));
    REQUIRE(p.segments().size() == 2);
    CHECK_CLOSE(numerics::end_point(p.segments()[0]), kI, 1e-15);
    CHECK(std::holds_alternative<numerics::Arc>(p.segments()[1]));
    CHECK_CLOSE(p.end(), std::polar(1.0, kPi / 4), 1e-15);
  }
  {
    const Path p = base_path(Sector::Minus, -0.5 * kI);
    REQUIRE(p.segments().size() == 1);
    CHECK_CLOSE(p.end(), -0.5 * kI, 1e-15);
  }
  CHECK(kind_of([] { base_path(Sector::Plus, -kI); }) == ErrorKind::OutsideSector);
}

TEST_CASE("leaf values against independent high-precision quadrature") {
  // 30-digit reference values from an independent contour quadrature.
  struct Ref {
    Complex alpha;
    Sector tag;
    Complex c;
    Complex x;
    Complex y;
  };
  const Ref refs[] = {
      {0.05, Sector::Plus, 0.0, std::polar(0.8, 2 * kPi / 5), {0.041479352340950101739, 0.10824855920895907856}},
      {0.05, Sector::Plus, {0.3, 0.1}, std::polar(0.8, 2 * kPi / 5), {0.46404904694537653793, 0.52708207870949221943}},
      {{0.03, 0.04}, Sector::Minus, {1.0, -1.0}, {0.5, -0.4}, {-0.52864613351426132906, -0.96319946606480474546}},
      {0.0, Sector::Plus, 0.0, 0.5 * kI, {0.0, 0.057507235458318317411}},
      {0.05, Sector::Minus, 0.0, 0.7, {-0.18923508901385604358, -0.11309279555168980735}},
      {0.05, Sector::Plus, {-0.5, 2.0}, std::polar(0.6, 0.95 * kPi), {-0.017131652859550152552, 0.47062669079973149865}},
  };
  for (std::size_t i = 0; i < std::size(refs); ++i) {
    const auto& r = refs[i];
    CAPTURE(i);
    CHECK_CLOSE(leaf_value(r.alpha, r.tag, r.c, r.x), r.y, 1e-9);
  }
}

TEST_CASE("linear structure: c enters through c exp(-1/(2x^2))") {
  CHECK_CLOSE(leaf_value(0.05, Sector::Plus, 1.0, 0.5 * kI) - leaf_value(0.05, Sector::Plus, 0.0, 0.5 * kI),
              Complex(std::exp(2.0)), 1e-10);
  auto g = testing::rng(7);
  for (int i = 0; i < 50; ++i) {
    const Sector tag = i % 2 ? Sector::Plus : Sector::Minus;
    const Complex a{testing::uniform(g, -0.09, 0.09), testing::uniform(g, -0.05, 0.05)};
    const Complex c = testing::random_c(g);
    const Complex x = std::polar(testing::uniform(g, 0.3, 1.4), sector_center(tag) + testing::uniform(g, -2.2, 2.2));
    const Complex lhs = leaf_value(a, tag, c, x) - leaf_value(a, tag, 0.0, x);
    const Complex rhs = c * std::exp(-exponent_at(x));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("leaf inversion round trips") {
  const Complex x = 0.9 * kI;
  const Complex y = leaf_value(0.05, Sector::Plus, Complex(1, 1), x);
  CHECK_CLOSE(leaf_invert(0.05, Sector::Plus, x, y), Complex(1, 1), 1e-9);

  // Two points on the same fiber differing by exp(-1/(2x^2)) differ by 1 in c.
  const Complex x2{0.4, 0.7};
  const Complex y1{0.3, -0.2};
  const Complex y2 = y1 - std::exp(-exponent_at(x2));
  CHECK_CLOSE(leaf_invert(0.07, Sector::Plus, x2, y1) - leaf_invert(0.07, Sector::Plus, x2, y2), Complex(1.0), 1e-9);

  // Saddle side.
  const Complex xs = std::polar(0.3, 0.9 * kPi);
  const Complex c = leaf_invert(0.05, Sector::Plus, xs, 0.2);
  const auto si = sectorial_integral(0.05, Sector::Plus, xs);
  CHECK(std::abs(c) <= 0.2 * std::abs(std::exp(exponent_at(xs))) + std::abs(si.shifted * std::exp(si.exponent)) + 1e-12);
  CHECK_CLOSE(leaf_value(0.05, Sector::Plus, c, xs), Complex(0.2), 1e-10);

  auto g = testing::rng(11);
  for (int i = 0; i < 100; ++i) {
    const Sector tag = i % 2 ? Sector::Plus : Sector::Minus;
    const Complex xr = std::polar(testing::uniform(g, 0.25, 1.5), sector_center(tag) + testing::uniform(g, -2.3, 2.3));
    const Complex yr = testing::random_c(g);
    const Complex cr = leaf_invert(0.05, tag, xr, yr);
    CHECK(std::abs(leaf_value(0.05, tag, cr, xr) - yr) <= 1e-10 * std::max(1.0, std::abs(yr)));
  }
}

TEST_CASE("evaluation domain errors") {
  CHECK(kind_of([] { leaf_value(0.0, Sector::Plus, 0.0, 0.1 * kI); }) == ErrorKind::OutsideAnnulus);
  CHECK(kind_of([] { leaf_value(0.0, Sector::Plus, 0.0, 2.0 * kI); }) == ErrorKind::OutsideAnnulus);
  CHECK(kind_of([] { leaf_value(0.0, Sector::Plus, 0.0, -0.5 * kI); }) == ErrorKind::OutsideSector);
  CHECK(kind_of([] { leaf_value(0.0, Sector::Plus, 0.0, 0.0); }) == ErrorKind::ZeroInput);
  LeafConfig capped;
  capped.exponent_cap = 5.0;
  CHECK(kind_of([&] { leaf_invert(0.0, Sector::Plus, 0.25, 1.0, capped); }) == ErrorKind::Overflow);
}

TEST_CASE("weak separatrix decays toward 0 on the saddle axis") {
  LeafConfig near;
  near.r_min = 0.05;
  for (Sector tag : {Sector::Plus, Sector::Minus}) {
    const Complex dir = tag == Sector::Plus ? kI : -kI;
    double prev = 1e300;
    for (double t : {0.2, 0.16, 0.12, 0.08}) {
      const double m = std::abs(leaf_value(0.05, tag, 0.0, t * dir, near));
      CHECK(m < prev);
      prev = m;
    }
    CHECK(prev < 0.03);
  }
}

TEST_CASE("Stokes translations") {
  // The two sectorial families differ by a Hankel loop around 0. Measured:
  // (y+_c - y-_c) exp(1/(2x^2)) = -(1 - alpha) on Re x < 0 and 1 + alpha on Re x > 0.
  for (Complex a : {Complex(0.0), Complex(0.05), Complex(0.05, 0.02), Complex(0.0, 0.09)}) {
    for (double x : {-0.6, -0.5, -0.8}) {
      CHECK_CLOSE(stokes_estimate(a, HalfPlane::ReNeg, x, Complex(0.4, 1.0)), -(1.0 - a), 1e-7);
    }
    for (double x : {0.6, 0.5, 0.8}) {
      CHECK_CLOSE(stokes_estimate(a, HalfPlane::RePos, x, Complex(-1.0, 0.2)), -(1.0 + a), 1e-7);
    }
    CHECK(stokes_constant(a, HalfPlane::ReNeg) == -(1.0 - a));
    CHECK(stokes_constant(a, HalfPlane::RePos) == -(1.0 + a));
  }
  CHECK(kind_of([] { stokes_estimate(0.0, HalfPlane::ReNeg, 0.5, 0.0); }) == ErrorKind::WrongHalfPlane);
  CHECK(kind_of([] { stokes_estimate(0.0, HalfPlane::RePos, -0.5, 0.0); }) == ErrorKind::WrongHalfPlane);
}

TEST_CASE("Stokes relations between leaves") {
  const Complex a{0.05, 0.02};
  auto g = testing::rng(5);
  for (int i = 0; i < 20; ++i) {
    const Complex c = testing::random_c(g);
    const Complex xr = std::polar(testing::uniform(g, 0.3, 1.2), testing::uniform(g, -0.6, 0.6));
    const Complex xl = -std::conj(xr);
    const double sr = std::max(1.0, std::abs(std::exp(-exponent_at(xr))));
    CHECK(std::abs(leaf_value(a, Sector::Plus, c, xr) - leaf_value(a, Sector::Minus, c + 1.0 + a, xr)) < 1e-9 * sr);
    CHECK(std::abs(leaf_value(a, Sector::Minus, c, xl) - leaf_value(a, Sector::Plus, c + 1.0 - a, xl)) < 1e-9 * sr);
  }
}

TEST_CASE("Hankel identity") {
  CHECK_CLOSE(hankel_closed_form(2, 0), Complex(0.0, -kPi), 1e-15);
  CHECK_CLOSE(hankel_closed_form(1, 0), Complex(0.0, -std::sqrt(2 * kPi)), 1e-15);
  CHECK_CLOSE(hankel_closed_form(1, 1), Complex(0.0, std::sqrt(2 * kPi)), 1e-15);
  for (int a = 1; a <= 4; ++a) {
    for (int j = 0; j <= 1; ++j) {
      CAPTURE(a);
      CAPTURE(j);
      CHECK_CLOSE(hankel_numeric(a, j), hankel_closed_form(a, j), 1e-8);
    }
  }
  CHECK(kind_of([] { hankel_numeric(5, 0); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { hankel_closed_form(2, 2); }) == ErrorKind::OutOfRange);
}

TEST_CASE("Martinet-Ramis constants") {
  const auto m0 = modulus(0.0);
  CHECK(m0.mu == Complex(0.0));
  CHECK(m0.tau0 == Complex(1.0));
  CHECK(m0.tau1 == Complex(1.0));
  const auto m = modulus(0.05);
  CHECK(std::abs(m.tau0 - 1.05) < 1e-15);
  CHECK(std::abs(m.tau1 - 0.95) < 1e-15);
  CHECK(modulus(0.05) == modulus(0.05));
  CHECK_FALSE(modulus(0.05) == modulus(0.03));
  CHECK_FALSE(modulus(Complex(0.0, 0.02)) == modulus(0.0));
}

TEST_CASE("node and saddle regions") {
  CHECK(classify_region(1.0, 0.1).kind == RegionKind::Node);
  CHECK(classify_region(kI, 0.1).kind == RegionKind::Saddle);
  CHECK(classify_region(std::polar(1.0, kPi / 4), 0.1).kind == RegionKind::Neutral);
  CHECK(classify_region(std::polar(1.0, kPi / 4), 0.1).epsilon == 0.1);
  CHECK(kind_of([] { classify_region(0.0); }) == ErrorKind::ZeroInput);
}

TEST_CASE("divergent formal series") {
  const auto a = formal_series_coefficients(36);
  REQUIRE(a.size() == 37);
  CHECK(a[5] == 0);
  CHECK(a[6] == 1);
  CHECK(a[8] == 3);
  CHECK(a[10] == 15);
  CHECK(a[12] == 105);
  CHECK(a[36] == BigInt("191898783962510625"));  // 31!!
  for (int n = 9; n + 2 <= 36; n += 2) CHECK(a[n] == 0);
  for (int n = 8; n + 2 <= 36; n += 2) CHECK(a[n + 2] == (n - 3) * a[n]);
}

TEST_CASE("formal series satisfies the equation (substitution oracle)") {
  // Substitute f = sum a_n x^n into x^3 f' - (1 + 3x^2) f + x^6 by explicit
  // polynomial arithmetic and check every coefficient through x^36.
  const int N = 36;
  const auto a = formal_series_coefficients(N);
  std::vector<BigInt> lhs(N + 4, 0);
  for (int n = 1; n <= N; ++n) lhs[n + 2] += n * a[n];  // x^3 f'
  for (int n = 0; n <= N; ++n) {
    lhs[n] -= a[n];                                     // -f
    lhs[n + 2] -= 3 * a[n];                             // -3x^2 f
  }
  lhs[6] += 1;
  for (int n = 0; n <= N; ++n) {
    CAPTURE(n);
    CHECK(lhs[n] == 0);
  }
}

}  // TEST_SUITE
