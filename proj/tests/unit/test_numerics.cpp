#include <cmath>
#include <numbers>

#include "support.hpp"

#include "nonrigid/error.hpp"
#include "nonrigid/foliation.hpp"
#include "nonrigid/numerics/ode.hpp"
#include "nonrigid/numerics/quadrature.hpp"
#include "nonrigid/numerics/special.hpp"

using namespace nonrigid;
using namespace nonrigid::numerics;
using testing::Complex;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};
}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("1/z over the upper unit semicircle is i pi") {
  const Path p({Arc{0.0, 1.0, 0.0, kPi}});
  const auto r = integrate_path([](Complex z) { return 1.0 / z; }, p);
  CHECK_CLOSE(r.value, Complex(0.0, kPi), 1e-12);
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.evaluations > 0);
}

TEST_CASE("z over [0, 1] is 1/2") {
  const Path p({Line{0.0, 1.0}}, true);
  CHECK_CLOSE(integrate_path([](Complex z) { return z; }, p).value, Complex(0.5), 1e-15);
}

TEST_CASE("Hankel-type loop through the removable point 0") {
  // a = 2 integrand z^2 exp(1/(2z^2))/z^3 over the clockwise circle centered at 1.
  const Path circle({Arc{1.0, 1.0, kPi, -kPi}}, true, true);
  auto f = [](Complex z) -> Complex {
    if (std::abs(z) < 1e-150) return 0.0;
    const Complex e = 0.5 / (z * z);
    return e.real() < -745 ? Complex{} : std::exp(e) / z;
  };
  CHECK_CLOSE(integrate_path(f, circle).value, Complex(0.0, -kPi), 1e-9);
  // a = 0: exp(1/(2z^2))/z^3 integrates to 0 (1/Gamma(0) = 0).
  auto g = [](Complex z) -> Complex {
    if (std::abs(z) < 1e-150) return 0.0;
    const Complex e = 0.5 / (z * z);
    return e.real() < -745 ? Complex{} : std::exp(e) / (z * z * z);
  };
  CHECK(std::abs(integrate_path(g, circle).value) < 1e-9);
}

TEST_CASE("additivity and reversal") {
  auto f = [](Complex z) { return std::exp(z) / (z - Complex(3.0, 0.0)); };
  const Path a({Line{Complex(0.5, 0.0), Complex(1.0, 1.0)}});
  const Path b({Arc{0.0, std::sqrt(2.0), kPi / 4, kPi}});
  const auto whole = integrate_path(f, a.then(b)).value;
  const auto parts = integrate_path(f, a).value + integrate_path(f, b).value;
  CHECK_CLOSE(whole, parts, 1e-12);
  CHECK_CLOSE(integrate_path(f, a.then(b).reversed()).value, -whole, 1e-12);
}

TEST_CASE("path validation") {
  CHECK_THROWS_AS(Path({Line{1.0, 2.0}, Line{2.5, 3.0}}), Error);
  try {
    Path({Line{1.0, 2.0}, Line{2.5, 3.0}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPath);
  }
  // Through the origin, or ending there without the removable flag.
  CHECK_THROWS_AS(Path({Line{-1.0, 1.0}}), Error);
  CHECK_THROWS_AS(Path({Line{0.0, 1.0}}), Error);
  CHECK_NOTHROW(Path({Line{0.0, 1.0}}, true));
}

TEST_CASE("config validation and non-convergence") {
  QuadratureConfig cfg;
  cfg.abs_tol = -1;
  CHECK_THROWS_AS(cfg.validate(), Error);
  QuadratureConfig tight;
  tight.max_subdivisions = 1;
  tight.abs_tol = 1e-300;
  tight.rel_tol = 1e-300;
  const Path p({Line{0.01, 1.0}});
  try {
    integrate_path([](Complex z) { return std::exp(-1.0 / z) * std::sin(50.0 * z); }, p, tight);
    FAIL("expected NonConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonConvergence);
  }
}

TEST_CASE("gamma at half integers") {
  CHECK(gamma_half_integer(1) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
  CHECK(gamma_half_integer(2) == 1.0);
  CHECK(gamma_half_integer(3) == doctest::Approx(std::sqrt(kPi) / 2).epsilon(1e-15));
  CHECK(gamma_half_integer(4) == 1.0);
  CHECK_THROWS_AS(gamma_half_integer(5), Error);
  CHECK_THROWS_AS(gamma_half_integer(0), Error);
}

TEST_CASE("ODE stepper on y' = i y along a circle") {
  // y = exp(i z): one full loop around 0 returns the start value.
  const Path loop({Arc{0.0, 2.0, 0.0, 2.0 * kPi}});
  const auto y = integrate_along_path([](Complex, Complex y) { return kI * y; }, 1.0 * std::exp(2.0 * kI),
                                      loop);
  CHECK_CLOSE(y, std::exp(2.0 * kI), 1e-9);
}

TEST_CASE("ode_transport: empty path is the identity") {
  CHECK(ode_transport(0.0, Complex(0.3, 0.9), Complex(1.5, -2.0), Path{}) == Complex(1.5, -2.0));
}

TEST_CASE("ode_transport rejects paths through or ending at 0 and mismatched starts") {
  CHECK_THROWS_AS(ode_transport(0.0, 1.0, 0.0, Path({Line{0.0, 1.0}}, true)), Error);
  CHECK_THROWS_AS(ode_transport(0.0, 2.0, 0.0, Path({Line{1.0, 1.5}})), Error);
}

TEST_CASE("ode_transport follows the quadrature leaves") {
  const Complex x0 = 0.8 * kI;
  const Complex x1 = std::polar(0.8, 2 * kPi / 5);
  for (Complex c : {Complex(0.0), Complex(0.3, 0.1), Complex(-2.0, 1.0)}) {
    for (double a : {0.0, 0.05}) {
      const Complex y0 = foliation::leaf_value(a, Sector::Plus, c, x0);
      const Path arc({Arc{0.0, 0.8, kPi / 2, 2 * kPi / 5}});
      CHECK_CLOSE(ode_transport(a, x0, y0, arc), foliation::leaf_value(a, Sector::Plus, c, x1), 1e-8);
    }
  }
}

TEST_CASE("ode_transport out and back returns the start") {
  const Complex x0 = 0.9 * kI;
  const Path arc({Arc{0.0, 0.9, kPi / 2, kPi / 8}});
  const Complex y0{0.4, -0.7};
  const Complex y1 = ode_transport(0.05, x0, y0, arc);
  CHECK_CLOSE(ode_transport(0.05, arc.end(), y1, arc.reversed()), y0, 1e-10);
}

TEST_CASE("ode_transport around a null-homotopic loop") {
  // Small loop centered at 1 not enclosing 0.
  const Complex x0{1.3, 0.0};
  const Path loop({Arc{1.0, 0.3, 0.0, 2.0 * kPi}});
  const Complex y0{0.2, 0.1};
  CHECK_CLOSE(ode_transport(0.05, x0, y0, loop), y0, 1e-9);
}

}  // TEST_SUITE
