#include <cmath>

#include "support.hpp"

#include "nonrigid/transverse.hpp"

using namespace nonrigid;
using namespace nonrigid::transverse;
using testing::Complex;
using testing::kind_of;

TEST_SUITE("transverse") {

TEST_CASE("bump width") {
  CHECK(eta_of(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(eta_of(0.09) == doctest::Approx(0.91 / 3.0).epsilon(1e-15));
  CHECK(eta_of(Complex(0.0, 0.05)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(kind_of([] { eta_of(0.1); }) == ErrorKind::AlphaTooLarge);
  CHECK(kind_of([] { eta_of(Complex(0.08, 0.08)); }) == ErrorKind::AlphaTooLarge);
  CHECK(kind_of([] { BumpProfile(0.5); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("bump profile shape") {
  const BumpProfile g(eta_of(0.05));
  const double eta = g.eta();
  CHECK(g(1.0) == 1.0);
  CHECK(g(1.5 * eta) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(g(-eta / 2) == 0.0);
  CHECK(g(2.0 - eta / 2) == 0.0);
  CHECK(g(0.0) == 0.0);
  CHECK(g(eta) == 0.0);
  CHECK(g(2.0 * eta) == 1.0);
  CHECK(g(2.0 - 1.5 * eta) == doctest::Approx(0.5).epsilon(1e-14));
  auto r = testing::rng(3);
  for (int i = 0; i < 200; ++i) {
    const double t = testing::uniform(r, -10, 10);
    CHECK(g(t + 2.0) == doctest::Approx(g(t)).epsilon(1e-12));
    CHECK(g(t) >= 0.0);
    CHECK(g(t) <= 1.0);
  }
  CHECK(g.slope(1.5 * eta) == doctest::Approx(1.0 / eta));
  CHECK(g.slope(2.0 - 1.5 * eta) == doctest::Approx(-1.0 / eta));
  CHECK(g.slope(1.0) == 0.0);
}

TEST_CASE("psi fixes 0 and shifts by at most |alpha|") {
  for (Complex a : {Complex(0.05), Complex(0.03, 0.04), Complex(0.0, 0.09), Complex(-0.07, 0.02)}) {
    const TransversePair psi(a);
    CHECK(psi.plus.apply(0.0) == Complex(0.0));
    CHECK(psi.minus.apply(0.0) == Complex(0.0));
    auto r = testing::rng(9);
    for (int i = 0; i < 200; ++i) {
      const Complex c = testing::random_c(r);
      for (Sector s : {Sector::Plus, Sector::Minus}) {
        CHECK(std::abs(psi[s].offset(c)) <= std::abs(a) * (1 + 1e-15));
        // depends on Re c only
        CHECK(psi[s].offset(c) == psi[s].offset(Complex(c.real(), c.imag() + 1.7)));
      }
    }
  }
  const TransverseMap p(0.05, Sector::Plus);
  CHECK_CLOSE(p.apply(1.0), Complex(1.05), 1e-15);
}

TEST_CASE("intertwining system") {
  for (Complex a : {Complex(0.05), Complex(0.03, 0.04)}) {
    const TransversePair psi(a);
    auto r = testing::rng(42);
    for (int i = 0; i < 1000; ++i) {
      const Complex c = testing::random_c(r);
      CHECK_CLOSE(psi.plus.apply(c + 1.0 - a), psi.minus.apply(c) + 1.0, 1e-14);
      CHECK_CLOSE(psi.minus.apply(c + 1.0 + a), psi.plus.apply(c) + 1.0, 1e-14);
    }
    const auto rep = check_system(a, 1000, 42);
    CHECK(rep.max_identity_deviation() <= 1e-12);
    CHECK(rep.fixed_point == 0.0);
    CHECK(rep.limits_ok);
    CHECK(rep.far_ratio <= 1.0 + 1e-6);
  }
}

TEST_CASE("exact inverse") {
  const TransverseMap p(0.05, Sector::Plus);
  CHECK(p.invert(0.0) == Complex(0.0));
  CHECK_CLOSE(p.invert(Complex(1.05)), Complex(1.0), 1e-15);
  for (Complex a : {Complex(0.05), Complex(-0.09), Complex(0.03, 0.04), Complex(0.0, 0.09)}) {
    for (Sector s : {Sector::Plus, Sector::Minus}) {
      const TransverseMap m(a, s);
      auto r = testing::rng(17);
      for (int i = 0; i < 500; ++i) {
        const Complex c{testing::uniform(r, -20, 20), testing::uniform(r, -3, 3)};
        CHECK_CLOSE(m.invert(m.apply(c)), c, 1e-12);
        const Complex w{testing::uniform(r, -20, 20), testing::uniform(r, -3, 3)};
        CHECK_CLOSE(m.apply(m.invert(w)), w, 1e-12);
      }
    }
  }
}

TEST_CASE("psi is the identity at alpha = 0") {
  const TransversePair psi(0.0);
  auto r = testing::rng(1);
  for (int i = 0; i < 100; ++i) {
    const Complex c = testing::random_c(r);
    CHECK(psi.plus.apply(c) == c);
    CHECK(psi.minus.apply(c) == c);
  }
}

}  // TEST_SUITE
