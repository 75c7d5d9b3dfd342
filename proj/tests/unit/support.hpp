#pragma once

#include <complex>
#include <random>

#include <doctest.h>

#include "nonrigid/error.hpp"
#include "nonrigid/parameter.hpp"

namespace testing {

using nonrigid::Complex;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Complex random_c(std::mt19937_64& g) { return {uniform(g, -3, 3), uniform(g, -3, 3)}; }

/// Kind of the nonrigid::Error thrown by fn; fails the test when nothing is thrown.
template <class F>
nonrigid::ErrorKind kind_of(F&& fn) {
  try {
    fn();
  } catch (const nonrigid::Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return nonrigid::ErrorKind::InvalidArgument;
}

#define CHECK_CLOSE(a, b, tol)                                                      \
  do {                                                                             \
    const auto _a = (a);                                                           \
    const auto _b = (b);                                                           \
    INFO("lhs = " << _a << ", rhs = " << _b << ", |diff| = " << std::abs(_a - _b)); \
    CHECK(std::abs(_a - _b) <= (tol));                                             \
  } while (0)

}  // namespace testing
