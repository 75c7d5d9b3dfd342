#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nonrigid/parameter.hpp"

namespace nonrigid::verify {

/// samples and tolerance <= 0 select the suite's default.
struct SuiteConfig {
  std::string suite;
  Complex alpha{0.0, 0.0};
  int samples = 0;
  std::uint64_t seed = 42;
  double tolerance = 0.0;

  void validate() const;
};

struct VerificationReport {
  std::string suite;
  Complex alpha;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  std::map<std::string, double> fitted_constants;
  bool pass = false;
};

/// system, stokes, hankel, conjugacy, gluing, bounds, continuity, series,
/// injectivity, oracle.
const std::vector<std::string>& suite_names();

struct SuiteDefaults {
  int samples;
  double tolerance;
};
SuiteDefaults suite_defaults(const std::string& suite);

VerificationReport run_suite(const SuiteConfig& cfg);

/// Every suite with its defaults. AlphaTooLarge before anything runs when
/// |alpha| >= 1/10.
std::vector<VerificationReport> run_all(Complex alpha, std::uint64_t seed = 42);

bool all_pass(const std::vector<VerificationReport>& reports) noexcept;

}  // namespace nonrigid::verify
