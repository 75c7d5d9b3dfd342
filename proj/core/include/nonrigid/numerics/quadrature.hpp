#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "nonrigid/parameter.hpp"

namespace nonrigid::numerics {

/// Straight segment from `from` to `to`.
struct Line {
  Complex from;
  Complex to;
};

/// Circular arc center + radius * exp(i theta), theta running from
/// theta_start to theta_end (either direction).
struct Arc {
  Complex center;
  double radius = 0.0;
  double theta_start = 0.0;
  double theta_end = 0.0;
};

using Segment = std::variant<Line, Arc>;

Complex start_point(const Segment& seg) noexcept;
Complex end_point(const Segment& seg) noexcept;
/// Point and derivative dz/du for the unit parametrization u in [0, 1].
Complex point_at(const Segment& seg, double u) noexcept;
Complex tangent_at(const Segment& seg, double u) noexcept;
double segment_length(const Segment& seg) noexcept;
Segment reversed(const Segment& seg) noexcept;

/// A connected piecewise path in the complex plane.
///
/// The origin may only appear as the first or last point of the path, and
/// only when that endpoint is flagged removable (the integrand is expected
/// to vanish there). Validation happens on construction; an invalid path
/// throws Error(InvalidPath).
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Segment> segments, bool removable_start = false,
                bool removable_end = false);

  std::span<const Segment> segments() const noexcept { return segments_; }
  bool empty() const noexcept { return segments_.empty(); }
  bool removable_start() const noexcept { return removable_start_; }
  bool removable_end() const noexcept { return removable_end_; }
  Complex start() const;
  Complex end() const;
  double length() const noexcept;

  Path reversed() const;
  /// Concatenation; the end of *this must coincide with the start of `next`.
  Path then(const Path& next) const;

 private:
  void validate() const;

  std::vector<Segment> segments_;
  bool removable_start_ = false;
  bool removable_end_ = false;
};

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;

  void validate() const;
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
  long evaluations = 0;
};

using Integrand = std::function<Complex(Complex)>;

/// Adaptive Gauss-Kronrod (10/21) quadrature of f(z) dz along `path`.
///
/// Intervals are bisected globally by largest error until the summed error
/// estimate is below max(abs_tol, rel_tol |value|). Intervals whose
/// Kronrod-Gauss discrepancy sits at the rounding floor are not split
/// further. Non-finite integrand values are mapped to 0 only near a
/// removable endpoint; anywhere else they raise NonFinite.
QuadratureResult integrate_path(const Integrand& f, const Path& path,
                                const QuadratureConfig& cfg = {});

}  // namespace nonrigid::numerics
