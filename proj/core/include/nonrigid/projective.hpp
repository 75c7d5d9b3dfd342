#pragma once

#include <utility>
#include <vector>

#include "nonrigid/conjugacy.hpp"
#include "nonrigid/parameter.hpp"

namespace nonrigid::projective {

/// XY: [x:y:1]; ST: [1:t:s] with s = 1/x, t = y/x; UV: [u:1:v] with u = x/y, v = 1/y.
enum class Chart { XY, ST, UV };

const char* to_string(Chart chart) noexcept;

struct ProjectivePoint {
  Chart chart = Chart::XY;
  Complex first;
  Complex second;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Exact rational re-coordinatization; ChartUndefined when a denominator
/// vanishes.
ProjectivePoint chart_transition(const ProjectivePoint& p, Chart target);

/// y^{tag}_{alpha,0}(1/s) by the vertical-ray integral. Requires s != 0,
/// |s| <= 1 and 1/s strictly inside the sector.
Complex weak_separatrix_at_infinity(const FoliationParameter& alpha, Sector tag, Complex s,
                                    const numerics::QuadratureConfig& quad = {});

/// phi in the (s, t) chart: (0, t) is fixed; |s| > 1 belongs to the XY chart.
std::pair<Complex, Complex> phi_st(const conjugacy::ConjugacyMap& map, Complex s, Complex t);

struct UvImage {
  Complex U;
  Complex V;
  /// v / V - 1, the quantity bounded by B |v| near [0:1:0].
  Complex defect;
};

/// phi in the (u, v) chart, through x = u/v, y = 1/v.
UvImage phi_uv(const conjugacy::ConjugacyMap& map, Complex u, Complex v);

/// [0:0:1], [0:1:0], [1:0:0] in their natural charts.
std::vector<ProjectivePoint> singularity_inventory();

}  // namespace nonrigid::projective
