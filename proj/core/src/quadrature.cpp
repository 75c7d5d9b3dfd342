#include "nonrigid/numerics/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nonrigid/error.hpp"

namespace nonrigid::numerics {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroTol = 1e-14;

// 21-point Kronrod abscissae; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

bool is_zero(Complex z) { return std::abs(z) <= kZeroTol; }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

// True when the origin lies on the open segment (endpoints excluded).
bool passes_origin_inside(const Segment& seg) {
  if (const auto* line = std::get_if<Line>(&seg)) {
    const Complex d = line->to - line->from;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return false;
    const double t = -(std::conj(d) * line->from).real() / len2;
    if (t <= 0.0 || t >= 1.0) return false;
    if (is_zero(line->from) || is_zero(line->to)) return false;
    return std::abs(line->from + t * d) <= kZeroTol;
  }
  const auto& arc = std::get<Arc>(seg);
  if (std::abs(std::abs(arc.center) - arc.radius) > kZeroTol * std::max(1.0, arc.radius)) {
    return false;
  }
  const double lo = std::min(arc.theta_start, arc.theta_end);
  const double hi = std::max(arc.theta_start, arc.theta_end);
  const double phi0 = std::arg(-arc.center);
  const double margin = 1e-12;
  // Any representative phi0 + 2 pi k strictly inside (lo, hi)?
  double k = std::ceil((lo + margin - phi0) / (2 * kPi));
  const double candidate = phi0 + 2 * kPi * k;
  return candidate < hi - margin;
}

struct Interval {
  std::size_t segment = 0;
  double u0 = 0.0;
  double u1 = 0.0;
  Complex value;
  double error = 0.0;
  bool at_roundoff = false;
};

class Integrator {
 public:
  Integrator(const Integrand& f, const Path& path) : f_(f), path_(path) {}

  Interval rule(std::size_t seg_index, double u0, double u1) {
    const Segment& seg = path_.segments()[seg_index];
    const double center = 0.5 * (u0 + u1);
    const double half = 0.5 * (u1 - u0);

    auto eval = [&](double u) -> Complex {
      const Complex z = point_at(seg, u);
      Complex v = f_(z) * tangent_at(seg, u);
      if (!finite(v)) {
        const bool near_start = seg_index == 0 && path_.removable_start() && u < 0.05;
        const bool near_end =
            seg_index + 1 == path_.segments().size() && path_.removable_end() && u > 0.95;
        if (near_start || near_end) return Complex{0.0, 0.0};
        throw Error(ErrorKind::NonFinite, "integrand not finite at z=" + describe(z));
      }
      return v;
    };

    const Complex fc = eval(center);
    Complex kron = fc * kWgk[10];
    Complex gauss{0.0, 0.0};
    double resabs = kWgk[10] * std::abs(fc);
    for (std::size_t j = 0; j < 10; ++j) {
      const double dx = half * kXgk[j];
      const Complex f1 = eval(center - dx);
      const Complex f2 = eval(center + dx);
      kron += kWgk[j] * (f1 + f2);
      resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
      if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    evaluations_ += 21;

    Interval iv;
    iv.segment = seg_index;
    iv.u0 = u0;
    iv.u1 = u1;
    iv.value = kron * half;
    const double err = std::abs((kron - gauss) * half);
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs * std::abs(half);
    iv.at_roundoff = err <= floor;
    iv.error = std::max(err, floor);
    return iv;
  }

  long evaluations() const noexcept { return evaluations_; }

 private:
  const Integrand& f_;
  const Path& path_;
  long evaluations_ = 0;
};

}  // namespace

Complex start_point(const Segment& seg) noexcept {
  return std::visit(
      [](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Line>) {
          return s.from;
        } else {
          return s.center + std::polar(s.radius, s.theta_start);
        }
      },
      seg);
}

Complex end_point(const Segment& seg) noexcept {
  return std::visit(
      [](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Line>) {
          return s.to;
        } else {
          return s.center + std::polar(s.radius, s.theta_end);
        }
      },
      seg);
}

Complex point_at(const Segment& seg, double u) noexcept {
  if (const auto* line = std::get_if<Line>(&seg)) {
    return line->from + u * (line->to - line->from);
  }
  const auto& arc = std::get<Arc>(seg);
  const double theta = arc.theta_start + u * (arc.theta_end - arc.theta_start);
  return arc.center + std::polar(arc.radius, theta);
}

Complex tangent_at(const Segment& seg, double u) noexcept {
  if (const auto* line = std::get_if<Line>(&seg)) {
    return line->to - line->from;
  }
  const auto& arc = std::get<Arc>(seg);
  const double span = arc.theta_end - arc.theta_start;
  const double theta = arc.theta_start + u * span;
  return Complex{0.0, 1.0} * std::polar(arc.radius, theta) * span;
}

double segment_length(const Segment& seg) noexcept {
  if (const auto* line = std::get_if<Line>(&seg)) {
    return std::abs(line->to - line->from);
  }
  const auto& arc = std::get<Arc>(seg);
  return arc.radius * std::abs(arc.theta_end - arc.theta_start);
}

Segment reversed(const Segment& seg) noexcept {
  if (const auto* line = std::get_if<Line>(&seg)) {
    return Line{line->to, line->from};
  }
  const auto& arc = std::get<Arc>(seg);
  return Arc{arc.center, arc.radius, arc.theta_end, arc.theta_start};
}

Path::Path(std::vector<Segment> segments, bool removable_start, bool removable_end)
    : segments_(std::move(segments)),
      removable_start_(removable_start),
      removable_end_(removable_end) {
  validate();
}

void Path::validate() const {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& seg = segments_[i];
    const Complex a = start_point(seg);
    const Complex b = end_point(seg);
    if (!finite(a) || !finite(b)) {
      throw Error(ErrorKind::InvalidPath, "segment " + std::to_string(i) + " is not finite");
    }
    if (const auto* arc = std::get_if<Arc>(&seg); arc && !(arc->radius > 0.0)) {
      throw Error(ErrorKind::InvalidPath, "arc radius must be positive");
    }
    if (i > 0) {
      const Complex prev = end_point(segments_[i - 1]);
      const double scale = std::max({1.0, std::abs(prev), std::abs(a)});
      if (std::abs(prev - a) > 1e-10 * scale) {
        throw Error(ErrorKind::InvalidPath, "segments " + std::to_string(i - 1) + " and " +
                                                std::to_string(i) + " are disconnected");
      }
      if (is_zero(a)) {
        throw Error(ErrorKind::InvalidPath, "interior junction at the origin");
      }
    }
    if (passes_origin_inside(seg)) {
      throw Error(ErrorKind::InvalidPath, "segment " + std::to_string(i) + " passes through 0");
    }
  }
  if (!segments_.empty()) {
    if (is_zero(start()) && !removable_start_) {
      throw Error(ErrorKind::InvalidPath, "path starts at 0 without a removable flag");
    }
    if (is_zero(end()) && !removable_end_) {
      throw Error(ErrorKind::InvalidPath, "path ends at 0 without a removable flag");
    }
  }
}

Complex Path::start() const {
  if (segments_.empty()) throw Error(ErrorKind::InvalidPath, "empty path has no start");
  return start_point(segments_.front());
}

Complex Path::end() const {
  if (segments_.empty()) throw Error(ErrorKind::InvalidPath, "empty path has no end");
  return end_point(segments_.back());
}

double Path::length() const noexcept {
  double total = 0.0;
  for (const auto& s : segments_) total += segment_length(s);
  return total;
}

Path Path::reversed() const {
  std::vector<Segment> rev;
  rev.reserve(segments_.size());
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    rev.push_back(numerics::reversed(*it));
  }
  return Path(std::move(rev), removable_end_, removable_start_);
}

Path Path::then(const Path& next) const {
  if (empty()) return next;
  if (next.empty()) return *this;
  std::vector<Segment> all(segments_.begin(), segments_.end());
  all.insert(all.end(), next.segments_.begin(), next.segments_.end());
  return Path(std::move(all), removable_start_, next.removable_end_);
}

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "quadrature tolerances must be positive");
  }
  if (max_subdivisions < 1) {
    throw Error(ErrorKind::InvalidArgument, "max_subdivisions must be at least 1");
  }
}

QuadratureResult integrate_path(const Integrand& f, const Path& path,
                                const QuadratureConfig& cfg) {
  cfg.validate();
  QuadratureResult result;
  if (path.empty()) return result;

  Integrator integrator(f, path);
  std::vector<Interval> intervals;
  const auto segs = path.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segment_length(segs[i]) == 0.0) continue;
    int pieces = 1;
    if (const auto* arc = std::get_if<Arc>(&segs[i])) {
      pieces = std::max(1, static_cast<int>(std::ceil(
                               std::abs(arc->theta_end - arc->theta_start) / (kPi / 2))));
    }
    for (int p = 0; p < pieces; ++p) {
      intervals.push_back(integrator.rule(i, static_cast<double>(p) / pieces,
                                          static_cast<double>(p + 1) / pieces));
    }
  }

  Complex total{0.0, 0.0};
  double total_err = 0.0;
  for (const auto& iv : intervals) {
    total += iv.value;
    total_err += iv.error;
  }

  int subdivisions = 0;
  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    std::size_t worst = intervals.size();
    double worst_err = -1.0;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      if (!intervals[k].at_roundoff && intervals[k].error > worst_err) {
        worst_err = intervals[k].error;
        worst = k;
      }
    }
    if (worst == intervals.size()) break;  // everything left is rounding noise
    if (subdivisions >= cfg.max_subdivisions) {
      std::ostringstream os;
      os << "error estimate " << total_err << " after " << subdivisions << " subdivisions";
      throw Error(ErrorKind::NonConvergence, os.str());
    }
    const Interval parent = intervals[worst];
    const double mid = 0.5 * (parent.u0 + parent.u1);
    Interval left = integrator.rule(parent.segment, parent.u0, mid);
    Interval right = integrator.rule(parent.segment, mid, parent.u1);
    total += left.value + right.value - parent.value;
    total_err += left.error + right.error - parent.error;
    intervals[worst] = left;
    intervals.push_back(right);
    ++subdivisions;
  }

  total = Complex{0.0, 0.0};
  total_err = 0.0;
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return a.segment != b.segment ? a.segment < b.segment : a.u0 < b.u0;
  });
  for (const auto& iv : intervals) {
    total += iv.value;
    total_err += iv.error;
  }
  result.value = total;
  result.error_estimate = total_err;
  result.evaluations = integrator.evaluations();
  if (!finite(result.value)) {
    throw Error(ErrorKind::NonFinite, "quadrature produced a non-finite value");
  }
  return result;
}

}  // namespace nonrigid::numerics
