// nonrigid: command-line front end to the conjugacy library.
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nonrigid/conjugacy.hpp"
#include "nonrigid/error.hpp"
#include "nonrigid/foliation.hpp"
#include "nonrigid/io.hpp"
#include "nonrigid/projective.hpp"
#include "nonrigid/verify.hpp"

namespace {

using nlohmann::json;
using nonrigid::Complex;
using nonrigid::Error;
using nonrigid::ErrorKind;
using nonrigid::Sector;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

json cjson(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex parse(const std::string& s) { return nonrigid::io::parse_complex(s); }

Sector parse_sector(const std::string& s) { return s == "plus" ? Sector::Plus : Sector::Minus; }

nonrigid::projective::Chart parse_chart(const std::string& s) {
  using nonrigid::projective::Chart;
  if (s == "st") return Chart::ST;
  if (s == "uv") return Chart::UV;
  return Chart::XY;
}

// --- plot-leaves ---------------------------------------------------------------

struct Trace {
  Sector sector;
  int c_index;
  std::vector<double> theta, re, im;
};

std::vector<Trace> trace_leaves(Complex alpha, double radius, int count) {
  const double reach = 3.0 * std::numbers::pi / 4.0 - 0.02;
  const int n = 241;
  std::vector<Trace> out;
  for (Sector tag : {Sector::Plus, Sector::Minus}) {
    for (int k = 0; k < count; ++k) {
      const double c = count == 1 ? 0.0 : -2.0 + 4.0 * k / (count - 1);
      Trace tr{tag, tag == Sector::Plus ? k : count + k, {}, {}, {}};
      for (int i = 0; i < n; ++i) {
        const double th = nonrigid::sector_center(tag) - reach + 2.0 * reach * i / (n - 1);
        const Complex y = nonrigid::foliation::leaf_value(alpha, tag, c, std::polar(radius, th));
        tr.theta.push_back(std::remainder(th, 2.0 * std::numbers::pi));
        tr.re.push_back(y.real());
        tr.im.push_back(y.imag());
      }
      out.push_back(std::move(tr));
    }
  }
  return out;
}

void write_leaves_csv(std::ostream& os, const std::vector<Trace>& traces) {
  os.precision(17);
  os << "theta,re_y,im_y,c_index\n";
  for (const auto& t : traces) {
    for (std::size_t i = 0; i < t.theta.size(); ++i) {
      os << t.theta[i] << ',' << t.re[i] << ',' << t.im[i] << ',' << t.c_index << '\n';
    }
  }
}

void write_leaves_svg(std::ostream& os, const std::vector<Trace>& traces, double radius) {
  const double W = 900, H = 360, pad = 45;
  const double pi = std::numbers::pi;
  auto range_of = [&](bool real) {
    double lo = 1e300, hi = -1e300;
    for (const auto& t : traces) {
      for (double v : real ? t.re : t.im) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    if (!(hi > lo)) hi = lo + 1.0;
    return std::pair{lo, hi};
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << 2 * H
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int panel = 0; panel < 2; ++panel) {
    const bool real = panel == 0;
    const auto [lo, hi] = range_of(real);
    const double y0 = panel * H;
    auto px = [&](double th) { return pad + (th + pi) / (2 * pi) * (W - 2 * pad); };
    auto py = [&](double v) { return y0 + H - pad - (v - lo) / (hi - lo) * (H - 2 * pad); };
    os << "<rect x=\"" << pad << "\" y=\"" << y0 + pad << "\" width=\"" << W - 2 * pad
       << "\" height=\"" << H - 2 * pad << "\" fill=\"none\" stroke=\"#888\"/>\n";
    os << "<text x=\"" << pad << "\" y=\"" << y0 + pad - 10 << "\">" << (real ? "Re y" : "Im y")
       << " vs arg x on |x| = " << radius << " (blue: V+, red: V-)</text>\n";
    os << "<text x=\"" << 4 << "\" y=\"" << py(hi) + 4 << "\">" << hi << "</text>\n";
    os << "<text x=\"" << 4 << "\" y=\"" << py(lo) + 4 << "\">" << lo << "</text>\n";
    for (const auto& t : traces) {
      os << "<polyline fill=\"none\" stroke-width=\"1\" stroke=\""
         << (t.sector == Sector::Plus ? "#1f5fbf" : "#bf3a1f") << "\" points=\"";
      const auto& vals = real ? t.re : t.im;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        // Break the line where theta wraps around.
        if (i > 0 && std::abs(t.theta[i] - t.theta[i - 1]) > pi) {
          os << "\"/>\n<polyline fill=\"none\" stroke-width=\"1\" stroke=\""
             << (t.sector == Sector::Plus ? "#1f5fbf" : "#bf3a1f") << "\" points=\"";
        }
        os << px(t.theta[i]) << ',' << py(vals[i]) << ' ';
      }
      os << "\"/>\n";
    }
  }
  os << "</svg>\n";
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate leaves, Stokes data and the topological conjugacy of the saddle-node family"};
  app.require_subcommand(1);

  std::string alpha_s = "0";
  std::string sector_s = "plus";
  auto add_alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha_s, "parameter alpha (complex literal RE+IMi)")->capture_default_str();
  };
  auto add_sector = [&](CLI::App* sub) {
    sub->add_option("--sector", sector_s, "plus|minus")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
  };

  // leaf
  std::string c_s = "0", x_s, y_s;
  auto* leaf = app.add_subcommand("leaf", "y^{+-}_{alpha,c}(x) as JSON {re, im}");
  add_alpha(leaf);
  add_sector(leaf);
  leaf->add_option("--c", c_s, "leaf coordinate")->capture_default_str();
  leaf->add_option("--x", x_s, "point x")->required();

  // invert
  auto* inv = app.add_subcommand("invert", "leaf coordinate c through (x, y)");
  add_alpha(inv);
  add_sector(inv);
  inv->add_option("--x", x_s)->required();
  inv->add_option("--y", y_s)->required();

  // stokes
  std::string stokes_x = "0.5";
  auto* stokes = app.add_subcommand(
      "stokes",
      "Stokes translations: tau0 measured on the half-plane of --x with Re x > 0, tau1 on its mirror");
  add_alpha(stokes);
  stokes->add_option("--x", stokes_x, "sample point; Re x != 0")->capture_default_str();

  // hankel
  int hankel_a = 2, hankel_j = 0;
  auto* hankel = app.add_subcommand("hankel", "numeric Hankel loop vs closed form");
  hankel->add_option("--a", hankel_a)->check(CLI::Range(1, 4))->capture_default_str();
  hankel->add_option("--j", hankel_j)->check(CLI::Range(0, 1))->capture_default_str();

  // map
  std::string in_path, out_path;
  auto* map = app.add_subcommand("map", "apply phi to one point or to a CSV batch");
  add_alpha(map);
  auto* mx = map->add_option("--x", x_s);
  auto* my = map->add_option("--y", y_s);
  auto* min = map->add_option("--input", in_path, "CSV with header re_x,im_x,re_y,im_y");
  map->add_option("--output", out_path, "output CSV (default: stdout)")->needs(min);
  mx->needs(my);
  my->needs(mx);
  mx->excludes(min);
  my->excludes(min);

  // chart
  std::string from_s = "xy", to_s = "st", first_s, second_s;
  auto* chart = app.add_subcommand("chart", "re-chart a point of CP^2");
  chart->add_option("--from", from_s)->check(CLI::IsMember({"xy", "st", "uv"}))->required();
  chart->add_option("--to", to_s)->check(CLI::IsMember({"xy", "st", "uv"}))->required();
  chart->add_option("--first", first_s, "first coordinate (x, s or u)")->required();
  chart->add_option("--second", second_s, "second coordinate (y, t or v)")->required();

  // verify
  std::string suite = "all";
  int samples = 0;
  std::uint64_t seed = 42;
  double tol = 0.0;
  auto* ver = app.add_subcommand("verify", "run a verification suite; exit 0 iff it passes");
  add_alpha(ver);
  ver->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
  auto* o_samples = ver->add_option("--samples", samples, "samples (suite default if omitted)");
  ver->add_option("--seed", seed)->capture_default_str();
  auto* o_tol = ver->add_option("--tol", tol, "tolerance (suite default if omitted)");

  // series
  int order = 12;
  auto* series = app.add_subcommand("series", "coefficients a_0..a_N of the divergent formal solution");
  series->add_option("--order", order)->check(CLI::NonNegativeNumber)->capture_default_str();

  // plot-leaves
  double radius = 0.8;
  int count = 5;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot-leaves", "trace leaves on |x| = R for both sectors (SVG or CSV)");
  add_alpha(plot);
  plot->add_option("--radius", radius)->capture_default_str();
  plot->add_option("--count", count)->check(CLI::PositiveNumber)->capture_default_str();
  plot->add_option("--out", plot_out, "leaves.svg or leaves.csv")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    const Complex alpha = parse(alpha_s);

    if (*leaf) {
      const Complex y = nonrigid::foliation::leaf_value(alpha, parse_sector(sector_s), parse(c_s), parse(x_s));
      std::cout << cjson(y).dump() << '\n';
    } else if (*inv) {
      const Complex c = nonrigid::foliation::leaf_invert(alpha, parse_sector(sector_s), parse(x_s), parse(y_s));
      std::cout << cjson(c).dump() << '\n';
    } else if (*stokes) {
      using nonrigid::foliation::HalfPlane;
      const Complex x = parse(stokes_x);
      if (x.real() == 0.0) throw Error(ErrorKind::InvalidArgument, "--x needs Re x != 0");
      const Complex xp = x.real() > 0 ? x : -x;
      // (y+_c - y-_c) exp(1/(2x^2)) equals tau0 on Re x > 0 and -tau1 on Re x < 0.
      const Complex tau0 = -nonrigid::foliation::stokes_estimate(alpha, HalfPlane::RePos, xp, 0.0);
      const Complex tau1 = -nonrigid::foliation::stokes_estimate(alpha, HalfPlane::ReNeg, -xp, 0.0);
      const auto mod = nonrigid::foliation::modulus(alpha);
      const double err = std::max(std::abs(tau0 - mod.tau0), std::abs(tau1 - mod.tau1));
      std::cout << json{{"tau0_est", cjson(tau0)},
                        {"tau0_exact", cjson(mod.tau0)},
                        {"tau1_est", cjson(tau1)},
                        {"tau1_exact", cjson(mod.tau1)},
                        {"max_err", err}}
                       .dump()
                << '\n';
    } else if (*hankel) {
      const Complex num = nonrigid::foliation::hankel_numeric(hankel_a, hankel_j);
      const Complex closed = nonrigid::foliation::hankel_closed_form(hankel_a, hankel_j);
      std::cout << json{{"a", hankel_a},
                        {"j", hankel_j},
                        {"numeric", cjson(num)},
                        {"closed_form", cjson(closed)},
                        {"rel_err", std::abs(num - closed) / std::abs(closed)}}
                       .dump()
                << '\n';
    } else if (*map) {
      const nonrigid::conjugacy::ConjugacyMap phi(alpha);
      if (!in_path.empty()) {
        std::ifstream in(in_path);
        if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + in_path);
        auto rows = nonrigid::io::read_batch(in);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          try {
            const auto img = phi.phi(rows[i].x, rows[i].y);
            rows[i].X = img.X;
            rows[i].Y = img.Y;
          } catch (const Error& e) {
            throw Error(e.kind(), "row " + std::to_string(i + 1) + ": " + e.what());
          }
        }
        std::ofstream file;
        if (!out_path.empty()) {
          file.open(out_path);
          if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + out_path);
        }
        std::ostream& out = out_path.empty() ? std::cout : file;
        nonrigid::io::write_batch_header(out);
        for (const auto& r : rows) nonrigid::io::write_batch_row(out, r);
      } else {
        if (x_s.empty()) throw Error(ErrorKind::InvalidArgument, "map needs --x/--y or --input");
        const auto img = phi.phi(parse(x_s), parse(y_s));
        std::cout << json{{"X", cjson(img.X)}, {"Y", cjson(img.Y)}}.dump() << '\n';
      }
    } else if (*chart) {
      const nonrigid::projective::ProjectivePoint p{parse_chart(from_s), parse(first_s), parse(second_s)};
      const auto q = nonrigid::projective::chart_transition(p, parse_chart(to_s));
      std::cout << json{{"chart", nonrigid::projective::to_string(q.chart)},
                        {"first", cjson(q.first)},
                        {"second", cjson(q.second)}}
                       .dump()
                << '\n';
    } else if (*ver) {
      if (suite == "all") {
        if (*o_samples || *o_tol) {
          throw Error(ErrorKind::InvalidArgument, "--samples/--tol apply to a single suite only");
        }
        const auto reports = nonrigid::verify::run_all(alpha, seed);
        std::cout << nonrigid::io::reports_json(reports, 2) << '\n';
        return nonrigid::verify::all_pass(reports) ? 0 : kExitFail;
      }
      nonrigid::verify::SuiteConfig cfg{suite, alpha, samples, seed, tol};
      if (*o_samples && samples < 1) throw Error(ErrorKind::InvalidArgument, "--samples must be >= 1");
      if (*o_tol && !(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "--tol must be > 0");
      const auto rep = nonrigid::verify::run_suite(cfg);
      std::cout << nonrigid::io::report_json(rep, 2) << '\n';
      return rep.pass ? 0 : kExitFail;
    } else if (*series) {
      const auto a = nonrigid::foliation::formal_series_coefficients(order);
      for (int n = 0; n <= order; ++n) std::cout << (n ? "," : "") << 'a' << n << '=' << a[n];
      std::cout << '\n';
    } else if (*plot) {
      const auto traces = trace_leaves(alpha, radius, count);
      std::ofstream out(plot_out);
      if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + plot_out);
      if (ends_with(plot_out, ".csv")) {
        write_leaves_csv(out, traces);
      } else if (ends_with(plot_out, ".svg")) {
        write_leaves_svg(out, traces, radius);
      } else {
        throw Error(ErrorKind::InvalidArgument, "--out must end in .svg or .csv");
      }
    }
  } catch (const Error& e) {
    std::cerr << nonrigid::io::error_json(nonrigid::to_string(e.kind()), e.what()) << '\n';
    const bool usage = e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::UnknownSuite;
    return usage ? kExitUsage : kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << nonrigid::io::error_json("Internal", e.what()) << '\n';
    return kExitNumeric;
  }
  return 0;
}
