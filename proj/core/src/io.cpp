#include "nonrigid/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "nonrigid/error.hpp"

namespace nonrigid::io {

namespace {

using nlohmann::json;

[[noreturn]] void bad(std::string_view text, std::string_view why) {
  throw Error(ErrorKind::InvalidArgument,
              "cannot parse complex literal '" + std::string(text) + "': " + std::string(why));
}

// Longest prefix of s that is a signed decimal floating literal.
std::size_t scan_real(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  }
  if (digits == 0) return 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    const std::size_t exp_start = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > exp_start) i = j;
  }
  return i;
}

double to_double(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) bad(whole, "bad number");
  return v;
}

// An imaginary part "[+-]NUMi" or "[+-]i".
double parse_imag(std::string_view s, std::string_view whole) {
  if (s.empty() || s.back() != 'i') bad(whole, "expected trailing 'i'");
  s.remove_suffix(1);
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  if (scan_real(s) != s.size()) bad(whole, "bad imaginary part");
  return to_double(s, whole);
}

// Shortest text that reads back to the same double.
std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json complex_obj(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json report_obj(const verify::VerificationReport& r) {
  json fitted = json::object();
  for (const auto& [k, v] : r.fitted_constants) fitted[k] = v;
  return json{{"suite", r.suite},
              {"alpha", complex_obj(r.alpha)},
              {"samples", r.samples},
              {"seed", r.seed},
              {"tolerance", r.tolerance},
              {"max_deviation", r.max_deviation},
              {"fitted_constants", fitted},
              {"pass", r.pass}};
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text, "empty");
  if (s.back() != 'i') {
    if (scan_real(s) != s.size()) bad(text, "bad real number");
    return {to_double(s, text), 0.0};
  }
  const std::size_t n = scan_real(s);
  if (n == s.size() - 1 || n == 0) return {0.0, parse_imag(s, text)};  // "IMi", "i", "-i"
  return {to_double(s.substr(0, n), text), parse_imag(s.substr(n), text)};
}

std::string format_complex(Complex z) {
  return shortest(z.real()) + (std::signbit(z.imag()) ? "" : "+") + shortest(z.imag()) + "i";
}

std::vector<BatchRecord> read_batch(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<BatchRecord> out;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (!header) {
      if (line != kBatchInputHeader) {
        throw Error(ErrorKind::InvalidArgument,
                    "CSV header must be '" + std::string(kBatchInputHeader) + "'");
      }
      header = true;
      continue;
    }
    const auto cells = split_csv(line);
    if (cells.size() != 4) {
      throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(lineno) + ": expected 4 columns");
    }
    double v[4];
    for (int k = 0; k < 4; ++k) {
      const std::string c = trim(cells[k]);
      if (scan_real(c) != c.size() || c.empty()) {
        throw Error(ErrorKind::InvalidArgument,
                    "line " + std::to_string(lineno) + ": bad number '" + c + "'");
      }
      v[k] = to_double(c, c);
    }
    out.push_back({{v[0], v[1]}, {v[2], v[3]}, {}, {}});
  }
  if (!header) throw Error(ErrorKind::InvalidArgument, "CSV input is empty (header missing)");
  return out;
}

void write_batch_header(std::ostream& out) { out << kBatchOutputHeader << '\n'; }

void write_batch_row(std::ostream& out, const BatchRecord& r) {
  const double v[8] = {r.x.real(), r.x.imag(), r.y.real(), r.y.imag(),
                       r.X.real(), r.X.imag(), r.Y.real(), r.Y.imag()};
  for (int k = 0; k < 8; ++k) out << (k ? "," : "") << shortest(v[k]);
  out << '\n';
}

std::string complex_json(Complex z) { return complex_obj(z).dump(); }

std::string report_json(const verify::VerificationReport& report, int indent) {
  return report_obj(report).dump(indent);
}

std::string reports_json(const std::vector<verify::VerificationReport>& reports, int indent) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_obj(r));
  return json{{"reports", arr}, {"pass", verify::all_pass(reports)}}.dump(indent);
}

std::string error_json(std::string_view kind, std::string_view message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}}.dump();
}

}  // namespace nonrigid::io
