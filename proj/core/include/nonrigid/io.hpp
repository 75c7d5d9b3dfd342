#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nonrigid/parameter.hpp"
#include "nonrigid/verify.hpp"

namespace nonrigid::io {

/// Complex literals: "RE", "IMi", "RE+IMi", "RE-IMi", exponents allowed
/// ("1e-3-2.5E2i"); a bare "i" means 1i. InvalidArgument on anything else.
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z);

struct BatchRecord {
  Complex x;
  Complex y;
  Complex X;
  Complex Y;
};

inline constexpr std::string_view kBatchInputHeader = "re_x,im_x,re_y,im_y";
inline constexpr std::string_view kBatchOutputHeader = "re_x,im_x,re_y,im_y,re_X,im_X,re_Y,im_Y";

/// Reads the 4-column input CSV (header required, blank lines skipped).
std::vector<BatchRecord> read_batch(std::istream& in);
void write_batch_header(std::ostream& out);
void write_batch_row(std::ostream& out, const BatchRecord& r);

/// {"re":..,"im":..}
std::string complex_json(Complex z);
std::string report_json(const verify::VerificationReport& report, int indent = -1);
std::string reports_json(const std::vector<verify::VerificationReport>& reports, int indent = -1);
/// {"error":{"kind":..,"message":..}}
std::string error_json(std::string_view kind, std::string_view message);

}  // namespace nonrigid::io
