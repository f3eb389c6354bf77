#pragma once

// Text serializations shared by the CLI and the golden tests.

#include "hdc/ball_spectrum.hpp"
#include "hdc/bounds.hpp"
#include "hdc/cube_fourier.hpp"
#include "hdc/cyclic_code.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hdc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCsvSchemaLine = "# hdcodes bound table v1";

struct DistanceReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d_min = 0;
  std::int64_t designed_distance = 0;
  bool meets_guarantee = false;
  double seconds = 0.0;
};

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& text);

/// Schema line, column header, then one line per row in the given order.
void write_csv(std::ostream& out, const std::vector<BoundRow>& rows);

Json to_json(const BoundRow& row);
Json to_json(const std::vector<BoundRow>& rows);
Json to_json(const ConstructionSpec& spec);
Json to_json(const BchCertificate& cert);
Json to_json(const DistanceReport& report);
/// n is written as "asymptotic" for the limiting operator.
Json to_json(const EigenCertificate& cert, bool asymptotic);
Json to_json(const ReplayReport& report);

}  // namespace hdc
