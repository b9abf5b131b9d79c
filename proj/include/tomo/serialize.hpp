#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tomo/entropy.hpp"
#include "tomo/uncertainty.hpp"

namespace tomo {

using json = nlohmann::ordered_json;

/// 17-significant-digit decimal, '.' separator, no exponent padding.
std::string format_float(double v);

// CSV emitters: header row, LF line endings, deterministic byte-for-byte.
void write_tomogram_csv(const Tomogram& tom, std::ostream& os);
void write_entropy_scan_csv(const EntropyScan& scan, std::ostream& os);
void write_uncertainty_csv(const UncertaintyReport& report, std::ostream& os);

json grid_json(const Grid& grid);
json tomogram_json(const Tomogram& tom);
json entropy_scan_json(const EntropyScan& scan);
json uncertainty_json(const UncertaintyReport& report);

}  // namespace tomo
