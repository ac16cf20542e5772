// meteo.hpp -- hourly meteorological input
//
// CSV format: header `timestamp,ghi,dhi,tamb`; ISO-8601 local timestamps
// (YYYY-MM-DDTHH:MM); dhi may be empty; exactly one calendar year of hourly
// rows (8760, or 8784 in a leap year), chronological with no gaps.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nzeb/solar.hpp"

namespace nzeb::meteo {

struct MeteoRecord {
    solar::CivilTime timestamp; // start of the hour, local civil time
    double ghi_w_m2 = 0;
    std::optional<double> dhi_w_m2;
    double t_ambient_c = 0;
};

// Throws parse_error naming the offending row.
std::vector<MeteoRecord> load_meteo(const std::string& path);

} // namespace nzeb::meteo
