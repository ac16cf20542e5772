#include "nzeb/hvac.hpp"

#include <cmath>

#include "nzeb/errors.hpp"

namespace nzeb::hvac {

double occupant_sensible_load(int occupants, double per_person_w) {
    if (occupants < 0) throw domain_error("occupant_sensible_load: occupants must be >= 0");
    if (per_person_w < 0) throw domain_error("occupant_sensible_load: per-person gain must be >= 0");
    return occupants * per_person_w / 1000.0;
}

int acu_count(double total_load_kw, double unit_capacity_kj_hr, double tolerance) {
    if (unit_capacity_kj_hr <= 0) throw domain_error("acu_count: unit capacity must be > 0");
    if (total_load_kw <= 0) throw domain_error("acu_count: total load must be > 0");
    if (tolerance < 0) throw domain_error("acu_count: tolerance must be >= 0");
    const double units = total_load_kw * 3600.0 / unit_capacity_kj_hr;
    const double frac = units - std::floor(units);
    int n = static_cast<int>(frac <= tolerance ? std::floor(units) : std::ceil(units));
    // a positive load always needs at least one unit
    return n > 0 ? n : 1;
}

} // namespace nzeb::hvac
