// hvac.hpp -- occupant heat gains and air-conditioning unit count

#pragma once

#include <string>

namespace nzeb::hvac {

// Catalog entry for one floor-mounted unit. Capacity (kJ/hr) and nameplate
// tons are independent catalog fields; they are not derived from each other.
struct AcuSpec {
    std::string name;
    double capacity_kj_per_hr = 0;
    double power_demand_va = 0;
    double refrigeration_tons = 0;
};

struct CoolingDesign {
    int occupants = 0;
    double sensible_gain_per_person_w = 70.0;
    double sensible_load_kw = 0;
    double ventilation_flow_l_s = 0;
    double total_coil_load_kw = 0;
    AcuSpec unit;
    int units_required = 0;
};

// occupants * per_person / 1000, kW.
double occupant_sensible_load(int occupants, double per_person_w);

// Units needed for total_load_kw given a unit capacity in kJ/hr. Rounds down
// when the fractional unit is within `tolerance` (sizing practice; the strict
// ceiling otherwise). Never returns 0 for a positive load.
int acu_count(double total_load_kw, double unit_capacity_kj_hr, double tolerance = 0.05);

} // namespace nzeb::hvac
