// carbon.hpp -- avoided-CO2 accounting over the system lifetime

#pragma once

namespace nzeb::carbon {

struct CarbonParams {
    double grid_emission_factor_t_per_mwh = 0; // tCO2 avoided per MWh displaced
    double system_embodied_t = 0;              // manufacturing/installation burden
    int lifetime_years = 0;
    double annual_energy_mwh = 0;
};

struct CarbonResult {
    double avoided_t = 0; // floored at 0 for reporting
    double raw_t = 0;     // may be negative when embodied exceeds gross avoided
};

CarbonResult avoided_emissions(const CarbonParams& params);

} // namespace nzeb::carbon
