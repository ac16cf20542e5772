#include "nzeb/carbon.hpp"

#include <algorithm>

#include "nzeb/errors.hpp"

namespace nzeb::carbon {

CarbonResult avoided_emissions(const CarbonParams& p) {
    if (p.grid_emission_factor_t_per_mwh < 0 || p.system_embodied_t < 0 || p.lifetime_years < 0 ||
        p.annual_energy_mwh < 0)
        throw domain_error("avoided_emissions: parameters must be >= 0");
    CarbonResult r;
    r.raw_t = p.annual_energy_mwh * p.lifetime_years * p.grid_emission_factor_t_per_mwh -
              p.system_embodied_t;
    r.avoided_t = std::max(0.0, r.raw_t);
    return r;
}

} // namespace nzeb::carbon
