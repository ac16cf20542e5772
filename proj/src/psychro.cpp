#include "nzeb/psychro.hpp"

#include <cmath>
#include <string>

#include "nzeb/errors.hpp"

namespace nzeb::psychro {

double saturation_pressure(double dry_bulb_c) {
    if (dry_bulb_c < -40.0 || dry_bulb_c > 120.0)
        throw domain_error("saturation_pressure: dry bulb " + std::to_string(dry_bulb_c) +
                           " C outside -40..120 C");
    // Hyland-Wexler (1983), over liquid water; T in K, result in Pa.
    const double T = dry_bulb_c + 273.15;
    const double lnp = -5.8002206e3 / T + 1.3914993 - 4.8640239e-2 * T +
                       4.1764768e-5 * T * T - 1.4452093e-8 * T * T * T +
                       6.5459673 * std::log(T);
    return std::exp(lnp) / 1000.0; // kPa
}

MoistAirState state_from_db_rh(double dry_bulb_c, double rh, double pressure_kpa) {
    if (rh < 0.0 || rh > 1.0)
        throw domain_error("state_from_db_rh: relative humidity " + std::to_string(rh) +
                           " outside [0,1]");
    const double pws = saturation_pressure(dry_bulb_c);
    const double pw = rh * pws;
    if (pressure_kpa <= pw)
        throw domain_error("state_from_db_rh: pressure must exceed vapor pressure");

    MoistAirState s;
    s.dry_bulb_c = dry_bulb_c;
    s.pressure_kpa = pressure_kpa;
    s.relative_humidity = rh;
    s.humidity_ratio = kMolecularMassRatio * pw / (pressure_kpa - pw);
    s.specific_volume = kGasConstantDryAir * (dry_bulb_c + 273.15) *
                        (1.0 + 1.607858 * s.humidity_ratio) / pressure_kpa;
    s.enthalpy = 1.006 * dry_bulb_c + s.humidity_ratio * (2501.0 + 1.86 * dry_bulb_c);
    return s;
}

double relative_humidity(double dry_bulb_c, double humidity_ratio, double pressure_kpa) {
    if (humidity_ratio < 0.0)
        throw domain_error("relative_humidity: humidity ratio must be >= 0");
    const double pw = humidity_ratio * pressure_kpa / (kMolecularMassRatio + humidity_ratio);
    return pw / saturation_pressure(dry_bulb_c);
}

double ventilation_flow_for_sensible_load(const VentilationSpec& spec, double specific_volume) {
    if (spec.sensible_load_kw == 0.0) return 0.0;
    if (spec.sensible_load_kw < 0.0)
        throw domain_error("ventilation_flow_for_sensible_load: sensible load must be >= 0");
    if (spec.supply_to_room_delta_t_k <= 0.0)
        throw domain_error("ventilation_flow_for_sensible_load: delta T must be > 0");
    if (specific_volume <= 0.0)
        throw domain_error("ventilation_flow_for_sensible_load: specific volume must be > 0");
    const double m3_per_s = spec.sensible_load_kw * specific_volume /
                            (spec.cp_kj_per_kg_k * spec.supply_to_room_delta_t_k);
    return m3_per_s * 1000.0; // L/s
}

double ventilation_flow_for_sensible_load(const VentilationSpec& spec, const MoistAirState& air) {
    return ventilation_flow_for_sensible_load(spec, air.specific_volume);
}

double coil_load(double volume_flow_l_s, const MoistAirState& inlet, const MoistAirState& outlet) {
    if (volume_flow_l_s <= 0.0)
        throw domain_error("coil_load: volume flow must be > 0");
    const double mass_flow = volume_flow_l_s / 1000.0 / inlet.specific_volume; // kg/s dry air
    return mass_flow * (inlet.enthalpy - outlet.enthalpy);
}

} // namespace nzeb::psychro
