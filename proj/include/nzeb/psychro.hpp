// psychro.hpp -- moist-air properties and sensible-heat ventilation sizing
//
// Constant set (perfect-gas moist air, all per kg of dry air):
//   pws(t)   Hyland-Wexler correlation over liquid water, t in -40..120 C
//   W        0.621945 * pw / (p - pw)                      [kg/kg]
//   v        R_da * T_K * (1 + 1.607858 W) / p             [m3/kg], R_da = 0.287042 kJ/(kg K)
//   h        1.006 t + W (2501 + 1.86 t)                   [kJ/kg]
// Sensible heat balance: Qs = (V/v) Cp (T2 - T1), V in m3/s, Qs in kW.

#pragma once

namespace nzeb::psychro {

inline constexpr double kGasConstantDryAir = 0.287042;   // kJ/(kg K)
inline constexpr double kMolecularMassRatio = 0.621945;  // Mw/Mda
inline constexpr double kCpDefault = 1.005;              // kJ/(kg K)

// Thermodynamic state of humid air. All derived fields are per kg dry air
// and mutually consistent with the correlation set above.
struct MoistAirState {
    double dry_bulb_c;        // C
    double pressure_kpa;      // absolute
    double humidity_ratio;    // kg water / kg dry air
    double specific_volume;   // m3 / kg dry air
    double enthalpy;          // kJ / kg dry air
    double relative_humidity; // 0..1
};

// Sensible-load ventilation requirement; flow is the computed output.
struct VentilationSpec {
    double sensible_load_kw;
    double supply_to_room_delta_t_k;       // T2 - T1
    double cp_kj_per_kg_k = kCpDefault;
    double volume_flow_l_s = 0.0;
};

// Saturation vapor pressure over liquid water, kPa. Domain -40..120 C.
double saturation_pressure(double dry_bulb_c);

// Full state from dry bulb, relative humidity (0..1) and absolute pressure.
MoistAirState state_from_db_rh(double dry_bulb_c, double rh, double pressure_kpa);

// Inverse: recover rh from (t, W, p).
double relative_humidity(double dry_bulb_c, double humidity_ratio, double pressure_kpa);

// Volume flow (L/s) needed to carry spec.sensible_load_kw at the given
// specific volume: V = Qs v / (Cp dT).
double ventilation_flow_for_sensible_load(const VentilationSpec& spec, double specific_volume);
double ventilation_flow_for_sensible_load(const VentilationSpec& spec, const MoistAirState& air);

// Total (sensible + latent) coil load, kW; positive when cooling.
// Mass flow is taken at the inlet state: m = V/v_in, load = m (h_in - h_out).
double coil_load(double volume_flow_l_s, const MoistAirState& inlet, const MoistAirState& outlet);

} // namespace nzeb::psychro
