// simproduction.hpp -- hourly energy-yield simulation
//
// Chain per hour: sun position (mid-hour) -> diffuse/beam split (Erbs
// clearness-index correlation when DHI is absent) -> isotropic-sky
// transposition to each sub-array plane -> NOCT cell temperature -> DC with
// a single multiplicative derate -> AC with inverter efficiency and nameplate
// clipping -> self-consumption split against the building load.
//
// Below 1 deg solar elevation all irradiance is treated as diffuse (keeps the
// transposition finite at sunrise and the horizontal identity exact).
//
// Energy is accounted in integer watt-hours so that
// self_consumed + exported == annual_ac holds exactly on every run.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nzeb/meteo.hpp"
#include "nzeb/pvdesign.hpp"
#include "nzeb/solar.hpp"

namespace nzeb::sim {

struct Irradiance {
    double dni_w_m2 = 0;
    double dhi_w_m2 = 0;
};

// Beam/diffuse split. `dhi` wins when supplied; otherwise the Erbs diffuse
// fraction of the clearness index kt = ghi / (extraterrestrial * sin el).
Irradiance decompose_ghi(double ghi_w_m2, std::optional<double> dhi_w_m2,
                         double sun_elevation_deg, int day_of_year);

// Isotropic-sky plane-of-array irradiance, floored at 0. Beam contributes
// only when the sun is in front of the plane.
double poa_irradiance(double dni, double dhi, double ghi, const solar::SunPosition& sun,
                      const pv::Orientation& plane, double albedo);

// t_ambient + (noct - 20)/800 * poa.
double cell_temperature(double poa_w_m2, double t_ambient_c, double noct_c);

struct PowerStep {
    double dc_w = 0;
    double ac_w = 0;
    double t_cell_c = 0; // DC-capacity-weighted over sub-arrays
};

// One hour of array output for per-sub-array plane irradiances.
PowerStep ac_power_step(const pv::ArrayDesign& design, const std::vector<double>& poa_per_subarray,
                        double t_ambient_c, double derate);

struct HourTrace {
    solar::CivilTime time;
    double ghi_w_m2 = 0;
    double poa_w_m2 = 0; // capacity-weighted
    double t_cell_c = 0;
    double dc_w = 0;
    double ac_w = 0;
    double load_w = 0;
    std::int64_t self_consumed_wh = 0;
    std::int64_t exported_wh = 0;
};

struct EnergyResult {
    double annual_dc_kwh = 0;
    double annual_ac_kwh = 0;
    double self_consumed_kwh = 0;
    double exported_kwh = 0;
    double specific_yield_kwh_kwp = 0;
    double performance_ratio = 0;
    double annual_poa_kwh_m2 = 0; // capacity-weighted plane insolation
    std::vector<HourTrace> trace;
};

struct SimOptions {
    double derate = 0.90; // soiling + wiring + mismatch, one multiplicative factor
};

// Building load in W per hour, aligned with the meteo records. An empty
// profile means no on-site load (everything is exported).
using LoadProfile = std::vector<double>;

EnergyResult annual_simulation(const pv::ArrayDesign& design,
                               const std::vector<meteo::MeteoRecord>& records,
                               const solar::SiteSpec& site, const LoadProfile& load,
                               const SimOptions& options = {});

} // namespace nzeb::sim
