#include "nzeb/simproduction.hpp"

#include <algorithm>
#include <cmath>

#include "nzeb/errors.hpp"

namespace nzeb::sim {

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
constexpr double kMinBeamElevationDeg = 1.0;

double erbs_diffuse_fraction(double kt) {
    if (kt <= 0.22) return 1.0 - 0.09 * kt;
    if (kt <= 0.80)
        return 0.9511 - 0.1604 * kt + 4.388 * kt * kt - 16.638 * kt * kt * kt +
               12.336 * kt * kt * kt * kt;
    return 0.165;
}
} // namespace

Irradiance decompose_ghi(double ghi, std::optional<double> dhi, double sun_elevation_deg,
                         int day_of_year) {
    if (ghi < 0) throw domain_error("decompose_ghi: ghi must be >= 0");
    if (ghi == 0.0) return {0.0, 0.0};
    if (sun_elevation_deg <= kMinBeamElevationDeg) return {0.0, ghi};

    const double sin_el = std::sin(sun_elevation_deg * kDegToRad);
    if (dhi) {
        const double d = std::clamp(*dhi, 0.0, ghi);
        return {std::max(0.0, (ghi - d) / sin_el), d};
    }

    const double g_on = solar::extraterrestrial_normal(day_of_year);
    const double kt = ghi / (g_on * sin_el);
    double diffuse = erbs_diffuse_fraction(kt) * ghi;
    double beam_normal = (ghi - diffuse) / sin_el;
    if (beam_normal > g_on) {
        // unphysical spike near the horizon; push the excess into diffuse
        beam_normal = g_on;
        diffuse = ghi - beam_normal * sin_el;
    }
    return {beam_normal, diffuse};
}

double poa_irradiance(double dni, double dhi, double ghi, const solar::SunPosition& sun,
                      const pv::Orientation& plane, double albedo) {
    if (dni < 0 || dhi < 0 || ghi < 0) throw domain_error("poa_irradiance: irradiances must be >= 0");
    const double cos_inc = solar::cos_incidence(sun, plane.tilt_deg, plane.azimuth_deg);
    const double cos_tilt = std::cos(plane.tilt_deg * kDegToRad);
    const double beam = dni * std::max(0.0, cos_inc);
    const double sky = dhi * (1.0 + cos_tilt) / 2.0;
    const double ground = ghi * albedo * (1.0 - cos_tilt) / 2.0;
    return std::max(0.0, beam + sky + ground);
}

double cell_temperature(double poa_w_m2, double t_ambient_c, double noct_c) {
    return t_ambient_c + (noct_c - 20.0) / 800.0 * poa_w_m2;
}

PowerStep ac_power_step(const pv::ArrayDesign& design, const std::vector<double>& poa_per_subarray,
                        double t_ambient_c, double derate) {
    if (poa_per_subarray.size() != design.sub_arrays.size())
        throw domain_error("ac_power_step: one plane irradiance per sub-array required");
    PowerStep step;
    double weight = 0;
    for (size_t i = 0; i < design.sub_arrays.size(); ++i) {
        const auto& sa = design.sub_arrays[i];
        const double poa = poa_per_subarray[i];
        const double t_cell = cell_temperature(poa, t_ambient_c, sa.module.noct_c);
        const double p = sa.nominal_dc_w() * (poa / 1000.0) *
                         (1.0 + sa.module.gamma_p_pct_per_k / 100.0 * (t_cell - 25.0)) * derate;
        step.dc_w += std::max(0.0, p);
        step.t_cell_c += t_cell * sa.nominal_dc_w();
        weight += sa.nominal_dc_w();
    }
    step.t_cell_c = weight > 0 ? step.t_cell_c / weight : t_ambient_c;
    const double ceiling = design.inverter.p_ac_nominal_w * design.inverter_count;
    step.ac_w = std::min(step.dc_w * design.inverter.efficiency, ceiling);
    return step;
}

EnergyResult annual_simulation(const pv::ArrayDesign& design,
                               const std::vector<meteo::MeteoRecord>& records,
                               const solar::SiteSpec& site, const LoadProfile& load,
                               const SimOptions& options) {
    if (!load.empty() && load.size() != records.size())
        throw domain_error("annual_simulation: load profile length (" + std::to_string(load.size()) +
                           ") does not match meteo length (" + std::to_string(records.size()) + ")");

    EnergyResult result;
    result.trace.reserve(records.size());

    const double kwp = design.nominal_dc_w() / 1000.0;
    std::int64_t dc_wh = 0, ac_wh_sum = 0, self_wh_sum = 0, export_wh_sum = 0;
    double poa_weighted_wh_m2 = 0;

    std::vector<double> poa(design.sub_arrays.size(), 0.0);
    for (size_t h = 0; h < records.size(); ++h) {
        const auto& rec = records[h];
        solar::CivilTime mid = rec.timestamp;
        mid.minute = 30; // hour centre
        const auto sun = solar::solar_position(site, mid);
        const int doy = solar::day_of_year(rec.timestamp.year, rec.timestamp.month, rec.timestamp.day);
        const auto irr = decompose_ghi(rec.ghi_w_m2, rec.dhi_w_m2, sun.elevation_deg, doy);

        double poa_weighted = 0;
        for (size_t i = 0; i < design.sub_arrays.size(); ++i) {
            poa[i] = poa_irradiance(irr.dni_w_m2, irr.dhi_w_m2, rec.ghi_w_m2, sun,
                                    design.sub_arrays[i].orientation, site.albedo);
            if (kwp > 0)
                poa_weighted += poa[i] * design.sub_arrays[i].nominal_dc_w() / (kwp * 1000.0);
        }
        poa_weighted_wh_m2 += poa_weighted;

        const auto step = ac_power_step(design, poa, rec.t_ambient_c, options.derate);

        const double load_w = load.empty() ? 0.0 : load[h];
        const std::int64_t ac_h = std::llround(step.ac_w);
        const std::int64_t load_h = std::llround(std::max(0.0, load_w));
        const std::int64_t self_h = std::min(ac_h, load_h);
        const std::int64_t export_h = ac_h - self_h;

        dc_wh += std::llround(step.dc_w);
        ac_wh_sum += ac_h;
        self_wh_sum += self_h;
        export_wh_sum += export_h;

        HourTrace t;
        t.time = rec.timestamp;
        t.ghi_w_m2 = rec.ghi_w_m2;
        t.poa_w_m2 = poa_weighted;
        t.t_cell_c = step.t_cell_c;
        t.dc_w = step.dc_w;
        t.ac_w = step.ac_w;
        t.load_w = load_w;
        t.self_consumed_wh = self_h;
        t.exported_wh = export_h;
        result.trace.push_back(t);
    }

    result.annual_dc_kwh = dc_wh / 1000.0;
    result.annual_ac_kwh = ac_wh_sum / 1000.0;
    result.self_consumed_kwh = self_wh_sum / 1000.0;
    result.exported_kwh = export_wh_sum / 1000.0;
    result.annual_poa_kwh_m2 = poa_weighted_wh_m2 / 1000.0;
    result.specific_yield_kwh_kwp = kwp > 0 ? result.annual_ac_kwh / kwp : 0.0;
    result.performance_ratio = (kwp > 0 && result.annual_poa_kwh_m2 > 0)
                                   ? result.annual_ac_kwh / (kwp * result.annual_poa_kwh_m2)
                                   : 0.0;
    return result;
}

} // namespace nzeb::sim
