// pvdesign.hpp -- PV module/inverter electrical model, string sizing and
// array configuration.
//
// Azimuth convention: 0 deg = due south, negative = east, positive = west
// (so the two roof faces of one building are e.g. -8 and 172).

#pragma once

#include <string>
#include <vector>

namespace nzeb::pv {

struct PVModuleSpec {
    std::string name;
    double p_stc_w = 0;           // Wp at STC
    double v_mp = 0, v_oc = 0;    // V at STC
    double i_mp = 0, i_sc = 0;    // A at STC
    double gamma_p_pct_per_k = 0; // power temperature coefficient, %/K (<= 0)
    double beta_voc_pct_per_k = 0;// Voc temperature coefficient, %/K (<= 0)
    double noct_c = 45.0;         // nominal operating cell temperature
    double module_area_m2 = 0;
    double unit_cost = 0;

    void validate() const;
};

struct InverterSpec {
    std::string name;
    double p_ac_nominal_w = 0;
    double mppt_v_min = 0, mppt_v_max = 0;
    double v_dc_max = 0;
    double efficiency = 0.97;
    double unit_cost = 0;

    void validate() const;
};

struct Orientation {
    double tilt_deg = 0;
    double azimuth_deg = 0; // south-referenced
};

// North-referenced compass azimuth (0=N, 90=E, clockwise) to the
// south-referenced convention above.
double azimuth_from_compass(double compass_deg);

// Site temperature extremes used for string sizing.
struct SizingConditions {
    double t_min_c = 15.0;      // record low ambient (cell at ambient at dawn)
    double t_cell_max_c = 65.0; // hot-cell design temperature
};

double cold_open_circuit_voltage(const PVModuleSpec& m, int series, double t_min_c);
double hot_mpp_voltage(const PVModuleSpec& m, int series, double t_cell_max_c);

struct SeriesBounds {
    int min_series = 0;
    int max_series = 0;
};

// Feasible modules-in-series window for one module/inverter pair:
//   max from cold Voc against the inverter DC limit,
//   min from hot Vmp against the MPPT floor.
// Throws design_error when the window is empty.
SeriesBounds series_bounds(const PVModuleSpec& m, const InverterSpec& inv, double t_min_c,
                           double t_cell_max_c);

struct SubArray {
    PVModuleSpec module;
    int modules_in_series = 0;
    int parallel_strings = 0;
    Orientation orientation;

    int module_count() const { return modules_in_series * parallel_strings; }
    double nominal_dc_w() const { return module.p_stc_w * module_count(); }
};

struct ArrayDesign {
    std::vector<SubArray> sub_arrays;
    InverterSpec inverter;
    int inverter_count = 0;

    int module_count() const;
    double nominal_dc_w() const;
    double dc_ac_ratio() const;
};

// Picks one module model, a series length within its bounds and a string
// count for every orientation so the total nominal DC power lands as close
// to target_dc_wp as possible. Strings are spread evenly across the
// orientations (each roof face feeds its own inverter input, so the DC power
// per face is kept balanced). Ties go to fewer strings, then fewer modules,
// then catalog order.
ArrayDesign configure_array(double target_dc_wp, const std::vector<PVModuleSpec>& catalog,
                            const InverterSpec& inverter, int inverter_count,
                            const std::vector<Orientation>& orientations,
                            const SizingConditions& cond = {});

struct ValidationResult {
    std::vector<std::string> violations; // hard electrical limits; empty = valid
    std::vector<std::string> warnings;   // degenerate but not invalid
    double dc_ac_ratio = 0;
};

// Cold-Voc ceiling and hot-Vmp floor per sub-array, plus the DC:AC ratio.
ValidationResult validate_design(const ArrayDesign& design, const SizingConditions& cond = {});

// Textual strings-by-orientation summary (the report's stand-in for a
// single-line diagram).
std::string connection_summary(const ArrayDesign& design);

} // namespace nzeb::pv
