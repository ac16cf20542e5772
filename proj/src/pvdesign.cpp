#include "nzeb/pvdesign.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "nzeb/errors.hpp"

namespace nzeb::pv {

void PVModuleSpec::validate() const {
    if (p_stc_w <= 0) throw domain_error("module '" + name + "': p_stc must be > 0");
    if (!(v_oc > v_mp && v_mp > 0))
        throw domain_error("module '" + name + "': need v_oc > v_mp > 0");
    if (gamma_p_pct_per_k > 0 || beta_voc_pct_per_k > 0)
        throw domain_error("module '" + name + "': temperature coefficients must be <= 0");
}

void InverterSpec::validate() const {
    if (!(0 < mppt_v_min && mppt_v_min < mppt_v_max && mppt_v_max <= v_dc_max))
        throw domain_error("inverter '" + name + "': need 0 < mppt_min < mppt_max <= v_dc_max");
    if (efficiency <= 0 || efficiency > 1)
        throw domain_error("inverter '" + name + "': efficiency must be in (0,1]");
    if (p_ac_nominal_w <= 0)
        throw domain_error("inverter '" + name + "': nominal AC power must be > 0");
}

double azimuth_from_compass(double compass_deg) {
    double a = compass_deg - 180.0; // 180 compass = due south = 0 here
    while (a > 180.0) a -= 360.0;
    while (a < -180.0) a += 360.0;
    return a;
}

double cold_open_circuit_voltage(const PVModuleSpec& m, int series, double t_min_c) {
    return series * m.v_oc * (1.0 + m.beta_voc_pct_per_k / 100.0 * (t_min_c - 25.0));
}

double hot_mpp_voltage(const PVModuleSpec& m, int series, double t_cell_max_c) {
    return series * m.v_mp * (1.0 + m.gamma_p_pct_per_k / 100.0 * (t_cell_max_c - 25.0));
}

SeriesBounds series_bounds(const PVModuleSpec& m, const InverterSpec& inv, double t_min_c,
                           double t_cell_max_c) {
    m.validate();
    inv.validate();
    if (!(t_min_c < 25.0 && 25.0 < t_cell_max_c))
        throw domain_error("series_bounds: need t_min < 25 C (STC) < t_cell_max");
    SeriesBounds b;
    b.max_series = static_cast<int>(std::floor(inv.v_dc_max / cold_open_circuit_voltage(m, 1, t_min_c)));
    b.min_series = static_cast<int>(std::ceil(inv.mppt_v_min / hot_mpp_voltage(m, 1, t_cell_max_c)));
    if (b.min_series < 1) b.min_series = 1;
    if (b.min_series > b.max_series)
        throw design_error("series_bounds: empty feasible range for module '" + m.name +
                           "' on inverter '" + inv.name + "' (min " + std::to_string(b.min_series) +
                           " > max " + std::to_string(b.max_series) + ")");
    return b;
}

int ArrayDesign::module_count() const {
    int n = 0;
    for (const auto& s : sub_arrays) n += s.module_count();
    return n;
}

double ArrayDesign::nominal_dc_w() const {
    double p = 0;
    for (const auto& s : sub_arrays) p += s.nominal_dc_w();
    return p;
}

double ArrayDesign::dc_ac_ratio() const {
    const double ac = inverter.p_ac_nominal_w * inverter_count;
    return ac > 0 ? nominal_dc_w() / ac : 0.0;
}

namespace {

struct Candidate {
    double deviation;   // |P - target|
    int total_strings;
    int total_modules;
    size_t model_order; // catalog index sum, for a stable final tie-break
    ArrayDesign design;

    bool better_than(const Candidate& o) const {
        if (deviation != o.deviation) return deviation < o.deviation;
        if (total_strings != o.total_strings) return total_strings < o.total_strings;
        if (total_modules != o.total_modules) return total_modules < o.total_modules;
        return model_order < o.model_order;
    }
};

} // namespace

ArrayDesign configure_array(double target_dc_wp, const std::vector<PVModuleSpec>& catalog,
                            const InverterSpec& inverter, int inverter_count,
                            const std::vector<Orientation>& orientations,
                            const SizingConditions& cond) {
    if (target_dc_wp <= 0) throw domain_error("configure_array: target DC power must be > 0");
    if (catalog.empty()) throw design_error("configure_array: empty module catalog");
    if (orientations.empty()) throw design_error("configure_array: no orientations");
    if (inverter_count <= 0) throw domain_error("configure_array: inverter count must be > 0");

    // Feasible series window per model; drop models with an empty window.
    struct ModelOption {
        size_t catalog_index;
        SeriesBounds bounds;
    };
    std::vector<ModelOption> models;
    for (size_t i = 0; i < catalog.size(); ++i) {
        try {
            models.push_back({i, series_bounds(catalog[i], inverter, cond.t_min_c, cond.t_cell_max_c)});
        } catch (const design_error&) {
            // model not usable with this inverter
        }
    }
    if (models.empty())
        throw design_error("configure_array: target unreachable, no module fits the inverter "
                           "voltage window");

    const size_t k = orientations.size();
    const double min_string_power =
        [&] {
            double p = std::numeric_limits<double>::max();
            for (const auto& mo : models)
                p = std::min(p, catalog[mo.catalog_index].p_stc_w * mo.bounds.min_series);
            return p;
        }();
    const int max_total_strings =
        static_cast<int>(std::ceil(target_dc_wp / min_string_power)) + static_cast<int>(k);

    // Even split: every orientation carries floor(S/k) or ceil(S/k) strings.
    // Enumerate total strings S, the split, and a (model, series) choice per
    // orientation; keep the candidate closest to the target.
    Candidate best;
    best.deviation = std::numeric_limits<double>::max();

    std::vector<size_t> choice(k); // per-orientation index into per-orientation option list

    struct PerOrientationOption {
        size_t catalog_index;
        int series;
        double string_power;
    };
    std::vector<PerOrientationOption> options;
    for (const auto& mo : models)
        for (int n = mo.bounds.min_series; n <= mo.bounds.max_series; ++n)
            options.push_back({mo.catalog_index, n, catalog[mo.catalog_index].p_stc_w * n});

    for (int total = 1; total <= max_total_strings; ++total) {
        const int base = total / static_cast<int>(k);
        const int extra = total % static_cast<int>(k); // first `extra` orientations get one more
        if (base == 0 && extra == 0) continue;

        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            double power = 0;
            int modules = 0;
            size_t order = 0;
            for (size_t i = 0; i < k; ++i) {
                const int strings = base + (static_cast<int>(i) < extra ? 1 : 0);
                if (strings == 0) continue;
                const auto& opt = options[choice[i]];
                power += opt.string_power * strings;
                modules += opt.series * strings;
                order += opt.catalog_index;
            }
            const double dev = std::abs(power - target_dc_wp);
            if (dev < best.deviation ||
                (dev == best.deviation &&
                 Candidate{dev, total, modules, order, {}}.better_than(best))) {
                ArrayDesign d;
                d.inverter = inverter;
                d.inverter_count = inverter_count;
                for (size_t i = 0; i < k; ++i) {
                    const int strings = base + (static_cast<int>(i) < extra ? 1 : 0);
                    if (strings == 0) continue;
                    const auto& opt = options[choice[i]];
                    d.sub_arrays.push_back(
                        {catalog[opt.catalog_index], opt.series, strings, orientations[i]});
                }
                best = {dev, total, modules, order, std::move(d)};
            }
            // advance the per-orientation option counter
            size_t pos = 0;
            while (pos < k && ++choice[pos] == options.size()) choice[pos++] = 0;
            if (pos == k) break;
        }
    }

    if (best.design.sub_arrays.empty())
        throw design_error("configure_array: target unreachable within bounds/orientations");
    return best.design;
}

ValidationResult validate_design(const ArrayDesign& design, const SizingConditions& cond) {
    ValidationResult r;
    char buf[160];
    for (const auto& s : design.sub_arrays) {
        if (s.parallel_strings == 0) continue;
        const double voc = cold_open_circuit_voltage(s.module, s.modules_in_series, cond.t_min_c);
        if (voc > design.inverter.v_dc_max) {
            std::snprintf(buf, sizeof buf,
                          "sub-array '%s' x%d: cold Voc %.1f V exceeds inverter limit %.0f V",
                          s.module.name.c_str(), s.modules_in_series, voc, design.inverter.v_dc_max);
            r.violations.push_back(buf);
        }
        const double vmp = hot_mpp_voltage(s.module, s.modules_in_series, cond.t_cell_max_c);
        if (vmp < design.inverter.mppt_v_min) {
            std::snprintf(buf, sizeof buf,
                          "sub-array '%s' x%d: hot Vmp %.1f V below MPPT floor %.0f V",
                          s.module.name.c_str(), s.modules_in_series, vmp, design.inverter.mppt_v_min);
            r.violations.push_back(buf);
        }
    }
    r.dc_ac_ratio = design.dc_ac_ratio();
    int strings = 0;
    for (const auto& s : design.sub_arrays) strings += s.parallel_strings;
    if (strings == 0) r.warnings.push_back("degenerate design: no strings, DC:AC ratio 0");
    return r;
}

std::string connection_summary(const ArrayDesign& design) {
    std::ostringstream out;
    char buf[200];
    for (const auto& s : design.sub_arrays) {
        std::snprintf(buf, sizeof buf,
                      "%d string(s) of %d x %s (%.0f Wp) at tilt %.0f deg / azimuth %.0f deg = %.2f kWp\n",
                      s.parallel_strings, s.modules_in_series, s.module.name.c_str(),
                      s.module.p_stc_w, s.orientation.tilt_deg, s.orientation.azimuth_deg,
                      s.nominal_dc_w() / 1000.0);
        out << buf;
    }
    std::snprintf(buf, sizeof buf, "%d modules, %.2f kWp DC on %d x %s (%.1f kWac), DC:AC %.3f\n",
                  design.module_count(), design.nominal_dc_w() / 1000.0, design.inverter_count,
                  design.inverter.name.c_str(),
                  design.inverter.p_ac_nominal_w * design.inverter_count / 1000.0,
                  design.dc_ac_ratio());
    out << buf;
    return out.str();
}

} // namespace nzeb::pv
