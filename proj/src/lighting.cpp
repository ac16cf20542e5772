#include "nzeb/lighting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "nzeb/errors.hpp"

namespace nzeb::lighting {

void RoomLightingModel::validate() const {
    if (length_m <= 0 || width_m <= 0)
        throw domain_error("room: plan dimensions must be > 0");
    if (work_plane_height_m < 0 || work_plane_height_m >= fixture_mounting_height_m ||
        fixture_mounting_height_m > ceiling_height_m)
        throw domain_error("room: need 0 <= work plane < mounting height <= ceiling height");
    for (double r : {reflectance.ceiling, reflectance.wall, reflectance.floor})
        if (r < 0 || r > 1) throw domain_error("room: reflectances must be in [0,1]");
}

double cavity_ratio(double cavity_height_m, double length_m, double width_m) {
    if (length_m <= 0 || width_m <= 0)
        throw domain_error("cavity_ratio: plan dimensions must be > 0");
    if (cavity_height_m < 0)
        throw domain_error("cavity_ratio: cavity height must be >= 0");
    return 5.0 * cavity_height_m * (length_m + width_m) / (length_m * width_m);
}

double effective_cavity_reflectance(double base_reflectance, double wall_reflectance,
                                    double cavity_ratio) {
    if (base_reflectance < 0 || base_reflectance > 1 || wall_reflectance < 0 || wall_reflectance > 1)
        throw domain_error("effective_cavity_reflectance: reflectances must be in [0,1]");
    if (cavity_ratio < 0)
        throw domain_error("effective_cavity_reflectance: cavity ratio must be >= 0");
    // Wall area per unit opening area is exactly 0.4*CR for any rectangular plan.
    const double wall_share = 0.4 * cavity_ratio;
    const double rbar = (base_reflectance + wall_share * wall_reflectance) / (1.0 + wall_share);
    const double f = 1.0 / (1.0 + wall_share); // opening / total internal surface
    return rbar * f / (1.0 - rbar * (1.0 - f));
}

namespace {

double light_output_per_fixture(const RoomLightingModel& room, const LuminaireSpec& lum) {
    const double cu = resolve_cu(room, lum);
    if (lum.lamps_per_fixture <= 0 || lum.lumens_per_lamp <= 0)
        throw domain_error("luminaire: lamps and lumens/lamp must be > 0");
    if (cu <= 0 || lum.lamp_lumen_depreciation <= 0 || lum.luminaire_dirt_depreciation <= 0)
        throw domain_error("luminaire: CU/LLD/LDD must be > 0");
    if (cu > 1 || lum.lamp_lumen_depreciation > 1 || lum.luminaire_dirt_depreciation > 1)
        throw domain_error("luminaire: CU/LLD/LDD must be <= 1");
    return lum.lamps_per_fixture * lum.lumens_per_lamp * cu * lum.lamp_lumen_depreciation *
           lum.luminaire_dirt_depreciation;
}

} // namespace

double resolve_cu(const RoomLightingModel& room, const LuminaireSpec& lum) {
    if (lum.coefficient_of_utilization) return *lum.coefficient_of_utilization;
    if (!lum.cu_grid || lum.cu_grid->empty())
        throw domain_error("luminaire: no CU value and no CU grid");
    const double rcr = cavity_ratio(room.room_cavity_height_m(), room.length_m, room.width_m);
    const double ccr = cavity_ratio(room.ceiling_cavity_height_m(), room.length_m, room.width_m);
    const double rho_cc =
        effective_cavity_reflectance(room.reflectance.ceiling, room.reflectance.wall, ccr);
    return lum.cu_grid->lookup(rcr, rho_cc, room.reflectance.wall);
}

int required_fixtures(const RoomLightingModel& room, const LuminaireSpec& lum, double target_lux) {
    room.validate();
    if (target_lux < 0) throw domain_error("required_fixtures: target lux must be >= 0");
    if (target_lux == 0) return 0;
    const double per_fixture = light_output_per_fixture(room, lum);
    return static_cast<int>(std::ceil(target_lux * room.floor_area_m2() / per_fixture));
}

double achieved_illuminance(int fixture_count, const RoomLightingModel& room,
                            const LuminaireSpec& lum) {
    room.validate();
    if (fixture_count < 0) throw domain_error("achieved_illuminance: fixture count must be >= 0");
    if (fixture_count == 0) return 0.0;
    return fixture_count * light_output_per_fixture(room, lum) / room.floor_area_m2();
}

// ---- CU grid ------------------------------------------------------------

CuGrid CuGrid::from_points(std::vector<CuGridPoint> points) {
    if (points.empty()) throw domain_error("cu grid: no points");
    std::set<double> rs, cs, ws;
    for (const auto& p : points) {
        rs.insert(p.rcr);
        cs.insert(p.ceiling_reflectance);
        ws.insert(p.wall_reflectance);
    }
    CuGrid g;
    g.rcr_axis_.assign(rs.begin(), rs.end());
    g.ceiling_axis_.assign(cs.begin(), cs.end());
    g.wall_axis_.assign(ws.begin(), ws.end());
    const size_t n = g.rcr_axis_.size() * g.ceiling_axis_.size() * g.wall_axis_.size();
    if (points.size() != n)
        throw domain_error("cu grid: points do not form a complete rectangular grid");
    g.values_.assign(n, 0.0);
    auto index_of = [](const std::vector<double>& axis, double v) {
        return static_cast<size_t>(std::lower_bound(axis.begin(), axis.end(), v) - axis.begin());
    };
    for (const auto& p : points) {
        const size_t i = index_of(g.rcr_axis_, p.rcr);
        const size_t j = index_of(g.ceiling_axis_, p.ceiling_reflectance);
        const size_t k = index_of(g.wall_axis_, p.wall_reflectance);
        g.values_[(i * g.ceiling_axis_.size() + j) * g.wall_axis_.size() + k] = p.cu;
    }
    return g;
}

CuGrid CuGrid::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path, 0, "cannot open CU grid");
    std::string line;
    long row = 0;
    std::vector<CuGridPoint> pts;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        if (row == 1 && line.find("rcr") != std::string::npos) continue; // header
        std::istringstream ss(line);
        CuGridPoint p;
        char c1, c2, c3;
        if (!(ss >> p.rcr >> c1 >> p.ceiling_reflectance >> c2 >> p.wall_reflectance >> c3 >> p.cu) ||
            c1 != ',' || c2 != ',' || c3 != ',')
            throw parse_error(path, row, "expected rcr,ceiling_reflectance,wall_reflectance,cu");
        pts.push_back(p);
    }
    try {
        return from_points(std::move(pts));
    } catch (const domain_error& e) {
        throw parse_error(path, 0, e.what());
    }
}

namespace {

// Index pair and weight for 1-D linear interpolation, clamped to the axis.
struct Bracket {
    size_t lo, hi;
    double w; // weight of hi
};

Bracket bracket(const std::vector<double>& axis, double v) {
    if (axis.size() == 1 || v <= axis.front()) return {0, 0, 0.0};
    if (v >= axis.back()) return {axis.size() - 1, axis.size() - 1, 0.0};
    size_t hi = static_cast<size_t>(std::upper_bound(axis.begin(), axis.end(), v) - axis.begin());
    size_t lo = hi - 1;
    return {lo, hi, (v - axis[lo]) / (axis[hi] - axis[lo])};
}

} // namespace

double CuGrid::lookup(double rcr, double ceiling_reflectance, double wall_reflectance) const {
    if (empty()) throw domain_error("cu grid: empty");
    const Bracket bi = bracket(rcr_axis_, rcr);
    const Bracket bj = bracket(ceiling_axis_, ceiling_reflectance);
    const Bracket bk = bracket(wall_axis_, wall_reflectance);
    auto at = [&](size_t i, size_t j, size_t k) {
        return values_[(i * ceiling_axis_.size() + j) * wall_axis_.size() + k];
    };
    double out = 0.0;
    for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj)
            for (int dk = 0; dk < 2; ++dk) {
                const double w = (di ? bi.w : 1 - bi.w) * (dj ? bj.w : 1 - bj.w) *
                                 (dk ? bk.w : 1 - bk.w);
                if (w > 0) out += w * at(di ? bi.hi : bi.lo, dj ? bj.hi : bj.lo, dk ? bk.hi : bk.lo);
            }
    return out;
}

} // namespace nzeb::lighting
