// lighting.hpp -- zonal-cavity (lumen method) fixture-count design
//
// Cavity ratio: CR = 5 h (L + W) / (L W). Effective cavity reflectance is the
// closed-form flux-transfer result for a cavity opening, which for a given
// cavity ratio depends only on (base reflectance, wall reflectance):
//   wall/base area = 0.4 CR, rbar = area-weighted reflectance,
//   rho_eff = rbar f / (1 - rbar (1 - f)),  f = 1 / (1 + 0.4 CR).
// Fixtures: N = ceil(E A / (lamps * lumens * CU * LLD * LDD)).

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nzeb::lighting {

struct Reflectances {
    double ceiling = 0.8;
    double wall = 0.5;
    double floor = 0.2;
};

struct RoomLightingModel {
    double length_m = 0;
    double width_m = 0;
    double ceiling_height_m = 0;
    double fixture_mounting_height_m = 0;
    double work_plane_height_m = 0;
    Reflectances reflectance;

    double floor_area_m2() const { return length_m * width_m; }
    double room_cavity_height_m() const { return fixture_mounting_height_m - work_plane_height_m; }
    double ceiling_cavity_height_m() const { return ceiling_height_m - fixture_mounting_height_m; }
    double floor_cavity_height_m() const { return work_plane_height_m; }

    void validate() const; // throws domain_error on bad geometry/reflectances
};

// One sample of a luminaire's coefficient-of-utilization table.
struct CuGridPoint {
    double rcr;                 // room cavity ratio
    double ceiling_reflectance; // effective ceiling cavity reflectance
    double wall_reflectance;
    double cu;
};

// Complete rectangular CU grid with trilinear interpolation (clamped at the
// edges). Built from points or a CSV of rcr,ceiling_reflectance,wall_reflectance,cu rows.
class CuGrid {
public:
    static CuGrid from_points(std::vector<CuGridPoint> points);
    static CuGrid from_csv(const std::string& path);

    double lookup(double rcr, double ceiling_reflectance, double wall_reflectance) const;
    bool empty() const { return values_.empty(); }

private:
    std::vector<double> rcr_axis_, ceiling_axis_, wall_axis_;
    std::vector<double> values_; // [rcr][ceiling][wall]
};

struct LuminaireSpec {
    std::string name;
    int lamps_per_fixture = 1;
    double lumens_per_lamp = 0;
    std::optional<double> coefficient_of_utilization; // explicit value wins over the grid
    std::optional<CuGrid> cu_grid;
    double lamp_lumen_depreciation = 1.0;   // LLD
    double luminaire_dirt_depreciation = 1.0; // LDD
    double input_power_va = 0;              // per fixture
};

// 5 h (L+W) / (L W); zero cavity height gives 0.
double cavity_ratio(double cavity_height_m, double length_m, double width_m);

// Effective reflectance of the cavity opening; equals base_reflectance at
// cavity_ratio 0.
double effective_cavity_reflectance(double base_reflectance, double wall_reflectance,
                                    double cavity_ratio);

// CU used for the room: explicit spec value if present, otherwise the grid
// evaluated at (RCR, effective ceiling cavity reflectance, wall reflectance).
double resolve_cu(const RoomLightingModel& room, const LuminaireSpec& lum);

// Smallest fixture count reaching target_lux on the work plane.
int required_fixtures(const RoomLightingModel& room, const LuminaireSpec& lum, double target_lux);

// Maintained illuminance produced by fixture_count fixtures, lux.
double achieved_illuminance(int fixture_count, const RoomLightingModel& room,
                            const LuminaireSpec& lum);

} // namespace nzeb::lighting
