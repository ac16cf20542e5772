// project.hpp -- declarative project file (JSON) feeding the whole pipeline
//
// Strict schema: unknown keys are rejected so that golden comparisons stay
// honest. All quantities carry their unit in the key name. Money fields
// accept a JSON number or a decimal string.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nzeb/carbon.hpp"
#include "nzeb/finance.hpp"
#include "nzeb/hvac.hpp"
#include "nzeb/lighting.hpp"
#include "nzeb/loads.hpp"
#include "nzeb/pvdesign.hpp"
#include "nzeb/solar.hpp"

namespace nzeb::project {

struct LightingSection {
    lighting::RoomLightingModel room;
    std::string room_name;
    lighting::LuminaireSpec luminaire;
    double target_lux = 0;
};

struct SupplyAir {
    double dry_bulb_c = 0;
    double relative_humidity = 0;
    double pressure_kpa = 101.325;
};

struct HvacSection {
    int occupants = 0;
    double sensible_gain_per_person_w = 70.0;
    double supply_delta_t_k = 8.0;
    // Specific volume for the flow calculation: explicit value, or derived
    // from supply_air when given. The 0.88 default reproduces the reference
    // sizing and should be overridden when the supply condition is known.
    std::optional<double> specific_volume_m3_per_kg;
    std::optional<SupplyAir> supply_air;
    double cp_kj_per_kg_k = 1.005;
    std::optional<double> total_coil_load_kw; // direct analyzer value
    hvac::AcuSpec unit;
    double count_tolerance = 0.05;
};

struct LoadsSection {
    double outlet_area_m2 = 0;
    double outlet_va_per_m2 = 8.0;
    double power_factor = 1.0; // apparent -> real power for the simulation
    std::vector<loads::LoadItem> extra_items;
};

struct PvSection {
    double target_dc_wp = 0;
    std::vector<pv::PVModuleSpec> modules;
    pv::InverterSpec inverter;
    int inverter_count = 1;
    std::vector<pv::Orientation> orientations;
    pv::SizingConditions sizing;
    double derate = 0.90;
};

// Hour-of-day occupancy fractions; scaled by the load schedule total.
struct WeeklySchedule {
    std::array<double, 24> weekday{};
    std::array<double, 24> weekend{};
    bool present = false;
};

struct FinanceSection {
    finance::CostLedger ledger;
    finance::FinanceParams params;
    // When present, the cash-flow analysis uses these fixed energies instead
    // of the simulation result (e.g. to reproduce a published report).
    std::optional<finance::EnergySplit> energy;
};

struct CarbonSection {
    double grid_emission_factor_t_per_mwh = 0;
    double system_embodied_t = 0;
    std::optional<int> lifetime_years;        // default: finance lifetime
    std::optional<double> annual_energy_mwh;  // default: simulated/finance energy
};

struct ProjectFile {
    int schema_version = 1;
    std::string site_name;
    solar::SiteSpec site;
    double site_pressure_kpa = 101.325;
    LightingSection lighting;
    HvacSection hvac;
    LoadsSection loads;
    PvSection pv;
    WeeklySchedule schedule;
    FinanceSection finance;
    CarbonSection carbon;
    std::string source_path;
};

// Throws parse_error with file and line (syntax) or file and JSON path
// (schema violations, including unknown keys).
ProjectFile load_project(const std::string& path);

} // namespace nzeb::project
