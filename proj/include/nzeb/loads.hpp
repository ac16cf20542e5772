// loads.hpp -- electrical load schedule in apparent power (VA/kVA)

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nzeb::loads {

// One schedule row. Either (va_per_unit, quantity) or a direct kVA lump sum
// (e.g. an area-based outlet provision).
struct LoadItem {
    std::string name;
    std::optional<double> va_per_unit;
    std::optional<int> quantity;
    std::optional<double> direct_kva;

    double subtotal_kva() const; // full precision
};

struct LoadSchedule {
    std::vector<LoadItem> items;
    double total_kva = 0; // full precision; report at 2 decimals
};

// area * density / 1000, kVA at full precision (round only for reporting).
double outlet_load_kva(double floor_area_m2, double va_per_m2);

// Subtotals and total per the schedule invariants; input order preserved.
LoadSchedule aggregate_loads(std::vector<LoadItem> items);

// Columns: Load, Va Per Unit, Units, Subtotal; final Total row.
void write_csv(const LoadSchedule& schedule, std::ostream& out);

// Half-away-from-zero rounding to 2 decimals, for reporting.
double round2(double v);

} // namespace nzeb::loads
