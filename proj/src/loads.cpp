#include "nzeb/loads.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "nzeb/errors.hpp"

namespace nzeb::loads {

double round2(double v) {
    return std::round(v * 100.0) / 100.0;
}

double LoadItem::subtotal_kva() const {
    if (direct_kva) return *direct_kva;
    if (va_per_unit && quantity) return *va_per_unit * *quantity / 1000.0;
    throw domain_error("load item '" + name + "': needs va_per_unit+quantity or direct kVA");
}

double outlet_load_kva(double floor_area_m2, double va_per_m2) {
    if (floor_area_m2 < 0 || va_per_m2 < 0)
        throw domain_error("outlet_load_kva: area and density must be >= 0");
    return floor_area_m2 * va_per_m2 / 1000.0;
}

LoadSchedule aggregate_loads(std::vector<LoadItem> items) {
    LoadSchedule s;
    for (const auto& it : items) {
        if (it.quantity && *it.quantity < 0)
            throw domain_error("load item '" + it.name + "': negative quantity");
        if (it.va_per_unit && *it.va_per_unit < 0)
            throw domain_error("load item '" + it.name + "': negative VA per unit");
        if (it.direct_kva && *it.direct_kva < 0)
            throw domain_error("load item '" + it.name + "': negative kVA");
        s.total_kva += it.subtotal_kva();
    }
    s.items = std::move(items);
    return s;
}

void write_csv(const LoadSchedule& schedule, std::ostream& out) {
    out << "Load,Va Per Unit,Units,Subtotal\n";
    char buf[64];
    for (const auto& it : schedule.items) {
        out << it.name << ',';
        if (it.va_per_unit)
            out << *it.va_per_unit;
        else
            out << '-';
        out << ',';
        if (it.quantity)
            out << *it.quantity;
        else
            out << '-';
        std::snprintf(buf, sizeof buf, ",%.2f\n", round2(it.subtotal_kva()));
        out << buf;
    }
    std::snprintf(buf, sizeof buf, "Total,,,%.2f\n", round2(schedule.total_kva));
    out << buf;
}

} // namespace nzeb::loads
