#include "nzeb/solar.hpp"

#include <algorithm>
#include <cmath>

#include "nzeb/errors.hpp"

namespace nzeb::solar {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kSolarConstant = 1367.0; // W/m2
} // namespace

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static const int d[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) throw domain_error("days_in_month: month out of range");
    if (month == 2 && is_leap_year(year)) return 29;
    return d[month - 1];
}

int day_of_year(int year, int month, int day) {
    int n = day;
    for (int m = 1; m < month; ++m) n += days_in_month(year, m);
    return n;
}

long long days_from_civil(int y, int m, int d) {
    // days since 1970-01-01 (proleptic Gregorian)
    y -= m <= 2;
    const long long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long long>(doe) - 719468;
}

int day_of_week(int year, int month, int day) {
    // 1970-01-01 was a Thursday (=3 with Monday=0)
    long long d = days_from_civil(year, month, day) + 3;
    return static_cast<int>(((d % 7) + 7) % 7);
}

SunPosition solar_position(const SiteSpec& site, const CivilTime& t) {
    if (std::abs(site.latitude_deg) > 90.0)
        throw domain_error("solar_position: |latitude| must be <= 90");
    const int doy = day_of_year(t.year, t.month, t.day);
    const double hour = t.hour + t.minute / 60.0;
    const double B = 2.0 * kPi * (doy - 1 + (hour - 12.0) / 24.0) / 365.0;

    const double decl = 0.006918 - 0.399912 * std::cos(B) + 0.070257 * std::sin(B) -
                        0.006758 * std::cos(2 * B) + 0.000907 * std::sin(2 * B) -
                        0.002697 * std::cos(3 * B) + 0.00148 * std::sin(3 * B); // rad

    const double eot_min = 229.18 * (0.000075 + 0.001868 * std::cos(B) - 0.032077 * std::sin(B) -
                                     0.014615 * std::cos(2 * B) - 0.04089 * std::sin(2 * B));

    const double solar_hour =
        hour + (site.longitude_deg - 15.0 * site.timezone_hours) * 4.0 / 60.0 + eot_min / 60.0;
    const double omega = 15.0 * (solar_hour - 12.0) * kDegToRad;

    const double phi = site.latitude_deg * kDegToRad;
    const double sin_el = std::sin(phi) * std::sin(decl) + std::cos(phi) * std::cos(decl) * std::cos(omega);
    const double el = std::asin(std::clamp(sin_el, -1.0, 1.0));

    // azimuth measured from south, positive toward west
    const double az = std::atan2(std::sin(omega) * std::cos(decl),
                                 std::cos(omega) * std::cos(decl) * std::sin(phi) -
                                     std::sin(decl) * std::cos(phi));

    return {el / kDegToRad, az / kDegToRad};
}

double extraterrestrial_normal(int doy) {
    return kSolarConstant * (1.0 + 0.033 * std::cos(2.0 * kPi * doy / 365.0));
}

double cos_incidence(const SunPosition& sun, double tilt_deg, double azimuth_deg) {
    const double zen = (90.0 - sun.elevation_deg) * kDegToRad;
    const double tilt = tilt_deg * kDegToRad;
    return std::cos(tilt) * std::cos(zen) +
           std::sin(tilt) * std::sin(zen) * std::cos((sun.azimuth_deg - azimuth_deg) * kDegToRad);
}

} // namespace nzeb::solar
