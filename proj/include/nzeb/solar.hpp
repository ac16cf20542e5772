// solar.hpp -- sun position and calendar helpers
//
// Declination and equation of time from the Spencer (1971) Fourier series;
// hour angle from local civil time corrected for longitude within the time
// zone. Accuracy is a fraction of a degree, plenty for hourly energy work.
// Azimuths are south-referenced (0 = south, negative = east, positive = west),
// matching the array orientation convention.

#pragma once

namespace nzeb::solar {

struct SiteSpec {
    double latitude_deg = 0;
    double longitude_deg = 0;
    double elevation_m = 0;
    double timezone_hours = 0; // UTC offset of the civil timestamps
    double albedo = 0.2;
};

struct CivilTime {
    int year = 0, month = 0, day = 0;
    int hour = 0, minute = 0;
};

struct SunPosition {
    double elevation_deg = 0; // -90..90
    double azimuth_deg = 0;   // south-referenced
};

bool is_leap_year(int year);
int days_in_month(int year, int month);
int day_of_year(int year, int month, int day);       // 1-based
long long days_from_civil(int year, int month, int day); // days since 1970-01-01
int day_of_week(int year, int month, int day);       // 0 = Monday .. 6 = Sunday

SunPosition solar_position(const SiteSpec& site, const CivilTime& t);

// Extraterrestrial normal irradiance for the day, W/m2 (solar constant with
// the orbital eccentricity correction).
double extraterrestrial_normal(int day_of_year);

// Cosine of the beam incidence angle on a plane (tilt from horizontal,
// south-referenced azimuth); negative means the sun is behind the plane.
double cos_incidence(const SunPosition& sun, double tilt_deg, double azimuth_deg);

} // namespace nzeb::solar
