#include "nzeb/meteo.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nzeb/errors.hpp"

namespace nzeb::meteo {

namespace {

bool parse_timestamp(const std::string& s, solar::CivilTime& t) {
    int n = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%dT%d:%d%n", &t.year, &t.month, &t.day, &t.hour, &t.minute,
                    &n) != 5 ||
        static_cast<size_t>(n) != s.size())
        return false;
    if (t.month < 1 || t.month > 12 || t.day < 1 ||
        t.day > solar::days_in_month(t.year, t.month) || t.hour < 0 || t.hour > 23 ||
        t.minute < 0 || t.minute > 59)
        return false;
    return true;
}

long long hour_index(const solar::CivilTime& t) {
    return solar::days_from_civil(t.year, t.month, t.day) * 24 + t.hour;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::vector<MeteoRecord> load_meteo(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path, 0, "cannot open meteo file");

    std::string line;
    long row = 0;
    if (!std::getline(in, line)) throw parse_error(path, 0, "empty meteo file");
    ++row;
    {
        auto cols = split_csv(line);
        if (cols.size() != 4 || cols[0] != "timestamp" || cols[1] != "ghi" || cols[2] != "dhi" ||
            cols[3] != "tamb")
            throw parse_error(path, row, "expected header timestamp,ghi,dhi,tamb");
    }

    std::vector<MeteoRecord> records;
    long long prev_hour = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        auto cols = split_csv(line);
        if (cols.size() != 4) throw parse_error(path, row, "expected 4 columns");

        MeteoRecord r;
        if (!parse_timestamp(cols[0], r.timestamp))
            throw parse_error(path, row, "bad timestamp '" + cols[0] + "'");
        try {
            r.ghi_w_m2 = std::stod(cols[1]);
            if (!cols[2].empty()) r.dhi_w_m2 = std::stod(cols[2]);
            r.t_ambient_c = std::stod(cols[3]);
        } catch (const std::exception&) {
            throw parse_error(path, row, "bad numeric field");
        }
        if (r.ghi_w_m2 < 0) throw parse_error(path, row, "ghi must be >= 0");
        if (r.dhi_w_m2 && (*r.dhi_w_m2 < 0 || *r.dhi_w_m2 > r.ghi_w_m2))
            throw parse_error(path, row, "dhi must be in [0, ghi]");
        if (r.t_ambient_c < -90 || r.t_ambient_c > 60)
            throw parse_error(path, row, "implausible ambient temperature");
        if (r.timestamp.minute != 0) throw parse_error(path, row, "timestamps must be on the hour");

        const long long h = hour_index(r.timestamp);
        if (!records.empty() && h != prev_hour + 1)
            throw parse_error(path, row, "timestamps must advance by exactly one hour");
        prev_hour = h;
        records.push_back(r);
    }

    if (records.empty()) throw parse_error(path, row, "no data rows");
    const auto& first = records.front().timestamp;
    const size_t expected = solar::is_leap_year(first.year) ? 8784 : 8760;
    if (first.month != 1 || first.day != 1 || first.hour != 0)
        throw parse_error(path, 2, "series must start at Jan 1, 00:00");
    if (records.size() != expected)
        throw parse_error(path, row,
                          "expected " + std::to_string(expected) + " hourly rows for " +
                              std::to_string(first.year) + ", got " +
                              std::to_string(records.size()));
    return records;
}

} // namespace nzeb::meteo
