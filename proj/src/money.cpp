#include "nzeb/money.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "nzeb/errors.hpp"

namespace nzeb::finance {

Money Money::from_value(double v) {
    if (!std::isfinite(v)) throw domain_error("Money: non-finite amount");
    return Money(static_cast<std::int64_t>(std::llround(v * 100.0)));
}

Money Money::from_decimal(const std::string& txt) {
    char* end = nullptr;
    const double v = std::strtod(txt.c_str(), &end);
    if (end == txt.c_str() || *end != '\0')
        throw domain_error("Money: cannot parse amount '" + txt + "'");
    return from_value(v);
}

Money Money::scaled(double factor) const {
    if (!std::isfinite(factor)) throw domain_error("Money: non-finite scale factor");
    return Money(static_cast<std::int64_t>(std::llround(static_cast<double>(minor_) * factor)));
}

std::string Money::str() const {
    const std::int64_t a = minor_ < 0 ? -minor_ : minor_;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%s%lld.%02lld", minor_ < 0 ? "-" : "",
                  static_cast<long long>(a / 100), static_cast<long long>(a % 100));
    return buf;
}

} // namespace nzeb::finance
