// money.hpp -- exact currency amounts in integer minor units (centavos)
//
// Arithmetic on whole amounts is exact; scaling by a factor rounds half away
// from zero to the nearest minor unit, which is also the presentation
// rounding.

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace nzeb::finance {

class Money {
public:
    Money() = default;

    static Money from_minor(std::int64_t minor) { return Money(minor); }
    static Money from_value(double v);                 // rounds to minor units
    static Money from_decimal(const std::string& txt); // "1234.56", throws on garbage

    std::int64_t minor() const { return minor_; }
    double value() const { return minor_ / 100.0; }

    Money operator+(Money o) const { return Money(minor_ + o.minor_); }
    Money operator-(Money o) const { return Money(minor_ - o.minor_); }
    Money operator-() const { return Money(-minor_); }
    Money& operator+=(Money o) { minor_ += o.minor_; return *this; }
    Money& operator-=(Money o) { minor_ -= o.minor_; return *this; }

    // value * factor, rounded half away from zero
    Money scaled(double factor) const;

    auto operator<=>(const Money&) const = default;

    std::string str() const; // fixed 2 decimals, no thousands separator

private:
    explicit Money(std::int64_t m) : minor_(m) {}
    std::int64_t minor_ = 0;
};

} // namespace nzeb::finance
