#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace saturn
{

    /// Exact confidence values. Worked examples such as 0.8 * 0.9 * 0.7 must
    /// come out as exactly 0.504, which rules out binary floating point.
    using Rational = boost::multiprecision::cpp_rational;

    /// Parses "0.8", "1", ".25", "3/4". Throws std::invalid_argument on
    /// anything else.
    Rational parse_rational(std::string_view text);

    /// Fixed-point rendering rounded half-up, e.g. to_fixed(63/125, 6) == "0.504000".
    std::string to_fixed(const Rational &value, int digits = 6);

    /// Exact text that parse_rational reads back to the same value: a finite
    /// decimal when one exists, otherwise "p/q".
    std::string to_exact_string(const Rational &value);

    double to_double(const Rational &value);

    inline bool in_unit_interval(const Rational &value)
    {
        return value >= 0 && value <= 1;
    }

} // namespace saturn
