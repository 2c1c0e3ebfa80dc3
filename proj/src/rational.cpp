#include "saturn/rational.hpp"

#include <stdexcept>

namespace saturn
{

    namespace
    {
        using boost::multiprecision::cpp_int;

        bool all_digits(std::string_view s)
        {
            if (s.empty())
                return false;
            for (char c : s)
                if (c < '0' || c > '9')
                    return false;
            return true;
        }

        cpp_int parse_int(std::string_view s)
        {
            return cpp_int(std::string(s));
        }

        cpp_int pow10(int n)
        {
            cpp_int r = 1;
            for (int i = 0; i < n; ++i)
                r *= 10;
            return r;
        }
    } // namespace

    Rational parse_rational(std::string_view text)
    {
        if (text.empty())
            throw std::invalid_argument("empty number");
        bool negative = false;
        if (text.front() == '-' || text.front() == '+')
        {
            negative = text.front() == '-';
            text.remove_prefix(1);
        }
        Rational result;
        if (auto slash = text.find('/'); slash != std::string_view::npos)
        {
            auto num = text.substr(0, slash);
            auto den = text.substr(slash + 1);
            if (!all_digits(num) || !all_digits(den))
                throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
            cpp_int d = parse_int(den);
            if (d == 0)
                throw std::invalid_argument("zero denominator");
            result = Rational(parse_int(num), d);
        }
        else
        {
            auto dot = text.find('.');
            std::string_view whole = text.substr(0, dot);
            std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
            if (whole.empty() && frac.empty())
                throw std::invalid_argument("malformed number");
            if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
                throw std::invalid_argument("malformed number '" + std::string(text) + "'");
            if (dot != std::string_view::npos && frac.empty() && whole.empty())
                throw std::invalid_argument("malformed number");
            cpp_int w = whole.empty() ? cpp_int(0) : parse_int(whole);
            cpp_int f = frac.empty() ? cpp_int(0) : parse_int(frac);
            cpp_int scale = pow10(static_cast<int>(frac.size()));
            result = Rational(w * scale + f, scale);
        }
        return negative ? Rational(-result) : result;
    }

    std::string to_fixed(const Rational &value, int digits)
    {
        cpp_int scale = pow10(digits);
        Rational scaled = abs(value) * scale;
        cpp_int num = numerator(scaled);
        cpp_int den = denominator(scaled);
        cpp_int q = num / den;
        cpp_int r = num % den;
        if (r * 2 >= den)
            ++q;
        std::string s = q.str();
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
        std::string out = value < 0 && q != 0 ? "-" : "";
        out += s.substr(0, s.size() - digits);
        if (digits > 0)
            out += "." + s.substr(s.size() - digits);
        return out;
    }

    std::string to_exact_string(const Rational &value)
    {
        cpp_int den = denominator(value);
        int twos = 0, fives = 0;
        cpp_int d = den;
        while (d % 2 == 0)
        {
            d /= 2;
            ++twos;
        }
        while (d % 5 == 0)
        {
            d /= 5;
            ++fives;
        }
        if (d != 1)
            return numerator(value).str() + "/" + den.str();
        int digits = std::max(twos, fives);
        if (digits == 0)
            return numerator(value).str();
        std::string s = to_fixed(value, digits);
        while (s.back() == '0')
            s.pop_back();
        return s;
    }

    double to_double(const Rational &value)
    {
        return value.convert_to<double>();
    }

} // namespace saturn
