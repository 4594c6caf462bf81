#include "format.hpp"

#include <charconv>
#include <cmath>

namespace wisealice {

std::string format_number(double v, int precision)
{
    if (std::isnan(v))
        return "NaN";
    if (v == 0.0)
        v = 0.0; // drop the sign of negative zero
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

std::string format_list(const std::vector<double>& values, int precision)
{
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += format_number(values[i], precision);
    }
    return out + "]";
}

} // namespace wisealice
