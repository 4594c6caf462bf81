#pragma once

#include <string>
#include <vector>

namespace wisealice {

/// Locale-independent shortest decimal text with at most `precision`
/// significant digits. NaN prints as "NaN".
std::string format_number(double v, int precision = 10);
std::string format_list(const std::vector<double>& values, int precision = 10);

} // namespace wisealice
