#ifndef RISPLS_CSV_HPP
#define RISPLS_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace rispls::csv {

/// Shortest round-trip of the value rounded to 9 significant digits, '.' separator,
/// independent of the global locale.
std::string format_number(double v);

/// Value after the 9-significant-digit rounding that format_number applies.
double rounded(double v);

double parse_number(std::string_view text);

std::string join(const std::vector<std::string>& cells);

std::vector<std::string> split(std::string_view line, char sep = ',');

std::string_view trim(std::string_view s);

}  // namespace rispls::csv

#endif
