#ifndef MIXEDPOLY_FORMAT_HPP
#define MIXEDPOLY_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixedpoly/xpoly.hpp"

namespace mixedpoly {

enum class OutputFormat { Json, Csv, Latex, Plain };

std::optional<OutputFormat> parse_format(std::string_view text);

/// Ascending "p/q" coefficient strings; the zero polynomial gives {"0"}.
std::vector<std::string> coeff_strings(const XPoly& p);

/// LaTeX rendering in descending powers, e.g. "x^{2} - 2x + \frac{2}{3}".
std::string latex_poly(const XPoly& p);
std::string latex_rat(const Rat& r);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(std::string_view s);

} // namespace mixedpoly

#endif
