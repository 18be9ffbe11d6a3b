#include "mixedpoly/format.hpp"

namespace mixedpoly {

std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "latex") return OutputFormat::Latex;
    if (text == "plain") return OutputFormat::Plain;
    return std::nullopt;
}

std::vector<std::string> coeff_strings(const XPoly& p) {
    if (p.is_zero()) {
        return {"0"};
    }
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        out.push_back(c.to_string());
    }
    return out;
}

std::string latex_rat(const Rat& r) {
    if (r.is_integer()) {
        return r.to_string();
    }
    const Rat mag = r.sign() < 0 ? -r : r;
    return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + mag.numerator().get_str() + "}{"
           + mag.denominator().get_str() + "}";
}

std::string latex_poly(const XPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) {
            continue;
        }
        const bool neg = c[i].sign() < 0;
        const Rat mag = neg ? -c[i] : c[i];
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0 || mag != Rat(1)) {
            out += latex_rat(mag);
        }
        if (i >= 1) {
            out += "x";
        }
        if (i >= 2) {
            out += "^{" + std::to_string(i) + "}";
        }
    }
    return out;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

} // namespace mixedpoly
