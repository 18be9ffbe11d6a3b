#ifndef MIXEDPOLY_FAMILIES_HPP
#define MIXEDPOLY_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixedpoly/series.hpp"

namespace mixedpoly {

enum class FamilyKind { Bernoulli, Euler, Daehee, Changhee, Cauchy };

inline constexpr FamilyKind kAllFamilies[] = {FamilyKind::Bernoulli, FamilyKind::Euler,
                                              FamilyKind::Daehee, FamilyKind::Changhee,
                                              FamilyKind::Cauchy};

/// Family kind plus order r. Order 0 is the empty product: the generating
/// function collapses to (1+t)^x or e^{xt}.
struct FamilySpec {
    FamilyKind kind;
    int order = 1;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Short symbol: "B", "E", "D", "Ch", "C".
std::string_view family_symbol(FamilyKind kind);
std::string_view family_name(FamilyKind kind);
/// Accepts the short symbol or the full name, case-insensitively.
std::optional<FamilyKind> parse_family(std::string_view text);

/// Signed Stirling numbers of the first kind, (x)_n = sum_m S1(n,m) x^m.
/// Zero outside the triangle.
BigInt stirling1(long n, long m);
/// Stirling numbers of the second kind. Zero outside the triangle.
BigInt stirling2(long n, long m);

/// (x)_n = x(x-1)...(x-n+1)
XPoly falling_factorial(std::size_t n);

/// The x-free factor of the generating function, e.g. (log(1+t)/t)^r for
/// Daehee or (2/(e^t+1))^r for Euler.
TSeries family_kernel(const FamilySpec& spec, std::size_t trunc);
/// (1+t)^x for Daehee, Changhee and Cauchy; e^{xt} for Bernoulli and Euler.
TSeries family_base(FamilyKind kind, std::size_t trunc);

/// Exact generating function of the family, truncated at order T.
TSeries family_gf(const FamilySpec& spec, std::size_t trunc);

/// n-th polynomial of the family, read off a generating function truncated at
/// T. Throws std::out_of_range when n > T.
XPoly family_poly(const FamilySpec& spec, std::size_t n, std::size_t trunc);
/// All polynomials 0..n_max from a single generating function.
std::vector<XPoly> family_polys(const FamilySpec& spec, std::size_t n_max);

// Independent route: recurrences and closed forms, no series arithmetic.

/// Order-r numbers P_0..P_{n_max} of the family (values at x = 0).
std::vector<Rat> family_oracle_numbers(const FamilySpec& spec, std::size_t n_max);
/// P_n^(r)(x) rebuilt from the oracle numbers.
XPoly family_oracle(const FamilySpec& spec, std::size_t n);
std::vector<XPoly> family_oracle_polys(const FamilySpec& spec, std::size_t n_max);

/// Output container for CLI tables: rows 0..n_max contiguously.
struct PolyTable {
    std::string label;
    std::vector<XPoly> rows;
};

} // namespace mixedpoly

#endif
