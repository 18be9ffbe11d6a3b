#ifndef MIXEDPOLY_SERIES_HPP
#define MIXEDPOLY_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixedpoly/xpoly.hpp"

namespace mixedpoly {

/// Two series of different truncation orders were combined.
class TruncationMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Divisor (or base of a negative power) lacks a nonzero scalar constant term.
class DivisionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Inner series of a composition has a nonzero constant term.
class CompositionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Power series in t truncated at order T, with XPoly coefficients.
///
/// Holds exactly T+1 coefficients; index n is the coefficient of t^n. Series
/// combine only at equal T.
class TSeries {
public:
    /// The zero series at order T.
    explicit TSeries(std::size_t trunc);
    /// Throws std::invalid_argument when coeffs is empty.
    explicit TSeries(std::vector<XPoly> coeffs);

    static TSeries constant(const XPoly& c, std::size_t trunc);
    static TSeries one(std::size_t trunc) { return constant(XPoly(1), trunc); }
    /// The series t (zero when trunc == 0).
    static TSeries t(std::size_t trunc);

    std::size_t trunc() const { return c_.size() - 1; }
    const std::vector<XPoly>& coeffs() const { return c_; }
    /// Throws std::out_of_range when n > trunc().
    const XPoly& coeff(std::size_t n) const;

    /// Index of the first nonzero coefficient, or trunc()+1 for the zero series.
    std::size_t valuation() const;
    bool has_scalar_unit_constant() const;

    /// Same series re-cut at a smaller order. Throws std::invalid_argument when
    /// new_trunc > trunc().
    TSeries truncated(std::size_t new_trunc) const;
    /// Divides by t^k. The first k coefficients must vanish; the result has
    /// order trunc() - k. Throws DivisionError otherwise.
    TSeries divided_by_t(std::size_t k) const;

    /// Largest coefficient bit size and x-degree across the series.
    std::size_t bit_size() const;
    long x_degree() const;

    /// "1 + x·t + (1/2·x^2 - 1/2·x)·t^2"
    std::string to_string() const;

    friend bool operator==(const TSeries& a, const TSeries& b) = default;

private:
    std::vector<XPoly> c_;
};

/// a·f + b·g
TSeries ts_linear(const Rat& a, const TSeries& f, const Rat& b, const TSeries& g);
TSeries ts_mul(const TSeries& f, const TSeries& g);
/// h with h·g = f up to order T; g must have a nonzero scalar constant term.
TSeries ts_div(const TSeries& f, const TSeries& g);
/// f^r by repeated squaring; negative r inverts first.
TSeries ts_pow(const TSeries& f, long r);
/// outer(inner(t)); inner must have zero constant term.
TSeries ts_compose(const TSeries& outer, const TSeries& inner);

enum class Primitive { Log1p, Expm1, ExpXt, BinomialX, Geom2 };

/// log(1+t), e^t - 1, e^{xt}, (1+t)^x, 2/(2+t) at order T.
TSeries primitive_series(Primitive kind, std::size_t trunc);

/// n! · [t^n] f. Throws std::out_of_range when n > f.trunc().
XPoly nth_poly(const TSeries& f, std::size_t n);

/// Inverse of nth_poly: the series whose n-th coefficient is polys[n] / n!.
TSeries egf_series(const std::vector<XPoly>& polys);

inline TSeries operator+(const TSeries& f, const TSeries& g) { return ts_linear(1, f, 1, g); }
inline TSeries operator-(const TSeries& f, const TSeries& g) { return ts_linear(1, f, -1, g); }
inline TSeries operator*(const TSeries& f, const TSeries& g) { return ts_mul(f, g); }

} // namespace mixedpoly

#endif
