#ifndef MIXEDPOLY_XPOLY_HPP
#define MIXEDPOLY_XPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "mixedpoly/rational.hpp"

namespace mixedpoly {

/// Dense univariate polynomial in x over Rat.
///
/// Coefficients are stored in ascending order of power and normalized after
/// every operation: the zero polynomial has no coefficients and a nonzero
/// polynomial never has a trailing zero. Equality is therefore structural.
class XPoly {
public:
    XPoly() = default;
    XPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
    XPoly(long c) : XPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    explicit XPoly(std::vector<Rat> coeffs);
    XPoly(std::initializer_list<Rat> coeffs) : XPoly(std::vector<Rat>(coeffs)) {}

    /// The polynomial x.
    static XPoly x();
    /// c·x^k
    static XPoly monomial(const Rat& c, std::size_t k);

    const std::vector<Rat>& coeffs() const { return c_; }
    /// Coefficient of x^k, zero past the degree.
    Rat coeff(std::size_t k) const;

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// True for the zero polynomial and for degree-0 polynomials.
    bool is_constant() const { return c_.size() <= 1; }
    /// Constant term.
    Rat constant() const { return coeff(0); }

    Rat eval(const Rat& v) const;
    XPoly derivative() const;
    /// Antiderivative with zero constant of integration.
    XPoly antiderivative() const;
    /// p(x + a)
    XPoly shifted(const Rat& a) const;

    /// Largest bit size of any coefficient.
    std::size_t bit_size() const;

    /// Human-readable form in descending powers, e.g. "x^2 - 2·x + 2/3".
    std::string to_string() const;

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly& operator*=(const Rat& k);

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(XPoly a, const Rat& k) { return a *= k; }
    friend XPoly operator*(const Rat& k, XPoly a) { return a *= k; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);

    friend bool operator==(const XPoly& a, const XPoly& b) = default;

private:
    void normalize();

    std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const XPoly& p);

} // namespace mixedpoly

#endif
