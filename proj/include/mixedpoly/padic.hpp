#ifndef MIXEDPOLY_PADIC_HPP
#define MIXEDPOLY_PADIC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixedpoly/xpoly.hpp"

namespace mixedpoly {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// The requested sum needs more integrand evaluations than the budget allows.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// p must be an odd prime.
class InvalidPrime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Odd prime p and truncation level N: sums run over 0..p^N - 1.
class PAdicContext {
public:
    /// Throws InvalidPrime, std::invalid_argument (N == 0) or BudgetExceeded.
    PAdicContext(std::uint64_t p, unsigned level, std::uint64_t budget = kDefaultBudget);

    std::uint64_t p() const { return p_; }
    unsigned level() const { return level_; }
    std::uint64_t budget() const { return budget_; }
    /// p^N
    std::uint64_t modulus() const { return modulus_; }

private:
    std::uint64_t p_;
    unsigned level_;
    std::uint64_t budget_;
    std::uint64_t modulus_;
};

enum class IntegralKind { Bosonic, Fermionic };

std::string_view integral_name(IntegralKind kind);
std::optional<IntegralKind> parse_integral(std::string_view text);

/// p-adic valuation; an empty value stands for +infinity (the valuation of 0).
struct Valuation {
    std::optional<long> value;

    bool is_infinite() const { return !value.has_value(); }
    std::string to_string() const { return value ? std::to_string(*value) : "inf"; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

Valuation vp(const Rat& q, std::uint64_t p);

/// Integrand on the integers: a binomial C(x + offset, n) or a polynomial.
/// Binomials stay in the binomial basis so their values are computed as exact
/// integers.
class Integrand {
public:
    static Integrand binomial(std::size_t n);
    static Integrand polynomial(XPoly p);

    /// x -> x + a. Integer shifts keep the binomial form.
    Integrand shifted(const Rat& a) const;

    bool is_binomial() const { return !poly_form_; }
    std::size_t binomial_index() const { return n_; }
    XPoly as_poly() const;
    Rat at(const Rat& x) const;
    std::string describe() const;

    /// Positive integer d with d·f(x) integral for every integer x.
    const BigInt& scale() const { return scale_; }
    /// d·f(x) for integer x.
    BigInt scaled_at(const BigInt& x) const;

private:
    Integrand() = default;

    bool poly_form_ = false;
    std::size_t n_ = 0;
    BigInt offset_;
    XPoly poly_;
    std::vector<BigInt> scaled_coeffs_;
    BigInt scale_ = 1;
};

/// Bosonic: p^-N sum_{x<p^N} f(x). Fermionic: sum_{x<p^N} (-1)^x f(x).
Rat finite_integral(IntegralKind kind, const Integrand& f, const PAdicContext& ctx);

/// k-fold nested approximant of the integral of f(y_1 + ... + y_k + x0), with
/// the per-variable weight of `kind`. k must be 1 or 2 and p^{kN} must fit the
/// budget.
Rat multifold_integral(IntegralKind kind, const Integrand& f, unsigned k, const Rat& x0,
                       const PAdicContext& ctx);

/// Defect of the shift identities at level N, with f_1(x) = f(x + 1):
///   Bosonic:   [I(f_1) - I(f)] - f'(0)
///   Fermionic: [I(f_1) + I(f)] - 2 f(0)
Rat shift_residual(IntegralKind kind, const XPoly& f, const PAdicContext& ctx);

struct TraceRow {
    unsigned level;
    Rat approx;
    Rat residual;
    Valuation vp;
};

struct ValuationTrace {
    IntegralKind kind;
    std::uint64_t p;
    Integrand integrand;
    unsigned fold;
    Rat x0;
    Rat target;
    std::vector<TraceRow> rows;
};

/// Residual valuations vp(approx_N - target) for N in [n_lo, n_hi].
ValuationTrace convergence_trace(IntegralKind kind, const Integrand& f, const Rat& target,
                                 std::uint64_t p, unsigned n_lo, unsigned n_hi,
                                 unsigned fold = 1, const Rat& x0 = Rat(),
                                 std::uint64_t budget = kDefaultBudget);

/// {"p":3,"kind":"bosonic","n":1,...,"rows":[{"N":2,"approx":"4","residual":"9/2","vp":2}]}
std::string trace_json(const ValuationTrace& trace);

} // namespace mixedpoly

#endif
