#include "mixedpoly/padic.hpp"

#include <limits>

#include <json.hpp>

namespace mixedpoly {

namespace {

// p^e, or nullopt when it does not fit the budget.
std::optional<std::uint64_t> bounded_pow(std::uint64_t p, unsigned e, std::uint64_t budget) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (acc > budget / p) {
            return std::nullopt;
        }
        acc *= p;
    }
    return acc <= budget ? std::optional<std::uint64_t>(acc) : std::nullopt;
}

BigInt to_big(std::uint64_t v) {
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return out;
}

long remove_factor(BigInt v, const BigInt& p) {
    if (v == 0) {
        return 0;
    }
    BigInt rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()));
}

BigInt lcm_of_denominators(const XPoly& p) {
    BigInt acc = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return acc;
}

// sum_{x<M} w(x)·d·f(x), with w = 1 (bosonic) or (-1)^x (fermionic), starting
// at x = start.
BigInt weighted_scaled_sum(IntegralKind kind, const Integrand& f, std::uint64_t count,
                           const BigInt& start) {
    BigInt acc = 0;
    BigInt x = start;
    for (std::uint64_t i = 0; i < count; ++i, ++x) {
        const BigInt v = f.scaled_at(x);
        if (kind == IntegralKind::Fermionic && (i & 1U) != 0) {
            acc -= v;
        } else {
            acc += v;
        }
    }
    return acc;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PAdicContext::PAdicContext(std::uint64_t p, unsigned level, std::uint64_t budget)
    : p_(p), level_(level), budget_(budget), modulus_(0) {
    if (p == 2 || !is_prime(p)) {
        throw InvalidPrime("p must be an odd prime (got " + std::to_string(p) + ")");
    }
    if (level == 0) {
        throw std::invalid_argument("truncation level N must be at least 1");
    }
    const auto m = bounded_pow(p, level, budget);
    if (!m) {
        throw BudgetExceeded("p^N = " + std::to_string(p) + "^" + std::to_string(level)
                             + " exceeds the evaluation budget " + std::to_string(budget));
    }
    modulus_ = *m;
}

std::string_view integral_name(IntegralKind kind) {
    return kind == IntegralKind::Bosonic ? "bosonic" : "fermionic";
}

std::optional<IntegralKind> parse_integral(std::string_view text) {
    if (text == "bosonic" || text == "volkenborn") {
        return IntegralKind::Bosonic;
    }
    if (text == "fermionic") {
        return IntegralKind::Fermionic;
    }
    return std::nullopt;
}

Valuation vp(const Rat& q, std::uint64_t p) {
    if (q.is_zero()) {
        return {};
    }
    const BigInt bp = to_big(p);
    return {remove_factor(q.numerator(), bp) - remove_factor(q.denominator(), bp)};
}

Integrand Integrand::binomial(std::size_t n) {
    Integrand f;
    f.n_ = n;
    return f;
}

Integrand Integrand::polynomial(XPoly p) {
    Integrand f;
    f.poly_form_ = true;
    f.scale_ = lcm_of_denominators(p);
    for (const auto& c : p.coeffs()) {
        f.scaled_coeffs_.push_back(c.numerator() * (f.scale_ / c.denominator()));
    }
    f.poly_ = std::move(p);
    return f;
}

Integrand Integrand::shifted(const Rat& a) const {
    if (!poly_form_ && a.is_integer()) {
        Integrand f = *this;
        f.offset_ += a.numerator();
        return f;
    }
    return polynomial(as_poly().shifted(a));
}

XPoly Integrand::as_poly() const {
    if (poly_form_) {
        return poly_;
    }
    // C(x + c, n) = (x + c)(x + c - 1)...(x + c - n + 1)/n!
    XPoly out(1);
    for (std::size_t k = 0; k < n_; ++k) {
        out = out * XPoly({Rat(BigInt(offset_ - static_cast<long>(k))), Rat(1)});
    }
    return out * (Rat(1) / Rat(factorial(n_)));
}

Rat Integrand::at(const Rat& x) const {
    if (!poly_form_ && x.is_integer()) {
        return Rat(scaled_at(x.numerator()));
    }
    return as_poly().eval(x);
}

std::string Integrand::describe() const {
    if (poly_form_) {
        return poly_.to_string();
    }
    std::string arg = "x";
    if (offset_ > 0) {
        arg += " + " + offset_.get_str();
    } else if (offset_ < 0) {
        arg += " - " + BigInt(-offset_).get_str();
    }
    return "C(" + arg + ", " + std::to_string(n_) + ")";
}

BigInt Integrand::scaled_at(const BigInt& x) const {
    if (!poly_form_) {
        BigInt out;
        const BigInt top = x + offset_;
        mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), n_);
        return out;
    }
    BigInt acc = 0;
    for (auto it = scaled_coeffs_.rbegin(); it != scaled_coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Rat finite_integral(IntegralKind kind, const Integrand& f, const PAdicContext& ctx) {
    const BigInt sum = weighted_scaled_sum(kind, f, ctx.modulus(), BigInt(0));
    BigInt den = f.scale();
    if (kind == IntegralKind::Bosonic) {
        den *= to_big(ctx.modulus());
    }
    return Rat(sum, den);
}

Rat multifold_integral(IntegralKind kind, const Integrand& f, unsigned k, const Rat& x0,
                       const PAdicContext& ctx) {
    if (k == 0 || k > 2) {
        throw std::invalid_argument("multifold integrals support k = 1 or k = 2 only");
    }
    if (!bounded_pow(ctx.p(), k * ctx.level(), ctx.budget())) {
        throw BudgetExceeded("p^(kN) = " + std::to_string(ctx.p()) + "^"
                             + std::to_string(k * ctx.level()) + " exceeds the evaluation budget "
                             + std::to_string(ctx.budget()));
    }
    const Integrand g = f.shifted(x0);
    const std::uint64_t m = ctx.modulus();
    if (k == 1) {
        return finite_integral(kind, g, ctx);
    }

    // Integrand values at every reachable y1 + y2, then the nested sum.
    std::vector<BigInt> values(2 * m - 1);
    for (std::uint64_t s = 0; s < values.size(); ++s) {
        values[s] = g.scaled_at(to_big(s));
    }
    BigInt acc = 0;
    for (std::uint64_t y1 = 0; y1 < m; ++y1) {
        for (std::uint64_t y2 = 0; y2 < m; ++y2) {
            const std::uint64_t s = y1 + y2;
            if (kind == IntegralKind::Fermionic && (s & 1U) != 0) {
                acc -= values[s];
            } else {
                acc += values[s];
            }
        }
    }
    BigInt den = g.scale();
    if (kind == IntegralKind::Bosonic) {
        den *= to_big(m) * to_big(m);
    }
    return Rat(acc, den);
}

Rat shift_residual(IntegralKind kind, const XPoly& f, const PAdicContext& ctx) {
    const Integrand base = Integrand::polynomial(f);
    const Integrand next = Integrand::polynomial(f.shifted(1));
    const Rat i0 = finite_integral(kind, base, ctx);
    const Rat i1 = finite_integral(kind, next, ctx);
    if (kind == IntegralKind::Bosonic) {
        return (i1 - i0) - f.derivative().eval(0);
    }
    return (i1 + i0) - Rat(2) * f.eval(0);
}

ValuationTrace convergence_trace(IntegralKind kind, const Integrand& f, const Rat& target,
                                 std::uint64_t p, unsigned n_lo, unsigned n_hi, unsigned fold,
                                 const Rat& x0, std::uint64_t budget) {
    if (n_lo == 0 || n_hi < n_lo) {
        throw std::invalid_argument("N range must satisfy 1 <= lo <= hi");
    }
    ValuationTrace trace{kind, p, f, fold, x0, target, {}};
    for (unsigned level = n_lo; level <= n_hi; ++level) {
        const PAdicContext ctx(p, level, budget);
        Rat approx = multifold_integral(kind, f, fold, x0, ctx);
        Rat residual = approx - target;
        const Valuation v = vp(residual, p);
        trace.rows.push_back({level, std::move(approx), std::move(residual), v});
    }
    return trace;
}

std::string trace_json(const ValuationTrace& trace) {
    nlohmann::ordered_json j;
    j["p"] = trace.p;
    j["kind"] = std::string(integral_name(trace.kind));
    if (trace.integrand.is_binomial()) {
        j["n"] = trace.integrand.binomial_index();
    } else {
        j["n"] = nullptr;
    }
    j["integrand"] = trace.integrand.describe();
    j["fold"] = trace.fold;
    j["x0"] = trace.x0.to_string();
    j["target"] = trace.target.to_string();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : trace.rows) {
        nlohmann::ordered_json r;
        r["N"] = row.level;
        r["approx"] = row.approx.to_string();
        r["residual"] = row.residual.to_string();
        if (row.vp.is_infinite()) {
            r["vp"] = "inf";
        } else {
            r["vp"] = *row.vp.value;
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

} // namespace mixedpoly
