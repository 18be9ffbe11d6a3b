#include "mixedpoly/series.hpp"

#include <algorithm>

namespace mixedpoly {

namespace {

void require_same_trunc(const TSeries& f, const TSeries& g, const char* op) {
    if (f.trunc() != g.trunc()) {
        throw TruncationMismatch(std::string(op) + ": truncation orders differ ("
                                 + std::to_string(f.trunc()) + " vs " + std::to_string(g.trunc())
                                 + ")");
    }
}

Rat factorial_rat(std::size_t n) {
    return Rat(factorial(n));
}

} // namespace

TSeries::TSeries(std::size_t trunc) : c_(trunc + 1) {}

TSeries::TSeries(std::vector<XPoly> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) {
        throw std::invalid_argument("TSeries needs at least one coefficient");
    }
}

TSeries TSeries::constant(const XPoly& c, std::size_t trunc) {
    TSeries s(trunc);
    s.c_[0] = c;
    return s;
}

TSeries TSeries::t(std::size_t trunc) {
    TSeries s(trunc);
    if (trunc >= 1) {
        s.c_[1] = XPoly(1);
    }
    return s;
}

const XPoly& TSeries::coeff(std::size_t n) const {
    if (n >= c_.size()) {
        throw std::out_of_range("coefficient t^" + std::to_string(n) + " beyond truncation "
                                + std::to_string(trunc()));
    }
    return c_[n];
}

std::size_t TSeries::valuation() const {
    for (std::size_t n = 0; n < c_.size(); ++n) {
        if (!c_[n].is_zero()) {
            return n;
        }
    }
    return c_.size();
}

bool TSeries::has_scalar_unit_constant() const {
    return c_[0].degree() == 0;
}

TSeries TSeries::truncated(std::size_t new_trunc) const {
    if (new_trunc > trunc()) {
        throw std::invalid_argument("cannot raise truncation order " + std::to_string(trunc())
                                    + " to " + std::to_string(new_trunc));
    }
    return TSeries(std::vector<XPoly>(c_.begin(), c_.begin() + static_cast<long>(new_trunc) + 1));
}

TSeries TSeries::divided_by_t(std::size_t k) const {
    if (k > trunc()) {
        throw DivisionError("division by t^" + std::to_string(k) + " exceeds truncation order "
                            + std::to_string(trunc()));
    }
    for (std::size_t n = 0; n < k; ++n) {
        if (!c_[n].is_zero()) {
            throw DivisionError("series is not divisible by t^" + std::to_string(k));
        }
    }
    return TSeries(std::vector<XPoly>(c_.begin() + static_cast<long>(k), c_.end()));
}

std::size_t TSeries::bit_size() const {
    std::size_t b = 0;
    for (const auto& c : c_) {
        b = std::max(b, c.bit_size());
    }
    return b;
}

long TSeries::x_degree() const {
    long d = -1;
    for (const auto& c : c_) {
        d = std::max(d, c.degree());
    }
    return d;
}

std::string TSeries::to_string() const {
    std::string out;
    for (std::size_t n = 0; n < c_.size(); ++n) {
        const XPoly& c = c_[n];
        if (c.is_zero()) {
            continue;
        }
        std::string term;
        const bool compound = std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                            [](const Rat& r) { return !r.is_zero(); })
                              > 1;
        if (n == 0) {
            term = c.to_string();
        } else {
            const std::string tpow = n == 1 ? "t" : "t^" + std::to_string(n);
            if (c == XPoly(1)) {
                term = tpow;
            } else if (c == XPoly(-1)) {
                term = "-" + tpow;
            } else if (compound) {
                term = "(" + c.to_string() + ")·" + tpow;
            } else {
                term = c.to_string() + "·" + tpow;
            }
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

TSeries ts_linear(const Rat& a, const TSeries& f, const Rat& b, const TSeries& g) {
    require_same_trunc(f, g, "ts_linear");
    std::vector<XPoly> out(f.trunc() + 1);
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] = f.coeff(n) * a + g.coeff(n) * b;
    }
    return TSeries(std::move(out));
}

TSeries ts_mul(const TSeries& f, const TSeries& g) {
    require_same_trunc(f, g, "ts_mul");
    const std::size_t T = f.trunc();
    std::vector<XPoly> out(T + 1);
    for (std::size_t i = 0; i <= T; ++i) {
        const XPoly& fi = f.coeff(i);
        if (fi.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= T; ++j) {
            const XPoly& gj = g.coeff(j);
            if (!gj.is_zero()) {
                out[i + j] += fi * gj;
            }
        }
    }
    return TSeries(std::move(out));
}

TSeries ts_div(const TSeries& f, const TSeries& g) {
    require_same_trunc(f, g, "ts_div");
    if (!g.has_scalar_unit_constant()) {
        throw DivisionError(g.coeff(0).is_zero()
                                ? "divisor has zero constant term"
                                : "divisor constant term depends on x");
    }
    const Rat inv = Rat(1) / g.coeff(0).constant();
    const std::size_t T = f.trunc();
    std::vector<XPoly> h(T + 1);
    for (std::size_t n = 0; n <= T; ++n) {
        XPoly acc = f.coeff(n);
        for (std::size_t k = 1; k <= n; ++k) {
            const XPoly& gk = g.coeff(k);
            if (!gk.is_zero() && !h[n - k].is_zero()) {
                acc -= gk * h[n - k];
            }
        }
        h[n] = acc * inv;
    }
    return TSeries(std::move(h));
}

TSeries ts_pow(const TSeries& f, long r) {
    if (r < 0) {
        if (!f.has_scalar_unit_constant()) {
            throw DivisionError("negative power of a series without a nonzero scalar constant term");
        }
        return ts_pow(ts_div(TSeries::one(f.trunc()), f), -r);
    }
    TSeries acc = TSeries::one(f.trunc());
    TSeries base = f;
    auto e = static_cast<unsigned long>(r);
    while (e != 0) {
        if ((e & 1UL) != 0) {
            acc = ts_mul(acc, base);
        }
        e >>= 1U;
        if (e != 0) {
            base = ts_mul(base, base);
        }
    }
    return acc;
}

TSeries ts_compose(const TSeries& outer, const TSeries& inner) {
    require_same_trunc(outer, inner, "ts_compose");
    if (!inner.coeff(0).is_zero()) {
        throw CompositionError("inner series of a composition must have zero constant term");
    }
    const std::size_t T = outer.trunc();
    // Horner: o_0 + inner·(o_1 + inner·(o_2 + ...)). Each factor of inner raises
    // the valuation by one, so terms past T never contribute.
    TSeries acc = TSeries::constant(outer.coeff(T), T);
    for (std::size_t k = T; k-- > 0;) {
        acc = ts_mul(acc, inner);
        acc = ts_linear(1, acc, 1, TSeries::constant(outer.coeff(k), T));
    }
    return acc;
}

TSeries primitive_series(Primitive kind, std::size_t trunc) {
    std::vector<XPoly> c(trunc + 1);
    switch (kind) {
    case Primitive::Log1p:
        for (std::size_t n = 1; n <= trunc; ++n) {
            c[n] = Rat(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
        }
        break;
    case Primitive::Expm1:
        for (std::size_t n = 1; n <= trunc; ++n) {
            c[n] = Rat(1) / factorial_rat(n);
        }
        break;
    case Primitive::ExpXt:
        for (std::size_t n = 0; n <= trunc; ++n) {
            c[n] = XPoly::monomial(Rat(1) / factorial_rat(n), n);
        }
        break;
    case Primitive::BinomialX: {
        // [t^n] = (x)_n / n!, built as C(x, n) = C(x, n-1)·(x - n + 1)/n.
        XPoly cur(1);
        c[0] = cur;
        for (std::size_t n = 1; n <= trunc; ++n) {
            cur = cur * XPoly({Rat(1 - static_cast<long>(n)), Rat(1)}) * Rat(1, static_cast<long>(n));
            c[n] = cur;
        }
        break;
    }
    case Primitive::Geom2: {
        // 2/(2+t) = sum (-1/2)^n t^n
        Rat cur(1);
        for (std::size_t n = 0; n <= trunc; ++n) {
            c[n] = cur;
            cur *= Rat(-1, 2);
        }
        break;
    }
    }
    return TSeries(std::move(c));
}

XPoly nth_poly(const TSeries& f, std::size_t n) {
    return f.coeff(n) * factorial_rat(n);
}

TSeries egf_series(const std::vector<XPoly>& polys) {
    std::vector<XPoly> c(polys.size());
    for (std::size_t n = 0; n < polys.size(); ++n) {
        c[n] = polys[n] * (Rat(1) / factorial_rat(n));
    }
    return TSeries(std::move(c));
}

} // namespace mixedpoly
