#include "mixedpoly/families.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

namespace mixedpoly {

namespace {

// Triangular Stirling table, grown on demand under a lock. Rows are appended
// and never modified.
class StirlingTable {
public:
    using Recurrence = BigInt (*)(const std::vector<BigInt>& prev, long n, long m);

    explicit StirlingTable(Recurrence rec) : rec_(rec) { rows_.push_back({BigInt(1)}); }

    BigInt get(long n, long m) {
        if (n < 0 || m < 0 || m > n) {
            return 0;
        }
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(rows_.size()) <= n) {
            const auto& prev = rows_.back();
            const long k = static_cast<long>(rows_.size()) - 1;
            std::vector<BigInt> row(static_cast<std::size_t>(k) + 2);
            for (long j = 0; j <= k + 1; ++j) {
                row[static_cast<std::size_t>(j)] = rec_(prev, k, j);
            }
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }

private:
    Recurrence rec_;
    std::mutex mu_;
    std::vector<std::vector<BigInt>> rows_;
};

BigInt at(const std::vector<BigInt>& row, long j) {
    return (j < 0 || j >= static_cast<long>(row.size())) ? BigInt(0) : row[static_cast<std::size_t>(j)];
}

// S1(n+1, m) = S1(n, m-1) - n·S1(n, m)
BigInt s1_step(const std::vector<BigInt>& prev, long n, long m) {
    return at(prev, m - 1) - BigInt(n) * at(prev, m);
}

// S2(n+1, m) = m·S2(n, m) + S2(n, m-1)
BigInt s2_step(const std::vector<BigInt>& prev, long /*n*/, long m) {
    return BigInt(m) * at(prev, m) + at(prev, m - 1);
}

StirlingTable& s1_table() {
    static StirlingTable table(&s1_step);
    return table;
}

StirlingTable& s2_table() {
    static StirlingTable table(&s2_step);
    return table;
}

bool uses_exponential_base(FamilyKind kind) {
    return kind == FamilyKind::Bernoulli || kind == FamilyKind::Euler;
}

// log(1+t)/t at order T, by index shift of the Mercator series.
TSeries log1p_over_t(std::size_t trunc) {
    return primitive_series(Primitive::Log1p, trunc + 1).divided_by_t(1);
}

// (e^t - 1)/t at order T.
TSeries expm1_over_t(std::size_t trunc) {
    return primitive_series(Primitive::Expm1, trunc + 1).divided_by_t(1);
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Order-1 numbers by recurrence or closed form.
std::vector<Rat> order_one_numbers(FamilyKind kind, std::size_t n_max) {
    std::vector<Rat> out(n_max + 1);
    switch (kind) {
    case FamilyKind::Bernoulli:
        // sum_{k<n} C(n,k) B_k = 0 for n >= 2, B_0 = 1.
        out[0] = 1;
        for (std::size_t n = 1; n <= n_max; ++n) {
            Rat acc;
            for (std::size_t k = 0; k < n; ++k) {
                acc += Rat(binomial(n + 1, k)) * out[k];
            }
            out[n] = -acc / Rat(binomial(n + 1, n));
        }
        break;
    case FamilyKind::Euler:
        // sum_{k<=n} C(n,k) E_k + E_n = 2·[n = 0]
        for (std::size_t n = 0; n <= n_max; ++n) {
            Rat acc(n == 0 ? 2 : 0);
            for (std::size_t k = 0; k < n; ++k) {
                acc -= Rat(binomial(n, k)) * out[k];
            }
            out[n] = acc / Rat(2);
        }
        break;
    case FamilyKind::Daehee:
        for (std::size_t n = 0; n <= n_max; ++n) {
            out[n] = Rat(factorial(n), BigInt(static_cast<long>(n) + 1)) * Rat(n % 2 == 0 ? 1 : -1);
        }
        break;
    case FamilyKind::Changhee:
        for (std::size_t n = 0; n <= n_max; ++n) {
            BigInt two_n;
            mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
            out[n] = Rat(factorial(n), two_n) * Rat(n % 2 == 0 ? 1 : -1);
        }
        break;
    case FamilyKind::Cauchy:
        // C_n = integral over [0,1] of (x)_n dx, exact antiderivative.
        for (std::size_t n = 0; n <= n_max; ++n) {
            const XPoly anti = falling_factorial(n).antiderivative();
            out[n] = anti.eval(1) - anti.eval(0);
        }
        break;
    }
    return out;
}

std::vector<Rat> binomial_convolution(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            out[n] += Rat(binomial(n, k)) * a[k] * b[n - k];
        }
    }
    return out;
}

void require_order(const FamilySpec& spec) {
    if (spec.order < 0) {
        throw std::invalid_argument("family order must be non-negative");
    }
}

} // namespace

std::string_view family_symbol(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::Bernoulli: return "B";
    case FamilyKind::Euler: return "E";
    case FamilyKind::Daehee: return "D";
    case FamilyKind::Changhee: return "Ch";
    case FamilyKind::Cauchy: return "C";
    }
    return "?";
}

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::Bernoulli: return "bernoulli";
    case FamilyKind::Euler: return "euler";
    case FamilyKind::Daehee: return "daehee";
    case FamilyKind::Changhee: return "changhee";
    case FamilyKind::Cauchy: return "cauchy";
    }
    return "?";
}

std::optional<FamilyKind> parse_family(std::string_view text) {
    const std::string t = lower(text);
    for (FamilyKind k : kAllFamilies) {
        if (t == lower(family_symbol(k)) || t == family_name(k)) {
            return k;
        }
    }
    return std::nullopt;
}

BigInt stirling1(long n, long m) {
    return s1_table().get(n, m);
}

BigInt stirling2(long n, long m) {
    return s2_table().get(n, m);
}

XPoly falling_factorial(std::size_t n) {
    XPoly out(1);
    for (std::size_t k = 0; k < n; ++k) {
        out = out * XPoly({Rat(-static_cast<long>(k)), Rat(1)});
    }
    return out;
}

TSeries family_base(FamilyKind kind, std::size_t trunc) {
    return uses_exponential_base(kind) ? primitive_series(Primitive::ExpXt, trunc)
                                       : primitive_series(Primitive::BinomialX, trunc);
}

TSeries family_kernel(const FamilySpec& spec, std::size_t trunc) {
    require_order(spec);
    const long r = spec.order;
    switch (spec.kind) {
    case FamilyKind::Daehee:
        return ts_pow(log1p_over_t(trunc), r);
    case FamilyKind::Changhee:
        return ts_pow(primitive_series(Primitive::Geom2, trunc), r);
    case FamilyKind::Cauchy:
        return ts_pow(log1p_over_t(trunc), -r);
    case FamilyKind::Bernoulli:
        return ts_pow(expm1_over_t(trunc), -r);
    case FamilyKind::Euler: {
        // 2/(e^t + 1) = 2/(2 + (e^t - 1))
        const TSeries two = TSeries::constant(XPoly(2), trunc);
        return ts_pow(ts_div(two, two + primitive_series(Primitive::Expm1, trunc)), r);
    }
    }
    throw std::logic_error("unknown family kind");
}

TSeries family_gf(const FamilySpec& spec, std::size_t trunc) {
    return ts_mul(family_kernel(spec, trunc), family_base(spec.kind, trunc));
}

XPoly family_poly(const FamilySpec& spec, std::size_t n, std::size_t trunc) {
    if (n > trunc) {
        throw std::out_of_range("family_poly: n = " + std::to_string(n)
                                + " exceeds truncation order " + std::to_string(trunc));
    }
    return nth_poly(family_gf(spec, trunc), n);
}

std::vector<XPoly> family_polys(const FamilySpec& spec, std::size_t n_max) {
    const TSeries gf = family_gf(spec, n_max);
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(nth_poly(gf, n));
    }
    return out;
}

std::vector<Rat> family_oracle_numbers(const FamilySpec& spec, std::size_t n_max) {
    require_order(spec);
    std::vector<Rat> acc(n_max + 1);
    acc[0] = 1;
    if (spec.order == 0) {
        return acc;
    }
    const std::vector<Rat> one = order_one_numbers(spec.kind, n_max);
    acc = one;
    for (int k = 1; k < spec.order; ++k) {
        acc = binomial_convolution(acc, one);
    }
    return acc;
}

std::vector<XPoly> family_oracle_polys(const FamilySpec& spec, std::size_t n_max) {
    const std::vector<Rat> nums = family_oracle_numbers(spec, n_max);
    // Basis for the x-dependence: x^k for e^{xt}, (x)_k for (1+t)^x.
    std::vector<XPoly> basis(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k) {
        basis[k] = uses_exponential_base(spec.kind) ? XPoly::monomial(1, k) : falling_factorial(k);
    }
    std::vector<XPoly> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            out[n] += basis[n - k] * (Rat(binomial(n, k)) * nums[k]);
        }
    }
    return out;
}

XPoly family_oracle(const FamilySpec& spec, std::size_t n) {
    return family_oracle_polys(spec, n).back();
}

} // namespace mixedpoly
