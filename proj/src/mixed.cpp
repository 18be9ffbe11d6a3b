#include "mixedpoly/mixed.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mixedpoly {

namespace {

void require_orders(const MixedSpec& spec) {
    if (spec.r < 1 || spec.s < 1) {
        throw std::invalid_argument("mixed orders r and s must be at least 1");
    }
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

// sum_k C(n,k) nums[k] polys[n-k]
XPoly binomial_conv(const std::vector<Rat>& nums, const std::vector<XPoly>& polys, std::size_t n) {
    XPoly acc;
    for (std::size_t k = 0; k <= n; ++k) {
        acc += polys[n - k] * (Rat(binomial(n, k)) * nums[k]);
    }
    return acc;
}

// sum_m S1(n,m) polys[m]
XPoly s1_transform(const std::vector<XPoly>& polys, std::size_t n) {
    XPoly acc;
    for (std::size_t m = 0; m <= n; ++m) {
        acc += polys[m] * Rat(stirling1(static_cast<long>(n), static_cast<long>(m)));
    }
    return acc;
}

// sum_m S2(n,m) polys[m]; the printed reading swaps the indices to S2(m,n).
XPoly s2_transform(const std::vector<XPoly>& polys, std::size_t n, bool swapped) {
    XPoly acc;
    for (std::size_t m = 0; m <= n; ++m) {
        const auto ln = static_cast<long>(n);
        const auto lm = static_cast<long>(m);
        acc += polys[m] * Rat(swapped ? stirling2(lm, ln) : stirling2(ln, lm));
    }
    return acc;
}

std::vector<XPoly> extract_all(const TSeries& gf) {
    std::vector<XPoly> out;
    out.reserve(gf.trunc() + 1);
    for (std::size_t n = 0; n <= gf.trunc(); ++n) {
        out.push_back(nth_poly(gf, n));
    }
    return out;
}

std::vector<Rat> numbers_of(const std::vector<XPoly>& polys) {
    std::vector<Rat> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        out.push_back(p.constant());
    }
    return out;
}

struct Sides {
    XPoly lhs;
    XPoly rhs;
    XPoly diff;
};

Sides make_sides(XPoly lhs, XPoly rhs) {
    XPoly diff = lhs - rhs;
    return {std::move(lhs), std::move(rhs), std::move(diff)};
}

// Both sides of one identity for n = 0..n_max at a fixed order pair.
// The left-hand side is read off a generating function wherever the identity
// names a family value directly; the right-hand side is built from oracle
// numbers and polynomials.
std::vector<Sides> evaluate_pair(IdentityId id, std::size_t n_max, int r, int s, Variant variant) {
    using FK = FamilyKind;
    const bool printed = variant == Variant::AsPrinted;
    std::vector<Sides> out;
    out.reserve(n_max + 1);

    switch (id) {
    case IdentityId::E11: {
        const auto lhs = family_polys({FK::Daehee, r}, n_max);
        const auto bern = family_oracle_polys({FK::Bernoulli, r}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(make_sides(lhs[n], s1_transform(bern, n)));
        }
        break;
    }
    case IdentityId::E14: {
        const auto lhs = family_polys({FK::Changhee, r}, n_max);
        const auto euler = family_oracle_polys({FK::Euler, r}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(make_sides(lhs[n], s1_transform(euler, n)));
        }
        break;
    }
    case IdentityId::E17: {
        // Two right-hand forms: GF Cauchy polynomials with oracle Daehee
        // numbers, and oracle Daehee polynomials with GF Cauchy numbers.
        const auto cauchy_gf = family_polys({FK::Cauchy, r}, n_max);
        const auto cauchy_nums = numbers_of(cauchy_gf);
        const auto daehee_or = family_oracle_polys({FK::Daehee, r}, n_max);
        const auto daehee_nums = family_oracle_numbers({FK::Daehee, r}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            const XPoly lhs = falling_factorial(n);
            const XPoly rhs1 = binomial_conv(daehee_nums, cauchy_gf, n);
            const XPoly rhs2 = binomial_conv(cauchy_nums, daehee_or, n);
            Sides sd = make_sides(lhs, rhs1);
            if (sd.diff.is_zero()) {
                sd = make_sides(lhs, rhs2);
            }
            out.push_back(std::move(sd));
        }
        break;
    }
    case IdentityId::E21: {
        const auto lhs = extract_all(mixed_gf({MixedKind::BE, r, s}, n_max));
        const auto euler = family_oracle_numbers({FK::Euler, s}, n_max);
        const auto bern = family_oracle_polys({FK::Bernoulli, r}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(make_sides(lhs[n], binomial_conv(euler, bern, n)));
        }
        break;
    }
    case IdentityId::E24: {
        const auto daehee = family_oracle_polys({FK::Daehee, r}, n_max);
        const auto changhee = family_oracle_numbers({FK::Changhee, s}, n_max);
        const auto be = extract_all(mixed_gf({MixedKind::BE, r, s}, n_max));
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(make_sides(binomial_conv(changhee, daehee, n), s1_transform(be, n)));
        }
        break;
    }
    case IdentityId::E28: {
        const auto lhs = extract_all(mixed_gf({MixedKind::DC, r, s}, n_max));
        const auto daehee = family_oracle_polys({FK::Daehee, r}, n_max);
        const auto changhee = family_oracle_numbers({FK::Changhee, printed ? r : s}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(make_sides(lhs[n], binomial_conv(changhee, daehee, n)));
        }
        break;
    }
    case IdentityId::E31: {
        const auto lhs = extract_all(mixed_gf({MixedKind::CD, r, s}, n_max));
        std::vector<XPoly> rhs;
        if (r > s) {
            rhs = family_oracle_polys({FK::Cauchy, r - s}, n_max);
        } else if (r < s) {
            rhs = family_oracle_polys({FK::Daehee, s - r}, n_max);
        } else {
            for (std::size_t n = 0; n <= n_max; ++n) {
                rhs.push_back(falling_factorial(n));
            }
        }
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(make_sides(lhs[n], rhs[n]));
        }
        break;
    }
    case IdentityId::E34: {
        const auto dc = extract_all(mixed_gf({MixedKind::DC, r, s}, n_max));
        const auto bern = family_oracle_polys({FK::Bernoulli, r}, n_max);
        const auto euler = family_oracle_numbers({FK::Euler, printed ? 1 : s}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(make_sides(s2_transform(dc, n, printed), binomial_conv(euler, bern, n)));
        }
        break;
    }
    case IdentityId::E37: {
        const auto lhs = extract_all(mixed_gf({MixedKind::CC, r, s}, n_max));
        const auto cauchy = family_oracle_polys({FK::Cauchy, r}, n_max);
        const auto changhee = family_oracle_numbers({FK::Changhee, s}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(make_sides(lhs[n], binomial_conv(changhee, cauchy, n)));
        }
        break;
    }
    case IdentityId::E40: {
        // Weight of ((e^t-1)/t)^r: S2(l+r, r)/C(l+r, l); printed as S2(l+r, l).
        const auto cc = extract_all(mixed_gf({MixedKind::CC, r, s}, n_max));
        const auto euler = family_oracle_polys({FK::Euler, s}, n_max);
        std::vector<Rat> weights(n_max + 1);
        for (std::size_t l = 0; l <= n_max; ++l) {
            const auto lr = static_cast<long>(l) + r;
            const BigInt st = stirling2(lr, printed ? static_cast<long>(l) : r);
            weights[l] = Rat(st, binomial(static_cast<unsigned long>(lr), l));
        }
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(make_sides(s2_transform(cc, n, false), binomial_conv(weights, euler, n)));
        }
        break;
    }
    }
    return out;
}

nlohmann::ordered_json report_json(const IdentityReport& rep) {
    nlohmann::ordered_json j;
    j["identity"] = std::string(identity_name(rep.instance.id));
    j["variant"] = std::string(variant_name(rep.variant));
    j["n"] = rep.instance.n;
    j["r"] = rep.instance.r;
    j["s"] = rep.instance.s;
    j["verdict"] = rep.verdict == Verdict::ExactPass ? "pass" : "fail";
    j["diff"] = rep.diff.to_string();
    j["lhs"] = coeff_strings(rep.lhs);
    j["rhs"] = coeff_strings(rep.rhs);
    return j;
}

} // namespace

std::string_view mixed_symbol(MixedKind kind) {
    switch (kind) {
    case MixedKind::BE: return "BE";
    case MixedKind::DC: return "DC";
    case MixedKind::CD: return "CD";
    case MixedKind::CC: return "CC";
    }
    return "?";
}

std::optional<MixedKind> parse_mixed(std::string_view text) {
    const std::string t = upper(text);
    for (MixedKind k : kAllMixed) {
        if (t == mixed_symbol(k)) {
            return k;
        }
    }
    return std::nullopt;
}

TSeries mixed_gf(const MixedSpec& spec, std::size_t trunc) {
    require_orders(spec);
    using FK = FamilyKind;
    switch (spec.kind) {
    case MixedKind::BE:
        return ts_mul(family_kernel({FK::Euler, spec.s}, trunc), family_gf({FK::Bernoulli, spec.r}, trunc));
    case MixedKind::DC:
        return ts_mul(family_kernel({FK::Changhee, spec.s}, trunc), family_gf({FK::Daehee, spec.r}, trunc));
    case MixedKind::CD:
        return ts_mul(ts_mul(family_kernel({FK::Cauchy, spec.r}, trunc),
                             family_kernel({FK::Daehee, spec.s}, trunc)),
                      family_base(FK::Daehee, trunc));
    case MixedKind::CC:
        return ts_mul(family_kernel({FK::Changhee, spec.s}, trunc), family_gf({FK::Cauchy, spec.r}, trunc));
    }
    throw std::logic_error("unknown mixed kind");
}

TSeries cd_collapsed_gf(int r, int s, std::size_t trunc) {
    if (r > s) {
        return family_gf({FamilyKind::Cauchy, r - s}, trunc);
    }
    if (r < s) {
        return family_gf({FamilyKind::Daehee, s - r}, trunc);
    }
    return primitive_series(Primitive::BinomialX, trunc);
}

std::vector<XPoly> mixed_polys(const MixedSpec& spec, std::size_t n_max) {
    require_orders(spec);
    using FK = FamilyKind;
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    switch (spec.kind) {
    case MixedKind::BE: {
        const auto euler = family_oracle_numbers({FK::Euler, spec.s}, n_max);
        const auto bern = family_oracle_polys({FK::Bernoulli, spec.r}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(binomial_conv(euler, bern, n));
        }
        break;
    }
    case MixedKind::DC: {
        const auto changhee = family_oracle_numbers({FK::Changhee, spec.s}, n_max);
        const auto daehee = family_oracle_polys({FK::Daehee, spec.r}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(binomial_conv(changhee, daehee, n));
        }
        break;
    }
    case MixedKind::CD:
        if (spec.r > spec.s) {
            return family_oracle_polys({FK::Cauchy, spec.r - spec.s}, n_max);
        }
        if (spec.r < spec.s) {
            return family_oracle_polys({FK::Daehee, spec.s - spec.r}, n_max);
        }
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(falling_factorial(n));
        }
        break;
    case MixedKind::CC: {
        const auto changhee = family_oracle_numbers({FK::Changhee, spec.s}, n_max);
        const auto cauchy = family_oracle_polys({FK::Cauchy, spec.r}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out.push_back(binomial_conv(changhee, cauchy, n));
        }
        break;
    }
    }
    return out;
}

XPoly mixed_poly(const MixedSpec& spec, std::size_t n) {
    return mixed_polys(spec, n).back();
}

std::string_view identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::E11: return "E11";
    case IdentityId::E14: return "E14";
    case IdentityId::E17: return "E17";
    case IdentityId::E21: return "E21";
    case IdentityId::E24: return "E24";
    case IdentityId::E28: return "E28";
    case IdentityId::E31: return "E31";
    case IdentityId::E34: return "E34";
    case IdentityId::E37: return "E37";
    case IdentityId::E40: return "E40";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view text) {
    const std::string t = upper(text);
    for (IdentityId id : kAllIdentities) {
        if (t == identity_name(id)) {
            return id;
        }
    }
    return std::nullopt;
}

bool identity_is_single_order(IdentityId id) {
    return id == IdentityId::E11 || id == IdentityId::E14 || id == IdentityId::E17;
}

bool identity_has_variants(IdentityId id) {
    return id == IdentityId::E28 || id == IdentityId::E34 || id == IdentityId::E40;
}

std::string_view variant_name(Variant v) {
    return v == Variant::AsPrinted ? "as-printed" : "corrected";
}

std::optional<Variant> parse_variant(std::string_view text) {
    if (text == "as-printed" || text == "asprinted" || text == "printed") {
        return Variant::AsPrinted;
    }
    if (text == "corrected") {
        return Variant::Corrected;
    }
    return std::nullopt;
}

std::vector<IdentityReport> verify_identity(IdentityId id, std::size_t n_max, OrderRange r_range,
                                            OrderRange s_range, Variant variant) {
    if (r_range.lo < 1 || s_range.lo < 1 || r_range.hi < r_range.lo || s_range.hi < s_range.lo) {
        throw std::invalid_argument("order ranges must satisfy 1 <= lo <= hi");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int r = r_range.lo; r <= r_range.hi; ++r) {
        if (identity_is_single_order(id)) {
            pairs.emplace_back(r, r);
            continue;
        }
        for (int s = s_range.lo; s <= s_range.hi; ++s) {
            pairs.emplace_back(r, s);
        }
    }

    // Order pairs are independent; results are merged in pair order.
    std::vector<std::future<std::vector<Sides>>> jobs;
    jobs.reserve(pairs.size());
    for (const auto& [r, s] : pairs) {
        jobs.push_back(std::async(std::launch::async, evaluate_pair, id, n_max, r, s, variant));
    }

    std::vector<IdentityReport> reports;
    reports.reserve(pairs.size() * (n_max + 1));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto sides = jobs[i].get();
        for (std::size_t n = 0; n < sides.size(); ++n) {
            IdentityReport rep;
            rep.instance = {id, n, pairs[i].first, pairs[i].second};
            rep.verdict = sides[n].diff.is_zero() ? Verdict::ExactPass : Verdict::Fail;
            rep.lhs = std::move(sides[n].lhs);
            rep.rhs = std::move(sides[n].rhs);
            rep.diff = std::move(sides[n].diff);
            rep.variant = variant;
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

std::string render_report(const std::vector<IdentityReport>& reports, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& rep : reports) {
            arr.push_back(report_json(rep));
        }
        os << arr.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "identity,variant,n,r,s,verdict,diff\n";
        for (const auto& rep : reports) {
            os << identity_name(rep.instance.id) << ',' << variant_name(rep.variant) << ','
               << rep.instance.n << ',' << rep.instance.r << ',' << rep.instance.s << ','
               << (rep.verdict == Verdict::ExactPass ? "pass" : "fail") << ','
               << csv_field(rep.diff.to_string()) << '\n';
        }
        break;
    case OutputFormat::Latex:
        os << "\\begin{tabular}{llrrrll}\n"
           << "identity & variant & $n$ & $r$ & $s$ & verdict & difference \\\\\n\\hline\n";
        for (const auto& rep : reports) {
            os << identity_name(rep.instance.id) << " & " << variant_name(rep.variant) << " & "
               << rep.instance.n << " & " << rep.instance.r << " & " << rep.instance.s << " & "
               << (rep.verdict == Verdict::ExactPass ? "pass" : "fail") << " & $"
               << latex_poly(rep.diff) << "$ \\\\\n";
        }
        os << "\\end{tabular}\n";
        break;
    case OutputFormat::Plain: {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"identity", "variant", "n", "r", "s", "verdict", "diff"});
        for (const auto& rep : reports) {
            rows.push_back({std::string(identity_name(rep.instance.id)),
                            std::string(variant_name(rep.variant)), std::to_string(rep.instance.n),
                            std::to_string(rep.instance.r), std::to_string(rep.instance.s),
                            rep.verdict == Verdict::ExactPass ? "pass" : "fail",
                            rep.diff.to_string()});
        }
        std::vector<std::size_t> width(rows.front().size(), 0);
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                width[c] = std::max(width[c], row[c].size());
            }
        }
        for (const auto& row : rows) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                line += row[c];
                if (c + 1 < row.size()) {
                    line += std::string(width[c] - row[c].size() + 2, ' ');
                }
            }
            os << line << '\n';
        }
        break;
    }
    }
    return os.str();
}

} // namespace mixedpoly
