#ifndef MIXEDPOLY_MIXED_HPP
#define MIXEDPOLY_MIXED_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixedpoly/families.hpp"
#include "mixedpoly/format.hpp"

namespace mixedpoly {

enum class MixedKind { BE, DC, CD, CC };

inline constexpr MixedKind kAllMixed[] = {MixedKind::BE, MixedKind::DC, MixedKind::CD,
                                          MixedKind::CC};

/// Mixed-type family with order pair (r, s), both at least 1.
struct MixedSpec {
    MixedKind kind;
    int r = 1;
    int s = 1;

    friend bool operator==(const MixedSpec&, const MixedSpec&) = default;
};

std::string_view mixed_symbol(MixedKind kind);
std::optional<MixedKind> parse_mixed(std::string_view text);

/// Product generating function of the mixed family at order T:
///   BE: (2/(e^t+1))^s (t/(e^t-1))^r e^{xt}
///   DC: (log(1+t)/t)^r (2/(t+2))^s (1+t)^x
///   CD: (t/log(1+t))^r (log(1+t)/t)^s (1+t)^x, factors kept separate
///   CC: (t/log(1+t))^r (2/(t+2))^s (1+t)^x
TSeries mixed_gf(const MixedSpec& spec, std::size_t trunc);

/// Closed convolution forms over the oracle families.
XPoly mixed_poly(const MixedSpec& spec, std::size_t n);
std::vector<XPoly> mixed_polys(const MixedSpec& spec, std::size_t n_max);

/// CD with the kernels cancelled before any extraction: C^(r-s), D^(s-r) or
/// (1+t)^x depending on the sign of r - s.
TSeries cd_collapsed_gf(int r, int s, std::size_t trunc);

enum class IdentityId { E11, E14, E17, E21, E24, E28, E31, E34, E37, E40 };

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::E11, IdentityId::E14, IdentityId::E17, IdentityId::E21, IdentityId::E24,
    IdentityId::E28, IdentityId::E31, IdentityId::E34, IdentityId::E37, IdentityId::E40};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view text);
/// True for E11, E14, E17, which depend on a single order r.
bool identity_is_single_order(IdentityId id);
/// True for identities whose printed form differs from the corrected one.
bool identity_has_variants(IdentityId id);

/// AsPrinted reproduces the typeset formula; Corrected follows the derivation.
/// The two coincide for identities without suspected typos.
enum class Variant { AsPrinted, Corrected };

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

struct OrderRange {
    int lo = 1;
    int hi = 3;
};

struct IdentityInstance {
    IdentityId id;
    std::size_t n = 0;
    int r = 1;
    int s = 1;
};

enum class Verdict { ExactPass, Fail };

struct IdentityReport {
    IdentityInstance instance;
    Verdict verdict = Verdict::Fail;
    XPoly lhs;
    XPoly rhs;
    XPoly diff;  // lhs - rhs
    Variant variant = Variant::Corrected;
};

/// Evaluates both sides of the identity as polynomials in x for every
/// n <= n_max and every order pair in range, through independent code paths.
/// Single-order identities iterate r only and report s = r. Reports are
/// sorted by (r, s, n).
std::vector<IdentityReport> verify_identity(IdentityId id, std::size_t n_max, OrderRange r_range,
                                            OrderRange s_range, Variant variant);

inline bool all_pass(const std::vector<IdentityReport>& reports) {
    for (const auto& rep : reports) {
        if (rep.verdict != Verdict::ExactPass) {
            return false;
        }
    }
    return true;
}

/// JSON array, CSV, LaTeX tabular or an aligned plain table.
std::string render_report(const std::vector<IdentityReport>& reports, OutputFormat format);

} // namespace mixedpoly

#endif
