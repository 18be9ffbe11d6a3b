#include "cli_app.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixedpoly/families.hpp"
#include "mixedpoly/format.hpp"
#include "mixedpoly/gfdsl.hpp"
#include "mixedpoly/mixed.hpp"
#include "mixedpoly/padic.hpp"

namespace mixedpoly::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range {
    long lo;
    long hi;
};

// "3" or "1..3"
Range parse_range(const std::string& text, const std::string& flag) {
    try {
        const auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const long v = std::stol(text, &used);
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return {v, v};
        }
        const std::string a = text.substr(0, dots);
        const std::string b = text.substr(dots + 2);
        const long lo = std::stol(a, &used);
        if (used != a.size()) {
            throw std::invalid_argument(text);
        }
        const long hi = std::stol(b, &used);
        if (used != b.size() || hi < lo) {
            throw std::invalid_argument(text);
        }
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError(flag + ": expected an integer or a range lo..hi, got '" + text + "'");
    }
}

std::string family_label(std::string_view symbol, const std::string& orders, bool latex) {
    if (latex) {
        return std::string(symbol) + "_n^{(" + orders + ")}(x)";
    }
    return std::string(symbol) + "_n^(" + orders + ")(x)";
}

void emit_table(const PolyTable& table, const nlohmann::ordered_json& header, const std::string& symbol,
                const std::string& orders, OutputFormat format, std::ostream& out) {
    const std::size_t n_max = table.rows.size() - 1;
    switch (format) {
    case OutputFormat::Json: {
        nlohmann::ordered_json j = header;
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n < table.rows.size(); ++n) {
            nlohmann::ordered_json row;
            row["n"] = n;
            row["coeffs"] = coeff_strings(table.rows[n]);
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "n";
        for (std::size_t k = 0; k <= n_max; ++k) {
            out << ",x^" << k;
        }
        out << '\n';
        for (std::size_t n = 0; n < table.rows.size(); ++n) {
            out << n;
            for (std::size_t k = 0; k <= n_max; ++k) {
                out << ',' << table.rows[n].coeff(k).to_string();
            }
            out << '\n';
        }
        break;
    case OutputFormat::Latex:
        out << "\\begin{tabular}{rl}\n$n$ & $" << family_label(symbol, orders, true)
            << "$ \\\\\n\\hline\n";
        for (std::size_t n = 0; n < table.rows.size(); ++n) {
            out << n << " & $" << latex_poly(table.rows[n]) << "$ \\\\\n";
        }
        out << "\\end{tabular}\n";
        break;
    case OutputFormat::Plain:
        for (std::size_t n = 0; n < table.rows.size(); ++n) {
            out << symbol << "_" << n << "^(" << orders << ")(x) = " << table.rows[n].to_string()
                << '\n';
        }
        break;
    }
}

struct GlobalOptions {
    std::string format = "plain";
    std::uint64_t budget = kDefaultBudget;
};

OutputFormat resolve_format(const GlobalOptions& g) {
    const auto f = parse_format(g.format);
    if (!f) {
        throw UsageError("--format must be one of json, csv, latex, plain");
    }
    return *f;
}

struct TableOptions {
    std::string family;
    std::string mixed;
    int order = 1;
    int r = 1;
    int s = 1;
    int n_max = 0;
};

int cmd_table(const TableOptions& o, const GlobalOptions& g, std::ostream& out) {
    const OutputFormat format = resolve_format(g);
    if (o.family.empty() == o.mixed.empty()) {
        throw UsageError("table: give exactly one of --family or --mixed");
    }
    if (o.n_max < 0) {
        throw UsageError("table: --n must be non-negative");
    }
    const auto n_max = static_cast<std::size_t>(o.n_max);
    nlohmann::ordered_json header;
    if (!o.family.empty()) {
        const auto kind = parse_family(o.family);
        if (!kind) {
            throw UsageError("table: unknown family '" + o.family + "' (B, E, D, Ch, C)");
        }
        if (o.order < 0) {
            throw UsageError("table: --order must be non-negative");
        }
        const FamilySpec spec{*kind, o.order};
        const std::string sym(family_symbol(*kind));
        header["family"] = sym;
        header["order"] = o.order;
        emit_table({sym, family_polys(spec, n_max)}, header, sym, std::to_string(o.order), format, out);
        return kExitOk;
    }
    const auto kind = parse_mixed(o.mixed);
    if (!kind) {
        throw UsageError("table: unknown mixed family '" + o.mixed + "' (BE, DC, CD, CC)");
    }
    if (o.r < 1 || o.s < 1) {
        throw UsageError("table: --r and --s must be at least 1");
    }
    const MixedSpec spec{*kind, o.r, o.s};
    const std::string sym(mixed_symbol(*kind));
    header["mixed"] = sym;
    header["r"] = o.r;
    header["s"] = o.s;
    const TSeries gf = mixed_gf(spec, n_max);
    std::vector<XPoly> rows;
    for (std::size_t n = 0; n <= n_max; ++n) {
        rows.push_back(nth_poly(gf, n));
    }
    emit_table({sym, rows}, header, sym, std::to_string(o.r) + "," + std::to_string(o.s), format, out);
    return kExitOk;
}

struct VerifyOptions {
    std::vector<std::string> ids{"all"};
    int n_max = 12;
    std::string orders = "1..3";
    std::string r_orders;
    std::string s_orders;
    std::string variant = "corrected";
};

int cmd_verify(const VerifyOptions& o, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    const OutputFormat format = resolve_format(g);
    std::vector<IdentityId> ids;
    for (const auto& raw : o.ids) {
        std::stringstream ss(raw);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "all") {
                ids.assign(std::begin(kAllIdentities), std::end(kAllIdentities));
                continue;
            }
            const auto id = parse_identity(item);
            if (!id) {
                throw UsageError("verify: unknown identity id '" + item + "'");
            }
            ids.push_back(*id);
        }
    }
    const auto variant = parse_variant(o.variant);
    if (!variant) {
        throw UsageError("verify: --variant must be corrected or as-printed");
    }
    if (o.n_max < 0) {
        throw UsageError("verify: --n-max must be non-negative");
    }
    const Range both = parse_range(o.orders, "--orders");
    const Range rr = o.r_orders.empty() ? both : parse_range(o.r_orders, "--r-orders");
    const Range sr = o.s_orders.empty() ? both : parse_range(o.s_orders, "--s-orders");
    if (rr.lo < 1 || sr.lo < 1 || rr.hi > 64 || sr.hi > 64) {
        throw UsageError("verify: orders must lie in 1..64");
    }

    std::vector<IdentityReport> all;
    for (IdentityId id : ids) {
        auto reps = verify_identity(id, static_cast<std::size_t>(o.n_max),
                                    {static_cast<int>(rr.lo), static_cast<int>(rr.hi)},
                                    {static_cast<int>(sr.lo), static_cast<int>(sr.hi)}, *variant);
        std::size_t passed = 0;
        for (const auto& rep : reps) {
            passed += rep.verdict == Verdict::ExactPass ? 1 : 0;
        }
        err << identity_name(id) << " [" << variant_name(*variant) << "]: " << passed << " of "
            << reps.size() << " instances pass\n";
        all.insert(all.end(), std::make_move_iterator(reps.begin()), std::make_move_iterator(reps.end()));
    }
    out << render_report(all, format);
    return all_pass(all) ? kExitOk : kExitFail;
}

struct PadicOptions {
    std::string kind = "bosonic";
    int binom = -1;
    std::string poly;
    std::uint64_t p = 3;
    std::string levels = "1..4";
    std::string target;
    unsigned fold = 1;
    std::string x0 = "0";
};

Rat parse_rat_flag(const std::string& text, const std::string& flag) {
    try {
        return Rat::parse(text);
    } catch (const std::exception&) {
        throw UsageError(flag + ": expected a rational p/q, got '" + text + "'");
    }
}

int cmd_padic(const PadicOptions& o, const GlobalOptions& g, std::ostream& out) {
    const OutputFormat format = resolve_format(g);
    const auto kind = parse_integral(o.kind);
    if (!kind) {
        throw UsageError("padic: --kind must be bosonic or fermionic");
    }
    if (o.p == 2 || !is_prime(o.p)) {
        throw UsageError("p must be an odd prime");
    }
    if ((o.binom >= 0) == !o.poly.empty()) {
        throw UsageError("padic: give exactly one of --binom or --poly");
    }
    if (o.fold < 1 || o.fold > 2) {
        throw UsageError("padic: --fold must be 1 or 2");
    }
    const Rat x0 = parse_rat_flag(o.x0, "--x0");
    std::optional<Integrand> f;
    if (o.binom >= 0) {
        f = Integrand::binomial(static_cast<std::size_t>(o.binom));
    } else {
        std::vector<Rat> coeffs;
        std::stringstream ss(o.poly);
        std::string item;
        while (std::getline(ss, item, ',')) {
            coeffs.push_back(parse_rat_flag(item, "--poly"));
        }
        f = Integrand::polynomial(XPoly(std::move(coeffs)));
    }

    std::string target_text = o.target;
    if (target_text.empty()) {
        target_text = *kind == IntegralKind::Bosonic ? "daehee" : "changhee";
    }
    Rat target;
    if (target_text == "daehee" || target_text == "changhee") {
        if (!f->is_binomial()) {
            throw UsageError("padic: --target " + target_text + " needs a --binom integrand");
        }
        // Limit of the integral of C(y_1 + ... + y_k + x0, n): P_n^(k)(x0)/n!.
        const std::size_t n = f->binomial_index();
        const FamilyKind fam = target_text == "daehee" ? FamilyKind::Daehee : FamilyKind::Changhee;
        target = family_oracle({fam, static_cast<int>(o.fold)}, n).eval(x0) / Rat(factorial(n));
    } else {
        target = parse_rat_flag(target_text, "--target");
    }

    const Range levels = parse_range(o.levels, "--N");
    if (levels.lo < 1 || levels.hi > 64) {
        throw UsageError("padic: --N must lie in 1..64");
    }
    ValuationTrace trace = [&] {
        try {
            return convergence_trace(*kind, *f, target, o.p, static_cast<unsigned>(levels.lo),
                                     static_cast<unsigned>(levels.hi), o.fold, x0, g.budget);
        } catch (const BudgetExceeded& e) {
            throw UsageError(e.what());
        }
    }();

    switch (format) {
    case OutputFormat::Json:
        out << trace_json(trace);
        break;
    case OutputFormat::Csv:
        out << "N,approx,residual,vp\n";
        for (const auto& row : trace.rows) {
            out << row.level << ',' << row.approx.to_string() << ',' << row.residual.to_string()
                << ',' << row.vp.to_string() << '\n';
        }
        break;
    case OutputFormat::Latex:
        out << "\\begin{tabular}{rlll}\n$N$ & approximant & residual & $\\nu_{" << o.p
            << "}$ \\\\\n\\hline\n";
        for (const auto& row : trace.rows) {
            out << row.level << " & $" << latex_rat(row.approx) << "$ & $" << latex_rat(row.residual)
                << "$ & " << (row.vp.is_infinite() ? "$\\infty$" : row.vp.to_string()) << " \\\\\n";
        }
        out << "\\end{tabular}\n";
        break;
    case OutputFormat::Plain:
        out << integral_name(*kind) << " p=" << o.p << " integrand " << trace.integrand.describe()
            << " fold " << o.fold << " x0 " << x0.to_string() << " target " << target.to_string()
            << '\n';
        for (const auto& row : trace.rows) {
            out << "N=" << row.level << "  approx " << row.approx.to_string() << "  residual "
                << row.residual.to_string() << "  vp " << row.vp.to_string() << '\n';
        }
        break;
    }
    return kExitOk;
}

struct EvalOptions {
    std::string expr;
    int trunc = 8;
    int n = -1;
};

int cmd_eval(const EvalOptions& o, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    const OutputFormat format = resolve_format(g);
    if (o.trunc < 0 || o.trunc > 256) {
        throw UsageError("eval: --T must lie in 0..256");
    }
    if (o.n > o.trunc) {
        throw UsageError("eval: --n must not exceed --T");
    }
    std::optional<TSeries> series;
    try {
        series = dsl::evaluate(o.expr, static_cast<std::size_t>(o.trunc));
    } catch (const dsl::DslError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    }

    std::vector<XPoly> polys;
    std::size_t first = 0;
    if (o.n >= 0) {
        first = static_cast<std::size_t>(o.n);
        polys.push_back(nth_poly(*series, first));
    } else {
        for (const auto& c : series->coeffs()) {
            polys.push_back(c);
        }
    }

    switch (format) {
    case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["expr"] = o.expr;
        j["T"] = o.trunc;
        if (o.n >= 0) {
            j["n"] = o.n;
            j["coeffs"] = coeff_strings(polys.front());
        } else {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& p : polys) {
                arr.push_back(coeff_strings(p));
            }
            j["series"] = std::move(arr);
        }
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << (o.n >= 0 ? "n,poly\n" : "k,coefficient of t^k\n");
        for (std::size_t i = 0; i < polys.size(); ++i) {
            out << first + i << ',' << csv_field(polys[i].to_string()) << '\n';
        }
        break;
    case OutputFormat::Latex:
        for (std::size_t i = 0; i < polys.size(); ++i) {
            out << latex_poly(polys[i]) << '\n';
        }
        break;
    case OutputFormat::Plain:
        out << (o.n >= 0 ? polys.front().to_string() : series->to_string()) << '\n';
        break;
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact higher-order and mixed-type special polynomials", "mixedpoly"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    if (const char* env = std::getenv("MIXEDPOLY_BUDGET")) {
        try {
            global.budget = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: MIXEDPOLY_BUDGET must be a positive integer\n";
            return kExitUsage;
        }
    }
    app.add_option("--format", global.format, "Output format: json, csv, latex, plain")
        ->check(CLI::IsMember({"json", "csv", "latex", "plain"}));
    app.add_option("--budget", global.budget, "Maximum integrand evaluations for p-adic sums")
        ->check(CLI::PositiveNumber);

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Tabulate family or mixed-type polynomials");
    table_cmd->add_option("--family", table.family, "B, E, D, Ch or C");
    table_cmd->add_option("--order", table.order, "Order r of the family");
    table_cmd->add_option("--mixed", table.mixed, "BE, DC, CD or CC");
    table_cmd->add_option("--r", table.r, "First order of the mixed family");
    table_cmd->add_option("--s", table.s, "Second order of the mixed family");
    table_cmd->add_option("--n", table.n_max, "Largest n to tabulate")->required();

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check the identity catalog exactly");
    verify_cmd->add_option("--id", verify.ids, "Identity ids (E11 ... E40) or all");
    verify_cmd->add_option("--n-max", verify.n_max, "Largest n");
    verify_cmd->add_option("--orders", verify.orders, "Order range for r and s, e.g. 1..3");
    verify_cmd->add_option("--r-orders", verify.r_orders, "Order range for r only");
    verify_cmd->add_option("--s-orders", verify.s_orders, "Order range for s only");
    verify_cmd->add_option("--variant", verify.variant, "corrected or as-printed");

    PadicOptions padic;
    auto* padic_cmd = app.add_subcommand("padic", "Valuation trace of a finite p-adic integral");
    padic_cmd->add_option("--kind", padic.kind, "bosonic or fermionic");
    padic_cmd->add_option("--binom", padic.binom, "Integrand C(x, n)");
    padic_cmd->add_option("--poly", padic.poly, "Integrand coefficients c0,c1,... ascending");
    padic_cmd->add_option("--p", padic.p, "Odd prime");
    padic_cmd->add_option("--N", padic.levels, "Level or level range, e.g. 1..4");
    padic_cmd->add_option("--target", padic.target, "daehee, changhee or a rational p/q");
    padic_cmd->add_option("--fold", padic.fold, "Number of integration variables (1 or 2)");
    padic_cmd->add_option("--x0", padic.x0, "Shift x0 of the integrand argument");

    EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a generating-function expression");
    eval_cmd->add_option("expr", eval.expr, "Expression in t and x")->required();
    eval_cmd->add_option("--T", eval.trunc, "Truncation order");
    eval_cmd->add_option("--n", eval.n, "Print only n!·[t^n]");

    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    try {
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*table_cmd) {
            return cmd_table(table, global, out);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, global, out, err);
        }
        if (*padic_cmd) {
            return cmd_padic(padic, global, out);
        }
        if (*eval_cmd) {
            return cmd_eval(eval, global, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace mixedpoly::cli
