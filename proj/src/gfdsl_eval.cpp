#include "mixedpoly/gfdsl.hpp"

#include <algorithm>

namespace mixedpoly::dsl {

namespace {

class Evaluator {
public:
    Evaluator(std::size_t base_trunc, const EvalLimits& limits)
        : max_trunc_(base_trunc + limits.max_extra_order), limits_(limits) {}

    TSeries eval(const Ast& a, std::size_t trunc) {
        TSeries out = eval_node(a, trunc);
        check(a->span, out);
        return out;
    }

private:
    TSeries eval_node(const Ast& a, std::size_t trunc) {
        switch (a->kind) {
        case NodeKind::Const: return TSeries::constant(XPoly(a->value), trunc);
        case NodeKind::VarT: return TSeries::t(trunc);
        case NodeKind::VarX: return TSeries::constant(XPoly::x(), trunc);
        case NodeKind::Add: return eval(a->lhs, trunc) + eval(a->rhs, trunc);
        case NodeKind::Sub: return eval(a->lhs, trunc) - eval(a->rhs, trunc);
        case NodeKind::Mul: return eval(a->lhs, trunc) * eval(a->rhs, trunc);
        case NodeKind::Div: return divide(a, trunc);
        case NodeKind::PowInt: return power(a, trunc);
        case NodeKind::PowX: {
            const TSeries base = eval(a->lhs, trunc);
            if (base.coeff(0) != XPoly(1)) {
                throw SemanticError(a->span, SemanticReason::PowXBaseNotOne,
                                    "base of ^x must have constant term 1");
            }
            // base^x = exp(x·log(base))
            const TSeries log_base = log_of_unit(base);
            return ts_compose(primitive_series(Primitive::ExpXt, trunc), log_base);
        }
        case NodeKind::Log: {
            const TSeries arg = eval(a->lhs, trunc);
            if (arg.coeff(0) != XPoly(1)) {
                throw SemanticError(a->span, SemanticReason::LogArgNotOne,
                                    "log argument must have constant term 1");
            }
            return log_of_unit(arg);
        }
        case NodeKind::Exp: {
            const TSeries arg = eval(a->lhs, trunc);
            if (!arg.coeff(0).is_zero()) {
                throw SemanticError(a->span, SemanticReason::ExpArgNotZero,
                                    "exp argument must have constant term 0");
            }
            const TSeries exp_series = TSeries::one(trunc) + primitive_series(Primitive::Expm1, trunc);
            return ts_compose(exp_series, arg);
        }
        }
        throw std::logic_error("unknown AST node");
    }

    static TSeries log_of_unit(const TSeries& u) {
        const std::size_t T = u.trunc();
        return ts_compose(primitive_series(Primitive::Log1p, T), u - TSeries::one(T));
    }

    // Cancels the common power of t in numerator and denominator, then divides
    // by a denominator whose constant term must be a nonzero scalar.
    TSeries divide(const Ast& a, std::size_t trunc) {
        TSeries den = eval(a->rhs, trunc);
        std::size_t v = den.valuation();
        // A divisor that vanishes to order T may still start at a higher power
        // of t; look further before giving up.
        std::size_t probe = trunc;
        while (v > probe && probe < max_trunc_) {
            probe = std::min(max_trunc_, 2 * probe + 8);
            den = eval(a->rhs, probe);
            v = den.valuation();
        }
        if (v > probe) {
            throw SemanticError(a->rhs->span, SemanticReason::NonUnitDivisor,
                                "divisor vanishes to the working order");
        }
        if (v == 0) {
            if (!den.has_scalar_unit_constant()) {
                throw SemanticError(a->rhs->span, SemanticReason::NonUnitDivisor,
                                    "divisor constant term depends on x");
            }
            return ts_div(eval(a->lhs, trunc), den.truncated(trunc));
        }
        if (trunc + v > max_trunc_) {
            throw SemanticError(a->span, SemanticReason::ResourceLimit,
                                "division needs more than the allowed extra series order");
        }
        const TSeries num = eval(a->lhs, trunc + v);
        if (num.valuation() < v) {
            throw SemanticError(a->span, SemanticReason::TByTDivisionImpossible,
                                "numerator is not divisible by t^" + std::to_string(v));
        }
        const TSeries shifted_den = eval(a->rhs, trunc + v).divided_by_t(v);
        if (!shifted_den.has_scalar_unit_constant()) {
            throw SemanticError(a->rhs->span, SemanticReason::NonUnitDivisor,
                                "leading coefficient of the divisor depends on x");
        }
        return ts_div(num.divided_by_t(v), shifted_den);
    }

    TSeries power(const Ast& a, std::size_t trunc) {
        TSeries base = eval(a->lhs, trunc);
        long k = a->exponent;
        if (k < 0) {
            if (!base.has_scalar_unit_constant()) {
                throw SemanticError(a->lhs->span, SemanticReason::NonUnitDivisor,
                                    "negative power of a series without a nonzero scalar constant term");
            }
            base = ts_div(TSeries::one(trunc), base);
        }
        // Repeated squaring with a size check after every product.
        unsigned long e = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
        TSeries acc = TSeries::one(trunc);
        while (e != 0) {
            if ((e & 1UL) != 0) {
                acc = acc * base;
                check(a->span, acc);
            }
            e >>= 1U;
            if (e != 0) {
                if (base.valuation() > trunc) {
                    break;  // base vanishes to this order, so the remaining bits give zero
                }
                base = base * base;
                check(a->span, base);
            }
        }
        if (e != 0) {
            return TSeries(trunc);
        }
        return acc;
    }

    void check(const Span& span, const TSeries& s) const {
        if (s.bit_size() > limits_.max_coeff_bits) {
            throw SemanticError(span, SemanticReason::ResourceLimit, "coefficient size limit exceeded");
        }
        if (s.x_degree() > limits_.max_x_degree) {
            throw SemanticError(span, SemanticReason::ResourceLimit, "degree in x limit exceeded");
        }
    }

    std::size_t max_trunc_;
    EvalLimits limits_;
};

} // namespace

TSeries eval_ast(const Ast& ast, std::size_t trunc, const EvalLimits& limits) {
    return Evaluator(trunc, limits).eval(ast, trunc);
}

} // namespace mixedpoly::dsl
