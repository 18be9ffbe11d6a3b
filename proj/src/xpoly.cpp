#include "mixedpoly/xpoly.hpp"

#include <algorithm>
#include <ostream>

namespace mixedpoly {

XPoly::XPoly(const Rat& c) {
    if (!c.is_zero()) {
        c_.push_back(c);
    }
}

XPoly::XPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

XPoly XPoly::x() {
    return monomial(Rat(1), 1);
}

XPoly XPoly::monomial(const Rat& c, std::size_t k) {
    if (c.is_zero()) {
        return {};
    }
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return XPoly(std::move(v));
}

Rat XPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rat();
}

void XPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Rat XPoly::eval(const Rat& v) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

XPoly XPoly::derivative() const {
    if (c_.size() <= 1) {
        return {};
    }
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    }
    return XPoly(std::move(d));
}

XPoly XPoly::antiderivative() const {
    if (c_.empty()) {
        return {};
    }
    std::vector<Rat> a(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        a[k + 1] = c_[k] / Rat(static_cast<long>(k + 1));
    }
    return XPoly(std::move(a));
}

XPoly XPoly::shifted(const Rat& a) const {
    // Horner in the polynomial ring with x + a as the variable.
    const XPoly lin({a, Rat(1)});
    XPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * lin + XPoly(*it);
    }
    return acc;
}

std::size_t XPoly::bit_size() const {
    std::size_t b = 0;
    for (const auto& c : c_) {
        b = std::max(b, c.bit_size());
    }
    return b;
}

std::string XPoly::to_string() const {
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool first = out.empty();
        const Rat mag = c.sign() < 0 ? -c : c;
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = mag == Rat(1);
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (!unit) {
            out += mag.to_string() + "·";
        }
        out += "x";
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

XPoly XPoly::operator-() const {
    XPoly out = *this;
    for (auto& c : out.c_) {
        c = -c;
    }
    return out;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    normalize();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    normalize();
    return *this;
}

XPoly& XPoly::operator*=(const Rat& k) {
    if (k.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) {
        c *= k;
    }
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return XPoly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const XPoly& p) {
    return os << p.to_string();
}

} // namespace mixedpoly
