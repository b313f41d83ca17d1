#include "gaussmap/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace gaussmap {

QPoly QPoly::monomial(int deg_u, int deg_v, const Rat& coeff) {
    if (deg_u < 0 || deg_v < 0)
        throw std::invalid_argument("QPoly: negative degree");
    QPoly p;
    if (coeff != 0) p.terms_[{deg_u, deg_v}] = coeff;
    return p;
}

Rat QPoly::coeff(int deg_u, int deg_v) const {
    auto it = terms_.find({deg_u, deg_v});
    return it == terms_.end() ? Rat(0) : it->second;
}

int QPoly::deg_u() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int QPoly::deg_v() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r = *this;
    for (const auto& [k, c] : o.terms_) {
        r.terms_[k] += c;
        r.prune(k);
    }
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            const Key k{ka.first + kb.first, ka.second + kb.second};
            r.terms_[k] += ca * cb;
            r.prune(k);
        }
    }
    return r;
}

QPoly QPoly::operator*(const Rat& s) const {
    if (s == 0) return QPoly();
    QPoly r = *this;
    for (auto& [k, c] : r.terms_) c *= s;
    return r;
}

QPoly QPoly::derive_u() const {
    QPoly r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.terms_[{k.first - 1, k.second}] = c * k.first;
    return r;
}

QPoly QPoly::derive_v() const {
    QPoly r;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.terms_[{k.first, k.second - 1}] = c * k.second;
    return r;
}

QPoly QPoly::substitute_u(const Rat& value) const {
    QPoly r;
    for (const auto& [k, c] : terms_) {
        Rat scaled = c;
        for (int i = 0; i < k.first; ++i) scaled *= value;
        const Key kk{0, k.second};
        r.terms_[kk] += scaled;
        r.prune(kk);
    }
    return r;
}

QPoly QPoly::substitute_v(const Rat& value) const {
    QPoly r;
    for (const auto& [k, c] : terms_) {
        Rat scaled = c;
        for (int j = 0; j < k.second; ++j) scaled *= value;
        const Key kk{k.first, 0};
        r.terms_[kk] += scaled;
        r.prune(kk);
    }
    return r;
}

Rat QPoly::eval(const Rat& u, const Rat& v) const {
    Rat acc(0);
    for (const auto& [k, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < k.first; ++i) t *= u;
        for (int j = 0; j < k.second; ++j) t *= v;
        acc += t;
    }
    return acc;
}

QPoly QPoly::pow(unsigned e) const {
    QPoly acc{Rat(1)};
    QPoly base = *this;
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return acc;
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& divisor) const {
    if (divisor.is_zero())
        throw std::invalid_argument("QPoly: division by zero polynomial");
    QPoly quotient;
    QPoly rem = *this;
    const auto lead = *divisor.terms_.rbegin();  // lex-largest term
    while (!rem.is_zero()) {
        const auto top = *rem.terms_.rbegin();
        const int du = top.first.first - lead.first.first;
        const int dv = top.first.second - lead.first.second;
        if (du < 0 || dv < 0) return std::nullopt;
        const QPoly qt = monomial(du, dv, top.second / lead.second);
        quotient += qt;
        rem = rem - qt * divisor;
    }
    return quotient;
}

std::optional<QPoly> QPoly::divide_monomial(int deg_u, int deg_v,
                                            const Rat& coeff) const {
    if (coeff == 0)
        throw std::invalid_argument("QPoly: division by zero monomial");
    QPoly r;
    for (const auto& [k, c] : terms_) {
        if (k.first < deg_u || k.second < deg_v) return std::nullopt;
        r.terms_[{k.first - deg_u, k.second - deg_v}] = c / coeff;
    }
    return r;
}

std::string QPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest lex term first reads like handwritten algebra.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool has_var = k.first > 0 || k.second > 0;
        if (!has_var || mag != 1) {
            os << mag.get_str();
            if (has_var) os << "*";
        }
        if (k.first > 0) {
            os << "u";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            if (k.first > 0) os << "*";
            os << "v";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

}  // namespace gaussmap
