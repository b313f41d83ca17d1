#include "gaussmap/radexpr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gaussmap {

namespace {

int parity_of(int shift) { return ((shift % 2) + 2) % 2; }

Rat rat_pow(const Rat& base, long e) {
    Rat acc(1);
    const Rat b = e >= 0 ? base : Rat(1) / base;
    for (long i = 0; i < std::labs(e); ++i) acc *= b;
    return acc;
}

}  // namespace

RadExpr RadExpr::from_poly(RadBasisPtr basis, QPoly p) {
    RadExpr e(std::move(basis));
    if (!p.is_zero()) {
        e.terms_.push_back(
            {std::move(p), std::vector<int>(e.basis_->bases.size(), 0)});
        e.canonicalize();
    }
    return e;
}

RadExpr RadExpr::radical(RadBasisPtr basis, QPoly num, std::vector<int> shift) {
    RadExpr e(std::move(basis));
    if (shift.size() != e.basis_->bases.size())
        throw std::invalid_argument("RadExpr: shift arity mismatch");
    if (!num.is_zero()) {
        e.terms_.push_back({std::move(num), std::move(shift)});
        e.canonicalize();
    }
    return e;
}

void RadExpr::canonicalize() {
    const size_t nb = basis_->bases.size();

    auto fold = [&](RadTerm& t) {
        for (size_t k = 0; k < nb; ++k) {
            const QPoly& base = basis_->bases[k];
            int& s = t.shift[k];
            if (base.is_constant()) {
                // Constant radicand: integer powers are exact rationals.
                const Rat gamma = base.coeff(0, 0);
                const int parity = parity_of(s);
                t.num = t.num * rat_pow(gamma, (s - parity) / 2);
                s = parity;
                continue;
            }
            while (s >= 2) {
                t.num = t.num * base;
                s -= 2;
            }
            while (s <= -2) {
                auto q = t.num.divide_exact(base);
                if (!q) break;
                t.num = std::move(*q);
                s += 2;
            }
        }
    };

    for (auto& t : terms_) fold(t);

    // Merge parity classes over the most negative shift (the common
    // denominator), then reduce once more.
    std::map<std::vector<int>, RadTerm> buckets;
    for (auto& t : terms_) {
        if (t.num.is_zero()) continue;
        std::vector<int> parity(nb);
        for (size_t k = 0; k < nb; ++k) parity[k] = parity_of(t.shift[k]);
        auto it = buckets.find(parity);
        if (it == buckets.end()) {
            buckets.emplace(std::move(parity), std::move(t));
            continue;
        }
        RadTerm& acc = it->second;
        std::vector<int> common(nb);
        for (size_t k = 0; k < nb; ++k)
            common[k] = std::min(acc.shift[k], t.shift[k]);
        for (size_t k = 0; k < nb; ++k) {
            acc.num = acc.num * basis_->bases[k].pow(
                          static_cast<unsigned>((acc.shift[k] - common[k]) / 2));
            t.num = t.num * basis_->bases[k].pow(
                        static_cast<unsigned>((t.shift[k] - common[k]) / 2));
        }
        acc.num = acc.num + t.num;
        acc.shift = std::move(common);
    }

    terms_.clear();
    for (auto& [parity, t] : buckets) {
        if (t.num.is_zero()) continue;
        fold(t);
        if (!t.num.is_zero()) terms_.push_back(std::move(t));
    }
}

RadExpr RadExpr::operator-() const {
    RadExpr r = *this;
    for (auto& t : r.terms_) t.num = -t.num;
    return r;
}

RadExpr RadExpr::operator+(const RadExpr& o) const {
    if (basis_ != o.basis_)
        throw std::invalid_argument("RadExpr: mixed bases");
    RadExpr r = *this;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.canonicalize();
    return r;
}

RadExpr RadExpr::operator-(const RadExpr& o) const { return *this + (-o); }

RadExpr RadExpr::operator*(const RadExpr& o) const {
    if (basis_ != o.basis_)
        throw std::invalid_argument("RadExpr: mixed bases");
    RadExpr r(basis_);
    for (const auto& ta : terms_) {
        for (const auto& tb : o.terms_) {
            RadTerm t;
            t.num = ta.num * tb.num;
            t.shift.resize(ta.shift.size());
            for (size_t k = 0; k < t.shift.size(); ++k)
                t.shift[k] = ta.shift[k] + tb.shift[k];
            r.terms_.push_back(std::move(t));
        }
    }
    r.canonicalize();
    return r;
}

RadExpr RadExpr::operator*(const QPoly& p) const {
    RadExpr r = *this;
    for (auto& t : r.terms_) t.num = t.num * p;
    r.canonicalize();
    return r;
}

RadExpr RadExpr::operator*(const Rat& s) const {
    RadExpr r = *this;
    for (auto& t : r.terms_) t.num = t.num * s;
    r.canonicalize();
    return r;
}

RadExpr RadExpr::times_base_power(size_t k, int half_steps) const {
    RadExpr r = *this;
    for (auto& t : r.terms_) t.shift[k] += half_steps;
    r.canonicalize();
    return r;
}

RadExpr RadExpr::derive_u() const {
    RadExpr r(basis_);
    for (const auto& t : terms_) {
        r.terms_.push_back({t.num.derive_u(), t.shift});
        for (size_t k = 0; k < t.shift.size(); ++k) {
            if (t.shift[k] == 0) continue;
            RadTerm d;
            d.num = t.num * basis_->bases[k].derive_u() *
                    make_rat(t.shift[k], 2);
            d.shift = t.shift;
            d.shift[k] -= 2;
            r.terms_.push_back(std::move(d));
        }
    }
    r.canonicalize();
    return r;
}

RadExpr RadExpr::derive_v() const {
    RadExpr r(basis_);
    for (const auto& t : terms_) {
        r.terms_.push_back({t.num.derive_v(), t.shift});
        for (size_t k = 0; k < t.shift.size(); ++k) {
            if (t.shift[k] == 0) continue;
            RadTerm d;
            d.num = t.num * basis_->bases[k].derive_v() *
                    make_rat(t.shift[k], 2);
            d.shift = t.shift;
            d.shift[k] -= 2;
            r.terms_.push_back(std::move(d));
        }
    }
    r.canonicalize();
    return r;
}

double RadExpr::eval_at(const Rat& u, const Rat& v) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        double x = rat_double(t.num.eval(u, v));
        for (size_t k = 0; k < t.shift.size(); ++k) {
            if (t.shift[k] == 0) continue;
            const double bval = rat_double(basis_->bases[k].eval(u, v));
            if (!(bval > 0.0))
                throw std::domain_error(
                    "RadExpr: radicand not positive at evaluation point");
            x *= std::pow(bval, 0.5 * t.shift[k]);
        }
        acc += x;
    }
    return acc;
}

std::string RadExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << t.num.to_string() << "]";
        for (size_t k = 0; k < t.shift.size(); ++k) {
            if (t.shift[k] == 0) continue;
            os << " * " << basis_->names[k] << "^(" << t.shift[k] << "/2)";
        }
    }
    return os.str();
}

}  // namespace gaussmap
