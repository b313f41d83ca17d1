#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gaussmap/rational.hpp"

namespace gaussmap {

/// Sparse bivariate polynomial over the big rationals. Zero coefficients
/// are never stored; all arithmetic is exact.
class QPoly {
public:
    using Key = std::pair<int, int>;  // (deg_u, deg_v)

    QPoly() = default;
    explicit QPoly(const Rat& constant) {
        if (constant != 0) terms_[{0, 0}] = constant;
    }
    explicit QPoly(long constant) : QPoly(Rat(constant)) {}

    static QPoly monomial(int deg_u, int deg_v, const Rat& coeff);
    static QPoly var_u() { return monomial(1, 0, Rat(1)); }
    static QPoly var_v() { return monomial(0, 1, Rat(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
    }
    const std::map<Key, Rat>& terms() const { return terms_; }

    Rat coeff(int deg_u, int deg_v) const;
    int deg_u() const;
    int deg_v() const;

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }

    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly derive_u() const;
    QPoly derive_v() const;
    QPoly substitute_u(const Rat& value) const;
    QPoly substitute_v(const Rat& value) const;
    Rat eval(const Rat& u, const Rat& v) const;
    QPoly pow(unsigned e) const;

    /// Exact multivariate division (lex order, u before v); nullopt when
    /// the divisor does not divide exactly.
    std::optional<QPoly> divide_exact(const QPoly& divisor) const;

    /// Division by coeff * u^i v^j; nullopt if any term lacks the factor.
    std::optional<QPoly> divide_monomial(int deg_u, int deg_v,
                                         const Rat& coeff) const;

    std::string to_string() const;

private:
    void prune(const Key& k) {
        auto it = terms_.find(k);
        if (it != terms_.end() && it->second == 0) terms_.erase(it);
    }

    std::map<Key, Rat> terms_;
};

inline QPoly operator*(const Rat& s, const QPoly& p) { return p * s; }

}  // namespace gaussmap
