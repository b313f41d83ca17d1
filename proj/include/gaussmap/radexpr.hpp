#pragma once

#include <memory>
#include <vector>

#include "gaussmap/qpoly.hpp"

namespace gaussmap {

/// The fixed radicand polynomials an expression class is built over
/// (kind I: the height radicand and the scaled metric determinant; kind
/// II: the metric determinant). For admissible quadric parameters the
/// bases are nonconstant-or-positive, pairwise non-proportional and not
/// perfect squares, so products of their square roots are linearly
/// independent over the rational functions and parity buckets must vanish
/// independently.
struct RadBasis {
    std::vector<QPoly> bases;
    std::vector<std::string> names;
};

using RadBasisPtr = std::shared_ptr<const RadBasis>;

/// One summand: num * prod_k bases[k]^(shift[k]/2), shift integers (odd =
/// a live square root, negative = denominator power).
struct RadTerm {
    QPoly num;
    std::vector<int> shift;
};

/// A finite sum of radical terms, kept canonical: at most one term per
/// parity class of the shift vector, integer base powers folded into the
/// numerator, denominator base powers reduced when the numerator allows.
/// Closed under +, -, *, d/du, d/dv.
class RadExpr {
public:
    explicit RadExpr(RadBasisPtr basis) : basis_(std::move(basis)) {}

    static RadExpr zero(RadBasisPtr basis) { return RadExpr(std::move(basis)); }
    static RadExpr from_poly(RadBasisPtr basis, QPoly p);
    static RadExpr radical(RadBasisPtr basis, QPoly num, std::vector<int> shift);

    const RadBasisPtr& basis() const { return basis_; }
    const std::vector<RadTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RadExpr operator-() const;
    RadExpr operator+(const RadExpr& o) const;
    RadExpr operator-(const RadExpr& o) const;
    RadExpr operator*(const RadExpr& o) const;
    RadExpr operator*(const QPoly& p) const;
    RadExpr operator*(const Rat& s) const;

    /// Multiplies by bases[k]^(half_steps/2).
    RadExpr times_base_power(size_t k, int half_steps) const;

    RadExpr derive_u() const;
    RadExpr derive_v() const;

    /// Evaluates in floating point at an exact rational point (bases must
    /// be positive there).
    double eval_at(const Rat& u, const Rat& v) const;

    std::string to_string() const;

private:
    void canonicalize();

    RadBasisPtr basis_;
    std::vector<RadTerm> terms_;
};

}  // namespace gaussmap
