#pragma once

#include <array>

#include "gaussmap/radexpr.hpp"

namespace gaussmap {

/// Exact closed-form machinery for z^2 - a x^2 - b y^2 = c at fixed
/// rational parameters. Radical class: radicand w = c + a u^2 + b v^2
/// (base 0, "omega") and scaled metric determinant
/// P = c + a(a+1) u^2 + b(b+1) v^2 (base 1, "Phi"); the normal components
/// are (-a u, -b v, sqrt(w)) / sqrt(P) and the operator is
///   Delta f = -[(w + b^2 v^2) f_uu - 2ab uv f_uv + (w + a^2 u^2) f_vv]/P
///             + Q (a u f_u + b v f_v)/P^2,
/// with drift numerator Q = (a+b)c + ab(a+1) u^2 + ab(b+1) v^2.
class Quadric1Symbols {
public:
    Quadric1Symbols(const Rat& a, const Rat& b, const Rat& c);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& c() const { return c_; }
    const RadBasisPtr& basis() const { return basis_; }
    const QPoly& radicand() const { return radicand_; }
    const QPoly& det_scaled() const { return det_scaled_; }
    const QPoly& drift() const { return drift_; }

    RadExpr gauss_component(int i) const;  // i in {1,2,3}
    RadExpr laplacian(const RadExpr& f) const;

private:
    Rat a_, b_, c_;
    QPoly radicand_, det_scaled_, drift_;
    RadBasisPtr basis_;
};

/// Exact closed-form machinery for z = (a/2)x^2 + (b/2)y^2 at fixed
/// rational parameters. Single radical base: metric determinant
/// g = 1 + a^2 u^2 + b^2 v^2; normal components (-a u, -b v, 1)/sqrt(g);
///   Delta f = -[g_vv f_uu + g_uu f_vv - 2ab uv f_uv]/g
///             + (a g_vv + b g_uu)(a u f_u + b v f_v)/g^2,
/// with metric entries g_uu = 1 + a^2 u^2, g_vv = 1 + b^2 v^2.
class Quadric2Symbols {
public:
    Quadric2Symbols(const Rat& a, const Rat& b);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const RadBasisPtr& basis() const { return basis_; }
    const QPoly& gram_uu() const { return gram_uu_; }
    const QPoly& gram_vv() const { return gram_vv_; }
    const QPoly& gram_det() const { return gram_det_; }

    RadExpr gauss_component(int i) const;
    RadExpr laplacian(const RadExpr& f) const;

private:
    Rat a_, b_;
    QPoly gram_uu_, gram_vv_, gram_det_;
    RadBasisPtr basis_;
};

RadExpr symbolic_laplacian_q1(int component, const Rat& a, const Rat& b,
                              const Rat& c);
RadExpr symbolic_laplacian_q2(int component, const Rat& a, const Rat& b);

/// Rewrites a canonical single-term expression over the target shift
/// (componentwise <= the term's shift, equal parity) and returns the
/// adjusted numerator. Throws when the expression is not a single term or
/// the target does not divide it.
QPoly numerator_at_shift(const RadExpr& e, const std::vector<int>& target);

struct MonomialDiff {
    int deg_u = 0, deg_v = 0;
    Rat computed;
    Rat stated;
    bool match = false;
};

struct BracketAudit {
    QPoly computed_bracket;   // Delta n_i = -(coef)/P^(7/2) * bracket
    QPoly computed_tail;      // bracket minus its leading quartic term
    QPoly stated_tail;        // the displayed quartic-free polynomial
    std::vector<MonomialDiff> diffs;
    bool all_match = false;
};

/// Audit of the reference kind-I numerator displays: recomputes the
/// brackets of Delta n_1 and Delta n_2 independently and compares them
/// monomial by monomial against the stated f(u,v) and g(u,v). The
/// computation is the arbiter; the stated forms are never assumed. Also
/// adjudicates two mutually inconsistent circulating displays of the
/// v^2 coefficient of g(u,v).
struct NumeratorAuditReport {
    Rat a, b, c;
    BracketAudit comp1;  // f(u,v) comparison
    BracketAudit comp2;  // g(u,v) comparison
    Rat v2_computed;     // computed v^2 coefficient of the g-bracket tail
    Rat v2_display_a;    // bc(b+1)(2a^2 + 2a + 3b + ab)
    Rat v2_display_b;    // bc(b+1)(2a^2 + 2a + 3ab + ab)
    bool v2_matches_a = false;
    bool v2_matches_b = false;
};

NumeratorAuditReport audit_quadric1_numerators(const Rat& a, const Rat& b, const Rat& c);

}  // namespace gaussmap
