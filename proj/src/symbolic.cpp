#include "gaussmap/symbolic.hpp"

#include <set>
#include <stdexcept>

namespace gaussmap {

namespace {

QPoly u_sq() { return QPoly::monomial(2, 0, Rat(1)); }
QPoly v_sq() { return QPoly::monomial(0, 2, Rat(1)); }
QPoly uv() { return QPoly::monomial(1, 1, Rat(1)); }

}  // namespace

Quadric1Symbols::Quadric1Symbols(const Rat& a, const Rat& b, const Rat& c)
    : a_(a), b_(b), c_(c) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("quadric1 symbols require a*b != 0");
    if (!(c > 0))
        throw std::invalid_argument("quadric1 symbols require c > 0");
    radicand_ = QPoly(c) + u_sq() * a + v_sq() * b;
    det_scaled_ = QPoly(c) + u_sq() * (a * (a + 1)) + v_sq() * (b * (b + 1));
    drift_ = QPoly(Rat((a + b) * c)) + u_sq() * (a * b * (a + 1)) +
             v_sq() * (a * b * (b + 1));
    auto basis = std::make_shared<RadBasis>();
    basis->bases = {radicand_, det_scaled_};
    basis->names = {"omega", "Phi"};
    basis_ = std::move(basis);
}

RadExpr Quadric1Symbols::gauss_component(int i) const {
    switch (i) {
        case 1:
            return RadExpr::radical(basis_, QPoly::monomial(1, 0, -a_), {0, -1});
        case 2:
            return RadExpr::radical(basis_, QPoly::monomial(0, 1, -b_), {0, -1});
        case 3:
            return RadExpr::radical(basis_, QPoly(Rat(1)), {1, -1});
    }
    throw std::invalid_argument("gauss_component: i must be 1, 2 or 3");
}

RadExpr Quadric1Symbols::laplacian(const RadExpr& f) const {
    const RadExpr fu = f.derive_u();
    const RadExpr fv = f.derive_v();
    const RadExpr fuu = fu.derive_u();
    const RadExpr fuv = fu.derive_v();
    const RadExpr fvv = fv.derive_v();

    const QPoly coef_uu = radicand_ + v_sq() * (b_ * b_);
    const QPoly coef_uv = uv() * (Rat(-2) * a_ * b_);
    const QPoly coef_vv = radicand_ + u_sq() * (a_ * a_);

    // -(1/P)[...] : multiply by -1 and lower the Phi power by one.
    RadExpr second = fuu * coef_uu + fuv * coef_uv + fvv * coef_vv;
    second = (-second).times_base_power(1, -2);

    QPoly first_comb = QPoly::monomial(1, 0, a_);  // a u d_u + b v d_v
    RadExpr first = fu * first_comb + fv * QPoly::monomial(0, 1, b_);
    first = (first * drift_).times_base_power(1, -4);

    return second + first;
}

Quadric2Symbols::Quadric2Symbols(const Rat& a, const Rat& b) : a_(a), b_(b) {
    if (!(a > 0) || !(b > 0))
        throw std::invalid_argument("quadric2 symbols require a, b > 0");
    gram_uu_ = QPoly(Rat(1)) + u_sq() * (a * a);
    gram_vv_ = QPoly(Rat(1)) + v_sq() * (b * b);
    gram_det_ = QPoly(Rat(1)) + u_sq() * (a * a) + v_sq() * (b * b);
    auto basis = std::make_shared<RadBasis>();
    basis->bases = {gram_det_};
    basis->names = {"g"};
    basis_ = std::move(basis);
}

RadExpr Quadric2Symbols::gauss_component(int i) const {
    switch (i) {
        case 1:
            return RadExpr::radical(basis_, QPoly::monomial(1, 0, -a_), {-1});
        case 2:
            return RadExpr::radical(basis_, QPoly::monomial(0, 1, -b_), {-1});
        case 3:
            return RadExpr::radical(basis_, QPoly(Rat(1)), {-1});
    }
    throw std::invalid_argument("gauss_component: i must be 1, 2 or 3");
}

RadExpr Quadric2Symbols::laplacian(const RadExpr& f) const {
    const RadExpr fu = f.derive_u();
    const RadExpr fv = f.derive_v();
    const RadExpr fuu = fu.derive_u();
    const RadExpr fuv = fu.derive_v();
    const RadExpr fvv = fv.derive_v();

    RadExpr second = fuu * gram_vv_ + fvv * gram_uu_ +
                     fuv * (uv() * (Rat(-2) * a_ * b_));
    second = (-second).times_base_power(0, -2);

    const QPoly drift = gram_vv_ * a_ + gram_uu_ * b_;
    RadExpr first = fu * QPoly::monomial(1, 0, a_) +
                    fv * QPoly::monomial(0, 1, b_);
    first = (first * drift).times_base_power(0, -4);

    return second + first;
}

RadExpr symbolic_laplacian_q1(int component, const Rat& a, const Rat& b,
                              const Rat& c) {
    const Quadric1Symbols sym(a, b, c);
    return sym.laplacian(sym.gauss_component(component));
}

RadExpr symbolic_laplacian_q2(int component, const Rat& a, const Rat& b) {
    const Quadric2Symbols sym(a, b);
    return sym.laplacian(sym.gauss_component(component));
}

QPoly numerator_at_shift(const RadExpr& e, const std::vector<int>& target) {
    if (e.terms().size() != 1)
        throw std::invalid_argument(
            "numerator_at_shift: expression is not a single radical term");
    const RadTerm& t = e.terms().front();
    if (t.shift.size() != target.size())
        throw std::invalid_argument("numerator_at_shift: arity mismatch");
    QPoly num = t.num;
    for (size_t k = 0; k < target.size(); ++k) {
        const int diff = t.shift[k] - target[k];
        if (diff < 0 || diff % 2 != 0)
            throw std::invalid_argument(
                "numerator_at_shift: target denominator does not divide term");
        num = num * e.basis()->bases[k].pow(static_cast<unsigned>(diff / 2));
    }
    return num;
}

namespace {

BracketAudit audit_component(const QPoly& numerator, int comp, const Rat& a,
                             const Rat& b, const Rat& c) {
    // numerator = -(a u) * bracket for component 1, -(b v) * bracket for 2.
    const Rat lead_coef = comp == 1 ? -a : -b;
    auto bracket = comp == 1 ? numerator.divide_monomial(1, 0, lead_coef)
                             : numerator.divide_monomial(0, 1, lead_coef);
    if (!bracket)
        throw std::runtime_error(
            "numerator audit: numerator is not a multiple of the expected monomial");

    BracketAudit audit;
    audit.computed_bracket = *bracket;

    QPoly lead_term =
        comp == 1
            ? QPoly::monomial(4, 0, a * a * b * (a + 1) * (a + 1) * (b + 1))
            : QPoly::monomial(0, 4, a * b * b * (a + 1) * (b + 1) * (b + 1));
    audit.computed_tail = audit.computed_bracket - lead_term;

    const Rat one(1);
    if (comp == 1) {
        // Displayed f(u,v): quartic in v, quadratics, the mixed term and
        // the c^2 constant.
        audit.stated_tail =
            QPoly::monomial(0, 4, b * b * (b + 1) * (b + 1) *
                                      (4 * a * a - 3 * a * b + 3 * a - 2 * b)) +
            QPoly::monomial(2, 0, a * c * (a + 1) *
                                      (2 * b * b + 2 * b + 3 * a + a * b)) +
            QPoly::monomial(0, 2, b * c * (b + 1) *
                                      (-3 * b * b - b + 6 * a + 8 * a * a -
                                       2 * a * b)) +
            QPoly::monomial(2, 2, a * b * (a + 1) * (b + 1) *
                                      (-3 * b * b - b + 3 * a + 5 * a * b)) +
            QPoly(c * c * (3 * a * (a + one) + b * (b + one) + a * (a + b)));
    } else {
        // Displayed g(u,v); the v^2 line uses the (2a^2+2a+3b+ab) variant
        // here, the alternative display is adjudicated separately.
        audit.stated_tail =
            QPoly::monomial(4, 0, a * a * (a + 1) * (a + 1) *
                                      (4 * b * b - 3 * a * b + 3 * b - 2 * a)) +
            QPoly::monomial(0, 2, b * c * (b + 1) *
                                      (2 * a * a + 2 * a + 3 * b + a * b)) +
            QPoly::monomial(2, 0, a * c * (a + 1) *
                                      (-3 * a * a - a + 6 * b + 8 * b * b -
                                       2 * a * b)) +
            QPoly::monomial(2, 2, a * b * (a + 1) * (b + 1) *
                                      (-3 * a * a - a + 3 * b + 5 * a * b)) +
            QPoly(c * c * (3 * b * (b + one) + a * (a + one) + b * (a + b)));
    }

    std::set<QPoly::Key> keys;
    for (const auto& [k, cf] : audit.computed_tail.terms()) keys.insert(k);
    for (const auto& [k, cf] : audit.stated_tail.terms()) keys.insert(k);
    audit.all_match = true;
    for (const auto& k : keys) {
        MonomialDiff d;
        d.deg_u = k.first;
        d.deg_v = k.second;
        d.computed = audit.computed_tail.coeff(k.first, k.second);
        d.stated = audit.stated_tail.coeff(k.first, k.second);
        d.match = d.computed == d.stated;
        audit.all_match = audit.all_match && d.match;
        audit.diffs.push_back(std::move(d));
    }
    return audit;
}

}  // namespace

NumeratorAuditReport audit_quadric1_numerators(const Rat& a, const Rat& b, const Rat& c) {
    NumeratorAuditReport report;
    report.a = a;
    report.b = b;
    report.c = c;

    const QPoly num1 =
        numerator_at_shift(symbolic_laplacian_q1(1, a, b, c), {0, -7});
    const QPoly num2 =
        numerator_at_shift(symbolic_laplacian_q1(2, a, b, c), {0, -7});
    report.comp1 = audit_component(num1, 1, a, b, c);
    report.comp2 = audit_component(num2, 2, a, b, c);

    report.v2_computed = report.comp2.computed_tail.coeff(0, 2);
    report.v2_display_a = b * c * (b + 1) * (2 * a * a + 2 * a + 3 * b + a * b);
    report.v2_display_b =
        b * c * (b + 1) * (2 * a * a + 2 * a + 3 * a * b + a * b);
    report.v2_matches_a = report.v2_computed == report.v2_display_a;
    report.v2_matches_b = report.v2_computed == report.v2_display_b;
    return report;
}

}  // namespace gaussmap
