#include "gaussmap/feasibility.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace gaussmap {

std::string cert_outcome_name(CertOutcome o) {
    switch (o) {
        case CertOutcome::Unique: return "unique";
        case CertOutcome::Infeasible: return "infeasible";
        case CertOutcome::Underdetermined: return "underdetermined";
    }
    return "unknown";
}

namespace {

std::vector<int> parity_vec(const std::vector<int>& shift) {
    std::vector<int> p(shift.size());
    for (size_t k = 0; k < shift.size(); ++k) p[k] = ((shift[k] % 2) + 2) % 2;
    return p;
}

const RadTerm* term_with_parity(const RadExpr& e, const std::vector<int>& p) {
    for (const auto& t : e.terms())
        if (parity_vec(t.shift) == p) return &t;
    return nullptr;
}

std::string parity_label(const RadBasis& basis, const std::vector<int>& p) {
    std::ostringstream os;
    bool any = false;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        if (any) os << "*";
        os << "sqrt(" << basis.names[k] << ")";
        any = true;
    }
    if (!any) os << "rational";
    return os.str();
}

/// Matches coefficients of Delta n_i = sum_j lambda_ij n_j bucket by
/// bucket and appends the rows. Each equation lives over a common base
/// denominator inside its parity class; the numerator polynomial of
/// Delta n_i - sum_j lambda_ij n_j must vanish identically, one linear
/// row per monomial.
void append_component_rows(LinearSystemQ& sys, const RadBasis& basis,
                           int comp, const RadExpr& delta_ni,
                           const std::array<RadExpr, 3>& normal,
                           std::vector<std::string>& trace,
                           std::map<std::vector<int>, int>& bucket_tally) {
    // Gather every parity class present in the equation.
    std::map<std::vector<int>, bool> parities;
    for (const auto& t : delta_ni.terms()) parities[parity_vec(t.shift)] = true;
    for (const auto& nj : normal)
        for (const auto& t : nj.terms()) parities[parity_vec(t.shift)] = true;

    for (const auto& [parity, unused] : parities) {
        (void)unused;
        const RadTerm* t0 = term_with_parity(delta_ni, parity);
        std::array<const RadTerm*, 3> mult{};
        for (int j = 0; j < 3; ++j)
            mult[static_cast<size_t>(j)] =
                term_with_parity(normal[static_cast<size_t>(j)], parity);

        // Common denominator: componentwise minimum of the shifts present.
        std::vector<int> common = parity;
        bool first = true;
        auto fold_min = [&](const RadTerm* t) {
            if (!t) return;
            if (first) {
                common = t->shift;
                first = false;
                return;
            }
            for (size_t k = 0; k < common.size(); ++k)
                common[k] = std::min(common[k], t->shift[k]);
        };
        fold_min(t0);
        for (const auto* t : mult) fold_min(t);
        if (first) continue;  // nothing in this bucket

        auto adjusted = [&](const RadTerm* t) -> QPoly {
            if (!t) return QPoly();
            QPoly num = t->num;
            for (size_t k = 0; k < common.size(); ++k) {
                const int diff = t->shift[k] - common[k];
                num = num * basis.bases[k].pow(static_cast<unsigned>(diff / 2));
            }
            return num;
        };
        const QPoly p0 = adjusted(t0);
        std::array<QPoly, 3> pj;
        for (size_t j = 0; j < 3; ++j) pj[j] = adjusted(mult[j]);

        std::map<QPoly::Key, bool> monomials;
        for (const auto& [k, c] : p0.terms()) monomials[k] = true;
        for (const auto& poly : pj)
            for (const auto& [k, c] : poly.terms()) monomials[k] = true;

        int rows_added = 0;
        for (const auto& [mono, unused2] : monomials) {
            (void)unused2;
            LinRow row;
            row.coeffs.assign(9, Rat(0));
            for (size_t j = 0; j < 3; ++j) {
                // Equation: Delta n_i - sum_j lambda_ij n_j = 0, so the
                // lambda coefficient is minus the n_j numerator coefficient.
                row.coeffs[static_cast<size_t>(comp - 1) * 3 + j] =
                    -pj[j].coeff(mono.first, mono.second);
            }
            row.rhs = -p0.coeff(mono.first, mono.second);
            bool trivial = row.rhs == 0;
            for (const auto& q : row.coeffs) trivial = trivial && q == 0;
            if (trivial) continue;
            std::ostringstream os;
            os << "Delta n" << comp << " | bucket " << parity_label(basis, parity)
               << " | u^" << mono.first << " v^" << mono.second;
            row.label = os.str();
            sys.rows.push_back(std::move(row));
            ++rows_added;
        }
        bucket_tally[parity] += rows_added;
        std::ostringstream os;
        os << "component " << comp << ", bucket " << parity_label(basis, parity)
           << ": " << rows_added << " coefficient row(s)";
        trace.push_back(os.str());
    }
}

FeasibilityCertificate run_feasibility(int kind, const RadBasis& basis,
                                       const std::array<RadExpr, 3>& normal,
                                       const std::array<RadExpr, 3>& delta_n,
                                       const Rat& a, const Rat& b,
                                       const Rat& c) {
    FeasibilityCertificate cert;
    cert.kind = kind;
    cert.a = a;
    cert.b = b;
    cert.c = c;
    cert.system.unknown_names = {"lambda11", "lambda12", "lambda13",
                                 "lambda21", "lambda22", "lambda23",
                                 "lambda31", "lambda32", "lambda33"};

    std::map<std::vector<int>, int> bucket_tally;
    for (int comp = 1; comp <= 3; ++comp)
        append_component_rows(cert.system, basis, comp,
                              delta_n[static_cast<size_t>(comp - 1)], normal,
                              cert.trace, bucket_tally);
    cert.bucket_count = static_cast<int>(bucket_tally.size());

    cert.solve = solve_fraction_free(cert.system);
    for (const auto& line : cert.solve.trace) cert.trace.push_back(line);

    switch (cert.solve.outcome) {
        case SolveOutcome::Unique: cert.outcome = CertOutcome::Unique; break;
        case SolveOutcome::Infeasible:
            cert.outcome = CertOutcome::Infeasible;
            break;
        case SolveOutcome::Underdetermined:
            cert.outcome = CertOutcome::Underdetermined;
            break;
    }
    if (cert.solve.outcome != SolveOutcome::Infeasible)
        for (size_t i = 0; i < 9; ++i) cert.lambda[i] = cert.solve.solution[i];
    return cert;
}

}  // namespace

FeasibilityCertificate feasibility(int kind, const Rat& a, const Rat& b,
                                   const Rat& c) {
    if (kind == 1) {
        const Quadric1Symbols sym(a, b, c);
        std::array<RadExpr, 3> normal{sym.gauss_component(1),
                                      sym.gauss_component(2),
                                      sym.gauss_component(3)};
        std::array<RadExpr, 3> delta{sym.laplacian(normal[0]),
                                     sym.laplacian(normal[1]),
                                     sym.laplacian(normal[2])};
        return run_feasibility(1, *sym.basis(), normal, delta, a, b, c);
    }
    if (kind == 2) {
        const Quadric2Symbols sym(a, b);
        std::array<RadExpr, 3> normal{sym.gauss_component(1),
                                      sym.gauss_component(2),
                                      sym.gauss_component(3)};
        std::array<RadExpr, 3> delta{sym.laplacian(normal[0]),
                                     sym.laplacian(normal[1]),
                                     sym.laplacian(normal[2])};
        return run_feasibility(2, *sym.basis(), normal, delta, a, b, Rat(0));
    }
    throw std::invalid_argument("feasibility: kind must be 1 or 2");
}

void write_certificate(JsonWriter& jw, const FeasibilityCertificate& cert) {
    jw.begin_object();
    jw.key("inputs");
    jw.begin_object();
    jw.kv("kind", cert.kind);
    jw.kv("a", rat_string(cert.a));
    jw.kv("b", rat_string(cert.b));
    if (cert.kind == 1) jw.kv("c", rat_string(cert.c));
    jw.end_object();

    jw.kv("buckets", cert.bucket_count);
    jw.key("system");
    jw.begin_object();
    jw.kv("rows", static_cast<long>(cert.system.rows.size()));
    jw.kv("unknowns", static_cast<long>(cert.system.unknowns()));
    jw.end_object();

    jw.kv("outcome", cert_outcome_name(cert.outcome));

    if (cert.outcome != CertOutcome::Infeasible) {
        jw.key("lambda");
        jw.begin_array();
        for (int i = 0; i < 3; ++i) {
            jw.begin_array();
            for (int j = 0; j < 3; ++j)
                jw.value(rat_string(cert.lambda[static_cast<size_t>(i * 3 + j)]));
            jw.end_array();
        }
        jw.end_array();
    } else {
        jw.key("lambda");
        jw.null();
    }

    if (cert.outcome == CertOutcome::Underdetermined) {
        jw.key("free_unknowns");
        jw.begin_array();
        for (size_t col : cert.solve.free_columns)
            jw.value(cert.system.unknown_names[col]);
        jw.end_array();
    }

    if (cert.outcome == CertOutcome::Infeasible) {
        jw.key("contradiction");
        jw.begin_object();
        jw.kv("reduces_to", "0 = " + rat_string(cert.solve.contradiction_value));
        jw.key("witness");
        jw.begin_array();
        for (size_t r = 0; r < cert.solve.farkas.size(); ++r) {
            if (cert.solve.farkas[r] == 0) continue;
            jw.begin_object();
            jw.kv("row", static_cast<long>(r));
            jw.kv("label", cert.system.rows[r].label);
            jw.kv("factor", rat_string(cert.solve.farkas[r]));
            jw.end_object();
        }
        jw.end_array();
        jw.end_object();
    } else {
        jw.key("contradiction");
        jw.null();
    }

    jw.key("trace");
    jw.begin_array();
    for (const auto& line : cert.trace) jw.value(line);
    jw.end_array();

    jw.end_object();
}

}  // namespace gaussmap
