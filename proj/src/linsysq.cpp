#include "gaussmap/linsysq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gaussmap {

namespace {

struct WorkRow {
    std::vector<Int> coeffs;
    Int rhs;
    std::vector<Rat> combo;  // this row as a combination of original rows
    size_t orig = 0;
};

Int lcm(const Int& x, const Int& y) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return x / g * y;
}

void divexact_checked(Int& value, const Int& divisor) {
    if (mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) == 0)
        throw std::logic_error("fraction-free elimination: inexact division");
    Int out;
    mpz_divexact(out.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
    value = std::move(out);
}

}  // namespace

ExactSolveResult solve_fraction_free(const LinearSystemQ& system) {
    const size_t n = system.unknowns();
    const size_t m = system.rows.size();
    ExactSolveResult res;

    // Scale every row to integers and strip its content. The combo vector
    // tracks the row as an exact combination of the original rows so a
    // contradiction yields a checkable Farkas witness.
    std::vector<WorkRow> rows;
    rows.reserve(m);
    for (size_t r = 0; r < m; ++r) {
        const LinRow& in = system.rows[r];
        if (in.coeffs.size() != n)
            throw std::invalid_argument("solve: row arity mismatch");
        Int denom_lcm = 1;
        for (const auto& q : in.coeffs) denom_lcm = lcm(denom_lcm, q.get_den());
        denom_lcm = lcm(denom_lcm, in.rhs.get_den());
        WorkRow w;
        w.orig = r;
        w.coeffs.reserve(n);
        Int content = 0;
        auto push = [&](const Rat& q) -> Int {
            Rat scaled = q * Rat(denom_lcm);
            scaled.canonicalize();
            Int z = scaled.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
            return z;
        };
        for (const auto& q : in.coeffs) w.coeffs.push_back(push(q));
        w.rhs = push(in.rhs);
        if (content == 0) content = 1;
        for (auto& z : w.coeffs) divexact_checked(z, content);
        divexact_checked(w.rhs, content);
        w.combo.assign(m, Rat(0));
        w.combo[r] = Rat(denom_lcm) / Rat(content);
        rows.push_back(std::move(w));
    }

    std::vector<size_t> pivot_row_of_col(n, SIZE_MAX);
    std::vector<size_t> pivot_order;  // row indices in elimination order
    Int prev_pivot = 1;
    size_t rank = 0;

    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t best = SIZE_MAX;
        Int best_mag;
        for (size_t r = rank; r < m; ++r) {
            if (rows[r].coeffs[col] == 0) continue;
            Int mag = abs(rows[r].coeffs[col]);
            if (best == SIZE_MAX || mag < best_mag) {
                best = r;
                best_mag = mag;
            }
        }
        if (best == SIZE_MAX) {
            res.free_columns.push_back(col);
            continue;
        }
        std::swap(rows[rank], rows[best]);
        const Int pivot = rows[rank].coeffs[col];
        {
            std::ostringstream os;
            os << "pivot " << system.unknown_names[col] << " on row '"
               << system.rows[rows[rank].orig].label << "'";
            res.trace.push_back(os.str());
        }
        for (size_t r = rank + 1; r < m; ++r) {
            const Int factor = rows[r].coeffs[col];
            for (size_t j = 0; j < n; ++j) {
                rows[r].coeffs[j] =
                    pivot * rows[r].coeffs[j] - factor * rows[rank].coeffs[j];
                divexact_checked(rows[r].coeffs[j], prev_pivot);
            }
            rows[r].rhs = pivot * rows[r].rhs - factor * rows[rank].rhs;
            divexact_checked(rows[r].rhs, prev_pivot);
            const Rat p_q(pivot), f_q(factor), prev_q(prev_pivot);
            for (size_t j = 0; j < m; ++j) {
                rows[r].combo[j] =
                    (p_q * rows[r].combo[j] - f_q * rows[rank].combo[j]) /
                    prev_q;
                rows[r].combo[j].canonicalize();
            }
        }
        prev_pivot = pivot;
        pivot_row_of_col[col] = rank;
        pivot_order.push_back(col);
        ++rank;
    }
    // Columns never reached (row supply exhausted) are free as well.
    for (size_t col = 0; col < n; ++col) {
        if (pivot_row_of_col[col] == SIZE_MAX &&
            std::find(res.free_columns.begin(), res.free_columns.end(), col) ==
                res.free_columns.end())
            res.free_columns.push_back(col);
    }

    // Any fully eliminated row with a nonzero right-hand side certifies
    // infeasibility.
    for (size_t r = rank; r < m; ++r) {
        bool all_zero = true;
        for (const auto& z : rows[r].coeffs)
            if (z != 0) {
                all_zero = false;
                break;
            }
        if (!all_zero)
            throw std::logic_error("solve: nonzero coefficients below rank");
        if (rows[r].rhs == 0) continue;

        res.outcome = SolveOutcome::Infeasible;
        res.farkas = rows[r].combo;
        res.contradiction_value = Rat(rows[r].rhs);
        // Verify the witness against the original rows before handing it out.
        for (size_t j = 0; j < n; ++j) {
            Rat acc(0);
            for (size_t i = 0; i < m; ++i)
                acc += res.farkas[i] * system.rows[i].coeffs[j];
            acc.canonicalize();
            if (acc != 0)
                throw std::logic_error("solve: Farkas witness failed check");
        }
        Rat rhs_acc(0);
        for (size_t i = 0; i < m; ++i)
            rhs_acc += res.farkas[i] * system.rows[i].rhs;
        rhs_acc.canonicalize();
        if (rhs_acc == 0)
            throw std::logic_error("solve: Farkas witness rhs vanished");
        res.contradiction_value = rhs_acc;
        {
            std::ostringstream os;
            os << "contradiction: eliminated row reduces to 0 = "
               << rhs_acc.get_str() << " (witness over "
               << std::to_string(m) << " rows verified)";
            res.trace.push_back(os.str());
        }
        return res;
    }

    // Consistent. Back-substitute over the pivot rows in reverse order.
    res.solution.assign(n, Rat(0));
    for (size_t i = pivot_order.size(); i-- > 0;) {
        const size_t col = pivot_order[i];
        const WorkRow& row = rows[i];
        Rat acc(row.rhs);
        for (size_t j = col + 1; j < n; ++j)
            acc -= Rat(row.coeffs[j]) * res.solution[j];
        acc /= Rat(row.coeffs[col]);
        acc.canonicalize();
        res.solution[col] = acc;
    }

    // Exact verification against every original row.
    for (size_t r = 0; r < m; ++r) {
        Rat acc(0);
        for (size_t j = 0; j < n; ++j)
            acc += system.rows[r].coeffs[j] * res.solution[j];
        acc.canonicalize();
        if (acc != system.rows[r].rhs)
            throw std::logic_error("solve: solution failed verification");
    }

    if (res.free_columns.empty()) {
        res.outcome = SolveOutcome::Unique;
        res.trace.push_back("unique solution verified against all rows");
    } else {
        res.outcome = SolveOutcome::Underdetermined;
        std::ostringstream os;
        os << "consistent with " << res.free_columns.size()
           << " free unknown(s); free components set to 0, verified";
        res.trace.push_back(os.str());
    }
    return res;
}

}  // namespace gaussmap
