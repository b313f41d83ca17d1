#pragma once

#include <string>
#include <vector>

#include "gaussmap/rational.hpp"

namespace gaussmap {

/// An exact linear system over Q. One row per matched monomial
/// coefficient; labels record where each row came from (component,
/// parity bucket, monomial) so certificates read as a derivation.
struct LinRow {
    std::vector<Rat> coeffs;
    Rat rhs;
    std::string label;
};

struct LinearSystemQ {
    std::vector<std::string> unknown_names;
    std::vector<LinRow> rows;
    size_t unknowns() const { return unknown_names.size(); }
};

enum class SolveOutcome { Unique, Infeasible, Underdetermined };

/// Result of fraction-free elimination. Infeasibility comes with a Farkas
/// witness: rational multipliers over the ORIGINAL rows combining to
/// 0 = nonzero, verified exactly before being returned. Unique solutions
/// are verified by substitution into every original row.
struct ExactSolveResult {
    SolveOutcome outcome = SolveOutcome::Underdetermined;
    std::vector<Rat> solution;      // unknowns() entries when consistent
    std::vector<size_t> free_columns;
    std::vector<Rat> farkas;        // rows() entries when infeasible
    Rat contradiction_value;        // the nonzero q in 0 = q
    std::vector<std::string> trace;
};

/// Bareiss-style integer-preserving Gaussian elimination: rows are scaled
/// to integers, each update divides exactly by the previous pivot, and
/// the big-integer arithmetic keeps intermediate growth polynomial.
/// Deterministic: pivots are chosen by smallest absolute value, ties by
/// row order.
ExactSolveResult solve_fraction_free(const LinearSystemQ& system);

}  // namespace gaussmap
