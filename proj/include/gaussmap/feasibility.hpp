#pragma once

#include <array>

#include "gaussmap/jsonwr.hpp"
#include "gaussmap/linsysq.hpp"
#include "gaussmap/symbolic.hpp"

namespace gaussmap {

enum class CertOutcome { Unique, Infeasible, Underdetermined };

std::string cert_outcome_name(CertOutcome o);

/// Exact decision of whether Delta n = L n can hold with a constant
/// matrix on a rational-parameter quadric, with a machine-checkable
/// derivation: buckets -> coefficient rows -> elimination -> unique L or
/// a Farkas contradiction.
struct FeasibilityCertificate {
    int kind = 1;
    Rat a, b, c;  // c meaningful for kind 1 only
    CertOutcome outcome = CertOutcome::Underdetermined;
    std::array<Rat, 9> lambda{};  // row-major l11..l33 when consistent
    int bucket_count = 0;
    LinearSystemQ system;
    ExactSolveResult solve;
    std::vector<std::string> trace;
};

FeasibilityCertificate feasibility(int kind, const Rat& a, const Rat& b,
                                   const Rat& c = Rat(1));

void write_certificate(JsonWriter& jw, const FeasibilityCertificate& cert);

}  // namespace gaussmap
