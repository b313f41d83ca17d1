#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussmap/surface.hpp"

namespace gaussmap {

inline constexpr uint64_t kDefaultSeed = 42;
inline constexpr int kDefaultSampleCount = 100;

enum class FitVerdict { Satisfies, Fails, Indeterminate };

std::string verdict_name(FitVerdict v);

/// Outcome of fitting a constant matrix L with L n ~ Delta n over a point
/// sample. The fit solves three independent least-squares rows (one per
/// component of Delta n) against the stacked Gauss-map sample matrix and
/// reports rank/conditioning so rank-deficient normals (planes, cylinders)
/// are never silently classified.
struct LambdaFit {
    Mat3 lambda = Mat3::Zero();
    double residual_rms = 0.0;   // RMS |L n - Delta n| / (RMS |Delta n| + 1)
    int design_rank = 0;
    double condition = 0.0;      // largest/smallest retained singular value
    FitVerdict verdict = FitVerdict::Indeterminate;
    bool subspace_satisfied = false;  // rank-deficient but residual-clean
    double target_identity_dev = 0.0; // max |Delta n - grad 2H - (4H^2-2K) n| / scale
    std::string note;
};

struct FitTolerances {
    double satisfy = 1e-6;
    double fail = 1e-3;
};

/// Seeded low-discrepancy points inside the admissible domain; points with
/// an out-of-floor radicand or metric determinant are rejected and the
/// sequence continues. Deterministic for a fixed (surface, count, seed).
std::vector<std::pair<double, double>> sample_points(const SurfacePatch& s,
                                                     int count, uint64_t seed);

struct FitSample {
    Vec3 n;
    Vec3 target;               // Delta n at the point
    double identity_dev = 0.0; // deviation of the target from the structural identity
};

std::vector<FitSample> collect_samples(
    const SurfacePatch& s, const std::vector<std::pair<double, double>>& pts);

LambdaFit fit_lambda_from_samples(const std::vector<FitSample>& samples,
                                  const FitTolerances& tol = {});

LambdaFit fit_lambda(const SurfacePatch& s,
                     const std::vector<std::pair<double, double>>& pts,
                     const FitTolerances& tol = {});

/// Inclusive parameter grid for a family sweep. c_values is ignored for
/// quadric2.
struct GridSpec {
    std::vector<double> a_values;
    std::vector<double> b_values;
    std::vector<double> c_values;
};

struct ClassificationRow {
    double a = 0, b = 0, c = 0;
    LambdaFit fit;
    bool flagged = false;  // verdict == Satisfies
};

struct ClassificationReport {
    std::string family;
    int sample_count = 0;
    uint64_t seed = 0;
    std::vector<ClassificationRow> rows;  // ordered by (a, b, c)
};

/// Sweeps a quadric family over the grid and fits each cell. Grid values
/// must respect the family constraints (quadric1: a*b != 0, c > 0;
/// quadric2: a, b > 0); violations are rejected up front.
ClassificationReport classify_family(const std::string& family,
                                     const GridSpec& grid,
                                     int sample_count = kDefaultSampleCount,
                                     uint64_t seed = kDefaultSeed,
                                     const FitTolerances& tol = {});

}  // namespace gaussmap
