#include "gaussmap/finitetype.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gaussmap/beltrami.hpp"

namespace gaussmap {

std::string verdict_name(FitVerdict v) {
    switch (v) {
        case FitVerdict::Satisfies: return "satisfies";
        case FitVerdict::Fails: return "fails";
        case FitVerdict::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

namespace {

// splitmix64; turns the seed into sequence offsets.
uint64_t mix(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double unit_double(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double kRankTol = 1e-10;

}  // namespace

std::vector<std::pair<double, double>> sample_points(const SurfacePatch& s,
                                                     int count,
                                                     uint64_t seed) {
    if (count < 12)
        throw std::invalid_argument("sample_points: need at least 12 points");
    // R2 low-discrepancy sequence with a seeded toroidal offset. The
    // generator is pure arithmetic, so runs are identical across
    // platforms and library versions.
    const double alpha_u = 0.7548776662466927;  // 1/rho, rho^3 = rho + 1
    const double alpha_v = 0.5698402909980532;  // 1/rho^2
    uint64_t state = seed;
    const double off_u = unit_double(mix(state));
    const double off_v = unit_double(mix(state));
    const Domain& d = s.domain();

    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<size_t>(count));
    const long max_iter = 10000L * count;
    for (long k = 1; k <= max_iter && pts.size() < static_cast<size_t>(count);
         ++k) {
        const double fu = std::fmod(off_u + alpha_u * static_cast<double>(k), 1.0);
        const double fv = std::fmod(off_v + alpha_v * static_cast<double>(k), 1.0);
        const double u = d.u_min + (d.u_max - d.u_min) * fu;
        const double v = d.v_min + (d.v_max - d.v_min) * fv;
        if (!s.admissible(u, v)) continue;
        try {
            (void)metric(s, u, v);  // rejects det g below floor
        } catch (const std::domain_error&) {
            continue;
        }
        pts.emplace_back(u, v);
    }
    if (pts.size() < static_cast<size_t>(count))
        throw std::runtime_error(
            "sample_points: admissible domain too small to place " +
            std::to_string(count) + " points on " + s.describe());
    return pts;
}

std::vector<FitSample> collect_samples(
    const SurfacePatch& s, const std::vector<std::pair<double, double>>& pts) {
    std::vector<FitSample> out;
    out.reserve(pts.size());
    for (const auto& [u, v] : pts) {
        const FrameJets fr = frame(s, u, v);
        FitSample sm;
        sm.n = values(fr.n);
        for (int i = 0; i < 3; ++i)
            sm.target[i] = laplace_from_frame(fr, fr.n[static_cast<size_t>(i)]);
        // Validate the target against the structural identity before it is
        // ever fitted; a gross deviation means an internal defect, not a
        // property of the surface.
        const double H = fr.H.value(), K = fr.K.value();
        const double fu = fr.H.du() * 2.0, fv = fr.H.dv() * 2.0;
        const double alpha = fr.inv_uu.value() * fu + fr.inv_uv.value() * fv;
        const double beta = fr.inv_uv.value() * fu + fr.inv_vv.value() * fv;
        const Vec3 grad_2h = alpha * values(fr.xu) + beta * values(fr.xv);
        const Vec3 expect = grad_2h + (4 * H * H - 2 * K) * sm.n;
        sm.identity_dev =
            (sm.target - expect).norm() / (1.0 + sm.target.norm());
        if (sm.identity_dev > 1e-6)
            throw std::runtime_error(
                "collect_samples: Laplacian target violates the structural "
                "identity on " + s.describe());
        out.push_back(sm);
    }
    return out;
}

LambdaFit fit_lambda_from_samples(const std::vector<FitSample>& samples,
                                  const FitTolerances& tol) {
    if (samples.size() < 12)
        throw std::invalid_argument("fit_lambda: need at least 12 samples");
    const int m = static_cast<int>(samples.size());
    Eigen::MatrixXd design(m, 3);
    Eigen::MatrixXd targets(m, 3);
    double target_sq = 0.0;
    double max_dev = 0.0;
    for (int r = 0; r < m; ++r) {
        design.row(r) = samples[static_cast<size_t>(r)].n.transpose();
        targets.row(r) = samples[static_cast<size_t>(r)].target.transpose();
        target_sq += samples[static_cast<size_t>(r)].target.squaredNorm();
        max_dev = std::max(max_dev, samples[static_cast<size_t>(r)].identity_dev);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::Vector3d sigma = svd.singularValues();
    const double smax = sigma(0);
    int rank = 0;
    for (int i = 0; i < 3; ++i)
        if (sigma(i) > kRankTol * smax && sigma(i) > 0.0) ++rank;

    LambdaFit fit;
    fit.design_rank = rank;
    fit.condition = rank > 0 ? smax / sigma(rank - 1) : 0.0;
    fit.target_identity_dev = max_dev;

    // Minimum-norm row solutions: lambda_i = V S^+ U^T targets_i.
    Eigen::Vector3d inv_sigma = Eigen::Vector3d::Zero();
    for (int i = 0; i < rank; ++i) inv_sigma(i) = 1.0 / sigma(i);
    const Eigen::Matrix3d pinv_core = inv_sigma.asDiagonal();
    const Eigen::MatrixXd lambda_t =
        svd.matrixV() * pinv_core * svd.matrixU().transpose() * targets;
    fit.lambda = lambda_t.transpose();

    const Eigen::MatrixXd resid = design * fit.lambda.transpose() - targets;
    double resid_sq = 0.0;
    for (int r = 0; r < m; ++r) resid_sq += resid.row(r).squaredNorm();
    const double rms_target = std::sqrt(target_sq / m);
    fit.residual_rms = std::sqrt(resid_sq / m) / (rms_target + 1.0);

    if (rank == 3 && fit.residual_rms <= tol.satisfy) {
        fit.verdict = FitVerdict::Satisfies;
    } else if (fit.residual_rms > tol.fail) {
        fit.verdict = FitVerdict::Fails;
    } else {
        fit.verdict = FitVerdict::Indeterminate;
        if (rank < 3) {
            fit.subspace_satisfied = fit.residual_rms <= tol.satisfy;
            std::ostringstream os;
            os << "rank-deficient: normals span a " << rank
               << "-dimensional subspace; the eigen-condition "
               << (fit.subspace_satisfied ? "holds on that subspace"
                                          : "was not resolved")
               << " and the matrix is not unique";
            fit.note = os.str();
        }
    }
    return fit;
}

LambdaFit fit_lambda(const SurfacePatch& s,
                     const std::vector<std::pair<double, double>>& pts,
                     const FitTolerances& tol) {
    return fit_lambda_from_samples(collect_samples(s, pts), tol);
}

ClassificationReport classify_family(const std::string& family,
                                     const GridSpec& grid, int sample_count,
                                     uint64_t seed, const FitTolerances& tol) {
    const bool kind1 = family == "quadric1";
    if (!kind1 && family != "quadric2")
        throw std::invalid_argument("classify_family: unknown family " + family);
    if (grid.a_values.empty() || grid.b_values.empty())
        throw std::invalid_argument("classify_family: empty grid");
    if (kind1 && grid.c_values.empty())
        throw std::invalid_argument("classify_family: quadric1 needs c values");
    for (double a : grid.a_values)
        if ((kind1 && a == 0.0) || (!kind1 && !(a > 0.0)))
            throw std::invalid_argument(
                "classify_family: grid value a=" + std::to_string(a) +
                " violates the family constraint");
    for (double b : grid.b_values)
        if ((kind1 && b == 0.0) || (!kind1 && !(b > 0.0)))
            throw std::invalid_argument(
                "classify_family: grid value b=" + std::to_string(b) +
                " violates the family constraint");
    if (kind1)
        for (double c : grid.c_values)
            if (!(c > 0.0))
                throw std::invalid_argument(
                    "classify_family: grid value c=" + std::to_string(c) +
                    " violates c > 0");

    ClassificationReport report;
    report.family = family;
    report.sample_count = sample_count;
    report.seed = seed;
    const std::vector<double> cs = kind1 ? grid.c_values : std::vector<double>{0.0};
    for (double a : grid.a_values) {
        for (double b : grid.b_values) {
            for (double c : cs) {
                const SurfacePatch s = kind1 ? SurfacePatch::quadric1(a, b, c)
                                             : SurfacePatch::quadric2(a, b);
                ClassificationRow row;
                row.a = a;
                row.b = b;
                row.c = c;
                row.fit = fit_lambda(s, sample_points(s, sample_count, seed), tol);
                row.flagged = row.fit.verdict == FitVerdict::Satisfies;
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

}  // namespace gaussmap
