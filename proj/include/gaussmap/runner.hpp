#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gaussmap/finitetype.hpp"

namespace gaussmap {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kOutDirEnvVar = "GAUSSMAP_OUT";

enum class Command { Verify, Fit, Classify, Certify, CrossCheck };

struct Tolerances {
    double identity = 1e-8;    // verify: residual <= identity * scale
    double agree = 1e-9;       // cross-check agreement (relative)
    double fit_satisfy = 1e-6;
    double fit_fail = 1e-3;
};

/// One fully resolved invocation. Defaults are the reproducibility
/// contract: a fixed seed and the module-level tolerances, all of which
/// are echoed into every report.
struct RunConfig {
    Command command = Command::Verify;
    std::string surface;      // zoo name (verify/fit)
    std::string config_path;  // surface config file; overrides `surface`
    std::string family;       // classify: quadric1 | quadric2
    std::string grid;         // classify: "a=lo:hi:n,b=lo:hi:n[,c=lo:hi:n]"
    int kind = 1;             // certify / cross-check
    std::string a_text = "1";
    std::string b_text = "1";
    std::string c_text = "1";
    int count = kDefaultSampleCount;
    uint64_t seed = kDefaultSeed;
    Tolerances tol;
    std::string out_path;        // empty: default name under $GAUSSMAP_OUT
    std::string format = "json";  // json | csv (classify)
    std::optional<std::string> timestamp;  // injectable for byte-stable output
};

/// Executes the command and writes its report file. Exit status: 0 when
/// every check passed (or the exact run reached a definitive outcome),
/// 1 when a check missed its threshold, 2 on malformed input.
int run(const RunConfig& cfg);

SurfacePatch parse_surface_config(std::istream& in);
SurfacePatch load_surface_config(const std::string& path);

/// The built-in surfaces by name: plane, cylinder, sphere, torus,
/// catenoid, helicoid, quadric1, quadric2 (with their default parameters).
SurfacePatch zoo_surface(const std::string& name);

/// "a=lo:hi:n,b=lo:hi:n[,c=lo:hi:n]" with inclusive linear spacing.
GridSpec parse_grid(const std::string& text, bool expect_c);

}  // namespace gaussmap
