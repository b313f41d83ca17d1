#include "gaussmap/runner.hpp"

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gaussmap/beltrami.hpp"
#include "gaussmap/feasibility.hpp"
#include "gaussmap/jsonwr.hpp"
#include "gaussmap/symbolic.hpp"

namespace gaussmap {

namespace {

std::string now_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string command_name(Command c) {
    switch (c) {
        case Command::Verify: return "verify";
        case Command::Fit: return "fit";
        case Command::Classify: return "classify";
        case Command::Certify: return "certify";
        case Command::CrossCheck: return "cross-check";
    }
    return "unknown";
}

double parse_double(const std::string& text) {
    size_t used = 0;
    double x = 0;
    try {
        x = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("not a number: '" + text + "'");
    return x;
}

long parse_long(const std::string& text) {
    size_t used = 0;
    long x = 0;
    try {
        x = std::stol(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("not an integer: '" + text + "'");
    return x;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string default_out_path(const RunConfig& cfg, const std::string& label,
                             const std::string& ext) {
    const char* dir = std::getenv(kOutDirEnvVar);
    std::string base = dir && *dir ? std::string(dir) : std::string(".");
    if (base.back() != '/') base += '/';
    return base + command_name(cfg.command) + "_" + label + "." + ext;
}

void write_meta(JsonWriter& jw, const RunConfig& cfg) {
    jw.key("meta");
    jw.begin_object();
    jw.kv("tool", "gaussmap");
    jw.kv("version", kToolVersion);
    jw.kv("timestamp", cfg.timestamp ? *cfg.timestamp : now_utc());
    jw.kv("command", command_name(cfg.command));
    jw.kv("seed", static_cast<unsigned long>(cfg.seed));
    jw.kv("sample_count", cfg.count);
    jw.key("tolerances");
    jw.begin_object();
    jw.kv("identity", cfg.tol.identity);
    jw.kv("agree", cfg.tol.agree);
    jw.kv("fit_satisfy", cfg.tol.fit_satisfy);
    jw.kv("fit_fail", cfg.tol.fit_fail);
    jw.end_object();
    jw.end_object();
}

void write_fit(JsonWriter& jw, const LambdaFit& fit) {
    jw.begin_object();
    jw.key("lambda");
    jw.begin_array();
    for (int i = 0; i < 3; ++i) {
        jw.begin_array();
        for (int j = 0; j < 3; ++j) jw.value(fit.lambda(i, j));
        jw.end_array();
    }
    jw.end_array();
    jw.kv("residual_rms", fit.residual_rms);
    jw.kv("design_rank", fit.design_rank);
    jw.kv("condition", fit.condition);
    jw.kv("verdict", verdict_name(fit.verdict));
    jw.kv("subspace_satisfied", fit.subspace_satisfied);
    jw.kv("target_identity_dev", fit.target_identity_dev);
    jw.kv("note", fit.note);
    jw.end_object();
}

SurfacePatch resolve_surface(const RunConfig& cfg) {
    if (!cfg.config_path.empty()) return load_surface_config(cfg.config_path);
    if (cfg.surface.empty())
        throw std::invalid_argument("no surface given (--surface or --config)");
    return zoo_surface(cfg.surface);
}

struct OutFile {
    std::ofstream file;
    std::ostream* os = nullptr;
    std::string path;  // empty when writing to stdout
};

OutFile open_out(const RunConfig& cfg, const std::string& label,
                 const std::string& ext) {
    OutFile out;
    std::string path = cfg.out_path.empty()
                           ? default_out_path(cfg, label, ext)
                           : cfg.out_path;
    if (path == "-") {
        out.os = &std::cout;
        return out;
    }
    out.file.open(path, std::ios::binary | std::ios::trunc);
    if (!out.file)
        throw std::invalid_argument("cannot open output file: " + path);
    out.os = &out.file;
    out.path = path;
    return out;
}

int cmd_verify(const RunConfig& cfg) {
    const SurfacePatch s = resolve_surface(cfg);
    const auto pts = sample_points(s, cfg.count, cfg.seed);
    double max_ratio_x = 0, max_ratio_n = 0, max_res_x = 0, max_res_n = 0;
    for (const auto& [u, v] : pts) {
        const IdentityResiduals r = identity_residuals(s, u, v);
        max_ratio_x = std::max(max_ratio_x, r.res_x / r.scale_x);
        max_ratio_n = std::max(max_ratio_n, r.res_n / r.scale_n);
        max_res_x = std::max(max_res_x, r.res_x);
        max_res_n = std::max(max_res_n, r.res_n);
    }
    const bool pass =
        max_ratio_x <= cfg.tol.identity && max_ratio_n <= cfg.tol.identity;

    OutFile out = open_out(cfg, s.name(), "json");
    JsonWriter jw(*out.os);
    jw.begin_object();
    write_meta(jw, cfg);
    jw.key("inputs");
    jw.begin_object();
    jw.kv("surface", s.describe());
    jw.kv("name", s.name());
    jw.end_object();
    jw.key("results");
    jw.begin_object();
    jw.kv("points", static_cast<long>(pts.size()));
    jw.kv("max_res_x", max_res_x);
    jw.kv("max_res_n", max_res_n);
    jw.kv("max_ratio_x", max_ratio_x);
    jw.kv("max_ratio_n", max_ratio_n);
    jw.kv("pass", pass);
    jw.end_object();
    jw.end_object();

    std::cerr << "verify " << s.name() << ": " << (pass ? "pass" : "FAIL")
              << " (max residual ratios " << max_ratio_x << ", " << max_ratio_n
              << ")\n";
    return pass ? 0 : 1;
}

int cmd_fit(const RunConfig& cfg) {
    const SurfacePatch s = resolve_surface(cfg);
    const FitTolerances ft{cfg.tol.fit_satisfy, cfg.tol.fit_fail};
    const LambdaFit fit = fit_lambda(s, sample_points(s, cfg.count, cfg.seed), ft);

    OutFile out = open_out(cfg, s.name(), "json");
    JsonWriter jw(*out.os);
    jw.begin_object();
    write_meta(jw, cfg);
    jw.key("inputs");
    jw.begin_object();
    jw.kv("surface", s.describe());
    jw.kv("name", s.name());
    jw.end_object();
    jw.key("results");
    write_fit(jw, fit);
    jw.end_object();

    std::cerr << "fit " << s.name() << ": " << verdict_name(fit.verdict)
              << " (residual " << fit.residual_rms << ", rank "
              << fit.design_rank << ")\n";
    return 0;
}

int cmd_classify(const RunConfig& cfg) {
    if (cfg.family != "quadric1" && cfg.family != "quadric2")
        throw std::invalid_argument("classify: --family must be quadric1 or quadric2");
    const GridSpec grid = parse_grid(cfg.grid, cfg.family == "quadric1");
    const FitTolerances ft{cfg.tol.fit_satisfy, cfg.tol.fit_fail};
    const ClassificationReport rep =
        classify_family(cfg.family, grid, cfg.count, cfg.seed, ft);

    if (cfg.format == "csv") {
        OutFile out = open_out(cfg, cfg.family, "csv");
        std::ostream& os = *out.os;
        os << "family,a,b,c,residual_rms,design_rank,condition,verdict,"
              "subspace_satisfied,flagged\n";
        char buf[64];
        auto num = [&](double x) {
            std::snprintf(buf, sizeof(buf), "%.17g", x);
            return std::string(buf);
        };
        for (const auto& row : rep.rows) {
            os << rep.family << "," << num(row.a) << "," << num(row.b) << ",";
            if (rep.family == "quadric1") os << num(row.c);
            os << "," << num(row.fit.residual_rms) << ","
               << row.fit.design_rank << "," << num(row.fit.condition) << ","
               << verdict_name(row.fit.verdict) << ","
               << (row.fit.subspace_satisfied ? "true" : "false") << ","
               << (row.flagged ? "true" : "false") << "\n";
        }
    } else {
        OutFile out = open_out(cfg, cfg.family, "json");
        JsonWriter jw(*out.os);
        jw.begin_object();
        write_meta(jw, cfg);
        jw.key("inputs");
        jw.begin_object();
        jw.kv("family", cfg.family);
        jw.kv("grid", cfg.grid);
        jw.end_object();
        jw.key("results");
        jw.begin_object();
        int flagged = 0;
        jw.key("cells");
        jw.begin_array();
        for (const auto& row : rep.rows) {
            jw.begin_object();
            jw.kv("a", row.a);
            jw.kv("b", row.b);
            if (rep.family == "quadric1") jw.kv("c", row.c);
            jw.kv("residual_rms", row.fit.residual_rms);
            jw.kv("design_rank", row.fit.design_rank);
            jw.kv("condition", row.fit.condition);
            jw.kv("verdict", verdict_name(row.fit.verdict));
            jw.kv("subspace_satisfied", row.fit.subspace_satisfied);
            jw.kv("flagged", row.flagged);
            jw.end_object();
            if (row.flagged) ++flagged;
        }
        jw.end_array();
        jw.kv("flagged_count", flagged);
        jw.end_object();
        jw.end_object();
    }
    std::cerr << "classify " << cfg.family << ": " << rep.rows.size()
              << " cells\n";
    return 0;
}

int cmd_certify(const RunConfig& cfg) {
    if (cfg.kind != 1 && cfg.kind != 2)
        throw std::invalid_argument("certify: --kind must be 1 or 2");
    const Rat a = parse_rational(cfg.a_text);
    const Rat b = parse_rational(cfg.b_text);
    const Rat c = cfg.kind == 1 ? parse_rational(cfg.c_text) : Rat(0);
    const FeasibilityCertificate cert = feasibility(cfg.kind, a, b, c);

    std::ostringstream label;
    label << "kind" << cfg.kind;
    OutFile out = open_out(cfg, label.str(), "json");
    JsonWriter jw(*out.os);
    jw.begin_object();
    write_meta(jw, cfg);
    jw.key("inputs");
    jw.begin_object();
    jw.kv("kind", cfg.kind);
    jw.kv("a", rat_string(a));
    jw.kv("b", rat_string(b));
    if (cfg.kind == 1) jw.kv("c", rat_string(c));
    jw.end_object();
    jw.key("results");
    write_certificate(jw, cert);
    jw.end_object();

    std::cerr << "certify kind " << cfg.kind << " (a=" << rat_string(a)
              << ", b=" << rat_string(b)
              << (cfg.kind == 1 ? ", c=" + rat_string(c) : "")
              << "): " << cert_outcome_name(cert.outcome) << "\n";
    return 0;
}

int cmd_cross_check(const RunConfig& cfg) {
    if (cfg.kind != 1 && cfg.kind != 2)
        throw std::invalid_argument("cross-check: --kind must be 1 or 2");
    const Rat a = parse_rational(cfg.a_text);
    const Rat b = parse_rational(cfg.b_text);
    const Rat c = cfg.kind == 1 ? parse_rational(cfg.c_text) : Rat(0);

    SurfacePatch surf =
        cfg.kind == 1
            ? SurfacePatch::quadric1(rat_double(a), rat_double(b), rat_double(c))
            : SurfacePatch::quadric2(rat_double(a), rat_double(b));

    std::array<RadExpr, 3> sym_lap = [&] {
        if (cfg.kind == 1) {
            const Quadric1Symbols sym(a, b, c);
            return std::array<RadExpr, 3>{
                sym.laplacian(sym.gauss_component(1)),
                sym.laplacian(sym.gauss_component(2)),
                sym.laplacian(sym.gauss_component(3))};
        }
        const Quadric2Symbols sym(a, b);
        return std::array<RadExpr, 3>{sym.laplacian(sym.gauss_component(1)),
                                      sym.laplacian(sym.gauss_component(2)),
                                      sym.laplacian(sym.gauss_component(3))};
    }();

    // Rational sample points: the low-discrepancy stream snapped to
    // sixteenths so the exact evaluation sees exact inputs.
    const int wanted = std::max(cfg.count, 12);
    std::vector<std::pair<Rat, Rat>> pts;
    const auto raw = sample_points(surf, wanted, cfg.seed);
    for (const auto& [ud, vd] : raw) {
        const Rat u(std::lround(ud * 16), 16);
        const Rat v(std::lround(vd * 16), 16);
        Rat uu = u, vv = v;
        uu.canonicalize();
        vv.canonicalize();
        if (!surf.admissible(rat_double(uu), rat_double(vv))) continue;
        pts.emplace_back(uu, vv);
    }
    if (pts.size() < 12)
        throw std::runtime_error("cross-check: too few admissible rational points");

    double max_sym = 0, max_closed = 0, max_reduced = 0;
    const bool sphere_fiber = cfg.kind == 1 && a == -1 && b == -1;
    for (const auto& [u, v] : pts) {
        const double ud = rat_double(u), vd = rat_double(v);
        const FrameJets fr = frame(surf, ud, vd);
        for (int i = 0; i < 3; ++i) {
            const Jet3 field = fr.n[static_cast<size_t>(i)];
            const double generic = laplace_from_frame(fr, field);
            const double symval =
                sym_lap[static_cast<size_t>(i)].eval_at(u, v);
            const double closed =
                cfg.kind == 1
                    ? laplacian_quadric1_closed(rat_double(a), rat_double(b),
                                                rat_double(c), field, ud, vd)
                    : laplacian_quadric2_closed(rat_double(a), rat_double(b),
                                                field, ud, vd);
            max_sym = std::max(max_sym, std::abs(symval - generic) /
                                            (1 + std::abs(symval)));
            max_closed = std::max(max_closed, std::abs(closed - generic) /
                                                  (1 + std::abs(closed)));
            if (sphere_fiber) {
                const double reduced =
                    laplacian_sphere_reduced(rat_double(c), field, ud, vd);
                max_reduced = std::max(max_reduced,
                                       std::abs(reduced - generic) /
                                           (1 + std::abs(reduced)));
            }
        }
    }
    bool pass = max_sym <= cfg.tol.agree && max_closed <= cfg.tol.agree &&
                (!sphere_fiber || max_reduced <= cfg.tol.agree);

    std::ostringstream label;
    label << "kind" << cfg.kind;
    OutFile out = open_out(cfg, label.str(), "json");
    JsonWriter jw(*out.os);
    jw.begin_object();
    write_meta(jw, cfg);
    jw.key("inputs");
    jw.begin_object();
    jw.kv("kind", cfg.kind);
    jw.kv("a", rat_string(a));
    jw.kv("b", rat_string(b));
    if (cfg.kind == 1) jw.kv("c", rat_string(c));
    jw.end_object();
    jw.key("results");
    jw.begin_object();
    jw.kv("points", static_cast<long>(pts.size()));
    jw.key("numeric_vs_symbolic");
    jw.begin_object();
    jw.kv("max_rel", max_sym);
    jw.kv("pass", max_sym <= cfg.tol.agree);
    jw.end_object();
    jw.key("generic_vs_closed");
    jw.begin_object();
    jw.kv("max_rel", max_closed);
    jw.kv("pass", max_closed <= cfg.tol.agree);
    jw.end_object();
    if (sphere_fiber) {
        jw.key("generic_vs_reduced");
        jw.begin_object();
        jw.kv("max_rel", max_reduced);
        jw.kv("pass", max_reduced <= cfg.tol.agree);
        jw.end_object();
    }
    if (cfg.kind == 1) {
        const NumeratorAuditReport audit = audit_quadric1_numerators(a, b, c);
        jw.key("numerator_audit");
        jw.begin_object();
        auto write_diffs = [&](const char* name, const BracketAudit& ba) {
            jw.key(name);
            jw.begin_object();
            jw.kv("all_match", ba.all_match);
            jw.key("monomials");
            jw.begin_array();
            for (const auto& d : ba.diffs) {
                jw.begin_object();
                jw.kv("deg_u", d.deg_u);
                jw.kv("deg_v", d.deg_v);
                jw.kv("computed", rat_string(d.computed));
                jw.kv("stated", rat_string(d.stated));
                jw.kv("match", d.match);
                jw.end_object();
            }
            jw.end_array();
            jw.end_object();
        };
        write_diffs("first_component", audit.comp1);
        write_diffs("second_component", audit.comp2);
        jw.key("v2_adjudication");
        jw.begin_object();
        jw.kv("computed", rat_string(audit.v2_computed));
        jw.kv("display_3b_plus_ab", rat_string(audit.v2_display_a));
        jw.kv("display_3ab_plus_ab", rat_string(audit.v2_display_b));
        jw.kv("matches_3b_plus_ab", audit.v2_matches_a);
        jw.kv("matches_3ab_plus_ab", audit.v2_matches_b);
        jw.end_object();
        jw.end_object();
    }
    jw.kv("pass", pass);
    jw.end_object();
    jw.end_object();

    std::cerr << "cross-check kind " << cfg.kind << ": "
              << (pass ? "pass" : "FAIL") << " (sym " << max_sym << ", closed "
              << max_closed << ")\n";
    return pass ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg) {
    try {
        switch (cfg.command) {
            case Command::Verify: return cmd_verify(cfg);
            case Command::Fit: return cmd_fit(cfg);
            case Command::Classify: return cmd_classify(cfg);
            case Command::Certify: return cmd_certify(cfg);
            case Command::CrossCheck: return cmd_cross_check(cfg);
        }
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "gaussmap: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "gaussmap: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gaussmap: " << e.what() << "\n";
        return 1;
    }
}

SurfacePatch zoo_surface(const std::string& name) {
    if (name == "plane") return SurfacePatch::plane();
    if (name == "cylinder" || name == "circular_cylinder")
        return SurfacePatch::circular_cylinder(2.0);
    if (name == "sphere") return SurfacePatch::sphere(2.0);
    if (name == "torus") return SurfacePatch::torus(2.0, 0.5);
    if (name == "catenoid") return SurfacePatch::catenoid(1.0);
    if (name == "helicoid") return SurfacePatch::helicoid(1.0);
    if (name == "quadric1") return SurfacePatch::quadric1(2.0, 1.0, 1.0);
    if (name == "quadric2") return SurfacePatch::quadric2(1.0, 1.0);
    throw std::invalid_argument("unknown surface: '" + name + "'");
}

SurfacePatch parse_surface_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("surface config line " +
                                        std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("surface config line " +
                                        std::to_string(lineno) +
                                        ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw std::invalid_argument("surface config: duplicate key '" +
                                        key + "'");
    }
    auto it = kv.find("kind");
    if (it == kv.end())
        throw std::invalid_argument("surface config: missing 'kind'");
    const std::string kind = it->second;
    kv.erase(it);

    auto take = [&](const char* key) -> std::optional<std::string> {
        auto found = kv.find(key);
        if (found == kv.end()) return std::nullopt;
        std::string v = found->second;
        kv.erase(found);
        return v;
    };
    auto need_num = [&](const char* key) {
        auto v = take(key);
        if (!v)
            throw std::invalid_argument(std::string("surface config: kind '") +
                                        kind + "' requires '" + key + "'");
        return parse_double(*v);
    };

    SurfacePatch s = [&]() -> SurfacePatch {
        if (kind == "plane") return SurfacePatch::plane();
        if (kind == "cylinder" || kind == "circular_cylinder")
            return SurfacePatch::circular_cylinder(need_num("radius"));
        if (kind == "sphere") return SurfacePatch::sphere(need_num("radius"));
        if (kind == "torus")
            return SurfacePatch::torus(need_num("ring_radius"),
                                       need_num("tube_radius"));
        if (kind == "catenoid") return SurfacePatch::catenoid(need_num("scale"));
        if (kind == "helicoid") return SurfacePatch::helicoid(need_num("pitch"));
        if (kind == "quadric1") {
            const double a = need_num("a"), b = need_num("b"), c = need_num("c");
            return SurfacePatch::quadric1(a, b, c);
        }
        if (kind == "quadric2") {
            const double a = need_num("a"), b = need_num("b");
            return SurfacePatch::quadric2(a, b);
        }
        if (kind == "graph") {
            auto text = take("graph_terms");
            if (!text)
                throw std::invalid_argument(
                    "surface config: graph requires 'graph_terms'");
            std::vector<GraphTerm> terms;
            std::stringstream ss(*text);
            std::string item;
            while (std::getline(ss, item, ';')) {
                item = trim(item);
                if (item.empty()) continue;
                std::stringstream ts(item);
                std::string du, dv, coeff;
                if (!std::getline(ts, du, ',') || !std::getline(ts, dv, ',') ||
                    !std::getline(ts, coeff, ','))
                    throw std::invalid_argument(
                        "surface config: graph term needs 'du,dv,coeff'");
                terms.push_back({static_cast<int>(parse_long(trim(du))),
                                 static_cast<int>(parse_long(trim(dv))),
                                 parse_double(trim(coeff))});
            }
            return SurfacePatch::graph(std::move(terms));
        }
        throw std::invalid_argument("surface config: unknown kind '" + kind +
                                    "'");
    }();

    if (auto name = take("name")) s.set_name(*name);
    Domain d = s.domain();
    if (auto v = take("u_min")) d.u_min = parse_double(*v);
    if (auto v = take("u_max")) d.u_max = parse_double(*v);
    if (auto v = take("v_min")) d.v_min = parse_double(*v);
    if (auto v = take("v_max")) d.v_max = parse_double(*v);
    if (!(d.u_min < d.u_max) || !(d.v_min < d.v_max))
        throw std::invalid_argument("surface config: empty domain rectangle");
    s.set_domain(d);

    if (!kv.empty())
        throw std::invalid_argument("surface config: unknown key '" +
                                    kv.begin()->first + "'");
    return s;
}

SurfacePatch load_surface_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open surface config: " + path);
    return parse_surface_config(in);
}

GridSpec parse_grid(const std::string& text, bool expect_c) {
    GridSpec grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("grid: expected name=lo:hi:count in '" +
                                        item + "'");
        const std::string name = trim(item.substr(0, eq));
        const std::string range = trim(item.substr(eq + 1));
        std::vector<std::string> parts;
        std::stringstream ps(range);
        std::string p;
        while (std::getline(ps, p, ':')) parts.push_back(p);
        if (parts.size() != 3)
            throw std::invalid_argument("grid: expected lo:hi:count in '" +
                                        range + "'");
        const double lo = parse_double(parts[0]);
        const double hi = parse_double(parts[1]);
        const long n = parse_long(parts[2]);
        if (n < 1) throw std::invalid_argument("grid: count must be >= 1");
        std::vector<double> values;
        if (n == 1) {
            values.push_back(lo);
        } else {
            for (long i = 0; i < n; ++i)
                values.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                          static_cast<double>(n - 1));
        }
        if (name == "a")
            grid.a_values = values;
        else if (name == "b")
            grid.b_values = values;
        else if (name == "c")
            grid.c_values = values;
        else
            throw std::invalid_argument("grid: unknown axis '" + name + "'");
    }
    if (grid.a_values.empty() || grid.b_values.empty())
        throw std::invalid_argument("grid: need both a= and b= axes");
    if (expect_c && grid.c_values.empty())
        throw std::invalid_argument("grid: quadric1 needs a c= axis");
    if (!expect_c && !grid.c_values.empty())
        throw std::invalid_argument("grid: quadric2 takes no c= axis");
    return grid;
}

}  // namespace gaussmap
