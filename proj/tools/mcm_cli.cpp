// mcmullen: render planes, run certificate suites, print landmarks.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcmullen/certify.hpp"
#include "mcmullen/features.hpp"
#include "mcmullen/render.hpp"
#include "mcmullen/suites.hpp"

namespace {

using mcm::Complex;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text, const std::string& flag) {
    double v = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v))
        throw UsageError(flag + ": expected a real number, got '" + text + "'");
    return v;
}

int parse_int(const std::string& text, const std::string& flag) {
    int v = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) throw UsageError(flag + ": expected an integer, got '" + text + "'");
    return v;
}

// "re" or "re,im".
Complex parse_complex(const std::string& text, const std::string& flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_real(text, flag), 0.0};
    return {parse_real(text.substr(0, comma), flag), parse_real(text.substr(comma + 1), flag)};
}

// "5" or "3..7".
std::vector<int> parse_range(const std::string& text, const std::string& flag) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {parse_int(text, flag)};
    const int lo = parse_int(text.substr(0, dots), flag);
    const int hi = parse_int(text.substr(dots + 2), flag);
    if (lo > hi) throw UsageError(flag + ": empty range '" + text + "'");
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

std::vector<double> parse_real_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_real(item, flag));
    if (out.empty()) throw UsageError(flag + ": expected at least one value");
    return out;
}

mcm::RGB parse_rgb(const std::string& text, const std::string& flag) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_int(item, flag));
    if (parts.size() != 3) throw UsageError(flag + ": expected r,g,b");
    for (int v : parts)
        if (v < 0 || v > 255) throw UsageError(flag + ": components must lie in [0, 255]");
    return {static_cast<std::uint8_t>(parts[0]), static_cast<std::uint8_t>(parts[1]),
            static_cast<std::uint8_t>(parts[2])};
}

struct RenderFlags {
    int n = 3;
    std::string a = "1";
    std::string c = "0";
    double re = -2.0, re2 = 2.0, im = -2.0, im2 = 2.0;
    int w = 512, h = 512;
    int max_iter = mcm::kRenderMaxIter;
    std::string escape_radius = "auto";
    std::string out;
    std::string format = "ppm";
    std::string plus_color;
    std::string minus_color;
};

void add_render_flags(CLI::App* cmd, RenderFlags& f, bool want_a, bool want_c) {
    // --h is the image height.
    cmd->set_help_flag("--help", "Print this help message and exit");
    cmd->add_option("--n", f.n, "Degree n >= 2")->required();
    if (want_a) cmd->add_option("--a", f.a, "a as re[,im]")->required();
    if (want_c) cmd->add_option("--c", f.c, "c as re[,im]")->required();
    cmd->add_option("--re", f.re, "Viewport left edge");
    cmd->add_option("--re2", f.re2, "Viewport right edge");
    cmd->add_option("--im", f.im, "Viewport bottom edge");
    cmd->add_option("--im2", f.im2, "Viewport top edge");
    cmd->add_option("--w", f.w, "Width in pixels");
    cmd->add_option("--h", f.h, "Height in pixels");
    cmd->add_option("--max-iter", f.max_iter, "Iteration cap");
    cmd->add_option("--escape-radius", f.escape_radius, "Escape radius: real > 1 or 'auto'");
    cmd->add_option("--out", f.out, "Output image path")->required();
    cmd->add_option("--format", f.format, "Image format")->check(CLI::IsMember({"ppm"}));
    cmd->add_option("--plus-color", f.plus_color, "v+ escape colour r,g,b");
    cmd->add_option("--minus-color", f.minus_color, "v- escape colour r,g,b");
}

int run_render(const RenderFlags& f, mcm::Plane plane) {
    mcm::RenderSpec spec{std::move(plane), {f.re, f.re2, f.im, f.im2}, f.w, f.h};
    spec.settings.max_iter = f.max_iter;
    if (f.escape_radius != "auto") spec.settings.escape_radius = parse_real(f.escape_radius, "--escape-radius");
    if (!f.plus_color.empty()) spec.palette.plus = parse_rgb(f.plus_color, "--plus-color");
    if (!f.minus_color.empty()) spec.palette.minus = parse_rgb(f.minus_color, "--minus-color");
    spec.validate();
    const mcm::ImageBuffer img = mcm::render(spec);
    mcm::write_ppm(img, f.out);
    std::cout << "wrote " << f.out << " " << img.width << "x" << img.height << " fnv1a64=" << std::hex
              << mcm::fnv1a64(mcm::encode_ppm(img)) << std::dec << "\n";
    return kExitOk;
}

struct VerifyFlags {
    std::string suite;
    std::string n;
    std::string a;
    std::string c;
    std::string k;
    int samples = 0;
    int iterations = 20;
    std::string json;
};

int exit_code_for(const mcm::CertificateReport& r) {
    switch (r.verdict) {
        case mcm::Verdict::Pass:
        case mcm::Verdict::NotApplicable: return kExitOk;
        case mcm::Verdict::Inconclusive: return kExitInconclusive;
        case mcm::Verdict::Fail: return kExitFail;
    }
    return kExitFail;
}

void require_in(double x, double lo, double hi, const std::string& what) {
    if (!(x >= lo && x <= hi)) throw UsageError("requires " + what);
}

int run_verify(const VerifyFlags& f) {
    std::vector<mcm::CertificateReport> reports;
    mcm::SuiteOptions opts;
    if (f.samples > 0) opts.boundary_params = f.samples;

    if (f.suite == "main-theorem-a") {
        const std::vector<int> ns = parse_range(f.n.empty() ? "3..7" : f.n, "--n");
        const std::vector<double> cs =
            f.c.empty() ? std::vector<double>{-1.0, -0.75, -0.5, -0.25, -1e-3} : parse_real_list(f.c, "--c");
        for (int n : ns) require_in(n, 3, 1e9, "n >= 3");
        for (double c : cs) require_in(c, -1.0, 0.0, "-1 <= c <= 0");
        for (int n : ns)
            for (double c : cs) reports.push_back(mcm::certify_aplane_config(n, c, opts));
    } else if (f.suite == "main-theorem-b1") {
        const std::vector<int> ns = parse_range(f.n.empty() ? "5..7" : f.n, "--n");
        const std::vector<double> as = f.a.empty() ? std::vector<double>{1.0, 2.0, 4.0} : parse_real_list(f.a, "--a");
        for (int n : ns) require_in(n, 5, 1e9, "n >= 5");
        for (double a : as) require_in(a, 1.0, 4.0, "1 <= a <= 4");
        for (int n : ns)
            for (double a : as) {
                std::vector<int> ks;
                if (f.k.empty()) {
                    ks = {0, n / 2, n - 1};
                } else {
                    ks = parse_range(f.k, "--k");
                    for (int k : ks) require_in(k, 0, n - 1, "0 <= k <= n-1");
                }
                for (int k : ks) reports.push_back(mcm::certify_cplane_config(n, a, k, opts));
            }
    } else if (f.suite == "main-theorem-b2") {
        const std::vector<int> ns = parse_range(f.n.empty() ? "11..13" : f.n, "--n");
        const std::vector<double> as = f.a.empty() ? std::vector<double>{0.1, 0.5, 1.0} : parse_real_list(f.a, "--a");
        for (int n : ns) require_in(n, 11, 1e9, "n >= 11");
        for (double a : as) require_in(a, 0.1, 1.0, "0.1 <= a <= 1");
        for (int n : ns)
            for (double a : as) reports.push_back(mcm::certify_tight_config(n, a, opts));
    } else if (f.suite == "symmetries") {
        const std::vector<int> ns = parse_range(f.n.empty() ? "3..7" : f.n, "--n");
        const Complex a = f.a.empty() ? Complex(0.5, 0.0) : parse_complex(f.a, "--a");
        const Complex c = f.c.empty() ? Complex(0.3, 0.0) : parse_complex(f.c, "--c");
        const int seeds = f.samples > 0 ? f.samples : 100;
        for (int n : ns) reports.push_back(mcm::certify_symmetries(mcm::MapParams(n, a, c), f.iterations, seeds));
    } else if (f.suite == "escape") {
        const int shell = f.samples > 0 ? f.samples : 10000;
        if (shell < 100) throw UsageError("requires --samples >= 100 for escape shells");
        if (f.n.empty()) {
            reports.push_back(mcm::certify_escape_regime(mcm::CertifiedRegime::APlane, 3, shell));
            reports.push_back(mcm::certify_escape_regime(mcm::CertifiedRegime::CPlane, 5, shell));
            reports.push_back(mcm::certify_escape_regime(mcm::CertifiedRegime::SmallA, 11, shell));
        } else {
            for (int n : parse_range(f.n, "--n")) {
                if (n < 3) throw UsageError("requires n >= 3");
                reports.push_back(mcm::certify_escape_regime(mcm::CertifiedRegime::APlane, n, shell));
                if (n >= 5) reports.push_back(mcm::certify_escape_regime(mcm::CertifiedRegime::CPlane, n, shell));
                if (n >= 11) reports.push_back(mcm::certify_escape_regime(mcm::CertifiedRegime::SmallA, n, shell));
            }
        }
    } else {
        throw UsageError("unknown suite '" + f.suite + "'");
    }

    mcm::CertificateReport all = mcm::aggregate(f.suite, "suite", std::move(reports));
    for (const auto& r : all.children) std::cout << r.to_lines();
    int passed = 0, failed = 0, inconclusive = 0;
    for (const auto& r : all.children) {
        passed += r.verdict == mcm::Verdict::Pass;
        failed += r.verdict == mcm::Verdict::Fail;
        inconclusive += r.verdict == mcm::Verdict::Inconclusive;
    }
    std::cout << "SUMMARY suite=" << f.suite << " checks=" << all.children.size() << " passed=" << passed
              << " failed=" << failed << " inconclusive=" << inconclusive << "\n";
    if (!f.json.empty()) {
        std::ofstream out(f.json);
        if (!out) throw std::runtime_error("cannot open '" + f.json + "' for writing");
        out << all.to_json() << "\n";
    }
    return exit_code_for(all);
}

int run_centers(int n, const std::string& a_list) {
    if (n < 2) throw UsageError("requires n >= 2");
    std::cout.precision(15);
    const double overlap = mcm::overlap_parameter(n);
    std::cout << "n=" << n << " overlap_a=" << overlap << " c_plus=" << mcm::baby_center(n, overlap, mcm::CenterSide::Plus)
              << " c_minus=" << mcm::baby_center(n, overlap, mcm::CenterSide::Minus) << "\n";
    if (a_list.empty()) return kExitOk;
    for (double a : parse_real_list(a_list, "--a")) {
        if (!(a > 0.0)) throw UsageError("requires a > 0");
        const mcm::CenterPair cp = mcm::baby_centers(n, a);
        std::cout << "n=" << n << " a=" << a << " c_plus=" << cp.c_plus << " c_minus=" << cp.c_minus
                  << " fixed_point_residual=" << cp.fixed_point_residual;
        if (a < std::pow(25.0 / 16.0, n)) {
            const mcm::IntervalPair ip = mcm::interval_positions(n, a);
            std::cout << " omega1=" << ip.omega1 << " omega2=" << ip.omega2 << " ordering=" << to_string(ip.ordering);
        }
        std::cout << "\n";
    }
    return kExitOk;
}

struct ScanFlags {
    std::string kind = "cplane";
    int n = 5;
    std::string a;
    std::string c;
    int k = 0;
    int density = 128;
    int max_iter = mcm::kCertifyMaxIter;
    std::string escape_radius = "auto";
    std::string out;
};

int run_scan(const ScanFlags& f) {
    mcm::ParamWindow window = [&] {
        if (f.kind == "aplane") {
            if (f.c.empty()) throw UsageError("aplane scan requires --c");
            return mcm::make_aplane_window(f.n, parse_real(f.c, "--c"));
        }
        if (f.a.empty()) throw UsageError(f.kind + " scan requires --a");
        const double a = parse_real(f.a, "--a");
        if (f.kind == "cplane") return mcm::make_cplane_window(f.n, a, f.k);
        if (f.kind == "tight") return mcm::make_tight_window(f.n, a);
        throw UsageError("unknown window kind '" + f.kind + "'");
    }();
    mcm::IterationSettings settings{f.max_iter, std::nullopt};
    if (f.escape_radius != "auto") settings.escape_radius = parse_real(f.escape_radius, "--escape-radius");
    const mcm::ScanResult res = mcm::scan_boundedness_locus(window, f.density, settings);
    std::cout << "window " << window.describe() << "\n";
    std::cout << "density=" << res.density << " locus_samples=" << res.locus_size
              << " nonempty=" << (res.nonempty ? "true" : "false") << " components=" << res.components;
    if (res.center)
        std::cout << " center=" << res.center->real() << "," << res.center->imag()
                  << " contains_center=" << (res.contains_center ? "true" : "false");
    std::cout << "\n";
    if (!f.out.empty()) {
        std::ofstream out(f.out);
        if (!out) throw std::runtime_error("cannot open '" + f.out + "' for writing");
        out << res.to_csv();
    }
    return res.nonempty ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Render and certify the family z^n + a/z^n + c"};
    app.require_subcommand(1);

    RenderFlags julia, aplane, cplane;
    auto* cmd_julia = app.add_subcommand("render-julia", "Dynamical plane of R_{n,a,c}");
    add_render_flags(cmd_julia, julia, true, true);
    auto* cmd_aplane = app.add_subcommand("render-aplane", "a-parameter plane at fixed c");
    add_render_flags(cmd_aplane, aplane, false, true);
    auto* cmd_cplane = app.add_subcommand("render-cplane", "c-parameter plane at fixed a");
    add_render_flags(cmd_cplane, cplane, true, false);

    VerifyFlags verify;
    auto* cmd_verify = app.add_subcommand("verify", "Run a certificate suite");
    cmd_verify->add_option("--suite", verify.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"main-theorem-a", "main-theorem-b1", "main-theorem-b2", "symmetries", "escape"}));
    cmd_verify->add_option("--n", verify.n, "Degree or range lo..hi");
    cmd_verify->add_option("--a", verify.a, "a value(s)");
    cmd_verify->add_option("--c", verify.c, "c value(s)");
    cmd_verify->add_option("--k", verify.k, "Sector index or range");
    cmd_verify->add_option("--samples", verify.samples, "Boundary parameters / seeds / shell samples");
    cmd_verify->add_option("--iterations", verify.iterations, "Iterates per symmetry seed");
    cmd_verify->add_option("--json", verify.json, "Also write the report as JSON");

    int centers_n = 11;
    std::string centers_a;
    auto* cmd_centers = app.add_subcommand("centers", "Baby-M centres, overlap parameter, intervals");
    cmd_centers->add_option("--n", centers_n, "Degree")->required();
    cmd_centers->add_option("--a", centers_a, "Comma-separated a values");

    ScanFlags scan;
    auto* cmd_scan = app.add_subcommand("scan", "Boundedness locus inside a parameter window");
    cmd_scan->add_option("--kind", scan.kind, "aplane | cplane | tight")
        ->check(CLI::IsMember({"aplane", "cplane", "tight"}));
    cmd_scan->add_option("--n", scan.n, "Degree")->required();
    cmd_scan->add_option("--a", scan.a, "Fixed a (cplane, tight)");
    cmd_scan->add_option("--c", scan.c, "Fixed c (aplane)");
    cmd_scan->add_option("--k", scan.k, "Sector index (cplane)");
    cmd_scan->add_option("--density", scan.density, "Samples per axis");
    cmd_scan->add_option("--max-iter", scan.max_iter, "Iteration cap");
    cmd_scan->add_option("--escape-radius", scan.escape_radius, "Escape radius: real > 1 or 'auto'");
    cmd_scan->add_option("--out", scan.out, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_julia) {
            const mcm::MapParams p(julia.n, parse_complex(julia.a, "--a"), parse_complex(julia.c, "--c"));
            return run_render(julia, mcm::DynamicalPlane{p});
        }
        if (*cmd_aplane) {
            if (aplane.n < 2) throw UsageError("requires n >= 2");
            return run_render(aplane, mcm::APlane{aplane.n, parse_complex(aplane.c, "--c")});
        }
        if (*cmd_cplane) {
            const Complex a = parse_complex(cplane.a, "--a");
            if (cplane.n < 2) throw UsageError("requires n >= 2");
            if (a == Complex(0.0, 0.0)) throw UsageError("requires a != 0");
            return run_render(cplane, mcm::CPlane{cplane.n, a});
        }
        if (*cmd_verify) return run_verify(verify);
        if (*cmd_centers) return run_centers(centers_n, centers_a);
        if (*cmd_scan) return run_scan(scan);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
