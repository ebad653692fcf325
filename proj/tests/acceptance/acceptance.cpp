// One PASS/FAIL line per acceptance criterion; nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mcmullen/certify.hpp"
#include "mcmullen/features.hpp"
#include "mcmullen/parallel.hpp"
#include "mcmullen/render.hpp"
#include "mcmullen/suites.hpp"

using namespace mcm;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

int failures = 0;

void run(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) o.require(false, "over time budget");
    failures += !o.ok;
    std::printf("%s criterion %d %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Outcome centers() {
    Outcome o;
    const double a = overlap_parameter(11);
    o.require(std::abs(a - std::pow(0.25, 1.1)) < 1e-15, "overlap parameter");
    const double c = baby_center(11, a, CenterSide::Plus);
    o.require(std::abs(c) < 1e-12, fmt("|c+| at overlap = %.3g", std::abs(c)));
    const double fig = baby_center(11, 0.2176, CenterSide::Plus);
    o.require(std::abs(fig) < 3e-4, fmt("|c+| at 0.2176 = %.3g", std::abs(fig)));
    return o;
}

Outcome escape() {
    Outcome o;
    const std::pair<CertifiedRegime, int> regimes[] = {
        {CertifiedRegime::APlane, 3}, {CertifiedRegime::CPlane, 5}, {CertifiedRegime::SmallA, 11}};
    for (auto [regime, n] : regimes) {
        const CertificateReport r = certify_escape_regime(regime, n, 10000);
        o.require(r.children.size() >= 9, "grid smaller than 3x3");
        o.require(r.passed() && r.margin > 0.0, r.check_name + " " + to_string(regime) + fmt(" margin %.3g", r.margin));
    }
    return o;
}

Outcome polynomial_like_grid() {
    Outcome o;
    const SuiteOptions opts;
    int checked = 0;
    for (int n = 3; n <= 7; ++n)
        for (double c : {-1.0, -0.5, -0.25}) {
            const CertificateReport r = certify_polynomial_like_on_boundary(make_aplane_window(n, c), opts);
            ++checked;
            o.require(r.passed(), "a-plane n=" + std::to_string(n) + fmt(" c=%g", c));
        }
    for (int n : {5, 6, 7})
        for (double a : {1.0, 2.0, 4.0})
            for (int k : {0, n / 2, n - 1}) {
                const CertificateReport r = certify_polynomial_like_on_boundary(make_cplane_window(n, a, k), opts);
                ++checked;
                o.require(r.passed(), "c-plane n=" + std::to_string(n) + fmt(" a=%g", a) + " k=" + std::to_string(k));
            }
    for (int n : {11, 13})
        for (double a : {0.1, 0.5, 1.0}) {
            const CertificateReport r = certify_polynomial_like_on_boundary(make_tight_window(n, a), opts);
            ++checked;
            o.require(r.passed(), "tight n=" + std::to_string(n) + fmt(" a=%g", a));
        }
    o.require(checked == 48, "grid size");
    return o;
}

Outcome winding() {
    Outcome o;
    const ParamWindow windows[] = {make_aplane_window(4, -0.5), make_aplane_window(3, -1.0),
                                   make_cplane_window(5, 1.0, 0), make_cplane_window(6, 1.0, 4),
                                   make_tight_window(11, 0.22)};
    for (const ParamWindow& w : windows) {
        const CertificateReport r = certify_winding(w, 4096);
        const double err = r.metric("integrality_error").value_or(1.0);
        o.require(r.passed() && r.margin == 1.0 && err < 1e-6, w.describe() + fmt(" winding %g", r.margin));
    }
    const SectorAnnulus shifted = make_uprime(MapParams(5, 1.0, 0.0), 1, Regime::Standard);
    const CertificateReport ctl = certify_winding(make_custom_cplane_window(5, 1.0, shifted, 0, Regime::Standard), 4096);
    o.require(ctl.margin == 0.0 && ctl.metric("integrality_error").value_or(1.0) < 1e-6,
              fmt("control winding %g", ctl.margin));
    return o;
}

Outcome symmetries() {
    Outcome o;
    // Odd n with real a exercises all three identities; even n checks conjugation alone.
    const MapParams configs[] = {MapParams(3, 0.5, 0.3), MapParams(5, 1.0, Complex(0.5, 0.2)),
                                 MapParams(11, 0.22, Complex(-0.1, 0.05)), MapParams(4, 2.0, -0.6)};
    for (const MapParams& p : configs) {
        const CertificateReport r = certify_symmetries(p, 20, 100);
        o.require(r.passed(), "identities at " + r.subject);
        for (const CertificateReport& c : r.children)
            if (c.verdict != Verdict::NotApplicable)
                o.require(c.metric("max_relative_error").value_or(1.0) < 1e-9, c.check_name);
    }

    RenderSpec spec{CPlane{3, 0.5}, {-2, 2, -2, 2}, 64, 64};
    const auto grid = classify_grid(spec);
    auto at = [&](int x, int y) { return std::get<OrbitPair>(grid[y * 64 + x]); };
    int mirror_bad = 0, swap_bad = 0;
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x) {
            const OrbitPair here = at(x, y), conj = at(x, 63 - y), imag_mirror = at(63 - x, y);
            mirror_bad += here.plus.bounded() != conj.plus.bounded() || here.minus.bounded() != conj.minus.bounded();
            swap_bad += here.plus.bounded() != imag_mirror.minus.bounded() ||
                        here.minus.bounded() != imag_mirror.plus.bounded();
        }
    o.require(mirror_bad == 0, "real-axis mirror: " + std::to_string(mirror_bad));
    o.require(swap_bad == 0, "imaginary-axis mirror: " + std::to_string(swap_bad));
    return o;
}

Outcome intervals() {
    Outcome o;
    std::vector<IntervalOrdering> seq;
    for (double a : {0.1, 0.15, 0.2176, 0.3, 0.6, 1.0}) seq.push_back(interval_positions(11, a).ordering);
    o.require(seq.front() == IntervalOrdering::I2LeftOfI1, "starts I2_left_of_I1");
    o.require(seq.back() == IntervalOrdering::I1LeftOfI2, "ends I1_left_of_I2");
    o.require(seq[2] == IntervalOrdering::Overlapping, "0.2176 overlapping");
    for (std::size_t i = 1; i < seq.size(); ++i) o.require(seq[i] >= seq[i - 1], "monotone");
    return o;
}

Outcome renders() {
    Outcome o;
    const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
    const Plane planes[] = {CPlane{3, 0.5}, APlane{5, 0.5}, DynamicalPlane{MapParams(5, 0.7, -0.75)}};
    for (const Plane& plane : planes) {
        RenderSpec spec{plane, {-2, 2, -2, 2}, 512, 512};
        const auto t0 = std::chrono::steady_clock::now();
        const ImageBuffer one = render(spec, 1);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(secs < 10.0, fmt("single-thread render %.1fs", secs));
        const ImageBuffer many = render(spec, static_cast<int>(hw));
        o.require(encode_ppm(one) == encode_ppm(many), "thread-count dependence");

        if (std::holds_alternative<DynamicalPlane>(plane)) {
            const double r_in = std::pow(0.7, 0.2) / 2.0;
            int violations = 0;
            for (int y = 0; y < 512; ++y)
                for (int x = 0; x < 512; ++x) {
                    const double m = std::abs(spec.pixel_center(x, y));
                    if (one.at(x, y) == RGB{0, 0, 0} && (m <= r_in || m >= 2.0)) ++violations;
                }
            o.require(violations == 0, "black pixels outside annulus: " + std::to_string(violations));
        }
    }
    return o;
}

Outcome scans() {
    Outcome o;
    const IterationSettings s{kCertifyMaxIter, std::nullopt};
    const ScanResult c = scan_boundedness_locus(make_cplane_window(5, 1.0, 0), 128, s);
    o.require(c.nonempty, "W_{5,1,0} empty");
    o.require(c.center && std::abs(*c.center - Complex(-1.0, 0.0)) < 1e-12 && c.contains_center,
              "W_{5,1,0} misses -1");
    const ScanResult a = scan_boundedness_locus(make_aplane_window(4, -0.5), 128, s);
    o.require(a.nonempty, "W_{4,-0.5} empty");
    return o;
}

// Straight escape-time loop, no shared code with the library.
int reference_steps(double cr, double ci, int max_iter) {
    double zr = 0, zi = 0;
    for (int k = 1; k <= max_iter; ++k) {
        const double t = zr * zr - zi * zi + cr;
        zi = 2 * zr * zi + ci;
        zr = t;
        if (zr * zr + zi * zi > 4.0) return k;
    }
    return -1;
}

Outcome mandelbrot() {
    Outcome o;
    const EscapeSettings s{2.0, 256};
    int disagree = 0;
    for (int y = 0; y < 128; ++y)
        for (int x = 0; x < 128; ++x) {
            const double cr = -2.0 + 3.0 * (x + 0.5) / 128;
            const double ci = 1.5 - 3.0 * (y + 0.5) / 128;
            const OrbitOutcome got = mandelbrot_classify(Complex(cr, ci), s);
            const int want = reference_steps(cr, ci, 256);
            const bool same = want < 0 ? got.bounded() : (got.escaped() && got.steps == want);
            disagree += !same;
        }
    o.require(disagree == 0, std::to_string(disagree) + " pixels disagree");
    return o;
}

}  // namespace

int main() {
    run(1, "closed-form centres", 1.0, centers);
    run(2, "escape bounds over three regimes", 30.0, escape);
    run(3, "polynomial-like grid", 120.0, polynomial_like_grid);
    run(4, "winding numbers", 0.0, winding);
    run(5, "symmetry suite", 0.0, symmetries);
    run(6, "interval pass-through", 1.0, intervals);
    run(7, "512x512 renders", 0.0, renders);
    run(8, "boundedness scans", 30.0, scans);
    run(9, "mandelbrot oracle", 0.0, mandelbrot);
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
