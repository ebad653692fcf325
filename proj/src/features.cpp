#include "mcmullen/features.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "mcmullen/parallel.hpp"

namespace mcm {

namespace {

constexpr double kCenterTolerance = 1e-12;

void require_positive_a(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("requires real a > 0");
}

}  // namespace

CenterPair baby_centers(int n, double a) {
    if (n < 2) throw std::invalid_argument("requires n >= 2");
    require_positive_a(a);
    const double p = std::pow(a, 1.0 / (2.0 * n));
    const double c_plus = p - 2.0 * std::sqrt(a);
    const MapParams at_plus(n, a, c_plus);
    const double residual = std::abs(eval_map(at_plus, p) - p);
    return {n, a, c_plus, -c_plus, residual};
}

double baby_center(int n, double a, CenterSide which) {
    const CenterPair pair = baby_centers(n, a);
    const double scale = std::max(1.0, std::sqrt(a));
    if (pair.fixed_point_residual > kCenterTolerance * scale)
        throw std::runtime_error("critical point is not fixed at the computed centre");
    if (which == CenterSide::Plus) return pair.c_plus;
    if (n % 2 == 1) {
        const double p = -std::pow(a, 1.0 / (2.0 * n));
        const double r = std::abs(eval_map(MapParams(n, a, pair.c_minus), p) - p);
        if (r > kCenterTolerance * scale) throw std::runtime_error("critical point is not fixed at c-");
    }
    return pair.c_minus;
}

double overlap_parameter(int n) {
    if (n < 2) throw std::invalid_argument("requires n >= 2");
    return std::pow(0.25, static_cast<double>(n) / (n - 1));
}

const char* to_string(IntervalOrdering o) noexcept {
    switch (o) {
        case IntervalOrdering::I2LeftOfI1: return "I2_left_of_I1";
        case IntervalOrdering::Overlapping: return "overlapping";
        case IntervalOrdering::I1LeftOfI2: return "I1_left_of_I2";
    }
    return "?";
}

IntervalPair interval_positions(int n, double a) {
    if (n < 2) throw std::invalid_argument("requires n >= 2");
    require_positive_a(a);
    if (!(a < std::pow(25.0 / 16.0, n))) throw std::invalid_argument("requires a < (25/16)^n");
    const double two_sqrt_a = 2.0 * std::sqrt(a);
    const double w1 = 0.8 * std::pow(a, 1.0 / n) - two_sqrt_a;
    const double w2 = 1.25 - two_sqrt_a;
    if (!(w1 < w2)) throw std::invalid_argument("degenerate interval: omega1 >= omega2");
    IntervalOrdering ord = IntervalOrdering::Overlapping;
    if (w1 > 0.0) ord = IntervalOrdering::I2LeftOfI1;
    else if (w2 < 0.0) ord = IntervalOrdering::I1LeftOfI2;
    return {n, a, w1, w2, {w1, w2}, {-w2, -w1}, ord};
}

std::string ScanResult::to_csv() const {
    std::string out = "re,im,member_window,bounded_global,bounded_in_uprime\n";
    char buf[128];
    for (const ScanSample& s : samples) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%d,%d\n", s.lambda.real(), s.lambda.imag(),
                      s.member_window ? 1 : 0, s.bounded_global ? 1 : 0, s.bounded_in_uprime ? 1 : 0);
        out += buf;
    }
    return out;
}

namespace {

bool stays_in_uprime(const MapParams& p, int k, Regime regime, int max_iter) {
    SectorAnnulus sector;
    try {
        sector = make_uprime(p, k, regime);
    } catch (const std::invalid_argument&) {
        return false;
    }
    Complex z = uprime_critical_point(p, k);
    for (int i = 0; i < max_iter; ++i) {
        z = eval_map(p, z);
        if (!contains(sector, z).inside) return false;
    }
    return true;
}

int count_components(const std::vector<ScanSample>& samples, int density) {
    std::vector<int> label(samples.size(), -1);
    std::vector<std::size_t> stack;
    int components = 0;
    auto in_locus = [&](std::size_t i) { return samples[i].member_window && samples[i].bounded_global; };
    for (std::size_t start = 0; start < samples.size(); ++start) {
        if (!in_locus(start) || label[start] >= 0) continue;
        label[start] = components;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            const int row = static_cast<int>(i) / density;
            const int col = static_cast<int>(i) % density;
            const int nbr[4][2] = {{row - 1, col}, {row + 1, col}, {row, col - 1}, {row, col + 1}};
            for (const auto& rc : nbr) {
                if (rc[0] < 0 || rc[0] >= density || rc[1] < 0 || rc[1] >= density) continue;
                const std::size_t j = static_cast<std::size_t>(rc[0]) * density + rc[1];
                if (in_locus(j) && label[j] < 0) {
                    label[j] = components;
                    stack.push_back(j);
                }
            }
        }
        ++components;
    }
    return components;
}

}  // namespace

ScanResult scan_boundedness_locus(const ParamWindow& window, int density, const IterationSettings& settings,
                                  int threads) {
    if (density < 16) throw std::invalid_argument("scan requires grid density >= 16 per axis");
    if (settings.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

    const double mod_pad = (window.mod_hi - window.mod_lo) / 8.0;
    const double arg_pad = (window.arg_hi - window.arg_lo) / 8.0;
    const double mod_lo = std::max(window.mod_lo - mod_pad, 0.0);
    const double mod_hi = window.mod_hi + mod_pad;
    const double arg_lo = window.arg_lo - arg_pad;
    const double arg_hi = window.arg_hi + arg_pad;

    ScanResult res;
    res.density = density;
    res.samples.resize(static_cast<std::size_t>(density) * density);
    const std::size_t d = density;
    parallel_for(d, threads < 1 ? worker_count() : threads, [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t row = row_begin; row < row_end; ++row) {
            const double theta = arg_lo + (arg_hi - arg_lo) * (row + 0.5) / density;
            for (std::size_t col = 0; col < d; ++col) {
                const double r = mod_lo + (mod_hi - mod_lo) * (col + 0.5) / density;
                const Complex lambda = window.lambda_from_tracked(std::polar(r, theta));
                ScanSample s{lambda, window.contains(lambda), false, false};
                if (lambda != Complex(0.0, 0.0) || window.kind == ParamWindow::Kind::CPlaneViaVPlus) {
                    const MapParams p = window.params_at(lambda);
                    s.bounded_global = iterate_orbit(p, critical_values(p).plus, settings.for_params(p)).bounded();
                    s.bounded_in_uprime = stays_in_uprime(p, window.k, window.regime, settings.max_iter);
                }
                res.samples[row * d + col] = s;
            }
        }
    });

    for (const ScanSample& s : res.samples)
        if (s.member_window && s.bounded_global) ++res.locus_size;
    res.nonempty = res.locus_size > 0;
    res.components = count_components(res.samples, density);

    if (window.kind == ParamWindow::Kind::CPlaneViaVPlus) {
        const MapParams probe = window.params_at(Complex(0.0, 0.0));
        const Complex center = uprime_critical_point(probe, window.k) - 2.0 * principal_sqrt(window.fixed);
        res.center = center;
        const MapParams at_center = window.params_at(center);
        const bool orbit_bounded =
            iterate_orbit(at_center, critical_values(at_center).plus, settings.for_params(at_center)).bounded();
        const Complex w = window.tracked(center);
        const double r = std::abs(w);
        const double theta = std::arg(w);
        const int col = static_cast<int>(std::floor((r - mod_lo) / (mod_hi - mod_lo) * density));
        double t = theta;
        const double mid = 0.5 * (arg_lo + arg_hi);
        t = mid + std::remainder(t - mid, 2.0 * std::numbers::pi);
        const int row = static_cast<int>(std::floor((t - arg_lo) / (arg_hi - arg_lo) * density));
        bool cell_bounded = false;
        if (row >= 0 && row < density && col >= 0 && col < density)
            cell_bounded = res.samples[static_cast<std::size_t>(row) * d + col].bounded_global;
        res.contains_center = window.contains(center) && orbit_bounded && cell_bounded;
    }
    return res;
}

}  // namespace mcm
