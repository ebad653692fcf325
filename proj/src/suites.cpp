#include "mcmullen/suites.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mcmullen/parallel.hpp"

namespace mcm {

CertificateReport aggregate(std::string name, std::string subject, std::vector<CertificateReport> children) {
    CertificateReport rep;
    rep.check_name = std::move(name);
    rep.subject = std::move(subject);
    rep.margin = std::numeric_limits<double>::infinity();
    bool any_fail = false;
    bool any_inconclusive = false;
    bool any_applicable = false;
    for (const auto& c : children) {
        if (c.verdict == Verdict::NotApplicable) continue;
        any_applicable = true;
        any_fail = any_fail || c.verdict == Verdict::Fail;
        any_inconclusive = any_inconclusive || c.verdict == Verdict::Inconclusive;
        rep.margin = std::min(rep.margin, c.margin);
        rep.samples_used += c.samples_used;
    }
    rep.verdict = !any_applicable ? Verdict::NotApplicable
                  : any_fail      ? Verdict::Fail
                  : any_inconclusive ? Verdict::Inconclusive
                                     : Verdict::Pass;
    if (!children.empty()) rep.regime = children.front().regime;
    rep.children = std::move(children);
    return rep;
}

CertificateReport certify_polynomial_like_on_boundary(const ParamWindow& window, const SuiteOptions& opts) {
    if (opts.boundary_params < 8) throw std::invalid_argument("boundary_params must be >= 8");
    const std::vector<Complex> lambdas = sample_boundary(window, opts.boundary_params);
    std::vector<CertificateReport> reports(lambdas.size());
    parallel_for(lambdas.size(), opts.threads < 1 ? worker_count() : opts.threads,
                 [&](std::size_t begin, std::size_t end) {
                     for (std::size_t i = begin; i < end; ++i) {
                         try {
                             reports[i] = certify_polynomial_like(window.params_at(lambdas[i]), window.k,
                                                                  window.regime, opts.boundary_samples, opts.targets);
                         } catch (const std::invalid_argument& e) {
                             reports[i].check_name = "polynomial_like";
                             reports[i].verdict = Verdict::Fail;
                             reports[i].margin = -std::numeric_limits<double>::infinity();
                             reports[i].note = e.what();
                         }
                     }
                 });

    CertificateReport rep;
    rep.check_name = "polynomial_like_boundary";
    rep.subject = window.describe();
    rep.regime = to_string(window.regime);
    rep.margin = std::numeric_limits<double>::infinity();
    int failures = 0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        rep.samples_used += reports[i].samples_used;
        if (reports[i].margin < rep.margin) {
            rep.margin = reports[i].margin;
            worst = i;
        }
        if (!reports[i].passed()) {
            ++failures;
            rep.children.push_back(reports[i]);
        }
    }
    rep.details = {{lambdas[worst], rep.margin, "window parameter with the smallest margin"}};
    rep.set_metric("boundary_params", static_cast<double>(lambdas.size()));
    rep.set_metric("failures", failures);
    rep.verdict = failures == 0 && rep.margin > 0.0 ? Verdict::Pass : Verdict::Fail;
    return rep;
}

CertificateReport certify_window(const ParamWindow& window, const SuiteOptions& opts) {
    std::vector<CertificateReport> children;
    children.push_back(certify_polynomial_like_on_boundary(window, opts));
    children.push_back(certify_winding(window, opts.winding_samples));
    CertificateReport rep = aggregate("window", window.describe(), std::move(children));
    // The winding child reports the winding number as its margin; keep the
    // parent's margin on the slack scale.
    rep.margin = rep.children.front().margin;
    return rep;
}

CertificateReport certify_aplane_config(int n, double c, const SuiteOptions& opts) {
    return certify_window(make_aplane_window(n, c), opts);
}

CertificateReport certify_cplane_config(int n, double a, int k, const SuiteOptions& opts) {
    return certify_window(make_cplane_window(n, a, k), opts);
}

CertificateReport certify_tight_config(int n, double a, const SuiteOptions& opts) {
    return certify_window(make_tight_window(n, a), opts);
}

std::vector<MapParams> escape_regime_grid(CertifiedRegime regime, int n) {
    std::vector<MapParams> grid;
    const double pi = std::numbers::pi;
    switch (regime) {
        case CertifiedRegime::APlane: {
            if (n < 3) throw std::invalid_argument("a-plane escape regime requires n >= 3");
            for (double c : {-1.0, -0.5, 0.5}) {
                const double lo = c * c / 4.0;
                const double hi = (1.0 - c / 2.0) * (1.0 - c / 2.0);
                const double mods[3] = {lo, 0.5 * (lo + hi), hi};
                const double args[3] = {0.0, pi / 3.0, -2.0 * pi / 3.0};
                for (int i = 0; i < 3; ++i) grid.emplace_back(n, std::polar(mods[i], args[i]), c);
            }
            break;
        }
        case CertifiedRegime::CPlane: {
            if (n < 5) throw std::invalid_argument("c-plane escape regime requires n >= 5");
            for (double a : {1.0, 2.5, 4.0})
                for (Complex v : {Complex(0.0, 0.0), std::polar(1.0, pi / 4.0), Complex(-2.0, 0.0)})
                    grid.emplace_back(n, a, v - 2.0 * std::sqrt(a));
            break;
        }
        case CertifiedRegime::SmallA: {
            if (n < 11) throw std::invalid_argument("small-a escape regime requires n >= 11");
            for (double a : {0.1, 0.5, 1.0})
                for (Complex v : {Complex(0.0, 0.0), std::polar(0.6, pi / 2.0), Complex(-1.25, 0.0)})
                    grid.emplace_back(n, a, v - 2.0 * std::sqrt(a));
            break;
        }
        case CertifiedRegime::None:
            throw std::invalid_argument("no escape grid for regime 'none'");
    }
    return grid;
}

CertificateReport certify_escape_regime(CertifiedRegime regime, int n, int shell_samples, int threads) {
    const std::vector<MapParams> grid = escape_regime_grid(regime, n);
    std::vector<CertificateReport> reports(grid.size());
    parallel_for(grid.size(), threads < 1 ? worker_count() : threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            reports[i] = certify_escape_bounds(grid[i], {default_escape_radius(grid[i]), kCertifyMaxIter},
                                               shell_samples);
    });
    std::ostringstream subject;
    subject << to_string(regime) << " n=" << n;
    CertificateReport rep = aggregate("escape_regime", subject.str(), std::move(reports));
    rep.regime = to_string(regime);
    return rep;
}

}  // namespace mcm
