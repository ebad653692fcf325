#include "mcmullen/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

namespace mcm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string describe(const MapParams& p) {
    std::ostringstream os;
    os.precision(10);
    os << "n=" << p.n() << " a=" << p.a().real();
    if (p.a().imag() != 0.0) os << (p.a().imag() < 0 ? "" : "+") << p.a().imag() << "i";
    os << " c=" << p.c().real();
    if (p.c().imag() != 0.0) os << (p.c().imag() < 0 ? "" : "+") << p.c().imag() << "i";
    return os.str();
}

bool within(double x, double lo, double hi) noexcept {
    const double slack = kRegimeTolerance * std::max({1.0, std::abs(lo), std::abs(hi)});
    return x >= lo - slack && x <= hi + slack;
}

bool is_real(Complex z) noexcept { return z.imag() == 0.0; }

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Complex random_in_annulus(std::mt19937_64& rng, double r_lo, double r_hi) {
    const double u = uniform01(rng);
    const double r = std::sqrt(r_lo * r_lo + u * (r_hi * r_hi - r_lo * r_lo));
    return std::polar(r, 2.0 * kPi * uniform01(rng));
}

CertificateReport failed(std::string name, std::string subject, std::string note) {
    CertificateReport r;
    r.check_name = std::move(name);
    r.subject = std::move(subject);
    r.verdict = Verdict::Fail;
    r.margin = -kInf;
    r.note = std::move(note);
    return r;
}

// Closed-sector membership used for preimage acceptance and critical-point
// counting: a point on the boundary is accepted.
bool in_closed_sector(const SectorAnnulus& s, Complex z, double tol) {
    return contains(s, z).margin > -tol;
}

struct SubsetPass {
    double margin = kInf;
    double ellipse_margin = kInf;
    double axis_offset = kInf;
    Complex worst{};
    Complex worst_axis{};
};

SubsetPass subset_pass(const SectorAnnulus& sector, const HalfEllipse& half, int m) {
    SubsetPass out;
    for (Complex z : sector.boundary(m)) {
        const Membership mem = contains(half, z);
        if (mem.margin < out.margin) {
            out.margin = mem.margin;
            out.worst = z;
        }
        out.ellipse_margin = std::min(out.ellipse_margin, contains(half.ellipse, z).margin);
        const double offset = half.axis_offset(z);
        if (offset < out.axis_offset) {
            out.axis_offset = offset;
            out.worst_axis = z;
        }
    }
    return out;
}

struct Residual {
    Complex value;
    Complex derivative;
};

Residual newton_residual(const MapParams& p, Complex z, Complex w) {
    const Complex zn = ipow(z, p.n());
    const Complex q = p.a() / zn;
    return {zn + q + p.c() - w, static_cast<double>(p.n()) * (zn - q) / z};
}

std::optional<Complex> damped_newton(const MapParams& p, Complex seed, Complex w, int& iterations) {
    const double scale = 1.0 + std::abs(w);
    Complex z = seed;
    Residual res = newton_residual(p, z, w);
    for (int it = 0; it < 200; ++it) {
        ++iterations;
        if (std::abs(res.value) <= 1e-13 * scale) return z;
        if (std::abs(res.derivative) == 0.0 || !std::isfinite(std::abs(res.derivative))) return std::nullopt;
        const Complex step = res.value / res.derivative;
        double lambda = 1.0;
        Complex next = z - step;
        Residual next_res{};
        for (;;) {
            if (next != Complex(0.0, 0.0)) {
                next_res = newton_residual(p, next, w);
                if (std::abs(next_res.value) < std::abs(res.value)) break;
            }
            lambda *= 0.5;
            if (lambda < 1e-6) break;
            next = z - lambda * step;
        }
        if (lambda < 1e-6) {
            // Stalled: accept if the residual is already at rounding level.
            return std::abs(res.value) <= 1e-10 * scale ? std::optional<Complex>(z) : std::nullopt;
        }
        const bool tiny_step = std::abs(lambda * step) <= 1e-16 * std::abs(z);
        z = next;
        res = next_res;
        if (tiny_step) return std::abs(res.value) <= 1e-10 * scale ? std::optional<Complex>(z) : std::nullopt;
    }
    return std::abs(res.value) <= 1e-10 * scale ? std::optional<Complex>(z) : std::nullopt;
}

// Preimages of w in U'_k counted independently of Newton: z^n solves
// zeta^2 - (w - c) zeta + a = 0, and each zeta contributes n roots.
int count_sector_preimages(const MapParams& p, const SectorAnnulus& sector, Complex w) {
    const Complex b = w - p.c();
    const Complex disc = std::sqrt(b * b - 4.0 * p.a());
    int count = 0;
    for (Complex zeta : {(b + disc) / 2.0, (b - disc) / 2.0}) {
        const double r = std::pow(std::abs(zeta), 1.0 / p.n());
        const double base = std::arg(zeta) / p.n();
        for (int j = 0; j < p.n(); ++j) {
            const Complex z = std::polar(r, base + 2.0 * kPi * j / p.n());
            if (contains(sector, z).inside) ++count;
        }
    }
    return count;
}

}  // namespace

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

const char* to_string(CertifiedRegime r) noexcept {
    switch (r) {
        case CertifiedRegime::APlane: return "a-plane";
        case CertifiedRegime::CPlane: return "c-plane";
        case CertifiedRegime::SmallA: return "small-a";
        case CertifiedRegime::None: return "none";
    }
    return "none";
}

std::optional<double> CertificateReport::metric(std::string_view name) const {
    for (const auto& [key, value] : metrics)
        if (key == name) return value;
    return std::nullopt;
}

void CertificateReport::set_metric(std::string name, double value) {
    for (auto& [key, v] : metrics)
        if (key == name) {
            v = value;
            return;
        }
    metrics.emplace_back(std::move(name), value);
}

namespace {

std::string fmt_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

void append_lines(const CertificateReport& r, int depth, std::string& out) {
    out.append(2 * depth, ' ');
    out += "CHECK name=" + r.check_name + " passed=" + (r.passed() ? "true" : "false") +
           " margin=" + fmt_number(r.margin) + " samples=" + std::to_string(r.samples_used) +
           " verdict=" + to_string(r.verdict) + " regime=" + r.regime;
    if (!r.subject.empty()) out += " subject=\"" + r.subject + "\"";
    if (!r.note.empty()) out += " note=\"" + r.note + "\"";
    out += '\n';
    for (const auto& child : r.children) append_lines(child, depth + 1, out);
}

nlohmann::json json_number(double x) {
    if (std::isfinite(x)) return x;
    return fmt_number(x);
}

nlohmann::json to_json_value(const CertificateReport& r) {
    nlohmann::json j;
    j["check_name"] = r.check_name;
    j["subject"] = r.subject;
    j["regime"] = r.regime;
    j["verdict"] = to_string(r.verdict);
    j["passed"] = r.passed();
    j["margin"] = json_number(r.margin);
    j["samples_used"] = r.samples_used;
    auto details = nlohmann::json::array();
    for (const auto& d : r.details)
        details.push_back({{"re", json_number(d.point.real())},
                           {"im", json_number(d.point.imag())},
                           {"slack", json_number(d.slack)},
                           {"note", d.note}});
    j["details"] = std::move(details);
    auto metrics = nlohmann::json::object();
    for (const auto& [key, value] : r.metrics) metrics[key] = json_number(value);
    j["metrics"] = std::move(metrics);
    if (!r.note.empty()) j["note"] = r.note;
    auto children = nlohmann::json::array();
    for (const auto& c : r.children) children.push_back(to_json_value(c));
    j["children"] = std::move(children);
    return j;
}

}  // namespace

std::string CertificateReport::to_lines() const {
    std::string out;
    append_lines(*this, 0, out);
    return out;
}

std::string CertificateReport::to_json(int indent) const { return to_json_value(*this).dump(indent); }

CertifiedRegime classify_regime(const MapParams& p) noexcept {
    const int n = p.n();
    const Complex a = p.a();
    const Complex c = p.c();
    const double abs_a = std::abs(a);
    if (n >= 3 && is_real(c) && within(c.real(), -1.0, 1.0)) {
        const double cr = c.real();
        if (within(abs_a, cr * cr / 4.0, (1.0 - cr / 2.0) * (1.0 - cr / 2.0))) return CertifiedRegime::APlane;
    }
    if (is_real(a)) {
        const double vplus = std::abs(critical_values(p).plus);
        if (n >= 5 && within(a.real(), 1.0, 4.0) && within(vplus, 0.0, 2.0)) return CertifiedRegime::CPlane;
        if (n >= 11 && within(a.real(), 0.1, 1.0) && within(std::abs(c), 0.0, 3.25)) return CertifiedRegime::SmallA;
    }
    return CertifiedRegime::None;
}

CertificateReport certify_escape_bounds(const MapParams& p, const EscapeSettings& settings, int m) {
    if (m < 100) throw std::invalid_argument("escape certificate requires m >= 100 shell samples");
    settings.validate();
    CertificateReport rep;
    rep.check_name = "escape_bounds";
    rep.subject = describe(p);
    rep.regime = to_string(classify_regime(p));
    if (rep.regime == std::string("none")) rep.note = "regime: none (empirical run)";

    const double rho = settings.escape_radius;
    const double outer = rho * (1.0 + 1e-4);
    const double inner = std::pow(std::abs(p.a()), 1.0 / p.n()) / outer;
    double outer_min = kInf;
    double inner_min = kInf;
    Complex outer_worst{};
    Complex inner_worst{};
    int escape_fallbacks = 0;
    for (int j = 0; j < m; ++j) {
        const double theta = 2.0 * kPi * (j + 0.5) / m;
        const Complex z = std::polar(outer, theta);
        const double grow = std::abs(eval_map(p, z)) - outer;
        if (grow <= 0.0 && iterate_orbit(p, z, settings).escaped()) ++escape_fallbacks;
        if (grow < outer_min) {
            outer_min = grow;
            outer_worst = z;
        }
        const Complex zi = std::polar(inner, theta);
        const double lands = std::abs(eval_map(p, zi)) - rho;
        if (lands < inner_min) {
            inner_min = lands;
            inner_worst = zi;
        }
    }
    rep.samples_used = 2LL * m;
    rep.margin = std::min(outer_min, inner_min);
    rep.details = {{outer_worst, outer_min, "outer shell: |R(z)| - |z|"},
                   {inner_worst, inner_min, "inner shell: |R(z)| - escape_radius"}};
    rep.set_metric("escape_radius", rho);
    rep.set_metric("outer_shell_radius", outer);
    rep.set_metric("inner_shell_radius", inner);
    rep.set_metric("outer_margin", outer_min);
    rep.set_metric("inner_margin", inner_min);
    rep.set_metric("escape_fallback_samples", escape_fallbacks);
    rep.verdict = rep.margin > 0.0 ? Verdict::Pass : Verdict::Fail;
    return rep;
}

CertificateReport certify_uprime_subset_u(const MapParams& p, int k, Regime regime, int m, double delta) {
    if (m < 8) throw std::invalid_argument("boundary sampling requires m >= 8");
    SectorAnnulus sector;
    HalfEllipse half;
    try {
        sector = make_uprime(p, k, regime);
        half = image_half_ellipse(p, regime);
    } catch (const std::invalid_argument& e) {
        return failed("uprime_subset_u", describe(p), e.what());
    }
    CertificateReport rep;
    rep.check_name = "uprime_subset_u";
    rep.subject = describe(p) + " k=" + std::to_string(k);
    rep.regime = to_string(regime);

    int samples = m;
    SubsetPass pass = subset_pass(sector, half, samples);
    rep.samples_used = samples;
    for (int refine = 0; refine < 4; ++refine) {
        samples *= 2;
        const SubsetPass finer = subset_pass(sector, half, samples);
        rep.samples_used += samples;
        const bool stable = std::abs(finer.margin - pass.margin) <= 0.01 * std::abs(pass.margin);
        pass = finer;
        if (stable) break;
    }
    rep.margin = pass.margin;
    rep.details = {{pass.worst, pass.margin, "tightest boundary sample of U' in U"},
                   {pass.worst_axis, pass.axis_offset, "nearest sample to the minor axis"}};
    rep.set_metric("minor_axis_offset", pass.axis_offset);
    rep.set_metric("ellipse_margin", pass.ellipse_margin);
    rep.set_metric("final_density", samples);
    rep.set_metric("delta", delta);
    rep.verdict = (rep.margin > 0.0 && rep.margin >= delta) ? Verdict::Pass : Verdict::Fail;
    return rep;
}

SectorPreimages sector_preimages(const MapParams& p, int k, Regime regime, Complex w) {
    const SectorAnnulus sector = make_uprime(p, k, regime);
    const Complex crit = uprime_critical_point(p, k);
    const Complex crit_sq = crit * crit;

    struct Seed {
        double residual;
        Complex z;
    };
    std::vector<Seed> seeds;
    constexpr int kRadial = 6;
    constexpr int kAngular = 6;
    const double log_in = std::log(sector.r_in);
    const double log_out = std::log(sector.r_out);
    for (int i = 0; i < kRadial; ++i)
        for (int j = 0; j < kAngular; ++j) {
            const double r = std::exp(log_in + (log_out - log_in) * (i + 0.5) / kRadial);
            const double t = sector.theta_lo + (sector.theta_hi - sector.theta_lo) * (j + 0.5) / kAngular;
            const Complex z = std::polar(r, t);
            seeds.push_back({std::abs(eval_map(p, z) - w), z});
        }
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const Seed& x, const Seed& y) { return x.residual < y.residual; });

    SectorPreimages out;
    const double tol = 1e-9 * sector.r_out;
    for (const Seed& s : seeds) {
        const auto root = damped_newton(p, s.z, w, out.newton_iterations);
        if (!root || !in_closed_sector(sector, *root, tol)) continue;
        out.converged = true;
        out.first = *root;
        out.partner = crit_sq / *root;
        return out;
    }
    return out;
}

CertificateReport certify_two_to_one(const MapParams& p, int k, Regime regime, int m) {
    if (m < 1) throw std::invalid_argument("two-to-one certificate requires m >= 1 targets");
    SectorAnnulus sector;
    HalfEllipse half;
    try {
        sector = make_uprime(p, k, regime);
        half = image_half_ellipse(p, regime);
    } catch (const std::invalid_argument& e) {
        return failed("two_to_one", describe(p), e.what());
    }
    CertificateReport rep;
    rep.check_name = "two_to_one";
    rep.subject = describe(p) + " k=" + std::to_string(k);
    rep.regime = to_string(regime);

    int crit_inside = 0;
    const std::vector<Complex> crits = critical_points(p);
    for (Complex z : crits)
        if (in_closed_sector(sector, z, 1e-12)) ++crit_inside;
    const Complex crit = uprime_critical_point(p, k);
    const bool crit_centered = contains(sector, crit).inside;
    rep.set_metric("critical_points_in_sector", crit_inside);

    const EllipseRegion& e = half.ellipse;
    const Complex dir = e.major_direction();
    const Complex vplus = e.focus_plus;
    // R2 low-discrepancy sequence over the half-ellipse's elliptic coordinates.
    constexpr double g = 1.32471795724474602596;
    const double alpha1 = 1.0 / g;
    const double alpha2 = 1.0 / (g * g);
    double margin = kInf;
    Complex worst{};
    int flagged = 0;
    int miscounted = 0;
    for (int j = 0; j < m; ++j) {
        const double u = std::fmod(0.5 + alpha1 * (j + 1), 1.0);
        const double v = std::fmod(0.5 + alpha2 * (j + 1), 1.0);
        const double rho = 0.05 + 0.9 * std::sqrt(u);
        const double phi = 0.95 * kPi * (v - 0.5);
        Complex w = e.center + dir * Complex(rho * e.semi_major * std::cos(phi), rho * e.semi_minor * std::sin(phi));
        if (std::abs(w - vplus) < 1e-6 * e.semi_major) w += 1e-3 * e.semi_minor * dir * Complex(0.0, 1.0);

        if (count_sector_preimages(p, sector, w) != 2) ++miscounted;
        const SectorPreimages pre = sector_preimages(p, k, regime, w);
        const double scale = 1e-9 * (1.0 + std::abs(w));
        const bool ok = pre.converged && std::abs(eval_map(p, pre.partner) - w) <= scale &&
                        std::abs(pre.first - pre.partner) > 1e-9 * sector.r_out &&
                        in_closed_sector(sector, pre.partner, 1e-9 * sector.r_out);
        if (!ok) {
            ++flagged;
            if (rep.details.size() < 8) rep.details.push_back({w, -1.0, "preimage pair not certified"});
            continue;
        }
        const double slack = std::min(contains(sector, pre.first).margin, contains(sector, pre.partner).margin);
        if (slack < margin) {
            margin = slack;
            worst = w;
        }
    }
    rep.samples_used = m;
    rep.margin = margin;
    rep.details.insert(rep.details.begin(), {worst, margin, "target whose preimages sit closest to the sector boundary"});
    rep.set_metric("flagged_targets", flagged);
    rep.set_metric("preimage_count_mismatches", miscounted);

    const double flagged_fraction = static_cast<double>(flagged) / m;
    const bool structure_ok = crit_inside == 1 && crit_centered && miscounted == 0;
    rep.verdict = (structure_ok && flagged_fraction <= 1e-3 && margin > 0.0) ? Verdict::Pass : Verdict::Fail;
    if (!structure_ok) rep.note = "sector does not hold exactly one critical point or preimage count != 2";
    return rep;
}

CertificateReport certify_winding(const ParamWindow& window, int m) {
    if (m < 1024) throw std::invalid_argument("winding certificate requires m >= 1024 boundary samples");
    CertificateReport rep;
    rep.check_name = "winding";
    rep.subject = window.describe();
    rep.regime = to_string(window.regime);

    const double touch = kTouchTolerance * regime_outer_radius(window.regime);
    constexpr int kMaxRefinements = 4;
    int samples = m;
    for (int attempt = 0; attempt <= kMaxRefinements; ++attempt, samples *= 2) {
        std::vector<Complex> lambdas = sample_boundary(window, samples);
        rep.samples_used += samples;

        double total = 0.0;
        double max_step = 0.0;
        double clearance = kInf;
        double intrusion = -kInf;
        double u_margin = kInf;
        Complex worst_intrusion{};
        Complex worst_u{};
        bool constructible = true;
        std::string why;
        Complex prev{};
        Complex first{};
        for (std::size_t i = 0; i <= lambdas.size(); ++i) {
            Complex diff;
            if (i < lambdas.size()) {
                const Complex lambda = lambdas[i];
                try {
                    const MapParams p = window.params_at(lambda);
                    const Complex vplus = critical_values(p).plus;
                    const SectorAnnulus sector = make_uprime(p, window.k, window.regime);
                    const HalfEllipse half = image_half_ellipse(p, window.regime);
                    const Membership in_sector = contains(sector, vplus);
                    if (in_sector.margin > intrusion) {
                        intrusion = in_sector.margin;
                        worst_intrusion = lambda;
                    }
                    const Membership in_u = contains(half, vplus);
                    if (in_u.margin < u_margin) {
                        u_margin = in_u.margin;
                        worst_u = lambda;
                    }
                    diff = vplus - uprime_critical_point(p, window.k);
                } catch (const std::invalid_argument& e) {
                    constructible = false;
                    why = e.what();
                    break;
                }
                clearance = std::min(clearance, std::abs(diff));
                if (i == 0) first = diff;
            } else {
                diff = first;
            }
            if (i > 0) {
                const double step = std::arg(diff / prev);
                max_step = std::max(max_step, std::abs(step));
                total += step;
            }
            prev = diff;
        }
        if (!constructible) {
            rep.verdict = Verdict::Fail;
            rep.margin = 0.0;
            rep.note = "U' or U not constructible on the window boundary: " + why;
            return rep;
        }

        const double turns = total / (2.0 * kPi);
        const double winding = std::round(turns) + 0.0;
        rep.metrics.clear();
        rep.set_metric("winding", winding);
        rep.set_metric("turns", turns);
        rep.set_metric("integrality_error", std::abs(turns - winding));
        rep.set_metric("max_step", max_step);
        rep.set_metric("clearance", clearance);
        rep.set_metric("uprime_intrusion", intrusion);
        rep.set_metric("u_margin", u_margin);
        rep.set_metric("final_density", samples);
        rep.details = {{worst_intrusion, intrusion, "deepest v+ position relative to U' (positive = inside)"},
                       {worst_u, u_margin, "tightest v+ membership in U"}};
        if (max_step >= kPi / 2.0) continue;

        rep.margin = winding;
        if (std::abs(turns - winding) > 1e-6) {
            rep.verdict = Verdict::Inconclusive;
            rep.note = "accumulated argument is not integral";
            return rep;
        }
        const bool outside_uprime = intrusion <= touch;
        const bool inside_u = u_margin > 0.0;
        rep.verdict = (winding == 1.0 && outside_uprime && inside_u) ? Verdict::Pass : Verdict::Fail;
        if (!outside_uprime) rep.note = "v+ enters the open U' on the window boundary";
        else if (!inside_u) rep.note = "v+ leaves U on the window boundary";
        else if (winding != 1.0) rep.note = "v+ does not loop once around U'";
        return rep;
    }
    rep.verdict = Verdict::Inconclusive;
    rep.margin = rep.metric("winding").value_or(0.0);
    rep.note = "argument step stayed >= pi/2 after refinement";
    return rep;
}

CertificateReport certify_polynomial_like(const MapParams& p, int k, Regime regime, int boundary_samples,
                                          int targets) {
    CertificateReport rep;
    rep.check_name = "polynomial_like";
    rep.subject = describe(p) + " k=" + std::to_string(k);
    rep.regime = to_string(regime);
    rep.set_metric("hypothesis_regime_match", classify_regime(p) != CertifiedRegime::None ? 1.0 : 0.0);

    SectorAnnulus sector;
    try {
        sector = make_uprime(p, k, regime);
        image_half_ellipse(p, regime);
    } catch (const std::invalid_argument& e) {
        rep.verdict = Verdict::Fail;
        rep.margin = -kInf;
        rep.note = std::string("construction failed: ") + e.what();
        return rep;
    }

    CertificateReport analytic;
    analytic.check_name = "pole_free_closure";
    analytic.subject = rep.subject;
    analytic.regime = rep.regime;
    analytic.margin = sector.r_in;
    analytic.samples_used = 1;
    analytic.verdict = sector.r_in > 0.0 ? Verdict::Pass : Verdict::Fail;

    rep.children.push_back(certify_uprime_subset_u(p, k, regime, boundary_samples));
    rep.children.push_back(certify_two_to_one(p, k, regime, targets));
    rep.children.push_back(std::move(analytic));

    rep.margin = kInf;
    bool all = true;
    for (const auto& child : rep.children) {
        rep.margin = std::min(rep.margin, child.margin);
        rep.samples_used += child.samples_used;
        all = all && child.passed();
    }
    rep.verdict = all ? Verdict::Pass : Verdict::Fail;
    return rep;
}

namespace {

struct IdentityCheck {
    double worst = 0.0;
    Complex worst_seed{};
    std::int64_t comparisons = 0;
};

template <typename Step>
void track_identity(IdentityCheck& acc, Complex seed, int m_iter, Step&& step) {
    Complex lhs{};
    Complex rhs{};
    step(0, lhs, rhs);
    for (int it = 1; it <= m_iter; ++it) {
        if (!step(it, lhs, rhs)) break;
        const double err = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
        ++acc.comparisons;
        if (err > acc.worst) {
            acc.worst = err;
            acc.worst_seed = seed;
        }
        if (std::abs(lhs) > 10.0 || std::abs(rhs) > 10.0) break;
    }
}

CertificateReport identity_report(std::string name, const std::string& subject, const IdentityCheck& acc) {
    CertificateReport r;
    r.check_name = std::move(name);
    r.subject = subject;
    r.margin = kSymmetryTolerance - acc.worst;
    r.samples_used = acc.comparisons;
    r.details = {{acc.worst_seed, acc.worst, "seed with the largest relative deviation"}};
    r.set_metric("max_relative_error", acc.worst);
    r.verdict = acc.worst < kSymmetryTolerance ? Verdict::Pass : Verdict::Fail;
    return r;
}

CertificateReport not_applicable(std::string name, const std::string& subject, std::string why) {
    CertificateReport r;
    r.check_name = std::move(name);
    r.subject = subject;
    r.verdict = Verdict::NotApplicable;
    r.note = std::move(why);
    return r;
}

// Iterates z under `p`, stopping at the pole.
bool advance(const MapParams& p, Complex& z) {
    if (z == Complex(0.0, 0.0)) return false;
    z = eval_map(p, z);
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

CertificateReport certify_symmetries(const MapParams& p, int m_iter, int samples, std::uint64_t seed) {
    if (m_iter < 1 || samples < 1) throw std::invalid_argument("symmetry certificate requires m_iter, samples >= 1");
    const std::string subject = describe(p);
    const bool odd = p.n() % 2 == 1;
    const bool real_a = is_real(p.a());
    const double r_lo = std::pow(std::abs(p.a()), 1.0 / p.n()) / 2.0;

    CertificateReport rep;
    rep.check_name = "symmetries";
    rep.subject = subject;
    rep.regime = to_string(classify_regime(p));

    std::mt19937_64 rng(seed);
    if (odd) {
        const MapParams neg = p.with_c(-p.c());
        IdentityCheck acc;
        for (int s = 0; s < samples; ++s) {
            const Complex z = random_in_annulus(rng, r_lo, 2.0);
            Complex zl = -z;
            Complex zr = z;
            track_identity(acc, z, m_iter, [&](int it, Complex& lhs, Complex& rhs) {
                if (it > 0 && !(advance(neg, zl) && advance(p, zr))) return false;
                lhs = zl;
                rhs = -zr;
                return true;
            });
        }
        rep.children.push_back(identity_report("sign_symmetry", subject, acc));
    } else {
        rep.children.push_back(not_applicable("sign_symmetry", subject, "not applicable (n even)"));
    }

    if (real_a) {
        const MapParams conj_p = p.with_c(std::conj(p.c()));
        IdentityCheck acc;
        for (int s = 0; s < samples; ++s) {
            const Complex z = random_in_annulus(rng, r_lo, 2.0);
            Complex zl = std::conj(z);
            Complex zr = z;
            track_identity(acc, z, m_iter, [&](int it, Complex& lhs, Complex& rhs) {
                if (it > 0 && !(advance(conj_p, zl) && advance(p, zr))) return false;
                lhs = std::conj(zl);
                rhs = zr;
                return true;
            });
        }
        rep.children.push_back(identity_report("conjugation_symmetry", subject, acc));
    } else {
        rep.children.push_back(not_applicable("conjugation_symmetry", subject, "not applicable (a not real)"));
    }

    if (odd) {
        IdentityCheck acc;
        for (int s = 0; s < samples; ++s) {
            // Seed 0 is the requested c; the rest perturb c inside a disk of radius 1/4.
            const Complex c = s == 0 ? p.c() : p.c() + random_in_annulus(rng, 0.0, 0.25);
            const MapParams here = p.with_c(c);
            const MapParams mirrored = p.with_c(-c);
            Complex zl = critical_values(mirrored).minus;
            Complex zr = critical_values(here).plus;
            track_identity(acc, c, m_iter, [&](int it, Complex& lhs, Complex& rhs) {
                if (it > 0 && !(advance(mirrored, zl) && advance(here, zr))) return false;
                lhs = zl;
                rhs = -zr;
                return true;
            });
        }
        rep.children.push_back(identity_report("critical_orbit_swap", subject, acc));
    } else {
        rep.children.push_back(not_applicable("critical_orbit_swap", subject, "not applicable (n even)"));
    }

    bool any_applicable = false;
    bool all = true;
    rep.margin = kInf;
    for (const auto& child : rep.children) {
        if (child.verdict == Verdict::NotApplicable) continue;
        any_applicable = true;
        all = all && child.passed();
        rep.margin = std::min(rep.margin, child.margin);
        rep.samples_used += child.samples_used;
    }
    if (!any_applicable) {
        rep.verdict = Verdict::NotApplicable;
        rep.margin = 0.0;
        rep.note = "no symmetry hypothesis holds (n even and a not real)";
    } else {
        rep.verdict = all ? Verdict::Pass : Verdict::Fail;
    }
    return rep;
}

}  // namespace mcm
