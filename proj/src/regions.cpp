#include "mcmullen/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mcm {

namespace {

constexpr double kPi = std::numbers::pi;

double angle_from(double theta, double mid) noexcept { return std::remainder(theta - mid, 2.0 * kPi); }

std::string fmt_complex(Complex z) {
    std::ostringstream os;
    os.precision(6);
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

}  // namespace

const char* to_string(Regime r) noexcept { return r == Regime::Standard ? "standard" : "tight"; }

void SectorAnnulus::validate() const {
    if (!(r_in > 0.0) || !(r_in < r_out) || !std::isfinite(r_out))
        throw std::invalid_argument("sector-annulus requires 0 < r_in < r_out");
    const double width = theta_hi - theta_lo;
    if (!(width > 0.0) || width > kPi + 1e-12)
        throw std::invalid_argument("sector-annulus angular width must lie in (0, pi]");
}

std::vector<Complex> SectorAnnulus::boundary(int m) const {
    const double width = theta_hi - theta_lo;
    const double outer = r_out * width;
    const double ray = r_out - r_in;
    const double inner = r_in * width;
    const double perimeter = outer + ray + inner + ray;
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(std::max(m, 0)));
    for (int j = 0; j < m; ++j) {
        double s = perimeter * j / m;
        if (s < outer) {
            pts.push_back(std::polar(r_out, theta_lo + width * (s / outer)));
            continue;
        }
        s -= outer;
        if (s < ray) {
            pts.push_back(std::polar(r_out - s, theta_hi));
            continue;
        }
        s -= ray;
        if (s < inner) {
            pts.push_back(std::polar(r_in, theta_hi - width * (s / inner)));
            continue;
        }
        s -= inner;
        pts.push_back(std::polar(r_in + std::min(s, ray), theta_lo));
    }
    return pts;
}

std::vector<Complex> SectorAnnulus::corners() const {
    return {std::polar(r_in, theta_lo), std::polar(r_out, theta_lo), std::polar(r_out, theta_hi),
            std::polar(r_in, theta_hi)};
}

double EllipseRegion::focal_distance() const noexcept {
    return std::sqrt((semi_major - semi_minor) * (semi_major + semi_minor));
}

double HalfEllipse::axis_offset(Complex z) const noexcept {
    return ((z - ellipse.center) * std::conj(ellipse.major_direction())).real();
}

double regime_outer_radius(Regime regime) noexcept { return regime == Regime::Standard ? 2.0 : 1.25; }

SectorAnnulus make_uprime(const MapParams& p, int k, Regime regime) {
    const int n = p.n();
    if (k < 0 || k >= n)
        throw std::invalid_argument("U' index k must lie in [0, n-1], got " + std::to_string(k));
    if (regime == Regime::Tight && !(p.a().imag() == 0.0 && p.a().real() > 0.0))
        throw std::invalid_argument("tight regime requires real positive a");
    const double r_out = regime_outer_radius(regime);
    const double r_in = std::pow(std::abs(p.a()), 1.0 / n) / r_out;
    const double mid = (p.psi() + 4.0 * kPi * k) / (2.0 * n);
    const double half = kPi / (2.0 * n);
    SectorAnnulus s{r_in, r_out, mid - half, mid + half};
    if (!(r_in < r_out))
        throw std::invalid_argument("U' is empty: |a|^{1/n}/r_out >= r_out (|a| too large for this regime)");
    s.validate();
    return s;
}

Complex uprime_critical_point(const MapParams& p, int k) {
    const int n = p.n();
    return std::polar(std::pow(std::abs(p.a()), 1.0 / (2.0 * n)), (p.psi() + 4.0 * kPi * k) / (2.0 * n));
}

EllipseRegion image_ellipse(const MapParams& p, double r_out) {
    const double rn = std::pow(r_out, p.n());
    const double q = std::abs(p.a()) / rn;
    if (!(q < rn)) throw std::invalid_argument("degenerate image ellipse: |a| >= r_out^{2n}");
    const CriticalValues v = critical_values(p);
    return {p.c(), 0.5 * p.psi(), rn + q, rn - q, v.minus, v.plus};
}

HalfEllipse image_half_ellipse(const MapParams& p, Regime regime) {
    return {image_ellipse(p, regime_outer_radius(regime))};
}

Membership contains(const SectorAnnulus& s, Complex z) noexcept {
    const double r = std::abs(z);
    const double slack = s.half_width() - std::abs(angle_from(std::arg(z), s.theta_mid()));
    const bool inside = r > s.r_in && r < s.r_out && slack > 0.0;
    if (inside) return {true, std::min({r - s.r_in, s.r_out - r, r * std::sin(slack)})};
    double worst = std::max(s.r_in - r, r - s.r_out);
    if (slack < 0.0) worst = std::max(worst, r * std::sin(std::min(-slack, kPi / 2)));
    return {false, -std::max(worst, 0.0)};
}

Membership contains(const EllipseRegion& e, Complex z) noexcept {
    const double slack = 2.0 * e.semi_major - (std::abs(z - e.focus_minus) + std::abs(z - e.focus_plus));
    return {slack > 0.0, 0.5 * slack};
}

Membership contains(const HalfEllipse& h, Complex z) noexcept {
    const Membership in_ellipse = contains(h.ellipse, z);
    const double offset = h.axis_offset(z);
    if (in_ellipse.inside && offset > 0.0) return {true, std::min(in_ellipse.margin, offset)};
    return {false, -std::max({-in_ellipse.margin, -offset, 0.0})};
}

MapParams ParamWindow::params_at(Complex lambda) const {
    return kind == Kind::APlaneDirect ? MapParams(n, lambda, fixed) : MapParams(n, fixed, lambda);
}

Complex ParamWindow::tracked(Complex lambda) const {
    return kind == Kind::APlaneDirect ? lambda : lambda + 2.0 * principal_sqrt(fixed);
}

Complex ParamWindow::lambda_from_tracked(Complex w) const {
    return kind == Kind::APlaneDirect ? w : w - 2.0 * principal_sqrt(fixed);
}

bool ParamWindow::contains(Complex lambda, double tol) const {
    const Complex w = tracked(lambda);
    const double r = std::abs(w);
    if (r < mod_lo * (1.0 - tol) || r > mod_hi * (1.0 + tol)) return false;
    const double mid = 0.5 * (arg_lo + arg_hi);
    return std::abs(angle_from(std::arg(w), mid)) <= 0.5 * (arg_hi - arg_lo) + tol;
}

std::string ParamWindow::describe() const {
    std::ostringstream os;
    os << label << " n=" << n << (kind == Kind::APlaneDirect ? " c=" : " a=") << fmt_complex(fixed);
    if (kind == Kind::CPlaneViaVPlus) os << " k=" << k;
    os << " |" << (kind == Kind::APlaneDirect ? "a" : "v+") << "| in [" << mod_lo << ", " << mod_hi
       << "] arg in [" << arg_lo << ", " << arg_hi << "]";
    if (touches_puncture) os << " (inner bound clamped at puncture)";
    return os.str();
}

ParamWindow make_aplane_window(int n, double c) {
    if (n < 3) throw std::invalid_argument("a-plane window requires n >= 3");
    if (!(c >= -1.0 && c <= 0.0)) throw std::invalid_argument("a-plane window requires -1 <= c <= 0");
    ParamWindow w{ParamWindow::Kind::APlaneDirect, n, Complex(c, 0.0), c * c / 4.0,
                  (1.0 - c / 2.0) * (1.0 - c / 2.0), -kPi / (n - 1), kPi / (n - 1), 0, Regime::Standard,
                  false, "W_{n,c}"};
    if (w.mod_lo < kMinPunctureModulus) {
        w.mod_lo = kMinPunctureModulus;
        w.touches_puncture = true;
    }
    return w;
}

double cplane_containment_a_bound(int n) {
    if (n < 2) throw std::invalid_argument("containment bound requires n >= 2");
    const double t = std::ldexp(1.0, n + 1) - 8.0;
    return t * t / 16.0;
}

ParamWindow make_cplane_window(int n, double a, int k) {
    if (n < 2) throw std::invalid_argument("c-plane window requires n >= 2");
    if (!(a >= 1.0 && a <= 4.0)) throw std::invalid_argument("c-plane window requires 1 <= a <= 4");
    if (k < 0 || k >= n) throw std::invalid_argument("c-plane window requires 0 <= k <= n-1");
    ParamWindow w{ParamWindow::Kind::CPlaneViaVPlus,
                  n,
                  Complex(a, 0.0),
                  std::pow(a, 1.0 / n) / 2.0,
                  2.0,
                  (4.0 * kPi * k - kPi) / (2.0 * n),
                  (4.0 * kPi * k + kPi) / (2.0 * n),
                  k,
                  Regime::Standard,
                  false,
                  "W_{n,a,k}"};
    if (!(w.mod_lo < w.mod_hi)) throw std::invalid_argument("empty window: inner bound exceeds outer bound");
    return w;
}

ParamWindow make_tight_window(int n, double a) {
    if (n < 2) throw std::invalid_argument("small-a window requires n >= 2");
    if (!(a >= 0.1 && a <= 1.0)) throw std::invalid_argument("small-a window requires 0.1 <= a <= 1");
    ParamWindow w{ParamWindow::Kind::CPlaneViaVPlus,
                  n,
                  Complex(a, 0.0),
                  0.8 * std::pow(a, 1.0 / n),
                  1.25,
                  -kPi / (2.0 * n),
                  kPi / (2.0 * n),
                  0,
                  Regime::Tight,
                  false,
                  "W~_{n,a}"};
    if (!(w.mod_lo < w.mod_hi)) throw std::invalid_argument("empty window: inner bound exceeds outer bound");
    return w;
}

ParamWindow make_custom_cplane_window(int n, double a, const SectorAnnulus& target, int k, Regime regime) {
    target.validate();
    if (!(a > 0.0)) throw std::invalid_argument("custom c-plane window requires a > 0");
    ParamWindow w{ParamWindow::Kind::CPlaneViaVPlus,
                  n,
                  Complex(a, 0.0),
                  target.r_in,
                  target.r_out,
                  target.theta_lo,
                  target.theta_hi,
                  k,
                  regime,
                  false,
                  "custom"};
    return w;
}

std::vector<Complex> sample_boundary(const ParamWindow& w, int m) {
    if (m < 8) throw std::invalid_argument("boundary sampling requires m >= 8");
    const SectorAnnulus shape{w.mod_lo, w.mod_hi, w.arg_lo, w.arg_hi};
    shape.validate();
    std::vector<Complex> pts = shape.boundary(m);
    for (Complex& z : pts) z = w.lambda_from_tracked(z);
    return pts;
}

}  // namespace mcm
