#include "mcmullen/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mcm {

namespace {

constexpr double kOverflowGuard = 1e150;

// Componentwise products keep (-z)^n = -(z^n) and conj(z)^n = conj(z^n)
// bit-exact, which the symmetry checks rely on.
struct Cart {
    double re;
    double im;
};

inline Cart mul(Cart x, Cart y) noexcept {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

inline Cart cart_pow(Cart z, int n) noexcept {
    Cart result{1.0, 0.0};
    Cart base = z;
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            result = first ? base : mul(result, base);
            first = false;
        }
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return result;
}

// a / w without the NaN-recovery branches of the library operator.
inline Cart cart_div(Cart a, Cart w) noexcept {
    const double d = w.re * w.re + w.im * w.im;
    return {(a.re * w.re + a.im * w.im) / d, (a.im * w.re - a.re * w.im) / d};
}

inline Cart eval_unchecked(int n, Cart a, Cart c, Cart z) noexcept {
    const Cart zn = n <= 64 ? cart_pow(z, n) : [&] {
        const Complex p = std::pow(Complex(z.re, z.im), n);
        return Cart{p.real(), p.imag()};
    }();
    const Cart q = cart_div(a, zn);
    return {(zn.re + q.re) + c.re, (zn.im + q.im) + c.im};
}

inline double canonical_zero(double x) noexcept { return x + 0.0; }

inline Complex canonical(Complex z) noexcept {
    return {canonical_zero(z.real()), canonical_zero(z.imag())};
}

inline double principal_arg(Complex z) noexcept {
    const double t = std::arg(z);
    return t == -std::numbers::pi ? std::numbers::pi : t;
}

}  // namespace

MapParams::MapParams(int n, Complex a, Complex c) : n_(n), a_(canonical(a)), c_(canonical(c)) {
    if (n < 2) throw std::invalid_argument("degree n must be >= 2, got " + std::to_string(n));
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(c.real()) ||
        !std::isfinite(c.imag()))
        throw std::invalid_argument("parameters a and c must be finite");
    if (a_ == Complex(0.0, 0.0)) throw std::invalid_argument("a = 0 is the degenerate member of the family");
    psi_ = principal_arg(a_);
}

void EscapeSettings::validate() const {
    if (!(escape_radius > 1.0) || !std::isfinite(escape_radius))
        throw std::invalid_argument("escape radius must be a finite value > 1");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
}

Complex ipow(Complex z, int n) noexcept {
    if (n > 64) return std::pow(z, n);
    const Cart r = cart_pow({z.real(), z.imag()}, n);
    return {r.re, r.im};
}

Complex eval_map(const MapParams& p, Complex z) {
    if (z == Complex(0.0, 0.0)) throw PoleError();
    const Cart r = eval_unchecked(p.n(), {p.a().real(), p.a().imag()}, {p.c().real(), p.c().imag()},
                                  {z.real(), z.imag()});
    return {r.re, r.im};
}

std::vector<Complex> critical_points(const MapParams& p) {
    const int two_n = 2 * p.n();
    const double r = std::pow(std::abs(p.a()), 1.0 / two_n);
    std::vector<Complex> pts;
    pts.reserve(two_n);
    for (int j = 0; j < two_n; ++j)
        pts.push_back(std::polar(r, (p.psi() + 2.0 * std::numbers::pi * j) / two_n));
    return pts;
}

Complex principal_sqrt(Complex a) noexcept {
    Complex s = std::sqrt(canonical(a));
    if (s.real() == 0.0 && s.imag() < 0.0) s = -s;
    return canonical(s);
}

Complex principal_root(Complex a, int n) noexcept {
    a = canonical(a);
    return std::polar(std::pow(std::abs(a), 1.0 / n), principal_arg(a) / n);
}

CriticalValues critical_values(const MapParams& p) noexcept {
    const Complex two_sqrt_a = 2.0 * principal_sqrt(p.a());
    return {p.c() - two_sqrt_a, p.c() + two_sqrt_a};
}

Complex involution(const MapParams& p, Complex z) {
    if (z == Complex(0.0, 0.0)) throw PoleError();
    return principal_root(p.a(), p.n()) / z;
}

double default_escape_radius(const MapParams& p) noexcept {
    const double bound = 3.0 * std::max({1.0, std::abs(p.a()), std::abs(p.c())});
    for (double rho : {1.25, 2.0})
        if (std::pow(rho, p.n()) > bound) return rho;
    return std::pow(bound, 1.0 / p.n()) * 1.05;
}

OrbitOutcome iterate_orbit(const MapParams& p, Complex z0, const EscapeSettings& settings) {
    const double radius = settings.escape_radius;
    const double blown = radius * 10.0;
    const Cart a{p.a().real(), p.a().imag()};
    const Cart c{p.c().real(), p.c().imag()};
    Cart z{z0.real(), z0.imag()};
    for (int k = 1; k <= settings.max_iter; ++k) {
        if (z.re == 0.0 && z.im == 0.0) return OrbitOutcome::escaped_at(k, blown, {blown, 0.0});
        z = eval_unchecked(p.n(), a, c, z);
        if (!std::isfinite(z.re) || !std::isfinite(z.im))
            return OrbitOutcome::escaped_at(k, blown, {blown, 0.0});
        if (std::abs(z.re) > kOverflowGuard || std::abs(z.im) > kOverflowGuard) {
            const Complex at{z.re, z.im};
            return OrbitOutcome::escaped_at(k, std::abs(at), at);
        }
        const double modulus = std::sqrt(z.re * z.re + z.im * z.im);
        if (modulus > radius) return OrbitOutcome::escaped_at(k, modulus, {z.re, z.im});
    }
    return OrbitOutcome::bounded_after(settings.max_iter, {z.re, z.im});
}

OrbitOutcome mandelbrot_classify(Complex c, const EscapeSettings& settings) {
    const double radius = settings.escape_radius;
    double x = 0.0;
    double y = 0.0;
    for (int k = 1; k <= settings.max_iter; ++k) {
        const double nx = x * x - y * y + c.real();
        y = 2.0 * x * y + c.imag();
        x = nx;
        const double modulus = std::sqrt(x * x + y * y);
        if (modulus > radius) return OrbitOutcome::escaped_at(k, modulus, {x, y});
    }
    return OrbitOutcome::bounded_after(settings.max_iter, {x, y});
}

}  // namespace mcm
