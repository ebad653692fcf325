#pragma once

// Evaluation and iteration of the generalized McMullen family
//
//     R_{n,a,c}(z) = z^n + a / z^n + c
//
// together with its critical data, the involution symmetry and the
// escape-time classifier shared by every other module.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mcm {

using Complex = std::complex<double>;

/// Raised when the map is evaluated at its pole z = 0.
class PoleError : public std::domain_error {
public:
    PoleError() : std::domain_error("McMullen map evaluated at its pole z = 0") {}
};

/// One member (n, a, c) of the family. Immutable once constructed.
class MapParams {
public:
    /// Throws std::invalid_argument unless n >= 2, a != 0 and a, c finite.
    MapParams(int n, Complex a, Complex c);

    int n() const noexcept { return n_; }
    Complex a() const noexcept { return a_; }
    Complex c() const noexcept { return c_; }
    /// Principal argument of a, in (-pi, pi].
    double psi() const noexcept { return psi_; }

    MapParams with_c(Complex c) const { return {n_, a_, c}; }
    MapParams with_a(Complex a) const { return {n_, a, c_}; }

private:
    int n_;
    Complex a_;
    Complex c_;
    double psi_;
};

struct EscapeSettings {
    double escape_radius = 2.0;
    int max_iter = 256;

    /// Throws std::invalid_argument unless escape_radius > 1 and max_iter >= 1.
    void validate() const;
};

inline constexpr int kRenderMaxIter = 256;
inline constexpr int kCertifyMaxIter = 1024;

struct OrbitOutcome {
    enum class Status : std::uint8_t { Escaped, Bounded };

    Status status = Status::Bounded;
    /// Escape step k >= 1 when escaped; steps run (= max_iter) when bounded.
    int steps = 0;
    /// |z_k| at escape; |final_point| when bounded.
    double modulus = 0.0;
    Complex final_point{};

    bool escaped() const noexcept { return status == Status::Escaped; }
    bool bounded() const noexcept { return status == Status::Bounded; }

    static OrbitOutcome escaped_at(int step, double modulus, Complex at) {
        return {Status::Escaped, step, modulus, at};
    }
    static OrbitOutcome bounded_after(int steps, Complex at) {
        return {Status::Bounded, steps, std::abs(at), at};
    }

    friend bool operator==(const OrbitOutcome&, const OrbitOutcome&) = default;
};

/// z^n for integer n >= 0. Binary exponentiation on Cartesian components for
/// n <= 64; std::pow beyond that.
Complex ipow(Complex z, int n) noexcept;

/// z^n + a/z^n + c. Throws PoleError at z = 0.
Complex eval_map(const MapParams& p, Complex z);

/// The 2n solutions of z^{2n} = a, ordered by increasing argument starting
/// from psi/(2n). Index 2k is the critical point centred in U'_k and maps to
/// v+; odd indices map to v-.
std::vector<Complex> critical_points(const MapParams& p);

/// Principal square root with the tie rule Re = 0 => Im >= 0.
Complex principal_sqrt(Complex a) noexcept;

/// Principal n-th root |a|^{1/n} e^{i Arg(a)/n}.
Complex principal_root(Complex a, int n) noexcept;

struct CriticalValues {
    Complex minus;
    Complex plus;
};

/// v- = c - 2 sqrt(a), v+ = c + 2 sqrt(a).
CriticalValues critical_values(const MapParams& p) noexcept;

/// h(z) = a^{1/n} / z. R(h(z)) = R(z) and h(h(z)) = z. Throws PoleError at 0.
Complex involution(const MapParams& p, Complex z);

/// Smallest rho in {1.25, 2} with rho^n > 3 max(1, |a|, |c|); otherwise
/// (3 max(1, |a|, |c|))^{1/n} * 1.05.
double default_escape_radius(const MapParams& p) noexcept;

/// Iterates the map from z0. The first k >= 1 with |z_k| > escape_radius is
/// reported as Escaped(k, |z_k|). Hitting the pole, overflow past 1e150 or a
/// non-finite value counts as escape at that step, reported with modulus
/// escape_radius * 10.
OrbitOutcome iterate_orbit(const MapParams& p, Complex z0, const EscapeSettings& settings);

/// Escape-time classification of the orbit of 0 under z^2 + c.
OrbitOutcome mandelbrot_classify(Complex c, const EscapeSettings& settings);

}  // namespace mcm
