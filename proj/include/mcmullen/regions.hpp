#pragma once

// Sector-annuli (the polynomial-like domains), their image ellipses and
// half-ellipses, and the closed parameter windows whose boundaries drive the
// winding certificate.

#include <optional>
#include <string>
#include <vector>

#include "mcmullen/dynamics.hpp"

namespace mcm {

/// Standard: radii (|a|^{1/n}/2, 2), any a. Tight: radii ((4/5)a^{1/n}, 5/4), a > 0.
enum class Regime { Standard, Tight };

const char* to_string(Regime r) noexcept;

/// Membership verdict. margin > 0 inside, < 0 outside; |margin| is a lower
/// bound on the Euclidean distance to the boundary.
struct Membership {
    bool inside;
    double margin;
};

/// {r e^{i theta} : r_in < r < r_out, theta_lo < theta < theta_hi}, with the
/// angular interval understood modulo 2 pi.
struct SectorAnnulus {
    double r_in;
    double r_out;
    double theta_lo;
    double theta_hi;

    /// Throws std::invalid_argument unless 0 < r_in < r_out and the angular
    /// width lies in (0, pi].
    void validate() const;

    double theta_mid() const noexcept { return 0.5 * (theta_lo + theta_hi); }
    double half_width() const noexcept { return 0.5 * (theta_hi - theta_lo); }

    /// Distinct points walking the closed boundary counterclockwise, spaced
    /// evenly by arc length. Doubling m yields a superset.
    std::vector<Complex> boundary(int m) const;

    /// The four corners: inner-lo, outer-lo, outer-hi, inner-hi.
    std::vector<Complex> corners() const;
};

/// Ellipse centred at c, major axis along e^{i psi/2}, with foci v-/v+.
struct EllipseRegion {
    Complex center;
    double rotation;
    double semi_major;
    double semi_minor;
    Complex focus_minus;
    Complex focus_plus;

    Complex major_direction() const noexcept { return std::polar(1.0, rotation); }
    double focal_distance() const noexcept;
};

/// The open half of an ellipse on the focus_plus side of the minor axis.
struct HalfEllipse {
    EllipseRegion ellipse;

    /// Signed distance from the minor-axis line, positive on the kept side.
    double axis_offset(Complex z) const noexcept;
};

/// U'_k. Standard: theta in ((psi + 4 pi k - pi)/(2n), (psi + 4 pi k + pi)/(2n)).
/// Tight: k = 0 only meaningful, a must be real positive.
/// Throws std::invalid_argument for k outside [0, n-1], a Tight request with
/// non-positive-real a, or a degenerate annulus (r_in >= r_out).
SectorAnnulus make_uprime(const MapParams& p, int k, Regime regime);

/// The critical point at the angular midpoint of U'_k: |a|^{1/2n} e^{i(psi + 4 pi k)/(2n)}.
Complex uprime_critical_point(const MapParams& p, int k);

/// Outer radius of the regime's sector-annulus.
double regime_outer_radius(Regime regime) noexcept;

/// Image ellipse of the circle |z| = r_out. Throws std::invalid_argument when
/// |a| >= r_out^{2n} (degenerate).
EllipseRegion image_ellipse(const MapParams& p, double r_out);

/// The half-ellipse R(U') for the regime's outer radius.
HalfEllipse image_half_ellipse(const MapParams& p, Regime regime);

Membership contains(const SectorAnnulus& s, Complex z) noexcept;
Membership contains(const EllipseRegion& e, Complex z) noexcept;
Membership contains(const HalfEllipse& h, Complex z) noexcept;

/// A closed parameter window, always an annular sector in the coordinates of
/// the tracked quantity: a itself (a-plane) or v+ = c + 2 sqrt(a) (c-plane).
struct ParamWindow {
    enum class Kind { APlaneDirect, CPlaneViaVPlus };

    Kind kind;
    int n;
    /// The fixed parameter: c for APlaneDirect, a for CPlaneViaVPlus.
    Complex fixed;
    /// Closed bounds on the tracked quantity.
    double mod_lo;
    double mod_hi;
    double arg_lo;
    double arg_hi;
    /// U' family whose critical point the window is designed to wind around.
    int k = 0;
    Regime regime = Regime::Standard;
    /// Set when the inner bound was clamped away from the puncture a = 0.
    bool touches_puncture = false;
    std::string label;

    /// Map parameters at window coordinate lambda (a or c).
    MapParams params_at(Complex lambda) const;
    /// Tracked quantity (a or v+) as a function of lambda.
    Complex tracked(Complex lambda) const;
    /// Inverse of tracked().
    Complex lambda_from_tracked(Complex w) const;
    /// Closed membership of lambda.
    bool contains(Complex lambda, double tol = 1e-12) const;

    std::string describe() const;
};

inline constexpr double kMinPunctureModulus = 1e-8;

/// W_{n,c}: c^2/4 <= |a| <= (1 - c/2)^2, |Arg a| <= pi/(n-1).
/// Requires n >= 3 and -1 <= c <= 0.
ParamWindow make_aplane_window(int n, double c);

/// W_{n,a,k}: a^{1/n}/2 <= |v+| <= 2, Arg(v+) in [(4 pi k - pi)/(2n), (4 pi k + pi)/(2n)].
/// Requires 1 <= a <= 4 and 0 <= k < n.
ParamWindow make_cplane_window(int n, double a, int k);

/// Upper bound (2^{n+1} - 8)^2 / 16 on a under which U'_k stays inside U for
/// c in W_{n,a,k}. Looser than 4 for n >= 3; windows still enforce a <= 4.
double cplane_containment_a_bound(int n);

/// The small-a window: (4/5)a^{1/n} <= |v+| <= 5/4, |Arg v+| <= pi/(2n).
/// Requires 0.1 <= a <= 1.
ParamWindow make_tight_window(int n, double a);

/// A c-plane window whose v+ traces an arbitrary closed sector. Used for
/// controls; `k`/`regime` name the U' family it is measured against.
ParamWindow make_custom_cplane_window(int n, double a, const SectorAnnulus& target, int k,
                                      Regime regime);

/// m window parameters tracing the boundary once counterclockwise, first
/// point not repeated. Requires m >= 8.
std::vector<Complex> sample_boundary(const ParamWindow& w, int m);

}  // namespace mcm
