#pragma once

// Sampled certificates for the geometric hypotheses behind the baby-Mandelbrot
// existence results: escape radii, U' relatively compact in U, the 2-to-1
// structure, the critical-value winding loop, and the orbit symmetries.
//
// Certificates are empirical. Every report carries the minimum slack observed
// and the number of samples behind it; failures are reports, not exceptions,
// so sweeps over parameter grids are total.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcmullen/dynamics.hpp"
#include "mcmullen/regions.hpp"

namespace mcm {

enum class Verdict { Pass, Fail, Inconclusive, NotApplicable };

const char* to_string(Verdict v) noexcept;

struct WorstSample {
    Complex point;
    double slack;
    std::string note;
};

struct CertificateReport {
    std::string check_name;
    std::string subject;
    std::string regime = "none";
    Verdict verdict = Verdict::Fail;
    /// Minimum slack observed; positive means pass with room. Winding checks
    /// store the winding number here instead.
    double margin = 0.0;
    std::int64_t samples_used = 0;
    std::vector<WorstSample> details;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<CertificateReport> children;
    std::string note;

    bool passed() const noexcept { return verdict == Verdict::Pass; }
    std::optional<double> metric(std::string_view name) const;
    void set_metric(std::string name, double value);

    /// `CHECK name=... passed=... margin=... samples=...`, children indented.
    std::string to_lines() const;
    std::string to_json(int indent = 2) const;
};

/// Parameter sets under which an escape radius is proven.
enum class CertifiedRegime {
    APlane,  ///< n >= 3, real |c| <= 1, c^2/4 <= |a| <= (1 - c/2)^2
    CPlane,  ///< n >= 5, real 1 <= a <= 4, |v+| <= 2
    SmallA,  ///< n >= 11, real 0.1 <= a <= 1, |c| <= 3.25
    None
};

const char* to_string(CertifiedRegime r) noexcept;

CertifiedRegime classify_regime(const MapParams& p) noexcept;

/// Relative slack used when testing closed regime bounds on grid values.
inline constexpr double kRegimeTolerance = 1e-12;

/// v+ counts as outside the open U' while its inward margin is at most this
/// multiple of r_out.
inline constexpr double kTouchTolerance = 1e-7;

/// Samples m points just outside |z| = escape_radius and m points on the
/// involution image of that shell. Outer samples need |R(z)| > |z|, inner
/// samples |R(z)| > escape_radius. Requires m >= 100.
CertificateReport certify_escape_bounds(const MapParams& p, const EscapeSettings& settings, int m);

/// Every sample of the boundary of U'_k must lie in the half-ellipse U with
/// margin >= delta. The sampling doubles from m until the margin moves by
/// less than 1%. Also reports the signed distance from the minor axis to the
/// nearest sample (metric "minor_axis_offset").
CertificateReport certify_uprime_subset_u(const MapParams& p, int k, Regime regime, int m, double delta = 0.0);

/// Both preimages of a point of U inside U'_k.
struct SectorPreimages {
    bool converged = false;
    Complex first;
    Complex partner;
    int newton_iterations = 0;
};

/// Damped Newton on z^n + a z^{-n} + c - w from a grid of seeds inside U'_k;
/// the partner preimage is p^2/z with p the critical point of U'_k.
SectorPreimages sector_preimages(const MapParams& p, int k, Regime regime, Complex w);

/// m targets w spread through U; each must have two distinct preimages in
/// U'_k related by the involution, and U'_k must hold exactly one critical
/// point. Fails when more than 0.1% of targets do not converge.
CertificateReport certify_two_to_one(const MapParams& p, int k, Regime regime, int m);

/// Winding number of v+(lambda) - z0(lambda) as lambda walks the window
/// boundary, z0 the critical point of U'_k. Also requires v+ in U and v+
/// outside the open U' at every sample. Requires m >= 1024.
CertificateReport certify_winding(const ParamWindow& window, int m);

/// U'_k constructible without the pole, U'_k subset of U, 2-to-1, unique
/// critical point.
CertificateReport certify_polynomial_like(const MapParams& p, int k, Regime regime, int boundary_samples = 4096,
                                          int targets = 256);

/// Randomized identity checks: odd-n sign symmetry, conjugation symmetry for
/// real a, and the odd-n critical-orbit swap, each to 1e-9 relative.
CertificateReport certify_symmetries(const MapParams& p, int m_iter, int samples, std::uint64_t seed = 0x5eed);

inline constexpr double kSymmetryTolerance = 1e-9;

}  // namespace mcm
