#pragma once

// Closed-form landmarks of the small-a regime and grid scans of the
// boundedness locus inside parameter windows.

#include <optional>
#include <string>
#include <vector>

#include "mcmullen/dynamics.hpp"
#include "mcmullen/regions.hpp"
#include "mcmullen/render.hpp"

namespace mcm {

enum class CenterSide { Plus, Minus };

/// c+ = a^{1/2n} - 2 sqrt(a), c- = -c+. At c+ the critical point a^{1/2n}
/// is fixed (and for odd n, -a^{1/2n} is fixed at c-). The fixed point is
/// re-checked to 1e-12 and std::runtime_error thrown if it fails.
/// Requires a > 0.
double baby_center(int n, double a, CenterSide which);

struct CenterPair {
    int n;
    double a;
    double c_plus;
    double c_minus;
    /// |R(p) - p| at c+ for p = a^{1/2n}.
    double fixed_point_residual;
};

CenterPair baby_centers(int n, double a);

/// (1/4)^{n/(n-1)}: the a at which c+ = c- = 0. Requires n >= 2.
double overlap_parameter(int n);

enum class IntervalOrdering { I2LeftOfI1, Overlapping, I1LeftOfI2 };

const char* to_string(IntervalOrdering o) noexcept;

struct Interval {
    double lo;
    double hi;

    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

/// I1 = [omega1, omega2] with omega1 = (4/5)a^{1/n} - 2 sqrt(a),
/// omega2 = 5/4 - 2 sqrt(a); I2 = -I1.
struct IntervalPair {
    int n;
    double a;
    double omega1;
    double omega2;
    Interval i1;
    Interval i2;
    IntervalOrdering ordering;
};

/// Requires 0 < a < (25/16)^n; throws std::invalid_argument otherwise.
IntervalPair interval_positions(int n, double a);

struct ScanSample {
    Complex lambda;
    bool member_window;
    /// v+ orbit stays within the escape radius for max_iter steps.
    bool bounded_global;
    /// Orbit of the U'_k critical point stays in U'_k for max_iter steps.
    bool bounded_in_uprime;
};

struct ScanResult {
    int density = 0;
    /// Row-major over (argument, modulus) of the tracked quantity.
    std::vector<ScanSample> samples;
    bool nonempty = false;
    /// Closed-form period-one centre p_k - 2 sqrt(a), c-plane windows only.
    std::optional<Complex> center;
    bool contains_center = false;
    /// 4-connected components of the sampled locus. Advisory.
    int components = 0;
    std::int64_t locus_size = 0;

    std::string to_csv() const;
};

/// Rasterizes the window's modulus x argument box, widened by 1/8 of each
/// span on every side, at density x density samples. Requires density >= 16.
ScanResult scan_boundedness_locus(const ParamWindow& window, int density, const IterationSettings& settings,
                                  int threads = 0);

}  // namespace mcm
