#pragma once

// Escape-time rendering of dynamical and parameter planes. Parameter-plane
// pixels average the colours of the two free critical orbits.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcmullen/dynamics.hpp"

namespace mcm {

struct RGB {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const RGB&, const RGB&) = default;
};

struct Palette {
    RGB plus{0, 255, 0};
    RGB minus{160, 32, 240};
    /// Escaping seeds in the dynamical plane.
    RGB seed{255, 255, 255};
};

struct DynamicalPlane {
    MapParams params;
};

/// Pixel coordinate is a; c fixed.
struct APlane {
    int n;
    Complex c;
};

/// Pixel coordinate is c; a fixed and nonzero.
struct CPlane {
    int n;
    Complex a;
};

using Plane = std::variant<DynamicalPlane, APlane, CPlane>;

struct Viewport {
    double re_min = -2.0;
    double re_max = 2.0;
    double im_min = -2.0;
    double im_max = 2.0;

    void validate() const;
};

struct IterationSettings {
    int max_iter = kRenderMaxIter;
    /// Unset: default_escape_radius of each pixel's parameters.
    std::optional<double> escape_radius;

    EscapeSettings for_params(const MapParams& p) const;
};

struct RenderSpec {
    Plane plane;
    Viewport viewport;
    int width = 64;
    int height = 64;
    IterationSettings settings;
    Palette palette;

    void validate() const;

    /// Centre of pixel (x, y); (0, 0) is the top-left pixel. Viewports
    /// symmetric about an axis give exactly mirrored centres.
    Complex pixel_center(int x, int y) const noexcept;
};

struct OrbitPair {
    OrbitOutcome plus;
    OrbitOutcome minus;

    friend bool operator==(const OrbitPair&, const OrbitPair&) = default;
};

/// OrbitOutcome for the dynamical plane, OrbitPair for parameter planes.
using PointClass = std::variant<OrbitOutcome, OrbitPair>;

PointClass classify_point(const Plane& plane, Complex point, const IterationSettings& settings);

/// Escape shading s(k) = 0.25 + 0.75 (1 - k / max_iter).
double escape_shade(int step, int max_iter) noexcept;

RGB colorize(const OrbitOutcome& plus, const OrbitOutcome& minus, int max_iter, const Palette& palette = {});
RGB colorize(const PointClass& cls, int max_iter, const Palette& palette = {});

struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<RGB> pixels;

    const RGB& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// Row-major classifications; threads < 1 means worker_count().
std::vector<PointClass> classify_grid(const RenderSpec& spec, int threads = 0);

ImageBuffer render(const RenderSpec& spec, int threads = 0);

/// Binary P6 bytes.
std::string encode_ppm(const ImageBuffer& image);

/// Throws std::runtime_error naming the path on I/O failure.
void write_ppm(const ImageBuffer& image, const std::string& path);

/// 64-bit FNV-1a, used for golden image digests.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace mcm
