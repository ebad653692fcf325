#include "mcmullen/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "mcmullen/parallel.hpp"

namespace mcm {

void Viewport::validate() const {
    if (!std::isfinite(re_min) || !std::isfinite(re_max) || !std::isfinite(im_min) || !std::isfinite(im_max))
        throw std::invalid_argument("viewport bounds must be finite");
    if (!(re_min < re_max)) throw std::invalid_argument("viewport requires re_min < re_max");
    if (!(im_min < im_max)) throw std::invalid_argument("viewport requires im_min < im_max");
}

EscapeSettings IterationSettings::for_params(const MapParams& p) const {
    return {escape_radius ? *escape_radius : default_escape_radius(p), max_iter};
}

void RenderSpec::validate() const {
    viewport.validate();
    if (width < 1 || height < 1) throw std::invalid_argument("image width and height must be >= 1");
    if (settings.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (settings.escape_radius && !(*settings.escape_radius > 1.0))
        throw std::invalid_argument("escape radius must be > 1");
    if (const auto* ap = std::get_if<APlane>(&plane); ap && ap->n < 2)
        throw std::invalid_argument("degree n must be >= 2");
    if (const auto* cp = std::get_if<CPlane>(&plane)) {
        if (cp->n < 2) throw std::invalid_argument("degree n must be >= 2");
        if (cp->a == Complex(0.0, 0.0)) throw std::invalid_argument("c-plane requires a != 0");
    }
}

Complex RenderSpec::pixel_center(int x, int y) const noexcept {
    const double step_re = (viewport.re_max - viewport.re_min) / width;
    const double step_im = (viewport.im_max - viewport.im_min) / height;
    const double mid_re = 0.5 * (viewport.re_min + viewport.re_max);
    const double mid_im = 0.5 * (viewport.im_min + viewport.im_max);
    return {mid_re + (x - 0.5 * (width - 1)) * step_re, mid_im - (y - 0.5 * (height - 1)) * step_im};
}

namespace {

OrbitPair classify_critical_orbits(const MapParams& p, const IterationSettings& settings) {
    const EscapeSettings es = settings.for_params(p);
    const CriticalValues v = critical_values(p);
    return {iterate_orbit(p, v.plus, es), iterate_orbit(p, v.minus, es)};
}

struct Classifier {
    Complex point;
    const IterationSettings& settings;

    PointClass operator()(const DynamicalPlane& d) const {
        return iterate_orbit(d.params, point, settings.for_params(d.params));
    }
    PointClass operator()(const APlane& ap) const {
        if (point == Complex(0.0, 0.0)) {
            const double r = settings.escape_radius.value_or(2.0) * 10.0;
            const OrbitOutcome gone = OrbitOutcome::escaped_at(1, r, {r, 0.0});
            return OrbitPair{gone, gone};
        }
        return classify_critical_orbits(MapParams(ap.n, point, ap.c), settings);
    }
    PointClass operator()(const CPlane& cp) const {
        return classify_critical_orbits(MapParams(cp.n, cp.a, point), settings);
    }
};

double channel(std::uint8_t base, const OrbitOutcome& o, int max_iter) {
    return o.bounded() ? 0.0 : base * escape_shade(o.steps, max_iter);
}

std::uint8_t round_half_up(double x) {
    return static_cast<std::uint8_t>(std::clamp(std::floor(x + 0.5), 0.0, 255.0));
}

}  // namespace

PointClass classify_point(const Plane& plane, Complex point, const IterationSettings& settings) {
    return std::visit(Classifier{point, settings}, plane);
}

double escape_shade(int step, int max_iter) noexcept {
    return 0.25 + 0.75 * (1.0 - static_cast<double>(step) / max_iter);
}

RGB colorize(const OrbitOutcome& plus, const OrbitOutcome& minus, int max_iter, const Palette& palette) {
    auto mean = [&](std::uint8_t p, std::uint8_t m) {
        return round_half_up(0.5 * (channel(p, plus, max_iter) + channel(m, minus, max_iter)));
    };
    return {mean(palette.plus.r, palette.minus.r), mean(palette.plus.g, palette.minus.g),
            mean(palette.plus.b, palette.minus.b)};
}

RGB colorize(const PointClass& cls, int max_iter, const Palette& palette) {
    if (const auto* pair = std::get_if<OrbitPair>(&cls)) return colorize(pair->plus, pair->minus, max_iter, palette);
    const auto& o = std::get<OrbitOutcome>(cls);
    return {round_half_up(channel(palette.seed.r, o, max_iter)), round_half_up(channel(palette.seed.g, o, max_iter)),
            round_half_up(channel(palette.seed.b, o, max_iter))};
}

std::vector<PointClass> classify_grid(const RenderSpec& spec, int threads) {
    spec.validate();
    const std::size_t w = spec.width;
    std::vector<PointClass> out(w * spec.height);
    parallel_for(static_cast<std::size_t>(spec.height), threads < 1 ? worker_count() : threads,
                 [&](std::size_t row_begin, std::size_t row_end) {
                     for (std::size_t y = row_begin; y < row_end; ++y)
                         for (std::size_t x = 0; x < w; ++x)
                             out[y * w + x] = classify_point(
                                 spec.plane, spec.pixel_center(static_cast<int>(x), static_cast<int>(y)),
                                 spec.settings);
                 });
    return out;
}

ImageBuffer render(const RenderSpec& spec, int threads) {
    spec.validate();
    ImageBuffer img{spec.width, spec.height, std::vector<RGB>(static_cast<std::size_t>(spec.width) * spec.height)};
    const std::size_t w = spec.width;
    parallel_for(static_cast<std::size_t>(spec.height), threads < 1 ? worker_count() : threads,
                 [&](std::size_t row_begin, std::size_t row_end) {
                     for (std::size_t y = row_begin; y < row_end; ++y)
                         for (std::size_t x = 0; x < w; ++x) {
                             const PointClass cls = classify_point(
                                 spec.plane, spec.pixel_center(static_cast<int>(x), static_cast<int>(y)),
                                 spec.settings);
                             img.pixels[y * w + x] = colorize(cls, spec.settings.max_iter, spec.palette);
                         }
                 });
    return img;
}

std::string encode_ppm(const ImageBuffer& image) {
    std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    out.reserve(out.size() + image.pixels.size() * 3);
    for (const RGB& p : image.pixels) {
        out.push_back(static_cast<char>(p.r));
        out.push_back(static_cast<char>(p.g));
        out.push_back(static_cast<char>(p.b));
    }
    return out;
}

void write_ppm(const ImageBuffer& image, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    const std::string bytes = encode_ppm(image);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    f.flush();
    if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace mcm
