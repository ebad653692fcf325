#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "mcmullen/render.hpp"

using namespace mcm;

namespace {

bool is_bounded(const OrbitOutcome& o) { return o.bounded(); }

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("colorize") {
    const int max_iter = 256;
    const OrbitOutcome bounded = OrbitOutcome::bounded_after(max_iter, 0.0);
    const OrbitOutcome fast = OrbitOutcome::escaped_at(1, 10.0, 10.0);

    CHECK(colorize(bounded, bounded, max_iter) == RGB{0, 0, 0});

    // Hand arithmetic: s(1) = 0.25 + 0.75 * 255/256.
    const double s1 = 0.25 + 0.75 * (255.0 / 256.0);
    CHECK(escape_shade(1, max_iter) == doctest::Approx(s1));
    const RGB dark_purple = colorize(bounded, fast, max_iter);
    CHECK(dark_purple.r == static_cast<int>(std::floor(160 * s1 / 2 + 0.5)));
    CHECK(dark_purple.g == static_cast<int>(std::floor(32 * s1 / 2 + 0.5)));
    CHECK(dark_purple.b == static_cast<int>(std::floor(240 * s1 / 2 + 0.5)));
    const RGB dark_green = colorize(fast, bounded, max_iter);
    CHECK(dark_green == RGB{0, static_cast<std::uint8_t>(std::floor(255 * s1 / 2 + 0.5)), 0});

    CHECK(colorize(fast, fast, max_iter) == RGB{80, 143, 120});

    // Symmetric in the shading function: swapping palette entries and orbits
    // gives the same pixel.
    const OrbitOutcome slow = OrbitOutcome::escaped_at(200, 3.0, 3.0);
    Palette swapped;
    std::swap(swapped.plus, swapped.minus);
    CHECK(colorize(fast, slow, max_iter) == colorize(slow, fast, max_iter, swapped));
}

TEST_CASE("classify_point") {
    const IterationSettings s{kRenderMaxIter, std::nullopt};
    const auto c = std::get<OrbitPair>(classify_point(CPlane{5, 1.0}, -1.0, s));
    CHECK(c.plus.bounded());
    CHECK(std::abs(c.plus.final_point - 1.0) < 1e-12);

    const auto big = std::get<OrbitPair>(classify_point(APlane{5, 0.5}, 1e6, s));
    CHECK(big.plus.escaped());
    CHECK(big.minus.escaped());

    const auto dyn = std::get<OrbitOutcome>(classify_point(DynamicalPlane{MapParams(5, 0.7, -0.75)}, 3.0, s));
    CHECK(dyn.escaped());
    CHECK(dyn.steps == 1);

    const auto zero = std::get<OrbitPair>(classify_point(APlane{3, -0.5}, 0.0, s));
    CHECK(zero.plus.escaped());
    CHECK(zero.minus.escaped());
    CHECK(zero.plus.steps == 1);
}

TEST_CASE("pixel centres") {
    RenderSpec spec{CPlane{3, 0.5}, {-2, 2, -1, 1}, 4, 2};
    CHECK(spec.pixel_center(0, 0) == Complex(-1.5, 0.5));
    CHECK(spec.pixel_center(3, 1) == Complex(1.5, -0.5));
    spec.width = 5;
    spec.height = 5;
    spec.viewport = {-1, 1, -1, 1};
    CHECK(spec.pixel_center(2, 2) == Complex(0.0, 0.0));
    for (int x = 0; x < 5; ++x) CHECK(spec.pixel_center(x, 1).imag() == -spec.pixel_center(x, 3).imag());
}

TEST_CASE("a = 0 pixel renders escaped on both orbits") {
    RenderSpec spec{APlane{3, -0.5}, {-1, 1, -1, 1}, 3, 3};
    const auto grid = classify_grid(spec, 1);
    const auto& centre = std::get<OrbitPair>(grid[4]);
    CHECK(centre.plus.escaped());
    CHECK(centre.minus.escaped());
}

TEST_CASE("dynamical plane black set lies in the annulus") {
    const MapParams p(5, 0.7, -0.75);
    RenderSpec spec{DynamicalPlane{p}, {-2, 2, -2, 2}, 64, 64};
    const auto img = render(spec, 2);
    const double r_in = std::pow(0.7, 0.2) / 2.0;
    int black = 0;
    for (int y = 0; y < spec.height; ++y)
        for (int x = 0; x < spec.width; ++x) {
            const Complex z = spec.pixel_center(x, y);
            const bool is_black = img.at(x, y) == RGB{0, 0, 0};
            black += is_black;
            if (std::abs(z) > 2.0) CHECK_FALSE(is_black);
            if (is_black) {
                CHECK(std::abs(z) > r_in);
                CHECK(std::abs(z) < 2.0);
            }
        }
    CHECK(black > 0);
}

TEST_CASE("dynamical plane involution symmetry") {
    const MapParams p(5, 0.7, -0.75);
    RenderSpec spec{DynamicalPlane{p}, {-2, 2, -2, 2}, 64, 64};
    const auto grid = classify_grid(spec, 1);
    for (int y = 0; y < 64; y += 3)
        for (int x = 0; x < 64; x += 3) {
            const Complex z = spec.pixel_center(x, y);
            const auto& o = std::get<OrbitOutcome>(grid[y * 64 + x]);
            const OrbitOutcome h = iterate_orbit(p, involution(p, z), spec.settings.for_params(p));
            CHECK(o.bounded() == h.bounded());
            if (o.escaped() && h.escaped()) CHECK(std::abs(o.steps - h.steps) <= 1);
        }
}

TEST_CASE("c-plane symmetries at the classification level") {
    RenderSpec spec{CPlane{3, 0.5}, {-2, 2, -2, 2}, 64, 64};
    const auto grid = classify_grid(spec, 2);
    auto at = [&](int x, int y) { return std::get<OrbitPair>(grid[y * 64 + x]); };
    int mismatches_conj = 0, mismatches_swap = 0;
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x) {
            const OrbitPair here = at(x, y);
            const OrbitPair mirror = at(x, 63 - y);  // conj(c)
            const OrbitPair opposite = at(63 - x, y);  // -conj(c)
            const OrbitPair negated = at(63 - x, 63 - y);  // -c
            mismatches_conj += is_bounded(here.plus) != is_bounded(mirror.plus) ||
                               is_bounded(here.minus) != is_bounded(mirror.minus);
            mismatches_swap += is_bounded(here.plus) != is_bounded(negated.minus) ||
                               is_bounded(here.minus) != is_bounded(negated.plus);
            // Imaginary-axis mirror combines both.
            CHECK(is_bounded(here.plus) == is_bounded(opposite.minus));
        }
    CHECK(mismatches_conj == 0);
    CHECK(mismatches_swap == 0);
}

TEST_CASE("a-plane odd-n orbit swap under c -> -c") {
    RenderSpec pos{APlane{5, 0.5}, {-2, 2, -2, 2}, 64, 64};
    RenderSpec neg{APlane{5, -0.5}, {-2, 2, -2, 2}, 64, 64};
    const auto gp = classify_grid(pos, 1);
    const auto gn = classify_grid(neg, 1);
    for (std::size_t i = 0; i < gp.size(); ++i) {
        const auto& p = std::get<OrbitPair>(gp[i]);
        const auto& n = std::get<OrbitPair>(gn[i]);
        CHECK(p.plus.status == n.minus.status);
        CHECK(p.plus.steps == n.minus.steps);
        CHECK(p.minus.status == n.plus.status);
    }
}

TEST_CASE("single pixel render is classify then colorize") {
    for (Plane plane : {Plane{CPlane{3, 0.5}}, Plane{APlane{5, 0.5}}, Plane{DynamicalPlane{MapParams(5, 0.7, -0.75)}}}) {
        RenderSpec spec{plane, {0.1, 0.3, -0.4, -0.2}, 1, 1};
        const auto img = render(spec, 1);
        const Complex z = spec.pixel_center(0, 0);
        CHECK(std::abs(z - Complex(0.2, -0.3)) < 1e-15);
        CHECK(img.at(0, 0) == colorize(classify_point(plane, z, spec.settings), spec.settings.max_iter));
    }
}

TEST_CASE("ppm encoding") {
    const ImageBuffer black{1, 1, {RGB{}}};
    const std::string bytes = encode_ppm(black);
    CHECK(bytes == std::string("P6\n1 1\n255\n\0\0\0", 14));

    const auto dir = std::filesystem::temp_directory_path();
    const std::string path = (dir / "mcm_unit_black.ppm").string();
    write_ppm(black, path);
    CHECK(read_file(path) == bytes);
    std::remove(path.c_str());

    CHECK_THROWS_WITH_AS(write_ppm(black, "/nonexistent-dir/x.ppm"),
                         doctest::Contains("/nonexistent-dir/x.ppm"), std::runtime_error);
}

TEST_CASE("determinism and golden digests") {
    struct Golden {
        Plane plane;
        std::uint64_t digest;
    };
    // Frozen from the first verified run of the 64x64 renders below.
    const Golden goldens[] = {
        {DynamicalPlane{MapParams(5, 0.7, -0.75)}, 0x120a476192771ccfULL},
        {CPlane{3, 0.5}, 0x7f5a0fbfaa946a73ULL},
        {APlane{5, 0.5}, 0xedd92b2c75b87557ULL},
    };
    for (const Golden& g : goldens) {
        RenderSpec spec{g.plane, {-2, 2, -2, 2}, 64, 64};
        const std::string one = encode_ppm(render(spec, 1));
        CHECK(one == encode_ppm(render(spec, 1)));
        CHECK(one == encode_ppm(render(spec, 3)));
        CHECK(one == encode_ppm(render(spec, 64)));
        CHECK(fnv1a64(one) == g.digest);
    }
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("invalid render requests") {
    RenderSpec bad{CPlane{3, 0.5}, {1, -1, -1, 1}, 8, 8};
    CHECK_THROWS_AS(render(bad), std::invalid_argument);
    RenderSpec zero_a{CPlane{3, 0.0}, {-1, 1, -1, 1}, 8, 8};
    CHECK_THROWS_AS(render(zero_a), std::invalid_argument);
    RenderSpec no_pixels{CPlane{3, 0.5}, {-1, 1, -1, 1}, 0, 8};
    CHECK_THROWS_AS(render(no_pixels), std::invalid_argument);
}
