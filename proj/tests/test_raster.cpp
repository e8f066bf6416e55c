#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "fibdyn/classify.hpp"
#include "fibdyn/contour.hpp"
#include "fibdyn/errors.hpp"
#include "fibdyn/parse.hpp"
#include "fibdyn/potential.hpp"
#include "fibdyn/raster.hpp"

using namespace fibdyn;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const char* name) {
    return std::string("/tmp/fibdyn_test_") + name;
}

MembershipClassifier identity_classifier(Complex c) {
    return MembershipClassifier(FibonacciSystem(parse_polynomial("0,1"), c));
}

} // namespace

TEST_CASE("pixel sample points") {
    Region r{Complex(0.0, 0.0), 4.0, 4.0};
    CHECK(pixel_point(r, 2, 2, 0, 0) == Complex(-1.0, 1.0));
    CHECK(pixel_point(r, 2, 2, 1, 1) == Complex(1.0, -1.0));
    // top row has the largest imaginary part
    Region s{Complex(0.5, -0.25), 3.0, 2.0};
    CHECK(pixel_point(s, 4, 4, 0, 0).imag() > pixel_point(s, 4, 4, 0, 3).imag());
    CHECK(pixel_point(s, 4, 4, 0, 0).real() < pixel_point(s, 4, 4, 3, 0).real());
}

TEST_CASE("parallel and serial rendering agree pixel for pixel") {
    Region region{Complex(0.0, 0.0), 4.0, 4.0};
    PixelEvaluator eval = membership_evaluator(identity_classifier(Complex(-0.5, 0.5)),
                                               200);
    RasterGrid par = sample_grid(region, 33, 17, eval, 8, 3);
    RasterGrid ser = sample_grid_serial(region, 33, 17, eval);
    REQUIRE(par.pixels.size() == ser.pixels.size());
    for (std::size_t k = 0; k < par.pixels.size(); ++k) {
        CHECK(par.pixels[k].tag == ser.pixels[k].tag);
        CHECK(par.pixels[k].iter == ser.pixels[k].iter);
        CHECK(par.pixels[k].green == ser.pixels[k].green);
    }
}

TEST_CASE("evaluator failures become error pixels") {
    Region region{Complex(0.0, 0.0), 2.0, 2.0};
    PixelEvaluator eval = [](Complex z) -> Pixel {
        if (z.real() > 0.0) throw std::runtime_error("boom");
        return Pixel{PixelTag::Inside, -1, 0.0};
    };
    RasterGrid grid = sample_grid(region, 4, 4, eval, 2, 2);
    int errors = 0;
    for (const Pixel& px : grid.pixels)
        if (px.tag == PixelTag::Error) ++errors;
    CHECK(errors == 8);

    Palette pal = Palette::classic();
    Rgb magenta = pixel_color(Pixel{PixelTag::Error, -1, 0.0}, pal, false, 1.6);
    CHECK(magenta.r == 255);
    CHECK(magenta.g == 0);
    CHECK(magenta.b == 255);
}

TEST_CASE("single pixel at the origin is certified inside for c=0") {
    Region region{Complex(0.0, 0.0), 4.0, 4.0};
    PixelEvaluator eval = membership_evaluator(identity_classifier(Complex(0.0, 0.0)),
                                               100);
    RasterGrid grid = sample_grid(region, 1, 1, eval);
    REQUIRE(grid.pixels.size() == 1);
    CHECK(grid.at(0, 0).tag == PixelTag::Inside);
    CHECK(grid.at(0, 0).iter == -1);
}

TEST_CASE("c=0 membership raster is exactly the unit disk") {
    Region region{Complex(0.0, 0.0), 4.0, 4.0};
    const int n = 64;
    PixelEvaluator eval = membership_evaluator(identity_classifier(Complex(0.0, 0.0)),
                                               500);
    RasterGrid grid = sample_grid(region, n, n, eval);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            bool inDisk = std::abs(pixel_point(region, n, n, i, j)) <= 1.0;
            CHECK((grid.at(i, j).tag == PixelTag::Inside) == inDisk);
        }
    }
}

TEST_CASE("escaped pixels carry the escape rate when asked") {
    Region region{Complex(0.0, 0.0), 6.0, 6.0};
    const int n = 16;
    GreenEvaluator ev(FibonacciSystem(parse_polynomial("0,1"), Complex(0.0, 0.0)));
    RasterGrid grid = sample_grid(region, n, n, green_evaluator(ev, 1e-9, 400));
    CHECK(grid.hasGreen);
    int escaped = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const Pixel& px = grid.at(i, j);
            if (px.tag != PixelTag::Escaped) continue;
            ++escaped;
            double expected = std::log(std::abs(pixel_point(region, n, n, i, j)));
            CHECK(px.green == doctest::Approx(expected).epsilon(1e-6));
        }
    }
    CHECK(escaped > 0);
}

TEST_CASE("ppm bytes are laid out as promised") {
    RasterGrid grid;
    grid.region = Region{Complex(0.0, 0.0), 4.0, 2.0};
    grid.width = 2;
    grid.height = 1;
    grid.pixels = {Pixel{PixelTag::Inside, -1, 0.0}, Pixel{PixelTag::Escaped, 3, 0.0}};

    std::string path = temp_path("tiny.ppm");
    Palette pal = Palette::classic();
    write_ppm(grid, pal, path, 1.618);
    std::string bytes = slurp(path);

    REQUIRE(bytes.size() == 17);
    CHECK(bytes.substr(0, 11) == "P6\n2 1\n255\n");
    CHECK(static_cast<unsigned char>(bytes[11]) == 0);
    CHECK(static_cast<unsigned char>(bytes[12]) == 0);
    CHECK(static_cast<unsigned char>(bytes[13]) == 0);
    const Rgb& expect = pal.entries[static_cast<std::size_t>(escape_index_from_iter(3))];
    CHECK(static_cast<unsigned char>(bytes[14]) == expect.r);
    CHECK(static_cast<unsigned char>(bytes[15]) == expect.g);
    CHECK(static_cast<unsigned char>(bytes[16]) == expect.b);
    std::remove(path.c_str());
}

TEST_CASE("pixel table round-trips byte for byte") {
    Region region{Complex(-0.1, 0.2), 4.0, 4.0};
    PixelEvaluator eval = membership_evaluator(identity_classifier(Complex(-0.5, 0.5)),
                                               150);
    RasterGrid grid = sample_grid(region, 12, 9, eval);

    std::string first = temp_path("roundtrip1.csv");
    std::string second = temp_path("roundtrip2.csv");
    write_pixel_csv(grid, first);
    CsvTable table = read_pixel_csv(first);
    REQUIRE(table.rows.size() == grid.pixels.size());
    write_pixel_csv(table, second);
    CHECK(slurp(first) == slurp(second));

    CHECK(table.rows[0].i == 0);
    CHECK(table.rows[0].j == 0);
    CHECK(table.rows[0].re ==
          doctest::Approx(pixel_point(region, 12, 9, 0, 0).real()).epsilon(1e-16));
    std::remove(first.c_str());
    std::remove(second.c_str());
}

TEST_CASE("palette matches the table shipped in the docs") {
    Palette pal = Palette::classic();
    std::string csv = slurp(std::string(FIBDYN_SOURCE_DIR) + "/docs/palette.csv");
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "index,r,g,b");
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int k, r, g, b;
        REQUIRE(std::sscanf(line.c_str(), "%d,%d,%d,%d", &k, &r, &g, &b) == 4);
        REQUIRE(k >= 0);
        REQUIRE(k < 256);
        CHECK(pal.entries[static_cast<std::size_t>(k)].r == r);
        CHECK(pal.entries[static_cast<std::size_t>(k)].g == g);
        CHECK(pal.entries[static_cast<std::size_t>(k)].b == b);
        ++rows;
    }
    CHECK(rows == 256);
    // the map starts and ends dark
    CHECK(pal.entries[0].r == 0);
    CHECK(pal.entries[255].g == 0);
}

TEST_CASE("escape coloring indices") {
    CHECK(escape_index_from_iter(0) == 32);
    CHECK(escape_index_from_iter(3) == 56);
    CHECK(escape_index_from_iter(28) == 0);
    CHECK(escape_index_from_iter(60) == (8 * 60 + 32) % 256);

    double rho = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(escape_index_from_green(1.0, rho) == 32);
    CHECK(escape_index_from_green(std::pow(rho, -2.0), rho) == 48);
    CHECK(escape_index_from_green(std::pow(rho, 3.0), rho) == 8);
}

TEST_CASE("deeper escape levels nest inside shallower ones") {
    Region region{Complex(0.0, 0.0), 4.0, 4.0};
    const int n = 32;
    PixelEvaluator eval = membership_evaluator(identity_classifier(Complex(-0.5, 0.5)),
                                               300);
    RasterGrid grid = sample_grid(region, n, n, eval);
    int prev = -1;
    for (int level = 0; level < 40; ++level) {
        int count = 0;
        for (const Pixel& px : grid.pixels)
            if (px.tag == PixelTag::Escaped && px.iter >= level) ++count;
        if (prev >= 0) CHECK(count <= prev);
        prev = count;
    }
}

TEST_CASE("worker resolution order") {
    CHECK(resolve_workers(5) == 5);
    setenv("FIBDYN_THREADS", "3", 1);
    CHECK(resolve_workers(0) == 3);
    CHECK(resolve_workers(2) == 2);
    setenv("FIBDYN_THREADS", "junk", 1);
    CHECK(resolve_workers(0) >= 1);
    unsetenv("FIBDYN_THREADS");
    CHECK(resolve_workers(0) >= 1);
}

TEST_CASE("marching squares turns an isolated pixel into a diamond") {
    RasterGrid grid;
    grid.region = Region{Complex(0.0, 0.0), 5.0, 5.0};
    grid.width = 5;
    grid.height = 5;
    grid.pixels.assign(25, Pixel{PixelTag::Escaped, 1, 0.0});
    grid.at(2, 2) = Pixel{PixelTag::Inside, -1, 0.0};

    auto loops = extract_closed_contours(grid);
    REQUIRE(loops.size() == 1);
    REQUIRE(loops[0].size() == 4);
    for (Complex v : loops[0]) CHECK(std::abs(v) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("chains leaving the grid are dropped") {
    RasterGrid grid;
    grid.region = Region{Complex(0.0, 0.0), 5.0, 5.0};
    grid.width = 5;
    grid.height = 5;
    grid.pixels.assign(25, Pixel{PixelTag::Escaped, 1, 0.0});
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 2; ++i) grid.at(i, j) = Pixel{PixelTag::Inside, -1, 0.0};

    CHECK(extract_closed_contours(grid).empty());
}

TEST_CASE("boundary tracing approximates the unit circle for tiny c") {
    std::vector<Complex> poly = trace_boundary(Complex(0.01, 0.0), 128, 300);
    REQUIRE(poly.size() >= 3);
    double d = hausdorff_distance_to_unit_circle(poly);
    CHECK(d < 2.0 * 4.0 / 128.0);

    CHECK_THROWS_AS(trace_boundary(Complex(10.0, 0.0), 64, 100), NoContour);
    CHECK_THROWS_AS(trace_boundary(Complex(0.0, 0.0), 32, 100), PreconditionViolated);
}

TEST_CASE("hausdorff distance against reference polygons") {
    const double pi = std::acos(-1.0);
    std::vector<Complex> gon, shifted;
    for (int k = 0; k < 64; ++k) {
        gon.push_back(std::polar(1.0, 2.0 * pi * k / 64));
        shifted.push_back(std::polar(1.1, 2.0 * pi * k / 64));
    }
    double sagitta = 1.0 - std::cos(pi / 64.0);
    CHECK(hausdorff_distance_to_unit_circle(gon) ==
          doctest::Approx(sagitta).epsilon(1e-6));
    CHECK(hausdorff_distance_to_unit_circle(shifted) ==
          doctest::Approx(0.1).epsilon(1e-3));
    CHECK_THROWS_AS(hausdorff_distance_to_unit_circle({Complex(1.0, 0.0)}),
                    PreconditionViolated);
}

TEST_CASE("polyline csv layout") {
    std::vector<Complex> poly{Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0)};
    std::string path = temp_path("poly.csv");
    write_polyline_csv(poly, path);
    std::string text = slurp(path);
    CHECK(text == "k,re,im\n0,1,0\n1,0,1\n2,-1,0\n");
    std::remove(path.c_str());
}
