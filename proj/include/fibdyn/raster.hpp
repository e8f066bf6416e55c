#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fibdyn/classify.hpp"
#include "fibdyn/potential.hpp"

namespace fibdyn {

// Axis-aligned view rectangle in the complex plane.
struct Region {
    Complex center;
    double width = 4.0;
    double height = 4.0;
};

enum class PixelTag : std::uint8_t { Inside, Escaped, Undecided, Error };

struct Pixel {
    PixelTag tag = PixelTag::Undecided;
    std::int32_t iter = 0;
    double green = 0.0;
};

struct RasterGrid {
    Region region;
    int width = 0;
    int height = 0;
    bool hasGreen = false; // set by the samplers when escaped pixels carry a rate
    std::vector<Pixel> pixels; // row-major, index j*width + i, j = 0 is the top row

    Pixel& at(int i, int j) { return pixels[static_cast<std::size_t>(j) * width + i]; }
    const Pixel& at(int i, int j) const {
        return pixels[static_cast<std::size_t>(j) * width + i];
    }
};

// Sample point of pixel (i, j): pixel centers, i to the right, j downward.
inline Complex pixel_point(const Region& r, int W, int H, int i, int j) {
    double re = r.center.real() + ((i + 0.5) / W - 0.5) * r.width;
    double im = r.center.imag() + (0.5 - (j + 0.5) / H) * r.height;
    return {re, im};
}

using PixelEvaluator = std::function<Pixel(Complex)>;

// requested > 0 wins; otherwise the FIBDYN_THREADS environment variable;
// otherwise the OpenMP default.
int resolve_workers(int requested);

// Evaluates one pixel per grid point, parallel over square tiles. Every evaluator
// exception becomes a PixelTag::Error pixel. The evaluator is called on pixel
// sample points only, so the output is byte-identical for any worker count.
RasterGrid sample_grid(const Region& region, int W, int H, const PixelEvaluator& eval,
                       int tileSize = 64, int workers = 0);

// Single-threaded reference with the identical evaluation order guarantees.
RasterGrid sample_grid_serial(const Region& region, int W, int H,
                              const PixelEvaluator& eval);

// Membership rendering: certified inside, undecided at budget, or escaped at a
// recorded step.
PixelEvaluator membership_evaluator(const MembershipClassifier& cls, int budget);

// Same, but escaped pixels additionally carry the escape-rate value.
PixelEvaluator green_evaluator(const GreenEvaluator& ev, double tol, int budget);

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
};

struct Palette {
    std::array<Rgb, 256> entries{};

    // entry k, t = k/255: r = round(255*9(1-t)t^3), g = round(255*15(1-t)^2 t^2),
    // b = round(255*8.5(1-t)^3 t).
    static Palette classic();
};

// Escaped pixels cycle through the palette by step count, or by the fractional
// level -log(green)/log(rho) when an escape rate is present. Inside and
// undecided pixels are black; error pixels are magenta.
int escape_index_from_iter(std::int32_t iter);
int escape_index_from_green(double green, double rho);
Rgb pixel_color(const Pixel& px, const Palette& pal, bool useGreen, double rho);

// Binary PPM, "P6\n<W> <H>\n255\n" then rows top to bottom.
void write_ppm(const RasterGrid& grid, const Palette& pal, const std::string& path,
               double rho);

enum class ImageFormat { Ppm, Csv };

// Dispatches to write_ppm or write_pixel_csv. rho feeds the smoothed coloring
// for grids that carry escape rates; pass any value otherwise.
void colorize_and_write(const RasterGrid& grid, const Palette& scheme,
                        const std::string& path, ImageFormat format, double rho);

// Text form, one pixel per row: header i,j,re,im,tag,iter,green with %.17g
// reals, LF line endings.
void write_pixel_csv(const RasterGrid& grid, const std::string& path);

struct CsvRow {
    int i = 0, j = 0;
    double re = 0.0, im = 0.0;
    std::string tag;
    std::int32_t iter = 0;
    double green = 0.0;
};

struct CsvTable {
    std::vector<CsvRow> rows;
};

CsvTable read_pixel_csv(const std::string& path);
void write_pixel_csv(const CsvTable& table, const std::string& path);

} // namespace fibdyn
