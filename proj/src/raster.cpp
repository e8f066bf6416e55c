#include "fibdyn/raster.hpp"

#include <omp.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fibdyn/errors.hpp"

namespace fibdyn {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FIBDYN_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return omp_get_max_threads();
}

namespace {

void fill_tile(RasterGrid& grid, const PixelEvaluator& eval, int i0, int j0, int i1,
               int j1) {
    for (int j = j0; j < j1; ++j) {
        for (int i = i0; i < i1; ++i) {
            Complex z = pixel_point(grid.region, grid.width, grid.height, i, j);
            Pixel px;
            try {
                px = eval(z);
            } catch (...) {
                px = Pixel{PixelTag::Error, -1, 0.0};
            }
            grid.at(i, j) = px;
        }
    }
}

bool any_escape_rate(const RasterGrid& grid) {
    for (const Pixel& px : grid.pixels)
        if (px.tag == PixelTag::Escaped && px.green != 0.0) return true;
    return false;
}

} // namespace

RasterGrid sample_grid(const Region& region, int W, int H, const PixelEvaluator& eval,
                       int tileSize, int workers) {
    if (W <= 0 || H <= 0) throw PreconditionViolated("grid dimensions must be positive");
    if (tileSize <= 0) throw PreconditionViolated("tile size must be positive");

    RasterGrid grid;
    grid.region = region;
    grid.width = W;
    grid.height = H;
    grid.pixels.resize(static_cast<std::size_t>(W) * H);

    const int tilesX = (W + tileSize - 1) / tileSize;
    const int tilesY = (H + tileSize - 1) / tileSize;
    const int tiles = tilesX * tilesY;
    const int nw = resolve_workers(workers);

#pragma omp parallel for schedule(dynamic) num_threads(nw)
    for (int t = 0; t < tiles; ++t) {
        int tx = t % tilesX;
        int ty = t / tilesX;
        int i0 = tx * tileSize;
        int j0 = ty * tileSize;
        fill_tile(grid, eval, i0, j0, std::min(i0 + tileSize, W),
                  std::min(j0 + tileSize, H));
    }
    grid.hasGreen = any_escape_rate(grid);
    return grid;
}

RasterGrid sample_grid_serial(const Region& region, int W, int H,
                              const PixelEvaluator& eval) {
    if (W <= 0 || H <= 0) throw PreconditionViolated("grid dimensions must be positive");
    RasterGrid grid;
    grid.region = region;
    grid.width = W;
    grid.height = H;
    grid.pixels.resize(static_cast<std::size_t>(W) * H);
    fill_tile(grid, eval, 0, 0, W, H);
    grid.hasGreen = any_escape_rate(grid);
    return grid;
}

PixelEvaluator membership_evaluator(const MembershipClassifier& cls, int budget) {
    return [cls, budget](Complex z) {
        MembershipVerdict v = cls.classify(z, budget);
        switch (v.kind) {
        case VerdictKind::ProvenInside: return Pixel{PixelTag::Inside, -1, 0.0};
        case VerdictKind::Escaped: return Pixel{PixelTag::Escaped, v.atIndex, 0.0};
        default: return Pixel{PixelTag::Undecided, -1, 0.0};
        }
    };
}

PixelEvaluator green_evaluator(const GreenEvaluator& ev, double tol, int budget) {
    return [ev, tol, budget](Complex z) {
        MembershipVerdict v = ev.classifier().classify(z, budget);
        if (v.kind == VerdictKind::ProvenInside) return Pixel{PixelTag::Inside, -1, 0.0};
        if (v.kind == VerdictKind::Undecided)
            return Pixel{PixelTag::Undecided, -1, 0.0};
        GreenEstimate g = ev.diag(z, tol, budget);
        return Pixel{PixelTag::Escaped, v.atIndex, g.value};
    };
}

Palette Palette::classic() {
    Palette p;
    for (int k = 0; k < 256; ++k) {
        double t = k / 255.0;
        double r = 255.0 * 9.0 * (1.0 - t) * t * t * t;
        double g = 255.0 * 15.0 * (1.0 - t) * (1.0 - t) * t * t;
        double b = 255.0 * 8.5 * (1.0 - t) * (1.0 - t) * (1.0 - t) * t;
        p.entries[static_cast<std::size_t>(k)] = {
            static_cast<std::uint8_t>(std::lround(r)),
            static_cast<std::uint8_t>(std::lround(g)),
            static_cast<std::uint8_t>(std::lround(b))};
    }
    return p;
}

int escape_index_from_iter(std::int32_t iter) {
    return static_cast<int>(((8 * static_cast<std::int64_t>(iter) + 32) % 256 + 256) %
                            256);
}

int escape_index_from_green(double green, double rho) {
    double level = -std::log(green) / std::log(rho);
    double idx = std::floor(8.0 * level) + 32.0;
    double m = std::fmod(idx, 256.0);
    if (m < 0.0) m += 256.0;
    return static_cast<int>(m);
}

Rgb pixel_color(const Pixel& px, const Palette& pal, bool useGreen, double rho) {
    switch (px.tag) {
    case PixelTag::Inside:
    case PixelTag::Undecided: return {0, 0, 0};
    case PixelTag::Error: return {255, 0, 255};
    case PixelTag::Escaped: break;
    }
    int idx = (useGreen && px.green > 0.0) ? escape_index_from_green(px.green, rho)
                                           : escape_index_from_iter(px.iter);
    return pal.entries[static_cast<std::size_t>(idx)];
}

void write_ppm(const RasterGrid& grid, const Palette& pal, const std::string& path,
               double rho) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path);
    out << "P6\n" << grid.width << " " << grid.height << "\n255\n";
    std::vector<unsigned char> row(static_cast<std::size_t>(grid.width) * 3);
    for (int j = 0; j < grid.height; ++j) {
        for (int i = 0; i < grid.width; ++i) {
            Rgb c = pixel_color(grid.at(i, j), pal, grid.hasGreen, rho);
            row[static_cast<std::size_t>(i) * 3] = c.r;
            row[static_cast<std::size_t>(i) * 3 + 1] = c.g;
            row[static_cast<std::size_t>(i) * 3 + 2] = c.b;
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw IoFailure("write failed: " + path);
}

namespace {

const char* tag_name(PixelTag t) {
    switch (t) {
    case PixelTag::Inside: return "inside";
    case PixelTag::Escaped: return "escaped";
    case PixelTag::Undecided: return "undecided";
    default: return "error";
    }
}

void write_csv_row(std::ofstream& out, int i, int j, double re, double im,
                   const char* tag, std::int32_t iter, double green) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g,%s,%d,%.17g\n", i, j, re, im, tag,
                  iter, green);
    out << buf;
}

} // namespace

void write_pixel_csv(const RasterGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path);
    out << "i,j,re,im,tag,iter,green\n";
    for (int j = 0; j < grid.height; ++j) {
        for (int i = 0; i < grid.width; ++i) {
            Complex z = pixel_point(grid.region, grid.width, grid.height, i, j);
            const Pixel& px = grid.at(i, j);
            write_csv_row(out, i, j, z.real(), z.imag(), tag_name(px.tag), px.iter,
                          px.green);
        }
    }
    if (!out) throw IoFailure("write failed: " + path);
}

void write_pixel_csv(const CsvTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path);
    out << "i,j,re,im,tag,iter,green\n";
    for (const CsvRow& r : table.rows)
        write_csv_row(out, r.i, r.j, r.re, r.im, r.tag.c_str(), r.iter, r.green);
    if (!out) throw IoFailure("write failed: " + path);
}

namespace {

double parse_csv_double(const std::string& s) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw IoFailure("bad numeric field in csv: '" + s + "'");
    return v;
}

int parse_csv_int(const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw IoFailure("bad integer field in csv: '" + s + "'");
    return v;
}

} // namespace

CsvTable read_pixel_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(in, line)) throw IoFailure("empty csv: " + path);
    if (line == "i,j,re,im,tag,iter,green\r")
        line.pop_back();
    if (line != "i,j,re,im,tag,iter,green")
        throw IoFailure("unexpected csv header in " + path);

    CsvTable table;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<std::string, 7> fields;
        std::size_t start = 0;
        for (int k = 0; k < 7; ++k) {
            std::size_t comma = line.find(',', start);
            if (k < 6 && comma == std::string::npos)
                throw IoFailure("short csv row in " + path);
            fields[static_cast<std::size_t>(k)] =
                (k < 6) ? line.substr(start, comma - start) : line.substr(start);
            start = comma + 1;
        }
        CsvRow r;
        r.i = parse_csv_int(fields[0]);
        r.j = parse_csv_int(fields[1]);
        r.re = parse_csv_double(fields[2]);
        r.im = parse_csv_double(fields[3]);
        r.tag = fields[4];
        r.iter = parse_csv_int(fields[5]);
        r.green = parse_csv_double(fields[6]);
        table.rows.push_back(std::move(r));
    }
    return table;
}

void colorize_and_write(const RasterGrid& grid, const Palette& scheme,
                        const std::string& path, ImageFormat format, double rho) {
    if (format == ImageFormat::Ppm)
        write_ppm(grid, scheme, path, rho);
    else
        write_pixel_csv(grid, path);
}

} // namespace fibdyn
