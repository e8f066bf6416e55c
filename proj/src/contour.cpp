#include "fibdyn/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <unordered_map>

#include "fibdyn/errors.hpp"

namespace fibdyn {

namespace {

// Edge between adjacent pixel centers; kind 0 joins (i,j)-(i+1,j), kind 1
// joins (i,j)-(i,j+1).
std::int64_t edge_id(int kind, int i, int j, int W, int H) {
    return (static_cast<std::int64_t>(kind) * H + j) * W + i;
}

Complex edge_midpoint(std::int64_t id, const RasterGrid& g) {
    int W = g.width, H = g.height;
    int kind = static_cast<int>(id / (static_cast<std::int64_t>(W) * H));
    std::int64_t rem = id % (static_cast<std::int64_t>(W) * H);
    int j = static_cast<int>(rem / W);
    int i = static_cast<int>(rem % W);
    Complex a = pixel_point(g.region, W, H, i, j);
    Complex b = kind == 0 ? pixel_point(g.region, W, H, i + 1, j)
                          : pixel_point(g.region, W, H, i, j + 1);
    return 0.5 * (a + b);
}

struct Seg {
    std::int64_t a, b;
};

} // namespace

std::vector<std::vector<Complex>> extract_closed_contours(const RasterGrid& grid) {
    const int W = grid.width, H = grid.height;
    auto inside = [&](int i, int j) { return grid.at(i, j).tag != PixelTag::Escaped; };

    std::vector<Seg> segs;
    for (int j = 0; j + 1 < H; ++j) {
        for (int i = 0; i + 1 < W; ++i) {
            int code = (inside(i, j) ? 1 : 0) | (inside(i + 1, j) ? 2 : 0) |
                       (inside(i + 1, j + 1) ? 4 : 0) | (inside(i, j + 1) ? 8 : 0);
            if (code == 0 || code == 15) continue;
            std::int64_t top = edge_id(0, i, j, W, H);
            std::int64_t bottom = edge_id(0, i, j + 1, W, H);
            std::int64_t left = edge_id(1, i, j, W, H);
            std::int64_t right = edge_id(1, i + 1, j, W, H);
            switch (code) {
            case 1:
            case 14: segs.push_back({top, left}); break;
            case 2:
            case 13: segs.push_back({top, right}); break;
            case 4:
            case 11: segs.push_back({right, bottom}); break;
            case 8:
            case 7: segs.push_back({left, bottom}); break;
            case 3:
            case 12: segs.push_back({left, right}); break;
            case 6:
            case 9: segs.push_back({top, bottom}); break;
            case 5: // inside corners kept connected through the cell
                segs.push_back({top, right});
                segs.push_back({left, bottom});
                break;
            case 10:
                segs.push_back({top, left});
                segs.push_back({right, bottom});
                break;
            default: break;
            }
        }
    }

    std::unordered_map<std::int64_t, std::array<int, 2>> at;
    at.reserve(segs.size() * 2);
    for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
        for (std::int64_t e : {segs[s].a, segs[s].b}) {
            auto [it, fresh] = at.try_emplace(e, std::array<int, 2>{-1, -1});
            if (fresh)
                it->second[0] = s;
            else
                it->second[1] = s;
        }
    }

    std::vector<bool> visited(segs.size(), false);
    std::vector<std::vector<Complex>> loops;
    for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
        if (visited[s]) continue;
        visited[s] = true;
        std::vector<std::int64_t> chain{segs[s].a, segs[s].b};
        std::int64_t cur = segs[s].b;
        int curSeg = s;
        bool closed = false;
        while (true) {
            const auto& pair = at[cur];
            int nxt = (pair[0] == curSeg) ? pair[1] : pair[0];
            if (nxt < 0 || visited[nxt]) break;
            visited[nxt] = true;
            std::int64_t nextEdge = (segs[nxt].a == cur) ? segs[nxt].b : segs[nxt].a;
            if (nextEdge == chain.front()) {
                closed = true;
                break;
            }
            chain.push_back(nextEdge);
            cur = nextEdge;
            curSeg = nxt;
        }
        if (!closed) continue;
        std::vector<Complex> loop;
        loop.reserve(chain.size());
        for (std::int64_t e : chain) loop.push_back(edge_midpoint(e, grid));
        loops.push_back(std::move(loop));
    }
    return loops;
}

std::vector<Complex> trace_boundary(Complex c, int resolution, int budget) {
    if (resolution < 64)
        throw PreconditionViolated("boundary tracing needs resolution >= 64");

    FibonacciSystem sys(Polynomial({Complex(0.0, 0.0), Complex(1.0, 0.0)}), c);
    MembershipClassifier cls(sys);
    Region region{Complex(0.0, 0.0), 4.0, 4.0};
    RasterGrid grid =
        sample_grid(region, resolution, resolution, membership_evaluator(cls, budget));

    auto loops = extract_closed_contours(grid);
    if (loops.empty()) throw NoContour("no closed boundary curve at this resolution");
    auto longest = std::max_element(loops.begin(), loops.end(),
                                    [](const auto& x, const auto& y) {
                                        return x.size() < y.size();
                                    });
    return *longest;
}

namespace {

double point_segment_distance(Complex p, Complex a, Complex b) {
    Complex ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) /
               len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

} // namespace

double hausdorff_distance_to_unit_circle(const std::vector<Complex>& poly) {
    if (poly.size() < 3)
        throw PreconditionViolated("polyline needs at least three vertices");

    double dPoly = 0.0;
    for (Complex v : poly) dPoly = std::max(dPoly, std::abs(std::abs(v) - 1.0));

    const int samples = 4096;
    const double twoPi = 2.0 * std::acos(-1.0);
    double dCircle = 0.0;
    for (int k = 0; k < samples; ++k) {
        Complex p = std::polar(1.0, twoPi * k / samples);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t v = 0; v < poly.size(); ++v) {
            best = std::min(best, point_segment_distance(p, poly[v],
                                                         poly[(v + 1) % poly.size()]));
        }
        dCircle = std::max(dCircle, best);
    }
    return std::max(dPoly, dCircle);
}

void write_polyline_csv(const std::vector<Complex>& poly, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path);
    out << "k,re,im\n";
    char buf[96];
    for (std::size_t k = 0; k < poly.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", k, poly[k].real(),
                      poly[k].imag());
        out << buf;
    }
    if (!out) throw IoFailure("write failed: " + path);
}

} // namespace fibdyn
