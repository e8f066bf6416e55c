// Times the tiled renderer against the serial reference and checks that both
// produce identical pixels. Usage: fibdyn_bench [res] [budget]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "fibdyn/classify.hpp"
#include "fibdyn/parse.hpp"
#include "fibdyn/raster.hpp"

using namespace fibdyn;
using Clock = std::chrono::steady_clock;

namespace {

double time_once(const Region& region, int res, const PixelEvaluator& eval,
                 int workers, RasterGrid& out) {
    auto t0 = Clock::now();
    out = workers == 0 ? sample_grid_serial(region, res, res, eval)
                       : sample_grid(region, res, res, eval, 64, workers);
    auto t1 = Clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool same_pixels(const RasterGrid& a, const RasterGrid& b) {
    if (a.pixels.size() != b.pixels.size()) return false;
    for (std::size_t k = 0; k < a.pixels.size(); ++k) {
        if (a.pixels[k].tag != b.pixels[k].tag) return false;
        if (a.pixels[k].iter != b.pixels[k].iter) return false;
        if (a.pixels[k].green != b.pixels[k].green) return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    int res = argc > 1 ? std::atoi(argv[1]) : 1024;
    int budget = argc > 2 ? std::atoi(argv[2]) : 500;
    if (res <= 0 || budget < 2) {
        std::fprintf(stderr, "usage: fibdyn_bench [res] [budget]\n");
        return 1;
    }

    FibonacciSystem sys(parse_polynomial("0,1"), Complex(-0.5, 0.5));
    MembershipClassifier cls(sys);
    PixelEvaluator eval = membership_evaluator(cls, budget);
    Region region{Complex(0.0, 0.0), 4.0, 4.0};

    std::printf("grid %dx%d, budget %d\n", res, res, budget);

    RasterGrid reference;
    double serial = time_once(region, res, eval, 0, reference);
    // warm rerun, keep the better time
    {
        RasterGrid again;
        serial = std::min(serial, time_once(region, res, eval, 0, again));
    }
    std::printf("%8s %10.3fs %8s\n", "serial", serial, "");

    bool allMatch = true;
    for (int workers : {1, 2, 4, 8}) {
        RasterGrid grid;
        double t = time_once(region, res, eval, workers, grid);
        {
            RasterGrid again;
            t = std::min(t, time_once(region, res, eval, workers, again));
        }
        bool match = same_pixels(reference, grid);
        allMatch = allMatch && match;
        std::printf("%7dw %10.3fs %8.2fx %s\n", workers, t, serial / t,
                    match ? "identical" : "MISMATCH");
    }

    if (!allMatch) {
        std::fprintf(stderr, "parallel output diverged from the serial reference\n");
        return 1;
    }
    return 0;
}
