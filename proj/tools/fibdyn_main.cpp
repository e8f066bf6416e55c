#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibdyn/acceptance.hpp"
#include "fibdyn/classify.hpp"
#include "fibdyn/contour.hpp"
#include "fibdyn/errors.hpp"
#include "fibdyn/locus.hpp"
#include "fibdyn/orbit.hpp"
#include "fibdyn/parse.hpp"
#include "fibdyn/potential.hpp"
#include "fibdyn/raster.hpp"

namespace {

using namespace fibdyn;

// Bad flags and malformed values exit 1; everything thrown by the library
// (overflow, unreachable tolerance, io) exits 3. verify exits 2 on red checks.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArgSpec {
    std::set<std::string> valued;
    std::set<std::string> boolean;
};

struct Args {
    std::map<std::string, std::string> values;
    std::set<std::string> flags;

    bool has(const std::string& name) const { return values.count(name) != 0; }
    bool flag(const std::string& name) const { return flags.count(name) != 0; }
};

Args parse_args(int argc, char** argv, int start, const ArgSpec& spec) {
    Args a;
    for (int k = start; k < argc; ++k) {
        std::string tok = argv[k];
        if (tok.rfind("--", 0) != 0)
            throw UsageError("unexpected argument '" + tok + "'");
        std::string name = tok.substr(2);
        if (spec.boolean.count(name)) {
            a.flags.insert(name);
            continue;
        }
        if (!spec.valued.count(name)) throw UsageError("unknown flag --" + name);
        if (k + 1 >= argc) throw UsageError("flag --" + name + " needs a value");
        a.values[name] = argv[++k];
    }
    return a;
}

std::string arg_raw(const Args& a, const std::string& name, const char* dflt) {
    auto it = a.values.find(name);
    if (it != a.values.end()) return it->second;
    if (dflt == nullptr) throw UsageError("flag --" + name + " is required");
    return dflt;
}

// dflt == nullptr marks a required flag.
Complex arg_complex(const Args& a, const std::string& name, const char* dflt) {
    std::string raw = arg_raw(a, name, dflt);
    try {
        return parse_complex(raw);
    } catch (const Error& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

Polynomial arg_poly(const Args& a, const std::string& name, const char* dflt) {
    std::string raw = arg_raw(a, name, dflt);
    try {
        return parse_polynomial(raw);
    } catch (const Error& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

std::pair<int, int> arg_res(const Args& a, const std::string& name, const char* dflt) {
    std::string raw = arg_raw(a, name, dflt);
    try {
        return parse_resolution(raw);
    } catch (const Error& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

std::pair<int, int> arg_exponents(const Args& a, const std::string& name,
                                  const char* dflt) {
    std::string raw = arg_raw(a, name, dflt);
    try {
        return parse_exponents(raw);
    } catch (const Error& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

double arg_double(const Args& a, const std::string& name, const char* dflt) {
    std::string raw = arg_raw(a, name, dflt);
    try {
        std::size_t used = 0;
        double v = std::stod(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw UsageError("--" + name + ": not a number: '" + raw + "'");
    }
}

int arg_int(const Args& a, const std::string& name, const char* dflt) {
    std::string raw = arg_raw(a, name, dflt);
    try {
        std::size_t used = 0;
        int v = std::stoi(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw UsageError("--" + name + ": not an integer: '" + raw + "'");
    }
}

ImageFormat arg_format(const Args& a, const std::string& out) {
    if (a.has("format")) {
        std::string f = a.values.at("format");
        if (f == "ppm") return ImageFormat::Ppm;
        if (f == "csv") return ImageFormat::Csv;
        throw UsageError("--format: expected ppm or csv, got '" + f + "'");
    }
    if (out.size() >= 4 && out.compare(out.size() - 4, 4, ".csv") == 0)
        return ImageFormat::Csv;
    return ImageFormat::Ppm;
}

const char* escape_reason_name(EscapeReason r) {
    switch (r) {
        case EscapeReason::ConsecutiveAboveM: return "ConsecutiveAboveM";
        case EscapeReason::SingleAboveR: return "SingleAboveR";
        default: return "OuterCertificate";
    }
}

const char* inside_reason_name(InsideReason r) {
    switch (r) {
        case InsideReason::ExactOracleC0: return "ExactOracleC0";
        case InsideReason::PeriodicWitness: return "PeriodicWitness";
        default: return "BidiskCertificate";
    }
}

// Raw escape-time coloring for nonstandard exponents, where no certified
// thresholds are available: bail out once the modulus passes 1e6.
PixelEvaluator heuristic_evaluator(const FibonacciSystem& sys, int budget) {
    return [sys, budget](Complex z) {
        constexpr double kBailout2 = 1e12;
        OrbitPair pair{z, sys.f()(z), 0};
        for (int n = 0; n < budget; ++n) {
            if (std::norm(pair.cur) > kBailout2)
                return Pixel{PixelTag::Escaped, pair.index + 1, 0.0};
            pair = iterate_step(pair, sys);
        }
        return Pixel{PixelTag::Undecided, -1, 0.0};
    };
}

int cmd_julia(const Args& a) {
    Complex c = arg_complex(a, "c", nullptr);
    Polynomial f = arg_poly(a, "f", "0,1");
    auto [ea, eb] = arg_exponents(a, "exponents", "1,1");
    auto [W, H] = arg_res(a, "res", "1024x1024");
    int budget = arg_int(a, "max-iter", "500");
    Complex center = arg_complex(a, "center", "0");
    double width = arg_double(a, "width", "4");
    double height = a.has("height") ? arg_double(a, "height", nullptr)
                                    : width * static_cast<double>(H) / W;
    std::string out = arg_raw(a, "out", "julia.ppm");
    ImageFormat fmt = arg_format(a, out);
    double tol = arg_double(a, "tol", "1e-9");
    int tile = arg_int(a, "tile", "64");
    int workers = arg_int(a, "workers", "0");
    if (budget < 2) throw UsageError("--max-iter: must be at least 2");

    FibonacciSystem sys(f, c, ea, eb);
    Region region{center, width, height};
    PixelEvaluator eval;
    if (!sys.is_classical()) {
        if (a.flag("green"))
            throw UsageError("--green: needs the standard exponents 1,1");
        std::fprintf(stderr, "exponents %d,%d: falling back to raw escape times\n",
                     ea, eb);
        eval = heuristic_evaluator(sys, budget);
    } else if (a.flag("green")) {
        eval = green_evaluator(GreenEvaluator(sys), tol, budget);
    } else {
        eval = membership_evaluator(MembershipClassifier(sys), budget);
    }

    std::fprintf(stderr, "julia: %dx%d budget=%d workers=%d\n", W, H, budget,
                 resolve_workers(workers));
    RasterGrid grid = sample_grid(region, W, H, eval, tile, workers);
    colorize_and_write(grid, Palette::classic(), out, fmt, sys.degrees().rho());
    std::printf("wrote %s (%dx%d)\n", out.c_str(), W, H);
    return 0;
}

int cmd_locus(const Args& a) {
    Polynomial f = arg_poly(a, "f", "0,0,1");
    auto [W, H] = arg_res(a, "res", "512x512");
    int budget = arg_int(a, "budget", "1000");
    Complex center = arg_complex(a, "center", "0");
    double width = arg_double(a, "width", "4.5");
    double height = a.has("height") ? arg_double(a, "height", nullptr)
                                    : width * static_cast<double>(H) / W;
    std::string out = arg_raw(a, "out", "locus.ppm");
    ImageFormat fmt = arg_format(a, out);
    int tile = arg_int(a, "tile", "64");
    int workers = arg_int(a, "workers", "0");
    if (budget < 4) throw UsageError("--budget: must be at least 4");

    Region region{center, width, height};
    std::fprintf(stderr, "locus: %dx%d budget=%d workers=%d\n", W, H, budget,
                 resolve_workers(workers));
    RasterGrid grid = locus_grid(region, W, H, f, budget, tile, workers);
    double rho = (1.0 + std::sqrt(5.0)) / 2.0;
    colorize_and_write(grid, Palette::classic(), out, fmt, rho);
    std::printf("wrote %s (%dx%d)\n", out.c_str(), W, H);
    return 0;
}

int cmd_green(const Args& a) {
    Complex c = arg_complex(a, "c", nullptr);
    Complex z = arg_complex(a, "z", nullptr);
    Polynomial f = arg_poly(a, "f", "0,1");
    double tol = arg_double(a, "tol", "1e-9");
    int budget = arg_int(a, "budget", "2048");
    if (budget < 2) throw UsageError("--budget: must be at least 2");

    FibonacciSystem sys(f, c);
    GreenEstimate g = green_diag(z, sys, tol, budget);
    std::printf("value=%.17g errorBound=%.17g\n", g.value, g.errorBound);
    return 0;
}

int cmd_capacity(const Args& a) {
    Polynomial f = arg_poly(a, "f", "0,1");
    int terms = arg_int(a, "terms", "40");
    if (terms < 2) throw UsageError("--terms: must be at least 2");

    CapacityResult r = capacity_sigma(f, terms);
    std::printf("sigma=%.17g tail=%.17g\n", r.sigma, r.tailBound);
    return 0;
}

int cmd_membership(const Args& a) {
    Complex c = arg_complex(a, "c", nullptr);
    Complex z = arg_complex(a, "z", nullptr);
    Polynomial f = arg_poly(a, "f", "0,1");
    int budget = arg_int(a, "budget", "500");
    if (budget < 2) throw UsageError("--budget: must be at least 2");

    FibonacciSystem sys(f, c);
    MembershipVerdict v = classify_orbit(z, sys, budget);
    switch (v.kind) {
        case VerdictKind::Escaped:
            std::printf("{\"verdict\":\"Escaped\",\"reason\":\"%s\",\"atIndex\":%d}\n",
                        escape_reason_name(v.escapeReason), v.atIndex);
            break;
        case VerdictKind::ProvenInside:
            std::printf("{\"verdict\":\"ProvenInside\",\"reason\":\"%s\"}\n",
                        inside_reason_name(v.insideReason));
            break;
        default:
            std::printf(
                "{\"verdict\":\"Undecided\",\"budgetUsed\":%d,\"lastModulus\":%.17g}\n",
                v.budgetUsed, v.lastModulus);
            break;
    }
    return 0;
}

int cmd_boundary(const Args& a) {
    Complex c = arg_complex(a, "c", nullptr);
    int res = arg_int(a, "res", "1024");
    int budget = arg_int(a, "budget", "500");
    std::string out = arg_raw(a, "out", "boundary.csv");
    if (res < 64) throw UsageError("--res: must be at least 64");
    if (budget < 2) throw UsageError("--budget: must be at least 2");

    std::vector<Complex> poly = trace_boundary(c, res, budget);
    write_polyline_csv(poly, out);
    std::fprintf(stderr, "boundary: %zu vertices -> %s\n", poly.size(), out.c_str());
    std::printf("hausdorff=%.17g\n", hausdorff_distance_to_unit_circle(poly));
    return 0;
}

int cmd_verify(const Args& a) {
    AcceptanceOptions opts;
    opts.fast = a.flag("fast");
    int fails = run_acceptance(opts, std::cout);
    return fails == 0 ? 0 : 2;
}

int cmd_palette(const Args& a) {
    Palette pal = Palette::classic();
    std::string body = "index,r,g,b\n";
    for (int k = 0; k < 256; ++k) {
        char line[32];
        std::snprintf(line, sizeof line, "%d,%d,%d,%d\n", k, pal.entries[k].r,
                      pal.entries[k].g, pal.entries[k].b);
        body += line;
    }
    if (a.has("out")) {
        std::ofstream file(a.values.at("out"), std::ios::binary);
        if (!file) throw IoFailure("cannot open for writing: " + a.values.at("out"));
        file << body;
    } else {
        std::fputs(body.c_str(), stdout);
    }
    return 0;
}

void print_usage(std::FILE* to) {
    std::fputs(
        "usage: fibdyn <command> [--flag value ...]\n"
        "\n"
        "commands:\n"
        "  julia       filled-set image on the z plane\n"
        "              --c (required) --f 0,1 --res 1024x1024 --max-iter 500\n"
        "              --center 0 --width 4 --height (derived) --out julia.ppm\n"
        "              --format ppm|csv --green --tol 1e-9 --exponents 1,1\n"
        "              --tile 64 --workers 0\n"
        "  locus       bounded-parameter image on the c plane\n"
        "              --f 0,0,1 --res 512x512 --budget 1000 --center 0\n"
        "              --width 4.5 --height (derived) --out locus.ppm\n"
        "              --format ppm|csv --tile 64 --workers 0\n"
        "  green       escape rate at one point\n"
        "              --c (required) --z (required) --f 0,1 --tol 1e-9 --budget 2048\n"
        "  capacity    logarithmic size constant of the filled set\n"
        "              --f 0,1 --terms 40\n"
        "  membership  classify one point, one JSON line\n"
        "              --c (required) --z (required) --f 0,1 --budget 500\n"
        "  boundary    trace the filled-set boundary, compare to the unit circle\n"
        "              --c (required) --res 1024 --budget 500 --out boundary.csv\n"
        "  verify      built-in verification suite, seeded with 0x5EED\n"
        "              --fast for a reduced smoke pass\n"
        "\n"
        "complex values read as decimal a+bi (e.g. -0.5+0.5i); polynomials as\n"
        "comma-separated coefficients, constant first. FIBDYN_THREADS caps the\n"
        "default worker count. exit codes: 0 ok, 1 usage error, 2 verification\n"
        "failure, 3 numeric failure.\n",
        to);
}

int dispatch(int argc, char** argv) {
    if (argc < 2) {
        print_usage(stderr);
        return 1;
    }
    std::string cmd = argv[1];
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
        print_usage(stdout);
        return 0;
    }

    if (cmd == "julia") {
        ArgSpec spec{{"c", "f", "exponents", "res", "max-iter", "center", "width",
                      "height", "out", "format", "tol", "tile", "workers"},
                     {"green"}};
        return cmd_julia(parse_args(argc, argv, 2, spec));
    }
    if (cmd == "locus") {
        ArgSpec spec{{"f", "res", "budget", "center", "width", "height", "out",
                      "format", "tile", "workers"},
                     {}};
        return cmd_locus(parse_args(argc, argv, 2, spec));
    }
    if (cmd == "green") {
        ArgSpec spec{{"c", "z", "f", "tol", "budget"}, {}};
        return cmd_green(parse_args(argc, argv, 2, spec));
    }
    if (cmd == "capacity") {
        ArgSpec spec{{"f", "terms"}, {}};
        return cmd_capacity(parse_args(argc, argv, 2, spec));
    }
    if (cmd == "membership") {
        ArgSpec spec{{"c", "z", "f", "budget"}, {}};
        return cmd_membership(parse_args(argc, argv, 2, spec));
    }
    if (cmd == "boundary") {
        ArgSpec spec{{"c", "res", "budget", "out"}, {}};
        return cmd_boundary(parse_args(argc, argv, 2, spec));
    }
    if (cmd == "verify") {
        ArgSpec spec{{}, {"fast"}};
        return cmd_verify(parse_args(argc, argv, 2, spec));
    }
    if (cmd == "palette") {
        ArgSpec spec{{"out"}, {}};
        return cmd_palette(parse_args(argc, argv, 2, spec));
    }
    throw UsageError("unknown command '" + cmd + "' (try 'fibdyn help')");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "fibdyn: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "fibdyn: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "fibdyn: " << e.what() << "\n";
        return 3;
    }
}
