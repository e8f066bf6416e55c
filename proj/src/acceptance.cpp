#include "fibdyn/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "fibdyn/classify.hpp"
#include "fibdyn/contour.hpp"
#include "fibdyn/errors.hpp"
#include "fibdyn/locus.hpp"
#include "fibdyn/orbit.hpp"
#include "fibdyn/potential.hpp"
#include "fibdyn/raster.hpp"

namespace fibdyn {

namespace {

constexpr std::uint64_t kSeed = 0x5EEDull;

Polynomial identity_poly() {
    return Polynomial({Complex(0.0, 0.0), Complex(1.0, 0.0)});
}
Polynomial square_poly() {
    return Polynomial({Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Reporter {
    std::ostream& out;
    int failures = 0;

    void line(int id, const char* name, bool pass, const std::string& detail) {
        if (!pass) ++failures;
        char head[16];
        std::snprintf(head, sizeof(head), "%02d", id);
        out << (pass ? "[PASS] " : "[FAIL] ") << head << " " << name;
        if (!detail.empty()) out << " | " << detail;
        out << "\n";
    }

    void error(int id, const char* name, const std::string& what) {
        line(id, name, false, "exception: " + what);
    }
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

Complex random_disk(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double r = radius * std::sqrt(unit(rng));
    double th = 2.0 * std::acos(-1.0) * unit(rng);
    return std::polar(r, th);
}

// 01: verdicts at c = 0 must match the exact modulus criterion away from the
// unit circle.
void crit_oracle(Reporter& rep, bool fast) {
    const char* name = "oracle agreement at c=0";
    try {
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        const int samples = fast ? 2000 : 100000;
        const double exclusion = 1e-3;
        const double timeLimit = 2.0;

        FibonacciSystem sys(identity_poly(), Complex(0.0, 0.0));
        MembershipClassifier cls(sys);
        auto t0 = Clock::now();
        int checked = 0, mismatches = 0;
        for (int s = 0; s < samples; ++s) {
            Complex z(coord(rng), coord(rng));
            if (std::abs(std::abs(z) - 1.0) <= exclusion) continue;
            ++checked;
            MembershipVerdict v = cls.classify(z, 1000);
            bool bounded = v.kind != VerdictKind::Escaped;
            if (bounded != (std::abs(z) <= 1.0)) ++mismatches;
        }
        double secs = seconds_since(t0);
        rep.line(1, name, mismatches == 0 && secs < timeLimit,
                 fmt("checked=%d mismatches=%d time=%.2fs limit=%.0fs", checked,
                     mismatches, secs, timeLimit));
    } catch (const std::exception& e) {
        rep.error(1, name, e.what());
    }
}

// 02: (-1,-1) returns to itself after three plane-map steps for every c.
void crit_period3(Reporter& rep, bool fast) {
    const char* name = "period-3 pair at (-1,-1)";
    try {
        std::mt19937_64 rng(kSeed);
        const int samples = fast ? 100 : 1000;
        const double tol = 1e-12;
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            Complex c = random_disk(rng, 2.0);
            worst = std::max(worst, special_points(c).cycleResidual);
        }
        rep.line(2, name, worst < tol, fmt("samples=%d worst=%.3e tol=%.0e", samples,
                                           worst, tol));
    } catch (const std::exception& e) {
        rep.error(2, name, e.what());
    }
}

// 03: both roots of z^2 - z + c give diagonal fixed pairs.
void crit_fixed_points(Reporter& rep, bool fast) {
    const char* name = "diagonal fixed pairs";
    try {
        std::mt19937_64 rng(kSeed);
        const int samples = fast ? 100 : 1000;
        const double tol = 1e-10;
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            Complex c = random_disk(rng, 2.0);
            SpecialPoints sp = special_points(c);
            for (Complex z0 : sp.fixedPoints) {
                auto [x, y] = henon_step(z0, z0, c);
                worst = std::max(worst, std::abs(x - z0) + std::abs(y - z0));
            }
        }
        rep.line(3, name, worst < tol, fmt("samples=%d worst=%.3e tol=%.0e", samples,
                                           worst, tol));
    } catch (const std::exception& e) {
        rep.error(3, name, e.what());
    }
}

// 04: for f = z, c = 0 the escape rate is exactly log|z|.
void crit_green_closed_form(Reporter& rep, bool fast) {
    const char* name = "escape rate closed form at c=0";
    try {
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const int samples = fast ? 100 : 1000;
        const double tol = 1e-10;
        const double allowed = 1e-9;

        FibonacciSystem sys(identity_poly(), Complex(0.0, 0.0));
        GreenEvaluator ev(sys);
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            double r = 10.0 - 9.0 * unit(rng); // (1, 10]
            Complex z = std::polar(r, 2.0 * std::acos(-1.0) * unit(rng));
            GreenEstimate g = ev.diag(z, tol);
            worst = std::max(worst, std::abs(g.value - std::log(std::abs(z))));
        }
        rep.line(4, name, worst <= allowed,
                 fmt("samples=%d worst=%.3e allowed=%.0e", samples, worst, allowed));
    } catch (const std::exception& e) {
        rep.error(4, name, e.what());
    }
}

// 05: composing with the plane map multiplies the two-variable rate by rho.
void crit_functional_equation(Reporter& rep, bool fast) {
    const char* name = "plane-map functional equation";
    try {
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const int pairs = fast ? 20 : 100;
        const double tol = 1e-7;
        const double allowed = 1e-6;
        const double twoPi = 2.0 * std::acos(-1.0);

        double worst = 0.0;
        for (double cAbs : {0.0, 0.1, 0.5}) {
            FibonacciSystem sys(identity_poly(), Complex(cAbs, 0.0));
            GreenEvaluator ev(sys);
            const double R = ev.classifier().constants().R;
            const double rho = sys.degrees().rho();
            for (int s = 0; s < pairs; ++s) {
                Complex w = std::polar(R + 5.0 - 5.0 * unit(rng), twoPi * unit(rng));
                Complex z = std::polar(R + 5.0 - 5.0 * unit(rng), twoPi * unit(rng));
                double G = ev.two_var(w, z, tol).value;
                auto [w2, z2] = henon_step(w, z, sys.c());
                double G2 = ev.two_var(w2, z2, tol).value;
                worst = std::max(worst, std::abs(G2 - rho * G));
            }
        }
        rep.line(5, name, worst <= allowed,
                 fmt("pairs=%d worst=%.3e allowed=%.0e", 3 * pairs, worst, allowed));
    } catch (const std::exception& e) {
        rep.error(5, name, e.what());
    }
}

// 06: the size constant vanishes for monic seeds, matches an independent
// partial-sum computation for f = 2z, and appears in the large-|z| asymptotic.
void crit_capacity(Reporter& rep, bool) {
    const char* name = "capacity constant";
    try {
        const double matchTol = 1e-15;
        const double asympTol = 1e-3;

        bool zeroMonic = capacity_sigma(identity_poly(), 40).sigma == 0.0 &&
                         capacity_sigma(square_poly(), 40).sigma == 0.0;

        Polynomial f2z({Complex(0.0, 0.0), Complex(2.0, 0.0)});
        CapacityResult cap = capacity_sigma(f2z, 40);
        long double sum = 0.0L;
        std::uint64_t dPrev = 1, dCur = 1;
        long double sign = 1.0L;
        for (int n = 0; n < 40; ++n) {
            sum += sign / (static_cast<long double>(dPrev) * dCur);
            sign = -sign;
            std::uint64_t dNext = dCur + dPrev;
            dPrev = dCur;
            dCur = dNext;
        }
        long double brute = sum * std::log(2.0L);
        double mismatch = std::abs(cap.sigma - static_cast<double>(brute));

        FibonacciSystem sys(f2z, Complex(0.0, 0.0));
        GreenEstimate g = green_diag(Complex(1e4, 0.0), sys, 1e-9);
        double asympErr = std::abs((g.value - std::log(1e4)) - cap.sigma);

        bool pass = zeroMonic && mismatch <= matchTol && cap.tailBound <= matchTol &&
                    asympErr <= asympTol;
        rep.line(6, name, pass,
                 fmt("monic_zero=%d sigma=%.12f mismatch=%.2e tail=%.2e asymp_err=%.2e",
                     zeroMonic ? 1 : 0, cap.sigma, mismatch, cap.tailBound, asympErr));
    } catch (const std::exception& e) {
        rep.error(6, name, e.what());
    }
}

// 07: successive partial estimates differ by at most C/d_{n+1}.
void crit_cauchy(Reporter& rep, bool fast) {
    const char* name = "partial-estimate Cauchy rate";
    try {
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        const int samples = fast ? 100 : 1000;
        const int nMax = 41;

        FibonacciSystem sys(identity_poly(), Complex(-0.5, 0.5));
        GreenConstants gc = green_constants(sys);
        const DegreeSequence& ds = sys.degrees();
        int violations = 0;
        double worstRatio = 0.0;
        for (int s = 0; s < samples; ++s) {
            Complex z(coord(rng), coord(rng));
            std::vector<double> seq = green_sequence(z, sys, nMax);
            for (int n = 0; n + 1 <= nMax; ++n) {
                double diff = std::abs(seq[n + 1] - seq[n]);
                double cap = gc.C / ds.degree(n + 1);
                worstRatio = std::max(worstRatio, diff / cap);
                if (diff > cap) ++violations;
            }
        }
        rep.line(7, name, violations == 0,
                 fmt("samples=%d C=%.3f violations=%d worst_ratio=%.3f", samples, gc.C,
                     violations, worstRatio));
    } catch (const std::exception& e) {
        rep.error(7, name, e.what());
    }
}

// 08: parameter plane at budget 1e4: certainly-inside disk fully bounded,
// outside the outer radius fully escaping.
void crit_locus(Reporter& rep, bool fast) {
    const char* name = "parameter-plane sandwich";
    try {
        const int res = fast ? 128 : 512;
        const int budget = 10000;
        const double timeLimit = 30.0;

        Region region{Complex(0.0, 0.0), 4.4, 4.4};
        auto t0 = Clock::now();
        RasterGrid grid = locus_grid(region, res, res, square_poly(), budget, 64, 4);
        double secs = seconds_since(t0);

        int innerBad = 0, outerBad = 0;
        for (int j = 0; j < res; ++j) {
            for (int i = 0; i < res; ++i) {
                double ac = std::abs(pixel_point(region, res, res, i, j));
                PixelTag tag = grid.at(i, j).tag;
                if (ac <= 0.249 && tag == PixelTag::Escaped) ++innerBad;
                if (ac >= 2.01 && tag != PixelTag::Escaped) ++outerBad;
            }
        }
        rep.line(8, name, innerBad == 0 && outerBad == 0 && secs < timeLimit,
                 fmt("res=%d inner_bad=%d outer_bad=%d time=%.2fs limit=%.0fs", res,
                     innerBad, outerBad, secs, timeLimit));
    } catch (const std::exception& e) {
        rep.error(8, name, e.what());
    }
}

// 09: perturbative certificates at |c| = 0.05 agree with direct iteration.
void crit_small_c(Reporter& rep, bool fast) {
    const char* name = "small-parameter certificates";
    try {
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const int samples = fast ? 200 : 1000;
        const double twoPi = 2.0 * std::acos(-1.0);

        Complex c = std::polar(0.05, twoPi * unit(rng));
        FibonacciSystem sys(identity_poly(), c);
        MembershipClassifier cls(sys);

        int bad = 0;
        for (int s = 0; s < samples; ++s) {
            Complex z = std::polar(0.7 * std::sqrt(unit(rng)), twoPi * unit(rng));
            if (cls.classify(z, 10000).kind != VerdictKind::ProvenInside) ++bad;
            if (cls.classify(z, 10000, false).kind == VerdictKind::Escaped) ++bad;
        }
        for (int s = 0; s < samples; ++s) {
            Complex z = std::polar(1.25 + 0.75 * unit(rng), twoPi * unit(rng));
            auto cert = small_c_certificate(z, c);
            bool certOk = cert && cert->kind == VerdictKind::Escaped &&
                          cert->escapeReason == EscapeReason::OuterCertificate;
            MembershipVerdict it = cls.classify(z, 50, false);
            bool iterOk = it.kind == VerdictKind::Escaped &&
                          it.escapeReason == EscapeReason::ConsecutiveAboveM &&
                          it.atIndex <= 50;
            if (!certOk || !iterOk) ++bad;
        }
        rep.line(9, name, bad == 0, fmt("samples=%d violations=%d", 2 * samples, bad));
    } catch (const std::exception& e) {
        rep.error(9, name, e.what());
    }
}

// 10: at c = -2.5 the whole sampled imaginary segment escapes within 10 steps.
void crit_imaginary_axis(Reporter& rep, bool fast) {
    const char* name = "imaginary axis escape at c=-2.5";
    try {
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> xs(-3.0, 3.0);
        const int samples = fast ? 200 : 1000;

        FibonacciSystem sys(identity_poly(), Complex(-2.5, 0.0));
        MembershipClassifier cls(sys);
        int bad = 0;
        int worstIndex = 0;
        for (int s = 0; s < samples; ++s) {
            MembershipVerdict v = cls.classify(Complex(0.0, xs(rng)), 1000);
            if (v.kind != VerdictKind::Escaped || v.atIndex > 10)
                ++bad;
            else
                worstIndex = std::max(worstIndex, v.atIndex);
        }
        rep.line(10, name, bad == 0,
                 fmt("samples=%d violations=%d worst_step=%d", samples, bad, worstIndex));
    } catch (const std::exception& e) {
        rep.error(10, name, e.what());
    }
}

// 11: the single-threshold radius is forward-invariant along orbits.
void crit_nesting(Reporter& rep, bool fast) {
    const char* name = "threshold nesting";
    try {
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        const int samples = fast ? 1000 : 10000;

        FibonacciSystem sys(identity_poly(), Complex(-0.5, 0.5));
        const double R = escape_constants(sys).R;
        const Complex c = sys.c();
        int violations = 0;
        for (int s = 0; s < samples; ++s) {
            Complex z(coord(rng), coord(rng));
            Complex prev = z, cur = z;
            double prevAbs = std::abs(prev);
            for (int n = 0; n <= 50; ++n) {
                if (prevAbs > kLogSwitchThreshold && std::abs(cur) > kLogSwitchThreshold)
                    break;
                Complex next = cur * prev + c;
                prev = cur;
                cur = next;
                double curAbs = std::abs(prev); // |f_{n+1}|
                if (curAbs < R && prevAbs >= R) ++violations;
                prevAbs = curAbs;
            }
        }
        rep.line(11, name, violations == 0,
                 fmt("samples=%d R=%.6f violations=%d", samples, R, violations));
    } catch (const std::exception& e) {
        rep.error(11, name, e.what());
    }
}

// 12: traced boundaries approach the unit circle as |c| shrinks.
void crit_hausdorff(Reporter& rep, bool fast) {
    const char* name = "boundary Hausdorff continuity";
    try {
        const int res = fast ? 256 : 1024;
        const int budget = 500;
        const double bound0 = 2.0 * (4.0 / res);

        double dh0 = hausdorff_distance_to_unit_circle(
            trace_boundary(Complex(0.0, 0.0), res, budget));
        double dhA = hausdorff_distance_to_unit_circle(
            trace_boundary(Complex(0.1, 0.0), res, budget));
        double dhB = hausdorff_distance_to_unit_circle(
            trace_boundary(Complex(0.05, 0.0), res, budget));
        double dhC = hausdorff_distance_to_unit_circle(
            trace_boundary(Complex(0.01, 0.0), res, budget));

        bool pass = dh0 <= bound0 && dhA >= dhB && dhB >= dhC;
        rep.line(12, name, pass,
                 fmt("res=%d d0=%.5f bound=%.5f d(0.1)=%.5f d(0.05)=%.5f d(0.01)=%.5f",
                     res, dh0, bound0, dhA, dhB, dhC));
    } catch (const std::exception& e) {
        rep.error(12, name, e.what());
    }
}

// 13: reference renders are valid binary images, byte-stable across worker
// counts, and complete within the time limit.
void crit_figures(Reporter& rep, bool fast) {
    const char* name = "deterministic figure renders";
    try {
        const int res = fast ? 256 : 1024;
        const int budget = 500;
        const double timeLimit = 10.0;
        std::vector<int> workerSet = fast ? std::vector<int>{1, 2}
                                          : std::vector<int>{1, 2, 8};

        const Complex cs[2] = {Complex(-0.5, 0.5), Complex(0.36, 0.575)};
        const char* files[2] = {"acceptance_fig1_a.ppm", "acceptance_fig1_b.ppm"};
        Region region{Complex(0.0, 0.0), 4.0, 4.0};
        Palette pal = Palette::classic();

        bool identical = true, valid = true, fastEnough = true;
        double slowest = 0.0;
        for (int k = 0; k < 2; ++k) {
            FibonacciSystem sys(identity_poly(), cs[k]);
            MembershipClassifier cls(sys);
            PixelEvaluator eval = membership_evaluator(cls, budget);

            RasterGrid reference;
            double lastTime = 0.0;
            for (std::size_t wi = 0; wi < workerSet.size(); ++wi) {
                auto t0 = Clock::now();
                RasterGrid g = sample_grid(region, res, res, eval, 64, workerSet[wi]);
                lastTime = seconds_since(t0);
                if (wi == 0) {
                    reference = std::move(g);
                    continue;
                }
                for (std::size_t p = 0; p < reference.pixels.size(); ++p) {
                    const Pixel& a = reference.pixels[p];
                    const Pixel& b = g.pixels[p];
                    if (a.tag != b.tag || a.iter != b.iter || a.green != b.green) {
                        identical = false;
                        break;
                    }
                }
                if (wi + 1 == workerSet.size()) reference = std::move(g);
            }
            slowest = std::max(slowest, lastTime);
            if (lastTime >= timeLimit) fastEnough = false;

            write_ppm(reference, pal, files[k], sys.degrees().rho());
            std::ifstream in(files[k], std::ios::binary);
            std::ostringstream expect;
            expect << "P6\n" << res << " " << res << "\n255\n";
            std::string head(expect.str().size(), '\0');
            in.read(head.data(), static_cast<std::streamsize>(head.size()));
            in.seekg(0, std::ios::end);
            auto size = in.tellg();
            if (!in || head != expect.str() ||
                size != static_cast<std::streamoff>(head.size()) +
                            static_cast<std::streamoff>(3) * res * res)
                valid = false;
        }
        rep.line(13, name, identical && valid && fastEnough,
                 fmt("res=%d identical=%d valid_p6=%d slowest=%.2fs limit=%.0fs", res,
                     identical ? 1 : 0, valid ? 1 : 0, slowest, timeLimit));
    } catch (const std::exception& e) {
        rep.error(13, name, e.what());
    }
}

// 14: wall-clock speedup of the tiled kernel at 8 workers over 1.
void crit_scaling(Reporter& rep, bool fast) {
    const char* name = "parallel scaling";
    try {
        const int res = fast ? 512 : 2048;
        const int budget = 500;
        const double required = 3.0;

        FibonacciSystem sys(identity_poly(), Complex(-0.5, 0.5));
        MembershipClassifier cls(sys);
        PixelEvaluator eval = membership_evaluator(cls, budget);
        Region region{Complex(0.0, 0.0), 4.0, 4.0};

        auto timed = [&](int workers) {
            double best = 1e300;
            for (int rep2 = 0; rep2 < 2; ++rep2) {
                auto t0 = Clock::now();
                RasterGrid g = sample_grid(region, res, res, eval, 64, workers);
                best = std::min(best, seconds_since(t0));
                (void)g;
            }
            return best;
        };
        double t1 = timed(1);
        double t8 = timed(8);
        double speedup = t1 / t8;
        rep.line(14, name, speedup >= required,
                 fmt("res=%d t1=%.2fs t8=%.2fs speedup=%.2fx required=%.1fx", res, t1,
                     t8, speedup, required));
    } catch (const std::exception& e) {
        rep.error(14, name, e.what());
    }
}

} // namespace

int run_acceptance(const AcceptanceOptions& opts, std::ostream& out) {
    out << "environment: hardware_concurrency="
        << std::thread::hardware_concurrency()
        << " default_workers=" << resolve_workers(0)
        << (opts.fast ? " mode=fast" : " mode=full") << "\n";

    Reporter rep{out};
    crit_oracle(rep, opts.fast);
    crit_period3(rep, opts.fast);
    crit_fixed_points(rep, opts.fast);
    crit_green_closed_form(rep, opts.fast);
    crit_functional_equation(rep, opts.fast);
    crit_capacity(rep, opts.fast);
    crit_cauchy(rep, opts.fast);
    crit_locus(rep, opts.fast);
    crit_small_c(rep, opts.fast);
    crit_imaginary_axis(rep, opts.fast);
    crit_nesting(rep, opts.fast);
    crit_hausdorff(rep, opts.fast);
    crit_figures(rep, opts.fast);
    crit_scaling(rep, opts.fast);

    out << (rep.failures == 0 ? "all checks passed"
                              : fmt("%d check(s) failed", rep.failures))
        << "\n";
    return rep.failures;
}

} // namespace fibdyn
