#include "fibdyn/escape.hpp"

#include <cmath>
#include <random>

#include "fibdyn/errors.hpp"

namespace fibdyn {

namespace {

constexpr int kGrowthSamples = 1000;
constexpr std::uint64_t kGrowthSeed = 0xF1BD5EEDull;

void verify_growth(const Polynomial& f, const GrowthConstants& g) {
    std::mt19937_64 rng(kGrowthSeed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr double slack = 1e-12;
    const double twoPi = 2.0 * std::acos(-1.0);

    for (int s = 0; s < kGrowthSamples; ++s) {
        double E = g.delta * (1.0 + 9.0 * unit(rng));

        // |z| <= E must give |f(z)| <= E^p.
        double r = E * std::sqrt(unit(rng));
        double th = twoPi * unit(rng);
        Complex zin = std::polar(r, th);
        if (std::abs(f(zin)) > std::pow(E, g.p) * (1.0 + slack))
            throw ConstructionFailed("growth upper bound failed at sampled point");

        // |z| > E (and E >= delta) must give |f(z)| > d*E.
        double u = 1e-6 + 3.0 * unit(rng);
        Complex zout = std::polar(E * (1.0 + u), twoPi * unit(rng));
        if (std::abs(f(zout)) <= g.d * E * (1.0 - slack))
            throw ConstructionFailed("growth lower bound failed at sampled point");
    }
}

} // namespace

GrowthConstants growth_constants(const Polynomial& f) {
    if (f.is_zero() || f.degree() < 1)
        throw PreconditionViolated("growth constants need deg f >= 1");

    int k = f.degree();
    double lead = std::abs(f.leading_coefficient());
    double S = f.lower_order_mass();
    double c1 = S + lead;

    GrowthConstants g;
    g.delta = std::max({1.0, 2.0 * S / lead, c1});
    g.p = k + 1;
    double effLead = (S > 0.0) ? lead / 2.0 : lead;
    g.d = effLead * std::pow(g.delta, k - 1);

    verify_growth(f, g);
    return g;
}

EscapeConstants escape_constants(const FibonacciSystem& sys) {
    if (!sys.is_classical())
        throw UnsupportedExponents("escape constants need exponents (1,1)");

    EscapeConstants esc;
    esc.growth = growth_constants(sys.f());
    double absC = std::abs(sys.c());

    esc.M = std::max({2.0, std::sqrt(2.0 * absC), esc.growth.delta}) + esc.margin;
    esc.R = std::max({esc.M + 2.0 * absC, esc.M / esc.growth.d,
                      std::pow(esc.M, esc.growth.p), 3.0}) +
            esc.margin;
    // A single value above R must dominate the parameter one step later.
    if (esc.R * esc.R - absC <= esc.R)
        esc.R = (1.0 + std::sqrt(1.0 + 4.0 * absC)) / 2.0 + esc.margin;
    if (esc.R * esc.R - absC <= esc.R)
        throw ConstructionFailed("escape radius fixup failed");
    return esc;
}

double nesting_radius(const FibonacciSystem& sys) {
    EscapeConstants esc = escape_constants(sys);
    double absC = std::abs(sys.c());
    double R = esc.R;
    for (int k = 0; k < 200; ++k) {
        double h1 = R * (R - absC) / (R + absC);
        double h2 = (R * (1.0 + absC) + absC) * (R + absC) / (R * R * (R - absC));
        bool ok = (R + absC) / R <= R && h1 > 0.5 * R && (h1 - absC) / h2 > R;
        if (ok) return R;
        R *= 2.0;
    }
    throw ConstructionFailed("no nesting radius below the doubling cap");
}

} // namespace fibdyn
