#include <cmath>
#include <random>

#include "doctest.h"
#include "fibdyn/certificates.hpp"
#include "fibdyn/classify.hpp"
#include "fibdyn/errors.hpp"
#include "fibdyn/orbit.hpp"
#include "fibdyn/parse.hpp"

using namespace fibdyn;

TEST_CASE("invariant coordinates scale by the conjugate root under the map") {
    // With u = log|x|, v = log|y| the map (x,y) -> (xy,x) acts linearly, and
    // log R is an eigenvector: log R' = beta2 * log R, log S' = beta1 * log S.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mag(0.2, 5.0), arg(0.0, 6.28);
    for (int k = 0; k < 50; ++k) {
        Complex x = std::polar(mag(rng), arg(rng));
        Complex y = std::polar(mag(rng), arg(rng));
        RSCoords before = rs_coords(x, y);
        RSCoords after = rs_coords(x * y, x);
        CHECK(std::log(after.R) ==
              doctest::Approx(kBeta2 * std::log(before.R)).epsilon(1e-10));
        CHECK(std::log(after.S) ==
              doctest::Approx(kBeta1 * std::log(before.S)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(rs_coords(Complex(1.0, 0.0), Complex(0.0, 0.0)), DegenerateInput);
}

TEST_CASE("zero-parameter membership oracle") {
    CHECK(k0_membership(Complex(0.5, 0.0), Complex(0.5, 0.0)));
    CHECK_FALSE(k0_membership(Complex(2.0, 0.0), Complex(2.0, 0.0)));
    // unit torus points sit exactly on the boundary and count as members
    CHECK(k0_membership(Complex(0.0, 1.0), Complex(-1.0, 0.0)));
    CHECK(k0_membership(Complex(1.0, 0.0), Complex(1.0, 0.0)));
    // membership is invariant along orbits of the plane map at c = 0
    Complex x(0.9, 0.1), y(0.3, -0.5);
    bool member = k0_membership(x, y);
    for (int n = 0; n < 12; ++n) {
        auto [nx, ny] = henon_step(x, y, Complex(0.0, 0.0));
        x = nx;
        y = ny;
        CHECK(k0_membership(x, y) == member);
    }
}

TEST_CASE("small-parameter certificates split at the unit circle") {
    // inside: |c| < delta - delta^2 with delta = min(1-|z|, 1/2)
    auto in = small_c_certificate(Complex(0.5, 0.0), Complex(0.1, 0.0));
    REQUIRE(in.has_value());
    CHECK(in->kind == VerdictKind::ProvenInside);
    CHECK(in->insideReason == InsideReason::BidiskCertificate);

    CHECK_FALSE(small_c_certificate(Complex(0.5, 0.0), Complex(0.3, 0.0)).has_value());

    // outside: |c| < delta^2 with delta = |z| - 1
    auto out = small_c_certificate(Complex(1.5, 0.0), Complex(0.2, 0.0));
    REQUIRE(out.has_value());
    CHECK(out->kind == VerdictKind::Escaped);
    CHECK(out->escapeReason == EscapeReason::OuterCertificate);
    CHECK(out->atIndex == 0);

    CHECK_FALSE(small_c_certificate(Complex(1.0, 0.0), Complex(0.01, 0.0)).has_value());
}

TEST_CASE("always-bounded special points") {
    Complex c(0.3, -0.2);
    SpecialPoints sp = special_points(c);
    CHECK(sp.cycleResidual < 1e-15);
    CHECK(sp.cycle[0].first == Complex(-1.0, 0.0));
    CHECK(sp.cycle[0].second == Complex(-1.0, 0.0));

    // the cycle really is a 3-cycle of the plane map
    auto [w, z] = sp.cycle[0];
    for (int k = 0; k < 3; ++k) {
        auto [nw, nz] = henon_step(w, z, c);
        w = nw;
        z = nz;
    }
    CHECK(std::abs(w - sp.cycle[0].first) < 1e-14);
    CHECK(std::abs(z - sp.cycle[0].second) < 1e-14);

    for (Complex p : sp.fixedPoints)
        CHECK(std::abs(p * p - p + c) < 1e-14);
}

TEST_CASE("classifier certificates fire before iteration") {
    FibonacciSystem sys0(parse_polynomial("0,1"), Complex(0.0, 0.0));
    MembershipClassifier cls0(sys0);
    MembershipVerdict v = cls0.classify(Complex(0.5, 0.25), 100);
    CHECK(v.kind == VerdictKind::ProvenInside);
    CHECK(v.insideReason == InsideReason::ExactOracleC0);
    // just outside the disk the oracle says no, and iteration finishes the job
    MembershipVerdict w = cls0.classify(Complex(1.0000001, 0.0), 100);
    CHECK(w.kind == VerdictKind::Escaped);

    FibonacciSystem sys(parse_polynomial("0,1"), Complex(-0.5, 0.5));
    MembershipClassifier cls(sys);
    MembershipVerdict fixed = cls.classify(Complex(-1.0, 0.0), 100);
    CHECK(fixed.kind == VerdictKind::ProvenInside);
    CHECK(fixed.insideReason == InsideReason::PeriodicWitness);

    SpecialPoints sp = special_points(sys.c());
    for (Complex p : sp.fixedPoints) {
        MembershipVerdict fv = cls.classify(p, 100);
        CHECK(fv.kind == VerdictKind::ProvenInside);
        CHECK(fv.insideReason == InsideReason::PeriodicWitness);
    }
}

TEST_CASE("classifier verdicts on plain orbits") {
    FibonacciSystem sys(parse_polynomial("0,1"), Complex(-0.5, 0.5));
    MembershipClassifier cls(sys);

    MembershipVerdict esc = cls.classify(Complex(0.0, 1.7), 1000);
    CHECK(esc.kind == VerdictKind::Escaped);
    CHECK(esc.escapeReason == EscapeReason::ConsecutiveAboveM);
    CHECK(esc.atIndex == 2);

    MembershipVerdict und = cls.classify(Complex(0.3, 0.1), 5, false);
    CHECK(und.kind == VerdictKind::Undecided);
    CHECK(und.budgetUsed == 5);
    CHECK(und.lastModulus > 0.0);
    CHECK(und.lastModulus < cls.constants().M);

    CHECK_THROWS_AS(cls.classify(Complex(0.0, 0.0), 1), PreconditionViolated);
}
