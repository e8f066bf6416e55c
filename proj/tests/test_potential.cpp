#include <cmath>

#include "doctest.h"
#include "fibdyn/errors.hpp"
#include "fibdyn/parse.hpp"
#include "fibdyn/potential.hpp"

using namespace fibdyn;

namespace {

FibonacciSystem identity_system(Complex c) {
    return FibonacciSystem(parse_polynomial("0,1"), c);
}

} // namespace

TEST_CASE("escape rate has a closed form at c=0") {
    FibonacciSystem sys = identity_system(Complex(0.0, 0.0));
    for (double r : {1.5, 3.0, 5.0, 50.0}) {
        GreenEstimate g = green_diag(Complex(r, 0.0), sys, 1e-12);
        CHECK(g.escaped);
        CHECK(g.errorBound <= 1e-12);
        CHECK(g.value == doctest::Approx(std::log(r)).epsilon(1e-11));
    }
}

TEST_CASE("escape rate is zero on certified-inside points") {
    FibonacciSystem sys = identity_system(Complex(0.0, 0.0));
    GreenEstimate g = green_diag(Complex(0.25, 0.1), sys, 1e-9);
    CHECK_FALSE(g.escaped);
    CHECK(g.value == 0.0);
    CHECK(g.errorBound == 0.0);
}

TEST_CASE("undecided points report the tolerance as their bound") {
    FibonacciSystem sys = identity_system(Complex(-0.5, 0.5));
    GreenEstimate g = green_diag(Complex(0.3, 0.1), sys, 1e-9, 8);
    CHECK_FALSE(g.escaped);
    CHECK(g.value == 0.0);
    CHECK(g.errorBound == 1e-9);
}

TEST_CASE("tightening the tolerance moves the value within the old bound") {
    FibonacciSystem sys = identity_system(Complex(-0.5, 0.5));
    for (Complex z : {Complex(2.5, 1.0), Complex(-3.0, 0.2), Complex(0.0, 1.7)}) {
        GreenEstimate coarse = green_diag(z, sys, 1e-9);
        GreenEstimate fine = green_diag(z, sys, 1e-13);
        CHECK(std::abs(coarse.value - fine.value) <= coarse.errorBound + 1e-13);
        CHECK(fine.errorBound <= 1e-13);
    }
}

TEST_CASE("two-variable rate agrees with the diagonal seed") {
    FibonacciSystem sys = identity_system(Complex(0.5, 0.0));
    Complex z(6.0, 1.0);
    GreenEstimate diag = green_diag(z, sys, 1e-10);
    GreenEstimate two = green_2d(sys.f()(z), z, sys, 1e-10);
    CHECK(two.value == doctest::Approx(diag.value).epsilon(1e-12));

    CHECK_THROWS_AS(green_2d(Complex(0.5, 0.0), Complex(0.5, 0.0), sys, 1e-9),
                    OutsideDomain);
}

TEST_CASE("plane map multiplies the rate by the growth exponent") {
    FibonacciSystem sys = identity_system(Complex(0.5, 0.0));
    double rho = sys.degrees().rho();
    for (Complex pair : {Complex(6.0, 7.0), Complex(9.0, 5.5), Complex(12.0, 8.0)}) {
        Complex w(pair.real(), 0.3), z(0.1, pair.imag());
        GreenEstimate before = green_2d(w, z, sys, 1e-9);
        Complex nw = w * z + sys.c();
        GreenEstimate after = green_2d(nw, w, sys, 1e-9);
        CHECK(after.value == doctest::Approx(rho * before.value).epsilon(1e-7));
    }
}

TEST_CASE("partial estimates converge at the degree rate") {
    FibonacciSystem sys = identity_system(Complex(0.0, 0.0));
    std::vector<double> seq = green_sequence(Complex(3.0, 0.0), sys, 30);
    REQUIRE(seq.size() == 31);
    for (double g : seq) CHECK(g == doctest::Approx(std::log(3.0)).epsilon(1e-12));

    FibonacciSystem sys2 = identity_system(Complex(-0.5, 0.5));
    GreenConstants gc = green_constants(sys2);
    std::vector<double> seq2 = green_sequence(Complex(2.2, 0.3), sys2, 25);
    for (std::size_t n = 5; n + 1 < seq2.size(); ++n) {
        double gap = std::abs(seq2[n + 1] - seq2[n]);
        CHECK(gap <= gc.C / sys2.degrees().degree(static_cast<int>(n) + 1));
    }
}

TEST_CASE("tail constants look sane for the identity seed") {
    GreenConstants gc = green_constants(identity_system(Complex(-0.5, 0.5)));
    CHECK(gc.rho == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
    CHECK(gc.R == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(gc.A > 0.0);
    CHECK(gc.D >= 1.0);
    CHECK(gc.C > gc.B);
    CHECK(gc.C < 100.0);
}

TEST_CASE("unreachable tolerances are reported, not silently missed") {
    FibonacciSystem sys = identity_system(Complex(-0.5, 0.5));
    CHECK_THROWS_AS(green_diag(Complex(3.0, 0.0), sys, 1e-30, 20), TolUnreachable);
}

TEST_CASE("capacity constant") {
    // monic seeds give exactly zero
    CapacityResult monic = capacity_sigma(parse_polynomial("0,1"), 40);
    CHECK(monic.sigma == 0.0);
    CHECK(monic.tailBound == 0.0);
    CHECK(capacity_sigma(parse_polynomial("0,0,1"), 40).sigma == 0.0);

    // f = 2z against a long-double evaluation of the alternating series
    CapacityResult r = capacity_sigma(parse_polynomial("0,2"), 40);
    long double fib[44];
    fib[0] = 1.0L;
    fib[1] = 1.0L;
    for (int n = 2; n < 44; ++n) fib[n] = fib[n - 1] + fib[n - 2];
    long double sum = 0.0L, sign = 1.0L;
    for (int n = 0; n < 40; ++n) {
        sum += sign / (fib[n] * fib[n + 1]);
        sign = -sign;
    }
    long double expected = std::log(2.0L) * sum;
    CHECK(r.sigma == doctest::Approx(static_cast<double>(expected)).epsilon(1e-14));
    // the series limit is log(2) divided by the golden ratio
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(r.sigma == doctest::Approx(std::log(2.0) / phi).epsilon(1e-13));
    CHECK(r.tailBound > 0.0);
    CHECK(r.tailBound < 1e-15);

    CHECK_THROWS_AS(capacity_sigma(parse_polynomial("5"), 40), PreconditionViolated);
    CHECK_THROWS_AS(capacity_sigma(parse_polynomial("0,1"), 1), PreconditionViolated);
}

TEST_CASE("normalized limit coordinate at c=0") {
    // at c = 0 with w = z = e^2 the limit is twice the degree coefficient
    FibonacciSystem sys = identity_system(Complex(0.0, 0.0));
    double e2 = std::exp(2.0);
    double lim = bottcher_log_modulus(Complex(e2, 0.0), Complex(e2, 0.0), sys);
    CHECK(lim == doctest::Approx(2.0 * sys.degrees().lambda0()).epsilon(1e-10));

    // and in general it is lambda0 times the two-variable rate
    FibonacciSystem sys2 = identity_system(Complex(0.25, 0.0));
    Complex w(9.0, 1.0), z(8.0, -2.0);
    GreenEstimate g = green_2d(w, z, sys2, 1e-11);
    double b = bottcher_log_modulus(w, z, sys2);
    CHECK(b == doctest::Approx(sys2.degrees().lambda0() * g.value).epsilon(1e-9));

    CHECK_THROWS_AS(bottcher_log_modulus(Complex(0.1, 0.0), Complex(0.1, 0.0), sys2),
                    OutsideDomain);
}
