#include "fibdyn/orbit.hpp"

#include <cmath>

#include "fibdyn/errors.hpp"

namespace fibdyn {

namespace {

Complex ipow(Complex z, int e) {
    Complex acc(1.0, 0.0);
    for (int i = 0; i < e; ++i) acc *= z;
    return acc;
}

double down(double x) { return std::nextafter(x, -1.0 / 0.0); }
double up(double x) { return std::nextafter(x, 1.0 / 0.0); }

} // namespace

OrbitPair iterate_step(const OrbitPair& pair, const FibonacciSystem& sys) {
    Complex next;
    if (sys.is_classical()) {
        next = pair.cur * pair.prev + sys.c();
    } else {
        next = ipow(pair.cur, sys.exp_a()) * ipow(pair.prev, sys.exp_b()) + sys.c();
    }
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag()) ||
        std::abs(next) > kValueCeiling) {
        throw NumericOverflow("orbit value exceeded the representable ceiling at step " +
                              std::to_string(pair.index + 2));
    }
    return {pair.cur, next, pair.index + 1};
}

LogOrbit log_orbit_from_pair(const OrbitPair& pair, const FibonacciSystem& sys) {
    if (!sys.is_classical())
        throw UnsupportedExponents("log-space orbits need exponents (1,1)");
    double mp = std::abs(pair.prev);
    double mc = std::abs(pair.cur);
    if (!(mp > 0.0) || !(mc > 0.0) || !std::isfinite(mp) || !std::isfinite(mc))
        throw PreconditionViolated("log-space seed needs finite nonzero moduli");
    double lp = std::log(mp);
    double lc = std::log(mc);
    return {{down(lp), up(lp)}, {down(lc), up(lc)}, pair.index};
}

LogOrbit log_orbit_extend(const LogOrbit& orbit, const FibonacciSystem& sys) {
    if (!sys.is_classical())
        throw UnsupportedExponents("log-space orbits need exponents (1,1)");
    double plo = orbit.prevLog.lo, phi = orbit.prevLog.hi;
    double clo = orbit.curLog.lo, chi = orbit.curLog.hi;
    double absC = std::abs(sys.c());
    if (!(plo > 0.0) || !(clo > 0.0))
        throw PreconditionViolated("log-space step needs positive lower bounds");
    double losum = plo + clo;
    // exp(losum) > 2|c| keeps the relative perturbation below 1/2.
    if (!(losum > std::log(2.0 * absC)) && absC > 0.0)
        throw PreconditionViolated("log-space step needs exp(lo_prev + lo_cur) > 2|c|");

    double eps = absC > 0.0 ? std::log1p(absC * std::exp(-losum)) : 0.0;
    Interval next{losum - eps, phi + chi + eps};
    // Two ulps outward: one for the product/sum rounding, one for the gap
    // between log1p(x) and -log(1-x) on the lower side.
    next.lo = down(down(next.lo));
    next.hi = up(up(next.hi));
    return {orbit.curLog, next, orbit.index + 1};
}

} // namespace fibdyn
