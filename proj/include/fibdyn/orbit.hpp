#pragma once

#include <utility>

#include "fibdyn/system.hpp"

namespace fibdyn {

// Where orbit tracking changes representation and where it gives up.
// Once two consecutive moduli exceed kLogSwitchThreshold the caller should move
// to LogOrbit; iterate_step itself only throws when a value passes
// kValueCeiling, beyond which the next product could leave double range.
inline constexpr double kLogSwitchThreshold = 1e100;
inline constexpr double kValueCeiling = 1e306;

// Two consecutive orbit values: prev = f_index, cur = f_{index+1}.
struct OrbitPair {
    Complex prev;
    Complex cur;
    int index = 0;
};

// One recurrence step f_{n+2} = f_{n+1}^a * f_n^b + c.
// Throws NumericOverflow if the new value is not finite or exceeds kValueCeiling.
OrbitPair iterate_step(const OrbitPair& pair, const FibonacciSystem& sys);

// The plane map H_c(w, z) = (w*z + c, w). Applied to (f_{n+1}, f_n) it yields
// (f_{n+2}, f_{n+1}); the product is written exactly as in iterate_step so both
// paths produce bit-identical values.
inline std::pair<Complex, Complex> henon_step(Complex w, Complex z, Complex c) {
    return {w * z + c, w};
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
};

// Interval enclosures of log|f_index| and log|f_{index+1}| for orbits that have
// outgrown value space.
struct LogOrbit {
    Interval prevLog;
    Interval curLog;
    int index = 0;
};

// Seeds a LogOrbit from exact values; intervals are point logs opened outward
// by one ulp to absorb the rounding of log itself.
LogOrbit log_orbit_from_pair(const OrbitPair& pair, const FibonacciSystem& sys);

// One recurrence step in log space: valid once both moduli exceed max(1, 2|c|),
// i.e. both lower bounds are positive and exp(lo_prev + lo_cur) > 2|c|.
// The additive error per step is log1p(|c| / exp(lo_prev + lo_cur)), applied
// symmetrically and then opened outward to keep the enclosure rigorous.
// Only the classical exponents (1,1) are supported.
LogOrbit log_orbit_extend(const LogOrbit& orbit, const FibonacciSystem& sys);

} // namespace fibdyn
