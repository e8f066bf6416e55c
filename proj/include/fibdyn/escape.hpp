#pragma once

#include "fibdyn/system.hpp"

namespace fibdyn {

// Polynomial growth envelope: for every E >= delta,
//   |z| <= E        implies |f(z)| <= E^p,
//   |z| >= delta    implies |f(z)| >= d*|z|.
struct GrowthConstants {
    double delta = 1.0;
    int p = 2;
    double d = 1.0;
};

// delta = max(1, 2S/|a_k|, S + |a_k|) with S the sum of lower-order coefficient
// moduli; p = deg f + 1; d = |a_k| * delta^(k-1), halved when lower-order terms
// exist so the reverse triangle bound holds from |z| >= delta on.
// The implications are spot-checked on a fixed seeded sample after construction;
// a violation throws ConstructionFailed. Needs deg f >= 1.
GrowthConstants growth_constants(const Polynomial& f);

// Escape thresholds for the orbit classifier:
//   two consecutive moduli above M force escape; a single modulus above R does.
struct EscapeConstants {
    double M = 0.0;
    double R = 0.0;
    GrowthConstants growth;
    double margin = 1e-9;
};

// M = max(2, sqrt(2|c|), delta) + margin,
// R = max(M + 2|c|, M/d, M^p, 3) + margin, bumped if needed so R^2 - |c| > R.
// Classical exponents (1,1) only.
EscapeConstants escape_constants(const FibonacciSystem& sys);

// Smallest radius of the form 2^k * R at which the plane map's trapping
// estimates hold, so the bidisk of that radius maps over itself in the nested
// sense used by the two-variable potential.
double nesting_radius(const FibonacciSystem& sys);

} // namespace fibdyn
