#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <utility>

#include "fibdyn/system.hpp"

namespace fibdyn {

// Exponents of the invariant coordinates: the two roots of t^2 = t + 1.
inline const double kBeta1 = (1.0 + std::sqrt(5.0)) / 2.0;
inline const double kBeta2 = (1.0 - std::sqrt(5.0)) / 2.0;

enum class VerdictKind { Escaped, ProvenInside, Undecided };

enum class EscapeReason { ConsecutiveAboveM, SingleAboveR, OuterCertificate };

enum class InsideReason { ExactOracleC0, PeriodicWitness, BidiskCertificate };

struct MembershipVerdict {
    VerdictKind kind = VerdictKind::Undecided;
    EscapeReason escapeReason = EscapeReason::ConsecutiveAboveM;
    InsideReason insideReason = InsideReason::ExactOracleC0;
    int atIndex = 0;        // step at which an escape threshold fired
    int budgetUsed = 0;     // only meaningful for Undecided
    double lastModulus = 0; // only meaningful for Undecided

    static MembershipVerdict escaped(EscapeReason why, int at) {
        MembershipVerdict v;
        v.kind = VerdictKind::Escaped;
        v.escapeReason = why;
        v.atIndex = at;
        return v;
    }
    static MembershipVerdict inside(InsideReason why) {
        MembershipVerdict v;
        v.kind = VerdictKind::ProvenInside;
        v.insideReason = why;
        return v;
    }
    static MembershipVerdict undecided(int budget, double lastMod) {
        MembershipVerdict v;
        v.kind = VerdictKind::Undecided;
        v.budgetUsed = budget;
        v.lastModulus = lastMod;
        return v;
    }
};

// Position in the invariant coordinates R = |x|/|y|^beta1, S = |x|/|y|^beta2.
struct RSCoords {
    double R = 0.0;
    double S = 0.0;
};

// Throws DegenerateInput when y = 0.
RSCoords rs_coords(Complex x, Complex y);

// Exact filled-set oracle for c = 0: the pair (x, y) stays bounded under
// (x, y) -> (xy, x) iff |x|^beta1 * |y| <= 1.
bool k0_membership(Complex x, Complex y);

// Perturbative certificates for the diagonal pair (z, z), valid for any c with
// small enough modulus relative to the distance of |z| from 1:
//   |z| < 1 and |c| < delta - delta^2 (delta = min(1-|z|, 1/2)) proves the
//   orbit stays in the unit bidisk; |z| > 1 and |c| < delta^2 (delta = |z|-1)
//   proves escape. On the unit circle no conclusion is drawn.
std::optional<MembershipVerdict> small_c_certificate(Complex z, Complex c);

// Orbits bounded for every parameter value: the pair (-1,-1) lies on a 3-cycle
// of the plane map for all c, and the roots of z^2 - z + c = 0 give diagonal
// fixed pairs. cycleResidual reports the floating-point return error of the
// cycle (zero whenever -1-c rounds exactly, i.e. always in double).
struct SpecialPoints {
    std::array<std::pair<Complex, Complex>, 3> cycle;
    std::array<Complex, 2> fixedPoints;
    double cycleResidual = 0.0;
};

SpecialPoints special_points(Complex c);

} // namespace fibdyn
