#include "fibdyn/certificates.hpp"

#include <cmath>

#include "fibdyn/errors.hpp"
#include "fibdyn/orbit.hpp"

namespace fibdyn {

RSCoords rs_coords(Complex x, Complex y) {
    double ay = std::abs(y);
    if (ay == 0.0) throw DegenerateInput("invariant coordinates undefined for y = 0");
    double ax = std::abs(x);
    return {ax / std::pow(ay, kBeta1), ax / std::pow(ay, kBeta2)};
}

bool k0_membership(Complex x, Complex y) {
    return std::pow(std::abs(x), kBeta1) * std::abs(y) <= 1.0;
}

std::optional<MembershipVerdict> small_c_certificate(Complex z, Complex c) {
    double az = std::abs(z);
    double ac = std::abs(c);
    if (az < 1.0) {
        double delta = std::min(1.0 - az, 0.5);
        if (ac < delta - delta * delta)
            return MembershipVerdict::inside(InsideReason::BidiskCertificate);
        return std::nullopt;
    }
    if (az > 1.0) {
        double delta = az - 1.0;
        if (ac < delta * delta)
            return MembershipVerdict::escaped(EscapeReason::OuterCertificate, 0);
        return std::nullopt;
    }
    return std::nullopt;
}

SpecialPoints special_points(Complex c) {
    SpecialPoints sp;
    std::pair<Complex, Complex> p{Complex(-1.0, 0.0), Complex(-1.0, 0.0)};
    for (int i = 0; i < 3; ++i) {
        sp.cycle[static_cast<std::size_t>(i)] = p;
        p = henon_step(p.first, p.second, c);
    }
    sp.cycleResidual = std::abs(p.first - sp.cycle[0].first) +
                       std::abs(p.second - sp.cycle[0].second);

    Complex root = std::sqrt(Complex(1.0, 0.0) - 4.0 * c);
    sp.fixedPoints[0] = (Complex(1.0, 0.0) + root) / 2.0;
    sp.fixedPoints[1] = (Complex(1.0, 0.0) - root) / 2.0;
    return sp;
}

} // namespace fibdyn
