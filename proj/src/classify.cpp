#include "fibdyn/classify.hpp"

#include <cmath>

#include "fibdyn/errors.hpp"

namespace fibdyn {

MembershipClassifier::MembershipClassifier(FibonacciSystem sys)
    : sys_(std::move(sys)), esc_(escape_constants(sys_)) {
    Complex root = std::sqrt(Complex(1.0, 0.0) - 4.0 * sys_.c());
    fixed0_ = (Complex(1.0, 0.0) + root) / 2.0;
    fixed1_ = (Complex(1.0, 0.0) - root) / 2.0;
}

MembershipVerdict MembershipClassifier::classify(Complex z, int budget,
                                                 bool useCertificates) const {
    if (budget < 2)
        throw PreconditionViolated("orbit classification needs budget >= 2");

    const Complex c = sys_.c();
    const Complex w = sys_.f()(z);

    if (useCertificates) {
        if (c == Complex(0.0, 0.0) && k0_membership(w, z))
            return MembershipVerdict::inside(InsideReason::ExactOracleC0);
        if (w == z) {
            if (z == Complex(-1.0, 0.0) || z == fixed0_ || z == fixed1_)
                return MembershipVerdict::inside(InsideReason::PeriodicWitness);
            auto cert = small_c_certificate(z, c);
            if (cert && cert->kind == VerdictKind::ProvenInside) return *cert;
        }
    }

    const double M2 = esc_.M * esc_.M;
    const double R2 = esc_.R * esc_.R;
    Complex prev = z;
    Complex cur = w;
    for (int n = 0; n < budget; ++n) {
        if (std::norm(prev) > M2 && std::norm(cur) > M2)
            return MembershipVerdict::escaped(EscapeReason::ConsecutiveAboveM, n);
        if (std::norm(prev) > R2)
            return MembershipVerdict::escaped(EscapeReason::SingleAboveR, n);
        Complex next = cur * prev + c;
        prev = cur;
        cur = next;
    }
    if (std::norm(prev) > R2)
        return MembershipVerdict::escaped(EscapeReason::SingleAboveR, budget);
    return MembershipVerdict::undecided(budget, std::abs(prev));
}

MembershipVerdict classify_orbit(Complex z, const FibonacciSystem& sys, int budget,
                                 bool useCertificates) {
    return MembershipClassifier(sys).classify(z, budget, useCertificates);
}

} // namespace fibdyn
