#pragma once

#include "fibdyn/certificates.hpp"
#include "fibdyn/escape.hpp"
#include "fibdyn/system.hpp"

namespace fibdyn {

// Decides orbit fate for f_0 = z, f_1 = f(z), f_{n+1} = f_n * f_{n-1} + c.
//
// Inside certificates run before any iteration: the exact oracle at c = 0, the
// always-periodic witness pairs, and the small-|c| bidisk bound (the latter two
// only when f fixes z, so the orbit starts on the diagonal). Escapes are always
// detected through the iteration thresholds: two consecutive moduli above M, or
// a single modulus above R.
class MembershipClassifier {
public:
    explicit MembershipClassifier(FibonacciSystem sys);

    // budget >= 2 required. Checks run at steps 0..budget-1, plus a final
    // single-threshold check on f_budget.
    MembershipVerdict classify(Complex z, int budget, bool useCertificates = true) const;

    const EscapeConstants& constants() const { return esc_; }
    const FibonacciSystem& system() const { return sys_; }

private:
    FibonacciSystem sys_;
    EscapeConstants esc_;
    Complex fixed0_, fixed1_;
};

// One-shot convenience wrapper; builds the classifier (and its constants) per call.
MembershipVerdict classify_orbit(Complex z, const FibonacciSystem& sys, int budget,
                                 bool useCertificates = true);

} // namespace fibdyn
