#include "fibdyn/system.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "fibdyn/errors.hpp"

namespace fibdyn {

DegreeSequence::DegreeSequence(int degF, int expA, int expB) : a_(expA), b_(expB) {
    if (degF < 0) throw PreconditionViolated("degree sequence needs deg f >= 0");
    if (expA <= 0 || expB <= 0)
        throw PreconditionViolated("recurrence exponents must be positive");

    rho_ = (expA + std::sqrt(static_cast<double>(expA) * expA + 4.0 * expB)) / 2.0;
    if (expA == 1 && expB == 1) {
        lambda0_ = (degF + rho_ - 1.0) / std::sqrt(5.0);
        lambda1_ = 1.0 - lambda0_;
    } else {
        lambda0_ = std::numeric_limits<double>::quiet_NaN();
        lambda1_ = std::numeric_limits<double>::quiet_NaN();
    }

    deg_.resize(kHorizon + 1);
    deg_[0] = 1.0;
    deg_[1] = static_cast<double>(degF);

    // Exact while the next value stays below 2^62, switch to double after.
    constexpr std::int64_t kExactCap = std::int64_t(1) << 62;
    std::int64_t prevI = 1, curI = degF;
    bool exact = true;
    for (int n = 2; n <= kHorizon; ++n) {
        if (exact) {
            bool safe = curI < kExactCap / (expA + 1) && prevI < kExactCap / (expB + 1);
            if (safe) {
                std::int64_t next = expA * curI + expB * prevI;
                prevI = curI;
                curI = next;
                deg_[n] = static_cast<double>(next);
                continue;
            }
            exact = false;
        }
        deg_[n] = expA * deg_[n - 1] + expB * deg_[n - 2];
    }

    // Suffix sums of 1/d_k. Degrees can be zero up front (f constant); skip those.
    invTail_.assign(kHorizon + 1, 0.0);
    closing_ = deg_[kHorizon] > 0.0 ? 3.0 / deg_[kHorizon] : 0.0;
    invTail_[kHorizon] = closing_;
    for (int n = kHorizon - 1; n >= 0; --n)
        invTail_[n] = invTail_[n + 1] + (deg_[n + 1] > 0.0 ? 1.0 / deg_[n + 1] : 0.0);
}

double DegreeSequence::degree(int n) const {
    if (n < 0) throw PreconditionViolated("degree index must be >= 0");
    if (n > kHorizon) return std::numeric_limits<double>::infinity();
    return deg_[n];
}

double DegreeSequence::inv_tail(int n) const {
    if (n < 0) throw PreconditionViolated("inv_tail index must be >= 0");
    if (n >= kHorizon) return closing_;
    return invTail_[n];
}

FibonacciSystem::FibonacciSystem(Polynomial f, Complex c, int expA, int expB)
    : f_(std::move(f)), c_(c), a_(expA), b_(expB), degrees_(f_.degree(), expA, expB) {}

} // namespace fibdyn
