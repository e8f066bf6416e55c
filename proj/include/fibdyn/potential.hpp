#pragma once

#include <vector>

#include "fibdyn/classify.hpp"
#include "fibdyn/escape.hpp"
#include "fibdyn/system.hpp"

namespace fibdyn {

inline constexpr int kDefaultGreenBudget = 2048;

// Constants entering the tail bound of the escape-rate series. With degrees d_n
// and growth rate rho, the error of the n-th partial estimate is at most
// C * sum_{k>n} 1/d_k once the orbit is in the escape regime.
struct GreenConstants {
    double A = 0.0;   // uniform per-step defect bound past the escape radius
    double B = 0.0;   // seed defect: coefficient bulk plus sampled circle defect
    double C = 0.0;   // C = D*A*rho/(rho-1) + B
    double D = 0.0;   // max over windows of d_{n-k-1} * rho^k / d_n
    double R = 0.0;   // escape radius the defect bound is calibrated to
    double rho = 0.0;
};

GreenConstants green_constants(const FibonacciSystem& sys);

struct GreenEstimate {
    double value = 0.0;
    double errorBound = 0.0;
    int termsUsed = 0;
    bool escaped = false;
};

// Escape rate of the diagonal orbit f_0 = z, f_1 = f(z):
//   g(z) = lim log+|f_n| / d_n.
// Classification runs first with the same budget: certified-inside points
// return exactly zero with zero error; undecided points return zero with the
// requested tolerance as the (generous) error bound. Escaped orbits are
// iterated, in value space and then in log space, until the tail bound drops
// below tol. Throws TolUnreachable if the budget runs out first.
GreenEstimate green_diag(Complex z, const FibonacciSystem& sys, double tol,
                         int budget = kDefaultGreenBudget);

// Two-variable escape rate of the plane map, normalized by the same degree
// sequence, so green_2d(f(z), z, ...) agrees with green_diag(z, ...) and
// composing with the plane map multiplies the value by rho. Requires both
// moduli above the escape radius; throws OutsideDomain otherwise.
GreenEstimate green_2d(Complex w, Complex z, const FibonacciSystem& sys, double tol,
                       int budget = kDefaultGreenBudget);

// Partial estimates g_n = log+|f_n| / d_n for n = 0..nMax (log-space continued
// once values outgrow doubles). Useful for inspecting the convergence rate.
std::vector<double> green_sequence(Complex z, const FibonacciSystem& sys, int nMax);

// Shared precomputation (escape constants, tail constants) for bulk evaluation.
class GreenEvaluator {
public:
    explicit GreenEvaluator(FibonacciSystem sys);

    GreenEstimate diag(Complex z, double tol, int budget = kDefaultGreenBudget) const;
    GreenEstimate two_var(Complex w, Complex z, double tol,
                          int budget = kDefaultGreenBudget) const;

    const MembershipClassifier& classifier() const { return classifier_; }
    const GreenConstants& constants() const { return gc_; }

private:
    MembershipClassifier classifier_;
    GreenConstants gc_;
};

struct CapacityResult {
    double sigma = 0.0;
    double tailBound = 0.0;
    int termsUsed = 0;
};

// Logarithmic size constant of the filled set:
//   sigma = log|lead(f)| * sum_{n=0}^{N-1} (-1)^n / (d_n d_{n+1}),
// an alternating series, so the truncation error is below the first omitted
// term. Exactly zero for monic f. Needs nTerms >= 2 and deg f >= 1.
CapacityResult capacity_sigma(const Polynomial& f, int nTerms);

// log-modulus of the normalized limit coordinate at (w, z):
//   lim log|h_n| / rho^n,
// where h_0 = z, h_1 = w. Requires both moduli above the escape radius.
// Proportional to green_2d with factor lambda0 of the degree sequence.
double bottcher_log_modulus(Complex w, Complex z, const FibonacciSystem& sys,
                            int nTerms = 64);

} // namespace fibdyn
