#pragma once

#include <utility>
#include <vector>

#include "fibdyn/polynomial.hpp"

namespace fibdyn {

// Degrees of the iterates: d_0 = 1, d_1 = deg f, d_{n+1} = a*d_n + b*d_{n-1}.
// Values are exact (accumulated in int64) until they would exceed 2^62, then
// carried in double. Precomputed to a fixed horizon; beyond it degree() is
// +infinity and inv_tail() falls back to the closing bound, which keeps every
// consumer's error estimate an overestimate.
class DegreeSequence {
public:
    static constexpr int kHorizon = 512;

    DegreeSequence(int degF, int expA, int expB);

    double degree(int n) const;   // d_n (exact as double while representable)
    double inv_tail(int n) const; // upper bound for sum_{k>n} 1/d_k

    // Dominant growth rate (a + sqrt(a^2+4b))/2; the golden ratio for (1,1).
    double rho() const { return rho_; }

    // Coefficients of d_n ~ lambda0*rho^n + lambda1*(-1/rho)^n. Only defined
    // for the classical exponents (1,1); NaN otherwise.
    double lambda0() const { return lambda0_; }
    double lambda1() const { return lambda1_; }

    int exp_a() const { return a_; }
    int exp_b() const { return b_; }

private:
    int a_, b_;
    double rho_, lambda0_, lambda1_;
    std::vector<double> deg_;
    std::vector<double> invTail_;
    double closing_;
};

// One dynamical system: the seed polynomial f, the parameter c, and the
// recurrence exponents (a, b) in f_{n+1} = f_n^a * f_{n-1}^b + c.
class FibonacciSystem {
public:
    FibonacciSystem(Polynomial f, Complex c, int expA = 1, int expB = 1);

    const Polynomial& f() const { return f_; }
    Complex c() const { return c_; }
    int exp_a() const { return a_; }
    int exp_b() const { return b_; }
    bool is_classical() const { return a_ == 1 && b_ == 1; }

    const DegreeSequence& degrees() const { return degrees_; }

private:
    Polynomial f_;
    Complex c_;
    int a_, b_;
    DegreeSequence degrees_;
};

} // namespace fibdyn
