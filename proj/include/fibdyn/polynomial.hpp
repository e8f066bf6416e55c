#pragma once

#include <complex>
#include <string>
#include <vector>

namespace fibdyn {

using Complex = std::complex<double>;

// Dense univariate polynomial over C, coefficients in ascending order:
// coeffs[k] multiplies z^k. Trailing zero coefficients are trimmed on
// construction; the zero polynomial keeps a single zero coefficient.
class Polynomial {
public:
    Polynomial() : coeffs_{Complex(0.0, 0.0)} {}
    explicit Polynomial(std::vector<Complex> coeffs);

    // degree() of the zero polynomial is 0 by convention here; use is_zero()
    // to distinguish it from a nonzero constant.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;
    bool is_monomial() const; // exactly one nonzero coefficient, the leading one

    const std::vector<Complex>& coefficients() const { return coeffs_; }
    Complex leading_coefficient() const { return coeffs_.back(); }

    Complex operator()(Complex z) const; // Horner

    // Sum of |a_i| over i < degree (the lower-order mass used by the growth bounds).
    double lower_order_mass() const;
    double max_abs_coefficient() const;

    std::string to_string() const; // "z^2 + (0.5-0.5i)" style, for diagnostics

private:
    std::vector<Complex> coeffs_;
};

} // namespace fibdyn
