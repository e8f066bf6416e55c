#include "fibdyn/polynomial.hpp"

#include <cmath>
#include <sstream>

namespace fibdyn {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Complex(0.0, 0.0));
    while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
}

bool Polynomial::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0, 0.0);
}

bool Polynomial::is_monomial() const {
    if (is_zero()) return false;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
        if (coeffs_[i] != Complex(0.0, 0.0)) return false;
    return true;
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double Polynomial::lower_order_mass() const {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) s += std::abs(coeffs_[i]);
    return s;
}

double Polynomial::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& a : coeffs_) m = std::max(m, std::abs(a));
    return m;
}

namespace {

void append_complex(std::ostringstream& os, Complex a) {
    if (a.imag() == 0.0) {
        os << a.real();
    } else if (a.real() == 0.0) {
        os << a.imag() << "i";
    } else {
        os << "(" << a.real() << (a.imag() < 0 ? "" : "+") << a.imag() << "i)";
    }
}

} // namespace

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Complex a = coeffs_[static_cast<std::size_t>(k)];
        if (a == Complex(0.0, 0.0)) continue;
        if (!first) os << " + ";
        first = false;
        bool unit = (a == Complex(1.0, 0.0));
        if (k == 0) {
            append_complex(os, a);
        } else {
            if (!unit) {
                append_complex(os, a);
                os << "*";
            }
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace fibdyn
