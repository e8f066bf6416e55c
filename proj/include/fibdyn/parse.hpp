#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fibdyn/polynomial.hpp"

namespace fibdyn {

// Parses "1.5", "-0.5+0.5i", "2i", "i", "-i", "1e-3-2e-4i". Locale-independent.
// Throws PreconditionViolated on malformed input.
Complex parse_complex(const std::string& text);

// Comma-separated coefficients in ascending order: "0,1" is z, "0,0,1" is z^2.
Polynomial parse_polynomial(const std::string& text);

// "1024x768" or a bare "512" (square). Throws on nonpositive or malformed sizes.
std::pair<int, int> parse_resolution(const std::string& text);

// "a,b" with positive integers.
std::pair<int, int> parse_exponents(const std::string& text);

} // namespace fibdyn
