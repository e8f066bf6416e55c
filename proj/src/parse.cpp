#include "fibdyn/parse.hpp"

#include <cctype>
#include <charconv>

#include "fibdyn/errors.hpp"

namespace fibdyn {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double_full(const std::string& s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first; // from_chars rejects a leading plus
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (first == last || ec != std::errc() || ptr != last)
        throw PreconditionViolated("not a number: '" + s + "'");
    return v;
}

// Value for the signed coefficient in front of 'i': "", "+", "-" mean 1, 1, -1.
double parse_imag_coeff(const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double_full(s);
}

} // namespace

Complex parse_complex(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw PreconditionViolated("empty complex literal");

    // Split point: last '+'/'-' that is not a leading sign and not part of an
    // exponent like 1e-3.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;
    }

    bool has_i = s.back() == 'i';
    if (has_i) {
        std::string body = s.substr(0, s.size() - 1);
        if (split == std::string::npos)
            return Complex(0.0, parse_imag_coeff(body));
        return Complex(parse_double_full(s.substr(0, split)),
                       parse_imag_coeff(body.substr(split)));
    }
    if (split != std::string::npos) {
        // Something like "1+2" with no imaginary marker.
        throw PreconditionViolated("malformed complex literal: '" + text + "'");
    }
    return Complex(parse_double_full(s), 0.0);
}

Polynomial parse_polynomial(const std::string& text) {
    std::vector<Complex> coeffs;
    std::size_t start = 0;
    const std::string s = text;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string piece = (comma == std::string::npos) ? s.substr(start)
                                                         : s.substr(start, comma - start);
        coeffs.push_back(parse_complex(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Polynomial(std::move(coeffs));
}

namespace {

int parse_int_full(const std::string& s) {
    int v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw PreconditionViolated("not an integer: '" + s + "'");
    return v;
}

} // namespace

std::pair<int, int> parse_resolution(const std::string& text) {
    std::string s = strip(text);
    std::size_t x = s.find('x');
    if (x == std::string::npos) x = s.find('X');
    int w, h;
    if (x == std::string::npos) {
        w = h = parse_int_full(s);
    } else {
        w = parse_int_full(s.substr(0, x));
        h = parse_int_full(s.substr(x + 1));
    }
    if (w <= 0 || h <= 0)
        throw PreconditionViolated("resolution must be positive: '" + text + "'");
    return {w, h};
}

std::pair<int, int> parse_exponents(const std::string& text) {
    std::string s = strip(text);
    std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw PreconditionViolated("exponents must be 'a,b': '" + text + "'");
    int a = parse_int_full(strip(s.substr(0, comma)));
    int b = parse_int_full(strip(s.substr(comma + 1)));
    if (a <= 0 || b <= 0)
        throw PreconditionViolated("exponents must be positive: '" + text + "'");
    return {a, b};
}

} // namespace fibdyn
