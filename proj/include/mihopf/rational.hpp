#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mihopf {

// Exact rational arithmetic everywhere in the algebraic layer.  cpp_rational is
// header-only, so the library stays free of link-time dependencies.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

// Parse "p/q" or "p" into an exact rational.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

// A bivariate index n in N_0^2 (the polynomial-letter exponents and the
// derivative multi-indices m).  d = 1, so there are exactly two components.
struct N2 {
    int a = 0, b = 0;

    auto operator<=>(const N2&) const = default;
    bool is_zero() const { return a == 0 && b == 0; }
    N2 operator+(const N2& o) const { return {a + o.a, b + o.b}; }
    // componentwise; caller must ensure o <= *this
    N2 operator-(const N2& o) const { return {a - o.a, b - o.b}; }
    bool leq(const N2& o) const { return a <= o.a && b <= o.b; }
    int weight(int w1, int w2) const { return a * w1 + b * w2; }
};

inline Int n2_factorial(const N2& n) { return factorial(n.a) * factorial(n.b); }
inline Int n2_binomial(const N2& n, const N2& k) { return binomial(n.a, k.a) * binomial(n.b, k.b); }

inline std::string n2_str(const N2& n) {
    return "(" + std::to_string(n.a) + "," + std::to_string(n.b) + ")";
}

} // namespace mihopf
