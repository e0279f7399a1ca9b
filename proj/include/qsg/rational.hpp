#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace qsg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Malformed or out-of-contract input (CLI exit code 2).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Configured resource budget exceeded (CLI exit code 3).
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw input_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rat(num, den);  // cpp_rational keeps the reduced canonical form
}

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline Rat rat_pow(Rat base, long e) {
    if (e < 0) {
        if (base == 0) throw input_error("zero to a negative power");
        base = Rat(1) / base;
        e = -e;
    }
    Rat acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// Nonnegative square root in Q, when one exists.
inline std::optional<Rat> rat_sqrt_exact(const Rat& a) {
    if (a < 0) return std::nullopt;
    auto p = int_sqrt_exact(rat_num(a));
    if (!p) return std::nullopt;
    auto q = int_sqrt_exact(rat_den(a));
    if (!q) return std::nullopt;
    return make_rat(*p, *q);
}

// Canonical "p/q" with the sign on the numerator.
inline std::string rat_to_string(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

Rat rat_from_string(const std::string& s);

}  // namespace qsg
