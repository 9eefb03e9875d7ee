#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qmt/error.hpp"

namespace qmt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("int64 overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("int64 overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("int64 overflow in multiplication");
    return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

// INT64_MIN / -1 is the only overflowing quotient.
inline std::int64_t div(std::int64_t a, std::int64_t b)
{
    if (b == -1)
        return neg(a);
    return a / b;
}

inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt neg(const BigInt& a) { return -a; }
inline BigInt div(const BigInt& a, const BigInt& b) { return a / b; }

}  // namespace checked

/// Narrow a BigInt to int64, throwing OverflowError when it does not fit.
std::int64_t narrow(const BigInt& v);

/// "p/q" or "p" (denominator 1).
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws Error(invalid_input) on malformed text.
Rational parse_rational(const std::string& text);

}  // namespace qmt
