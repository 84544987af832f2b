// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "bicx/errors.hpp"

namespace bicx {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/*!
 * Per-scalar hooks used by the generic algebra.
 *
 * Two rings are supported: \c Rational (exact, used for every structural
 * check) and \c double (casual evaluation). Rationals are kept in lowest
 * terms with a positive denominator by the backend.
 */
template<class T>
struct scalar_traits;

template<>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;

    static Rational from_rational(const Rational& q) { return q; }

    static bool is_zero(const Rational& x) { return x.is_zero(); }

    //! Exact square root, if \p x is the square of a rational.
    static std::optional<Rational> sqrt(const Rational& x)
    {
        if (x < 0) {
            return std::nullopt;
        }
        const Integer num = boost::multiprecision::numerator(x);
        const Integer den = boost::multiprecision::denominator(x);
        const Integer rn = boost::multiprecision::sqrt(num);
        const Integer rd = boost::multiprecision::sqrt(den);
        if (rn * rn != num || rd * rd != den) {
            return std::nullopt;
        }
        return Rational(rn, rd);
    }

    static std::string to_string(const Rational& x) { return x.str(); }

    static void check(const Rational&) {}
};

template<>
struct scalar_traits<double> {
    static constexpr bool exact = false;

    static double from_rational(const Rational& q) { return q.convert_to<double>(); }

    static bool is_zero(double x) { return x == 0.0; }

    static std::optional<double> sqrt(double x)
    {
        if (x < 0) {
            return std::nullopt;
        }
        return std::sqrt(x);
    }

    //! Shortest representation that round-trips.
    static std::string to_string(double x)
    {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof(buf), x);
        return std::string(buf, res.ptr);
    }

    static void check(double x)
    {
        if (!std::isfinite(x)) {
            throw Overflow("non-finite value in floating-point evaluation");
        }
    }
};

template<class T>
concept Scalar = requires(const T& a, const T& b) {
    { scalar_traits<T>::exact } -> std::convertible_to<bool>;
    { a + b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { a < b } -> std::convertible_to<bool>;
};

/*!
 * Parse an unsigned decimal literal ("12", "0.125") exactly.
 *
 * Returns nullopt on malformed input.
 */
inline std::optional<Rational> parse_decimal(std::string_view text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    Integer digits = 0;
    Integer scale = 1;
    bool seen_point = false;
    bool seen_digit = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_point) {
                return std::nullopt;
            }
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits = digits * 10 + (c - '0');
            if (seen_point) {
                scale *= 10;
            }
            seen_digit = true;
        } else {
            return std::nullopt;
        }
    }
    if (!seen_digit) {
        return std::nullopt;
    }
    return Rational(digits, scale);
}

}  // namespace bicx
