// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <ostream>

#include "bicx/errors.hpp"
#include "bicx/scalar.hpp"

namespace bicx {

//! re + im*i1 over a scalar ring, i1^2 = -1.
template<Scalar T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(T r) : re(std::move(r)), im(0) {}
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    static Complex i() { return {T(0), T(1)}; }

    bool is_zero() const
    {
        return scalar_traits<T>::is_zero(re) && scalar_traits<T>::is_zero(im);
    }

    Complex conj() const { return {re, -im}; }

    //! z * conj(z), a real scalar.
    T norm() const { return re * re + im * im; }

    //! Multiplication by i1.
    Complex times_i() const { return {-im, re}; }

    Complex reciprocal() const
    {
        if (is_zero()) {
            throw NonInvertible("complex zero has no reciprocal");
        }
        const T n = norm();
        return {re / n, -im / n};
    }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const T& s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

/*!
 * Principal square root, or nullopt when it is not representable.
 *
 * For rationals the root of x + y*i1 exists iff r = |x + y*i1| is rational
 * and (x + r)/2 (or -x when y = 0) is a rational square.
 */
template<Scalar T>
std::optional<Complex<T>> principal_sqrt(const Complex<T>& z)
{
    using traits = scalar_traits<T>;
    if (traits::is_zero(z.im)) {
        if (!(z.re < T(0))) {
            auto r = traits::sqrt(z.re);
            if (!r) {
                return std::nullopt;
            }
            return Complex<T>{*r, T(0)};
        }
        auto r = traits::sqrt(-z.re);
        if (!r) {
            return std::nullopt;
        }
        return Complex<T>{T(0), *r};
    }
    auto modulus = traits::sqrt(z.norm());
    if (!modulus) {
        return std::nullopt;
    }
    auto u = traits::sqrt((z.re + *modulus) / T(2));
    if (!u || traits::is_zero(*u)) {
        return std::nullopt;
    }
    return Complex<T>{*u, z.im / (T(2) * *u)};
}

template<Scalar T>
std::ostream& operator<<(std::ostream& os, const Complex<T>& z)
{
    return os << '(' << scalar_traits<T>::to_string(z.re) << ", " << scalar_traits<T>::to_string(z.im) << ')';
}

}  // namespace bicx
