// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "bicx/complex.hpp"
#include "bicx/errors.hpp"
#include "bicx/scalar.hpp"

namespace bicx {

//---------------------------------------------------------------------------//
/*!
 * Real-coordinate view x1 + xi1*i1 + xi2*i2 + xj1*j1 of a bicomplex number.
 */
template<Scalar T>
struct Vec4 {
    std::array<T, 4> c{};

    Vec4() = default;
    Vec4(T x1, T xi1, T xi2, T xj1) : c{std::move(x1), std::move(xi1), std::move(xi2), std::move(xj1)} {}

    const T& x1() const { return c[0]; }
    const T& xi1() const { return c[1]; }
    const T& xi2() const { return c[2]; }
    const T& xj1() const { return c[3]; }

    T& operator[](std::size_t k) { return c[k]; }
    const T& operator[](std::size_t k) const { return c[k]; }

    bool is_zero() const
    {
        return std::all_of(c.begin(), c.end(), [](const T& x) { return scalar_traits<T>::is_zero(x); });
    }

    friend T dot(const Vec4& a, const Vec4& b)
    {
        T acc(0);
        for (std::size_t k = 0; k < 4; ++k) {
            acc += a.c[k] * b.c[k];
        }
        return acc;
    }
    friend Vec4 operator+(const Vec4& a, const Vec4& b)
    {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend Vec4 operator-(const Vec4& a, const Vec4& b)
    {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    friend Vec4 operator*(const T& s, const Vec4& a) { return {s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]}; }
    friend bool operator==(const Vec4& a, const Vec4& b) { return a.c == b.c; }
    friend bool operator<(const Vec4& a, const Vec4& b) { return a.c < b.c; }
};

//---------------------------------------------------------------------------//
/*!
 * Bicomplex number z1 + z2*i2 with z1, z2 complex over i1.
 *
 * Multiplication follows
 * \f[ (z_1 + z_2 i_2)(w_1 + w_2 i_2) = (z_1 w_1 - z_2 w_2) + (z_1 w_2 + z_2 w_1) i_2 \f]
 * and makes the set a commutative ring with zero divisors. The hyperbolic
 * unit is j1 = i1*i2 (j1^2 = 1) and the idempotents are e1 = (1 + j1)/2,
 * e2 = (1 - j1)/2.
 */
template<Scalar T>
struct Bicomplex {
    Complex<T> z1;
    Complex<T> z2;

    Bicomplex() = default;
    Bicomplex(Complex<T> a, Complex<T> b) : z1(std::move(a)), z2(std::move(b)) {}

    static Bicomplex real(T x) { return {Complex<T>{std::move(x), T(0)}, Complex<T>{}}; }
    static Bicomplex zero() { return real(T(0)); }
    static Bicomplex one() { return real(T(1)); }
    static Bicomplex i1() { return {Complex<T>{T(0), T(1)}, Complex<T>{}}; }
    static Bicomplex i2() { return {Complex<T>{}, Complex<T>{T(1), T(0)}}; }
    static Bicomplex j1() { return {Complex<T>{}, Complex<T>{T(0), T(1)}}; }
    static Bicomplex e1() { return {Complex<T>{T(1) / T(2), T(0)}, Complex<T>{T(0), T(1) / T(2)}}; }
    static Bicomplex e2() { return {Complex<T>{T(1) / T(2), T(0)}, Complex<T>{T(0), -T(1) / T(2)}}; }

    bool is_zero() const { return z1.is_zero() && z2.is_zero(); }

    friend Bicomplex operator+(const Bicomplex& s, const Bicomplex& t) { return {s.z1 + t.z1, s.z2 + t.z2}; }
    friend Bicomplex operator-(const Bicomplex& s, const Bicomplex& t) { return {s.z1 - t.z1, s.z2 - t.z2}; }
    friend Bicomplex operator-(const Bicomplex& s) { return {-s.z1, -s.z2}; }
    friend Bicomplex operator*(const Bicomplex& s, const Bicomplex& t)
    {
        return {s.z1 * t.z1 - s.z2 * t.z2, s.z1 * t.z2 + s.z2 * t.z1};
    }
    friend Bicomplex operator*(const T& lambda, const Bicomplex& s) { return {lambda * s.z1, lambda * s.z2}; }
    friend bool operator==(const Bicomplex& s, const Bicomplex& t) { return s.z1 == t.z1 && s.z2 == t.z2; }

    Bicomplex& operator+=(const Bicomplex& t) { return *this = *this + t; }
    Bicomplex& operator*=(const Bicomplex& t) { return *this = *this * t; }
};

template<Scalar T>
Bicomplex<T> mul(const Bicomplex<T>& s, const Bicomplex<T>& t)
{
    return s * t;
}

template<Scalar T>
Bicomplex<T> pow(Bicomplex<T> base, std::uint64_t exponent)
{
    Bicomplex<T> result = Bicomplex<T>::one();
    while (exponent) {
        if (exponent & 1U) {
            result *= base;
        }
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

//---------------------------------------------------------------------------//
// REAL COORDINATES
//---------------------------------------------------------------------------//
template<Scalar T>
Vec4<T> to_vec4(const Bicomplex<T>& s)
{
    return {s.z1.re, s.z1.im, s.z2.re, s.z2.im};
}

template<Scalar T>
Bicomplex<T> from_vec4(const Vec4<T>& v)
{
    return {Complex<T>{v[0], v[1]}, Complex<T>{v[2], v[3]}};
}

//---------------------------------------------------------------------------//
// IDEMPOTENT REPRESENTATION
//---------------------------------------------------------------------------//
//! s = ze1*e1 + ze2*e2.
template<Scalar T>
struct IdempotentForm {
    Complex<T> ze1;
    Complex<T> ze2;

    friend bool operator==(const IdempotentForm& a, const IdempotentForm& b)
    {
        return a.ze1 == b.ze1 && a.ze2 == b.ze2;
    }
};

//! ze1 = z1 - z2*i1, ze2 = z1 + z2*i1.
template<Scalar T>
IdempotentForm<T> to_idempotent(const Bicomplex<T>& s)
{
    const Complex<T> z2i = s.z2.times_i();
    return {s.z1 - z2i, s.z1 + z2i};
}

//! Inverse of to_idempotent: z1 = (ze1 + ze2)/2, z2 = -i1 (ze2 - ze1)/2.
template<Scalar T>
Bicomplex<T> from_idempotent(const IdempotentForm<T>& f)
{
    const T half = T(1) / T(2);
    const Complex<T> diff = f.ze2 - f.ze1;
    return {half * (f.ze1 + f.ze2), half * Complex<T>{diff.im, -diff.re}};
}

//---------------------------------------------------------------------------//
// INVERTIBILITY
//---------------------------------------------------------------------------//
//! Invertible iff both idempotent components are nonzero.
template<Scalar T>
bool is_invertible(const Bicomplex<T>& s)
{
    const auto f = to_idempotent(s);
    return !f.ze1.is_zero() && !f.ze2.is_zero();
}

//! Nonzero and not invertible: exactly one idempotent component vanishes.
template<Scalar T>
bool is_zero_divisor(const Bicomplex<T>& s)
{
    return !s.is_zero() && !is_invertible(s);
}

template<Scalar T>
Bicomplex<T> inverse_idempotent(const Bicomplex<T>& s)
{
    const auto f = to_idempotent(s);
    if (f.ze1.is_zero() || f.ze2.is_zero()) {
        throw NonInvertible(s.is_zero() ? "zero is not invertible" : "zero divisor is not invertible");
    }
    return from_idempotent(IdempotentForm<T>{f.ze1.reciprocal(), f.ze2.reciprocal()});
}

//---------------------------------------------------------------------------//
/*!
 * All s with s*s = t.
 *
 * Squaring acts componentwise on the idempotent form, so the roots are every
 * sign combination of the component roots. A zero component contributes the
 * single root 0. Results are sorted by real coordinates.
 */
template<Scalar T>
std::vector<Bicomplex<T>> square_roots(const Bicomplex<T>& t)
{
    const auto f = to_idempotent(t);
    auto component_roots = [](const Complex<T>& z) {
        auto r = principal_sqrt(z);
        if (!r) {
            throw NotRepresentable("idempotent component has no square root in the scalar ring");
        }
        std::vector<Complex<T>> out{*r};
        if (!r->is_zero()) {
            out.push_back(-*r);
        }
        return out;
    };
    const auto roots1 = component_roots(f.ze1);
    const auto roots2 = component_roots(f.ze2);

    std::vector<Bicomplex<T>> result;
    for (const auto& a : roots1) {
        for (const auto& b : roots2) {
            result.push_back(from_idempotent(IdempotentForm<T>{a, b}));
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Bicomplex<T>& x, const Bicomplex<T>& y) { return to_vec4(x) < to_vec4(y); });
    return result;
}

}  // namespace bicx
