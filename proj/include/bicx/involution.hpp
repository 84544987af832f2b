// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/errors.hpp"
#include "bicx/mat4.hpp"

namespace bicx {

//---------------------------------------------------------------------------//
/*!
 * The eight real-linear ring automorphisms of the bicomplex numbers.
 *
 * D0..D5 are the conjugates (order 1 or 2); P6 and P7 are the
 * pseudoconjugates (order 4). D1, D2, D3 are the classical *, star and
 * dagger conjugations.
 */
enum class ConjTag : std::uint8_t { D0, D1, D2, D3, D4, D5, P6, P7 };

inline constexpr std::array<ConjTag, 8> all_tags{ConjTag::D0, ConjTag::D1, ConjTag::D2, ConjTag::D3,
                                                 ConjTag::D4, ConjTag::D5, ConjTag::P6, ConjTag::P7};

constexpr std::size_t index(ConjTag t) { return static_cast<std::size_t>(t); }

constexpr std::string_view tag_name(ConjTag t)
{
    constexpr std::array<std::string_view, 8> names{"dag0", "dag1", "dag2", "dag3",
                                                    "dag4", "dag5", "pdag6", "pdag7"};
    return names[index(t)];
}

//! Case-insensitive inverse of tag_name.
inline std::optional<ConjTag> parse_tag(std::string_view text)
{
    std::string lower(text);
    for (char& c : lower) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    for (ConjTag t : all_tags) {
        if (tag_name(t) == lower) {
            return t;
        }
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
/*!
 * Image of s = z1 + z2*i2 under a conjugation, Cartesian form.
 *
 * With z1 = a + b*i1 and z2 = c + d*i1 the maps send (a, b, c, d) to
 *   D0: ( a,  b,  c,  d)   D4: ( a, -c, -b,  d)
 *   D1: ( a,  b, -c, -d)   D5: ( a,  c,  b,  d)
 *   D2: ( a, -b,  c, -d)   P6: ( a, -c,  b, -d)
 *   D3: ( a, -b, -c,  d)   P7: ( a,  c, -b, -d)
 */
template<Scalar T>
Bicomplex<T> conjugate(ConjTag tag, const Bicomplex<T>& s)
{
    const T& a = s.z1.re;
    const T& b = s.z1.im;
    const T& c = s.z2.re;
    const T& d = s.z2.im;
    switch (tag) {
        case ConjTag::D0: return s;
        case ConjTag::D1: return {s.z1, -s.z2};
        case ConjTag::D2: return {s.z1.conj(), s.z2.conj()};
        case ConjTag::D3: return {s.z1.conj(), -s.z2.conj()};
        case ConjTag::D4: return {Complex<T>{a, -c}, Complex<T>{-b, d}};
        case ConjTag::D5: return {Complex<T>{a, c}, Complex<T>{b, d}};
        case ConjTag::P6: return {Complex<T>{a, -c}, Complex<T>{b, -d}};
        case ConjTag::P7: return {Complex<T>{a, c}, Complex<T>{-b, -d}};
    }
    throw std::invalid_argument("unknown conjugation tag");
}

//! Action on (ze1, ze2). D1 swaps the components, D3 conjugates both.
template<Scalar T>
IdempotentForm<T> conjugate_idempotent(ConjTag tag, const IdempotentForm<T>& f)
{
    const Complex<T>& a = f.ze1;
    const Complex<T>& b = f.ze2;
    switch (tag) {
        case ConjTag::D0: return {a, b};
        case ConjTag::D1: return {b, a};
        case ConjTag::D2: return {b.conj(), a.conj()};
        case ConjTag::D3: return {a.conj(), b.conj()};
        case ConjTag::D4: return {a, b.conj()};
        case ConjTag::D5: return {a.conj(), b};
        case ConjTag::P6: return {b.conj(), a};
        case ConjTag::P7: return {b, a.conj()};
    }
    throw std::invalid_argument("unknown conjugation tag");
}

//! Matrix M with to_vec4(conjugate(tag, s)) == M * to_vec4(s).
template<Scalar T = Rational>
Mat4<T> as_matrix(ConjTag tag)
{
    Mat4<T> result;
    for (std::size_t col = 0; col < 4; ++col) {
        Vec4<T> basis;
        basis[col] = T(1);
        const Vec4<T> image = to_vec4(conjugate(tag, from_vec4(basis)));
        for (std::size_t row = 0; row < 4; ++row) {
            result.m[row][col] = image[row];
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
// SIGNED BASIS UNITS
//---------------------------------------------------------------------------//
enum class BasisAxis : std::uint8_t { One, I1, I2, J1 };

inline constexpr std::array<BasisAxis, 4> all_axes{BasisAxis::One, BasisAxis::I1, BasisAxis::I2, BasisAxis::J1};

//! One of +-1, +-i1, +-i2, +-j1.
struct BasisUnit {
    bool negative = false;
    BasisAxis axis = BasisAxis::One;

    friend bool operator==(const BasisUnit&, const BasisUnit&) = default;

    BasisUnit operator-() const { return {!negative, axis}; }

    bool is_imaginary() const { return axis == BasisAxis::I1 || axis == BasisAxis::I2; }
    bool is_hyperbolic() const { return axis == BasisAxis::J1; }

    template<Scalar T = Rational>
    Bicomplex<T> value() const
    {
        Vec4<T> v;
        v[static_cast<std::size_t>(axis)] = negative ? T(-1) : T(1);
        return from_vec4(v);
    }

    std::string name() const
    {
        constexpr std::array<std::string_view, 4> axis_names{"1", "i1", "i2", "j1"};
        return std::string(negative ? "-" : "+") + std::string(axis_names[static_cast<std::size_t>(axis)]);
    }
};

//! Reads s as a signed basis unit when it is one.
template<Scalar T>
std::optional<BasisUnit> as_basis_unit(const Bicomplex<T>& s)
{
    const Vec4<T> v = to_vec4(s);
    std::optional<BasisUnit> found;
    for (std::size_t k = 0; k < 4; ++k) {
        if (scalar_traits<T>::is_zero(v[k])) {
            continue;
        }
        if (found || (v[k] != T(1) && v[k] != T(-1))) {
            return std::nullopt;
        }
        found = BasisUnit{v[k] < T(0), all_axes[k]};
    }
    return found;
}

//! Product of two signed basis units, computed in the ring.
inline BasisUnit operator*(const BasisUnit& p, const BasisUnit& q)
{
    return *as_basis_unit(p.value() * q.value());
}

inline std::array<BasisUnit, 8> all_basis_units()
{
    std::array<BasisUnit, 8> out;
    std::size_t k = 0;
    for (BasisAxis axis : all_axes) {
        out[k++] = {false, axis};
        out[k++] = {true, axis};
    }
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Candidate images of i1 and i2.
 *
 * A real-linear homomorphism is fixed by these two values: f(1) = 1 and
 * f(j1) = f(i1) f(i2).
 */
struct UnitAssignment {
    BasisUnit f_i1;
    BasisUnit f_i2;

    friend bool operator==(const UnitAssignment&, const UnitAssignment&) = default;

    //! Images of (1, i1, i2, j1).
    std::array<BasisUnit, 4> extend() const { return {BasisUnit{}, f_i1, f_i2, f_i1 * f_i2}; }

    //! Matrix of the linear extension.
    Mat4<Rational> matrix() const
    {
        Mat4<Rational> result;
        const auto images = extend();
        for (std::size_t col = 0; col < 4; ++col) {
            const auto v = to_vec4(images[col].value());
            for (std::size_t row = 0; row < 4; ++row) {
                result.m[row][col] = v[row];
            }
        }
        return result;
    }

    //! f(p*q) == f(p) f(q) on all 16 basis products.
    bool is_multiplicative() const
    {
        const auto images = extend();
        for (std::size_t p = 0; p < 4; ++p) {
            for (std::size_t q = 0; q < 4; ++q) {
                const BasisUnit prod = BasisUnit{false, all_axes[p]} * BasisUnit{false, all_axes[q]};
                const BasisUnit lhs = images[static_cast<std::size_t>(prod.axis)];
                const BasisUnit expected = prod.negative ? -lhs : lhs;
                if (!(images[p] * images[q] == expected)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool is_bijective() const { return determinant(matrix()) != 0; }
};

template<Scalar T = Rational>
UnitAssignment assignment_of(ConjTag tag)
{
    return {*as_basis_unit(conjugate(tag, Bicomplex<T>::i1())), *as_basis_unit(conjugate(tag, Bicomplex<T>::i2()))};
}

//! Tag whose action on (i1, i2) is the given pair, if any.
inline std::optional<ConjTag> tag_of(const UnitAssignment& u)
{
    for (ConjTag t : all_tags) {
        if (assignment_of(t) == u) {
            return t;
        }
    }
    return std::nullopt;
}

/*!
 * Brute-force search for unit-level automorphisms.
 *
 * Every pair (f(i1), f(i2)) drawn from the eight signed basis units is
 * extended multiplicatively and kept when the extension respects all basis
 * products and is invertible. The search space deliberately includes +-1 and
 * +-j1 so that the imaginary-to-imaginary property is checked, not assumed.
 */
inline std::vector<UnitAssignment> enumerate_unit_homomorphisms()
{
    std::vector<UnitAssignment> accepted;
    const auto units = all_basis_units();
    for (const BasisUnit& u : units) {
        for (const BasisUnit& v : units) {
            UnitAssignment candidate{u, v};
            if (candidate.is_multiplicative() && candidate.is_bijective()) {
                accepted.push_back(candidate);
            }
        }
    }
    return accepted;
}

//---------------------------------------------------------------------------//
// COMPOSITION AND ORDER
//---------------------------------------------------------------------------//
//! Tag of (outer o inner): apply inner first.
inline ConjTag compose(ConjTag outer, ConjTag inner)
{
    using B = Bicomplex<Rational>;
    auto image = [&](const B& s) { return as_basis_unit(conjugate(outer, conjugate(inner, s))); };
    const auto fi1 = image(B::i1());
    const auto fi2 = image(B::i2());
    if (fi1 && fi2) {
        if (auto t = tag_of(UnitAssignment{*fi1, *fi2})) {
            return *t;
        }
    }
    throw UnidentifiableComposition(std::string(tag_name(outer)) + " o " + std::string(tag_name(inner)));
}

//! Least k >= 1 with tag^k = D0.
inline unsigned order(ConjTag tag)
{
    ConjTag power = tag;
    unsigned k = 1;
    while (power != ConjTag::D0) {
        power = compose(tag, power);
        if (++k > all_tags.size()) {
            throw std::logic_error("conjugation order exceeds group order");
        }
    }
    return k;
}

//! Tags f with f^n = identity.
inline std::vector<ConjTag> classify_n_involutions(unsigned n)
{
    if (n < 2) {
        throw std::invalid_argument("n-involutions are defined for n >= 2");
    }
    std::vector<ConjTag> out;
    for (ConjTag t : all_tags) {
        if (n % order(t) == 0) {
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace bicx
