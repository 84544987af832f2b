// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "bicx/bicomplex.hpp"
#include "bicx/errors.hpp"
#include "bicx/involution.hpp"

namespace bicx {

/*!
 * Which conjugates enter a conjugate product.
 *
 * Full uses all eight maps; the others are the three order-4 subgroups.
 */
enum class ConjugateProductKind { Full, Sub123, Sub345, Sub367 };

inline constexpr std::array<ConjugateProductKind, 4> all_product_kinds{
    ConjugateProductKind::Full, ConjugateProductKind::Sub123, ConjugateProductKind::Sub345,
    ConjugateProductKind::Sub367};

inline std::span<const ConjTag> conjugate_tags(ConjugateProductKind kind)
{
    static constexpr std::array<ConjTag, 4> sub123{ConjTag::D0, ConjTag::D1, ConjTag::D2, ConjTag::D3};
    static constexpr std::array<ConjTag, 4> sub345{ConjTag::D0, ConjTag::D3, ConjTag::D4, ConjTag::D5};
    static constexpr std::array<ConjTag, 4> sub367{ConjTag::D0, ConjTag::D3, ConjTag::P6, ConjTag::P7};
    switch (kind) {
        case ConjugateProductKind::Full: return all_tags;
        case ConjugateProductKind::Sub123: return sub123;
        case ConjugateProductKind::Sub345: return sub345;
        case ConjugateProductKind::Sub367: return sub367;
    }
    return {};
}

constexpr std::string_view kind_name(ConjugateProductKind kind)
{
    switch (kind) {
        case ConjugateProductKind::Full: return "full";
        case ConjugateProductKind::Sub123: return "sub123";
        case ConjugateProductKind::Sub345: return "sub345";
        case ConjugateProductKind::Sub367: return "sub367";
    }
    return "?";
}

inline std::optional<ConjugateProductKind> parse_kind(std::string_view text)
{
    for (auto k : all_product_kinds) {
        if (kind_name(k) == text) {
            return k;
        }
    }
    return std::nullopt;
}

/*!
 * Product of s^f over every f in the kind.
 *
 * Real for Full, Sub123 and Sub367. Every map in Sub345 fixes j1, hence
 * fixes e1 and e2, so that product is the hyperbolic number
 * |ze1|^4 e1 + |ze2|^4 e2 and is nonzero on zero divisors.
 */
template<Scalar T>
Bicomplex<T> conjugate_product(const Bicomplex<T>& s, ConjugateProductKind kind)
{
    Bicomplex<T> acc = Bicomplex<T>::one();
    for (ConjTag t : conjugate_tags(kind)) {
        acc *= conjugate(t, s);
    }
    return acc;
}

/*!
 * Closed form of conjugate_product from the idempotent moduli.
 *
 * With n1 = |ze1|^2 and n2 = |ze2|^2 the idempotent components are
 * (n1 n2, n1 n2) for Sub123 and Sub367, ((n1 n2)^2, (n1 n2)^2) for Full and
 * (n1^2, n2^2) for Sub345.
 */
template<Scalar T>
Bicomplex<T> conjugate_product_closed_form(const Bicomplex<T>& s, ConjugateProductKind kind)
{
    const auto f = to_idempotent(s);
    const T n1 = f.ze1.norm();
    const T n2 = f.ze2.norm();
    const T both = n1 * n2;
    switch (kind) {
        case ConjugateProductKind::Full: return Bicomplex<T>::real(both * both);
        case ConjugateProductKind::Sub345:
            return from_idempotent(IdempotentForm<T>{Complex<T>{T(n1 * n1)}, Complex<T>{T(n2 * n2)}});
        default: return Bicomplex<T>::real(both);
    }
}

//! s * prod(conjugates) != 0 for each kind, in all_product_kinds order.
template<Scalar T>
std::array<bool, 4> invertibility_conditions(const Bicomplex<T>& s)
{
    std::array<bool, 4> out{};
    for (std::size_t k = 0; k < all_product_kinds.size(); ++k) {
        out[k] = !conjugate_product(s, all_product_kinds[k]).is_zero();
    }
    return out;
}

/*!
 * s^-1 = (product of the non-identity conjugates) / (product including s).
 *
 * The denominator always has real idempotent components (a, b); division
 * multiplies by a^-1 e1 + b^-1 e2, which is the plain reciprocal when the
 * denominator is real (a = b). No general bicomplex division is involved.
 */
template<Scalar T>
Bicomplex<T> inverse_via_conjugates(const Bicomplex<T>& s, ConjugateProductKind kind)
{
    const auto denom = to_idempotent(conjugate_product(s, kind));
    if (denom.ze1.is_zero() || denom.ze2.is_zero()) {
        throw NonInvertible(s.is_zero() ? "zero is not invertible" : "zero divisor is not invertible");
    }
    Bicomplex<T> numer = Bicomplex<T>::one();
    for (ConjTag t : conjugate_tags(kind)) {
        if (t != ConjTag::D0) {
            numer *= conjugate(t, s);
        }
    }
    if (denom.ze1 == denom.ze2) {
        const T scale = T(1) / denom.ze1.re;
        return scale * numer;
    }
    const Complex<T> a{T(T(1) / denom.ze1.re)};
    const Complex<T> b{T(T(1) / denom.ze2.re)};
    return numer * from_idempotent(IdempotentForm<T>{a, b});
}

}  // namespace bicx
