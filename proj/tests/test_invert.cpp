// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "bicx/bicx.hpp"

namespace {

using bicx::ConjugateProductKind;
using bicx::Rational;
using B = bicx::Bicomplex<Rational>;

bool is_real(const B& s)
{
    const auto v = bicx::to_vec4(s);
    return v[1] == 0 && v[2] == 0 && v[3] == 0;
}

TEST(Invert, ProductExamples)
{
    EXPECT_EQ(bicx::conjugate_product(B::i2(), ConjugateProductKind::Sub123), B::one());
    EXPECT_EQ(bicx::conjugate_product(B::one(), ConjugateProductKind::Full), B::one());
    EXPECT_EQ(bicx::conjugate_product(B::real(2), ConjugateProductKind::Full), B::real(256));
    for (auto kind : {ConjugateProductKind::Full, ConjugateProductKind::Sub123, ConjugateProductKind::Sub367}) {
        EXPECT_TRUE(bicx::conjugate_product(B::e1(), kind).is_zero()) << bicx::kind_name(kind);
    }
}

TEST(Invert, Sub345FixesIdempotents)
{
    // every map in the kind fixes j1, so e1 is a fixed point and so is its product
    EXPECT_EQ(bicx::conjugate_product(B::e1(), ConjugateProductKind::Sub345), B::e1());
    EXPECT_EQ(bicx::conjugate_product(B::j1(), ConjugateProductKind::Sub345), B::one());
}

TEST(Invert, ProductsMatchClosedForm)
{
    bicx::RationalSampler rng(bicx::seed_from_env());
    for (int k = 0; k < 500; ++k) {
        const B s = rng.bicomplex();
        for (auto kind : bicx::all_product_kinds) {
            ASSERT_EQ(bicx::conjugate_product(s, kind), bicx::conjugate_product_closed_form(s, kind))
                << bicx::kind_name(kind) << " at " << bicx::to_string(s);
        }
    }
}

TEST(Invert, RealProductsAndRelations)
{
    bicx::RationalSampler rng(bicx::seed_from_env() + 1);
    for (int k = 0; k < 500; ++k) {
        const B s = rng.bicomplex();
        const B full = bicx::conjugate_product(s, ConjugateProductKind::Full);
        const B p123 = bicx::conjugate_product(s, ConjugateProductKind::Sub123);
        const B p367 = bicx::conjugate_product(s, ConjugateProductKind::Sub367);
        ASSERT_TRUE(is_real(full));
        ASSERT_TRUE(is_real(p123));
        ASSERT_TRUE(is_real(p367));
        ASSERT_EQ(full, p123 * p123);
        ASSERT_EQ(p123, p367);
        const auto f = bicx::to_idempotent(s);
        ASSERT_EQ(p123, B::real(f.ze1.norm() * f.ze2.norm()));
    }
}

TEST(Invert, Sub345IsHyperbolic)
{
    bicx::RationalSampler rng(bicx::seed_from_env() + 2);
    for (int k = 0; k < 200; ++k) {
        const B s = rng.bicomplex();
        const auto v = bicx::to_vec4(bicx::conjugate_product(s, ConjugateProductKind::Sub345));
        ASSERT_EQ(v[1], 0);
        ASSERT_EQ(v[2], 0);
    }
}

TEST(Invert, InverseExamples)
{
    EXPECT_EQ(bicx::inverse_via_conjugates(B::i2(), ConjugateProductKind::Sub123), -B::i2());
    for (auto kind : bicx::all_product_kinds) {
        EXPECT_EQ(bicx::inverse_via_conjugates(B::real(2), kind), B::real(Rational(1, 2)));
        EXPECT_THROW(bicx::inverse_via_conjugates(B::e1(), kind), bicx::NonInvertible);
        EXPECT_THROW(bicx::inverse_via_conjugates(B::zero(), kind), bicx::NonInvertible);
    }
}

TEST(Invert, InverseAgreesWithIdempotent)
{
    bicx::RationalSampler rng(bicx::seed_from_env() + 3);
    for (int k = 0; k < 500; ++k) {
        const B s = rng.invertible();
        const B expected = bicx::inverse_idempotent(s);
        for (auto kind : bicx::all_product_kinds) {
            const B inv = bicx::inverse_via_conjugates(s, kind);
            ASSERT_EQ(inv, expected) << bicx::kind_name(kind);
            ASSERT_EQ(s * inv, B::one());
        }
    }
}

TEST(Invert, ConditionsAgreeWithIdempotentCriterion)
{
    bicx::RationalSampler rng(bicx::seed_from_env() + 4);
    for (int k = 0; k < 300; ++k) {
        const B s = k % 3 == 0 ? rng.zero_divisor() : rng.bicomplex();
        const auto c = bicx::invertibility_conditions(s);
        const bool inv = bicx::is_invertible(s);
        // full, sub123 and sub367 vanish exactly on zero divisors
        ASSERT_EQ(c[0], inv);
        ASSERT_EQ(c[1], inv);
        ASSERT_EQ(c[3], inv);
        for (auto kind : bicx::all_product_kinds) {
            if (inv) {
                ASSERT_NO_THROW(bicx::inverse_via_conjugates(s, kind));
            } else {
                ASSERT_THROW(bicx::inverse_via_conjugates(s, kind), bicx::NonInvertible);
            }
        }
    }
}

TEST(Invert, KindNames)
{
    for (auto kind : bicx::all_product_kinds) {
        EXPECT_EQ(bicx::parse_kind(bicx::kind_name(kind)), kind);
    }
    EXPECT_FALSE(bicx::parse_kind("sub999"));
}

}  // namespace
