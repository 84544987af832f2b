// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "bicx/bicx.hpp"

namespace {

using bicx::ReflectionAxis;
using bicx::Rational;
using V = bicx::Vec4<Rational>;
using M = bicx::Mat4<Rational>;

TEST(Geometry, AxisReflections)
{
    const V v{1, 2, 3, 4};
    EXPECT_EQ(bicx::reflect_axis(ReflectionAxis::I1, v), (V{1, -2, 3, 4}));
    EXPECT_EQ(bicx::reflect_axis(ReflectionAxis::I2, v), (V{1, 2, -3, 4}));
    EXPECT_EQ(bicx::reflect_axis(ReflectionAxis::J1, v), (V{1, 2, 3, -4}));
}

TEST(Geometry, NamedHyperplaneOutputs)
{
    const V v{1, 2, 3, 4};
    EXPECT_EQ(bicx::reflect_hyperplane(bicx::plane_a4<Rational>(), v), (V{1, -3, -2, 4}));
    EXPECT_EQ(bicx::reflect_hyperplane(bicx::plane_a5<Rational>(), v), (V{1, 3, 2, 4}));
}

TEST(Geometry, AxisEqualsCoordinateHyperplane)
{
    bicx::RationalSampler rng(bicx::seed_from_env());
    for (auto axis : {ReflectionAxis::I1, ReflectionAxis::I2, ReflectionAxis::J1}) {
        V n;
        n[bicx::coordinate(axis)] = 1;
        const bicx::Hyperplane<Rational> h(n);
        EXPECT_EQ(bicx::reflection_matrix(h), bicx::reflection_matrix<Rational>(axis));
        for (int k = 0; k < 50; ++k) {
            const V v = bicx::to_vec4(rng.bicomplex());
            ASSERT_EQ(bicx::reflect_axis(axis, v), bicx::reflect_hyperplane(h, v));
        }
    }
}

TEST(Geometry, ReflectionIsInvolutiveIsometry)
{
    bicx::RationalSampler rng(bicx::seed_from_env() + 1);
    for (int k = 0; k < 200; ++k) {
        V n;
        do {
            n = bicx::to_vec4(rng.bicomplex());
        } while (n.is_zero());
        const bicx::Hyperplane<Rational> h(n);
        const V v = bicx::to_vec4(rng.bicomplex());
        const V r = bicx::reflect_hyperplane(h, v);
        ASSERT_EQ(bicx::reflect_hyperplane(h, r), v);
        ASSERT_EQ(dot(r, r), dot(v, v));
        ASSERT_EQ(bicx::reflect_hyperplane(h, n), Rational(-1) * n);
        ASSERT_EQ(bicx::determinant(bicx::reflection_matrix(h)), Rational(-1));
    }
}

TEST(Geometry, ScaledNormalGivesSameReflection)
{
    const V n{0, 1, 1, 0};
    EXPECT_EQ(bicx::reflection_matrix(bicx::Hyperplane<Rational>(n)),
              bicx::reflection_matrix(bicx::Hyperplane<Rational>(Rational(7, 3) * n)));
}

TEST(Geometry, ZeroNormalRejected)
{
    EXPECT_THROW(bicx::Hyperplane<Rational>(V{}), bicx::ZeroNormal);
}

TEST(Geometry, HalfFactorDoesNotReproduceSwap)
{
    // v - (v.a)/(a.a) a is a projection, not the swap (1, -3, -2, 4)
    const V v{1, 2, 3, 4};
    const V a{0, 1, 1, 0};
    const V projected = v - (dot(v, a) / dot(a, a)) * a;
    EXPECT_NE(projected, (V{1, -3, -2, 4}));
    EXPECT_EQ(projected, (V{1, Rational(-1, 2), Rational(1, 2), 4}));
}

TEST(Geometry, Factorizations)
{
    const auto report = bicx::factorization_check();
    EXPECT_TRUE(report.ok());
    ASSERT_EQ(report.results.size(), 9U);
    for (const auto& r : report.results) {
        EXPECT_TRUE(r.holds) << r.claim.describe();
        EXPECT_TRUE(r.parity_ok) << r.claim.describe();
    }
}

TEST(Geometry, WrongFactorizationFails)
{
    const auto report = bicx::factorization_check({{bicx::ConjTag::D4, {"R_a5"}}});
    EXPECT_FALSE(report.ok());
    const auto unknown = bicx::factorization_check({{bicx::ConjTag::D4, {"R_zz"}}});
    EXPECT_FALSE(unknown.ok());
}

TEST(Geometry, ProductsOfReflectionsMatchMaps)
{
    const M ri1 = *bicx::named_reflection("R_i1");
    const M ri2 = *bicx::named_reflection("R_i2");
    const M rj1 = *bicx::named_reflection("R_j1");
    EXPECT_EQ(ri1 * ri2, bicx::as_matrix(bicx::ConjTag::D3));
    EXPECT_EQ(ri2 * rj1, bicx::as_matrix(bicx::ConjTag::D1));
    EXPECT_EQ(ri1 * rj1, bicx::as_matrix(bicx::ConjTag::D2));
    EXPECT_FALSE(bicx::named_reflection("R_x"));
}

TEST(Geometry, AxisNames)
{
    EXPECT_EQ(bicx::parse_axis("i1"), ReflectionAxis::I1);
    EXPECT_EQ(bicx::parse_axis("j1"), ReflectionAxis::J1);
    EXPECT_FALSE(bicx::parse_axis("k"));
}

}  // namespace
