// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/errors.hpp"
#include "bicx/involution.hpp"
#include "bicx/mat4.hpp"

namespace bicx {

//! Coordinate planes x_u = 0 available as axis reflections.
enum class ReflectionAxis { I1, I2, J1 };

constexpr std::size_t coordinate(ReflectionAxis axis)
{
    return static_cast<std::size_t>(axis) + 1;
}

inline std::optional<ReflectionAxis> parse_axis(std::string_view text)
{
    if (text == "i1") return ReflectionAxis::I1;
    if (text == "i2") return ReflectionAxis::I2;
    if (text == "j1") return ReflectionAxis::J1;
    return std::nullopt;
}

//! The hyperplane { v : v . normal = 0 } in R^4.
template<Scalar T>
class Hyperplane {
  public:
    explicit Hyperplane(Vec4<T> normal) : normal_(std::move(normal))
    {
        if (normal_.is_zero()) {
            throw ZeroNormal("hyperplane normal must be nonzero");
        }
    }

    const Vec4<T>& normal() const { return normal_; }

  private:
    Vec4<T> normal_;
};

//! Negates the named coordinate.
template<Scalar T>
Vec4<T> reflect_axis(ReflectionAxis axis, Vec4<T> v)
{
    auto& x = v[coordinate(axis)];
    x = -x;
    return v;
}

//! v - 2 (v.a)/(a.a) a.
template<Scalar T>
Vec4<T> reflect_hyperplane(const Hyperplane<T>& h, const Vec4<T>& v)
{
    const auto& a = h.normal();
    const T scale = T(2) * dot(v, a) / dot(a, a);
    return v - scale * a;
}

template<Scalar T = Rational>
Mat4<T> reflection_matrix(const Hyperplane<T>& h)
{
    Mat4<T> result;
    for (std::size_t col = 0; col < 4; ++col) {
        Vec4<T> basis;
        basis[col] = T(1);
        const Vec4<T> image = reflect_hyperplane(h, basis);
        for (std::size_t row = 0; row < 4; ++row) {
            result.m[row][col] = image[row];
        }
    }
    return result;
}

template<Scalar T = Rational>
Mat4<T> reflection_matrix(ReflectionAxis axis)
{
    Vec4<T> d{T(1), T(1), T(1), T(1)};
    d[coordinate(axis)] = T(-1);
    return Mat4<T>::diagonal(d);
}

//! Normal of the plane x_i1 + x_i2 = 0.
template<Scalar T = Rational>
Hyperplane<T> plane_a4()
{
    return Hyperplane<T>{Vec4<T>{T(0), T(1), T(1), T(0)}};
}

//! Normal of the plane x_i1 - x_i2 = 0.
template<Scalar T = Rational>
Hyperplane<T> plane_a5()
{
    return Hyperplane<T>{Vec4<T>{T(0), T(1), T(-1), T(0)}};
}

//---------------------------------------------------------------------------//
// FACTORIZATIONS
//---------------------------------------------------------------------------//
//! A named reflection: "R_i1", "R_i2", "R_j1", "R_a4" or "R_a5".
inline std::optional<Mat4<Rational>> named_reflection(std::string_view name)
{
    if (name == "R_i1") return reflection_matrix(ReflectionAxis::I1);
    if (name == "R_i2") return reflection_matrix(ReflectionAxis::I2);
    if (name == "R_j1") return reflection_matrix(ReflectionAxis::J1);
    if (name == "R_a4") return reflection_matrix(plane_a4());
    if (name == "R_a5") return reflection_matrix(plane_a5());
    return std::nullopt;
}

/*!
 * A claimed identity tag = R_1 o R_2 o ... o R_k.
 *
 * Steps are listed outermost first, so the last one is applied first.
 */
struct FactorizationClaim {
    ConjTag tag;
    std::vector<std::string> steps;

    std::string describe() const
    {
        std::string out(tag_name(tag));
        out += " = ";
        for (std::size_t k = 0; k < steps.size(); ++k) {
            out += (k ? " o " : "") + steps[k];
        }
        return out;
    }
};

//! Reflection decompositions of every non-identity conjugation.
inline std::vector<FactorizationClaim> standard_factorizations()
{
    return {
        {ConjTag::D1, {"R_i2", "R_j1"}},
        {ConjTag::D2, {"R_i1", "R_j1"}},
        {ConjTag::D3, {"R_i1", "R_i2"}},
        {ConjTag::D4, {"R_a4"}},
        {ConjTag::D5, {"R_a5"}},
        {ConjTag::P6, {"R_i1", "R_j1", "R_a5"}},
        {ConjTag::P6, {"R_i2", "R_j1", "R_a4"}},
        {ConjTag::P7, {"R_i1", "R_j1", "R_a4"}},
        {ConjTag::P7, {"R_i2", "R_j1", "R_a5"}},
    };
}

struct FactorizationResult {
    FactorizationClaim claim;
    bool holds = false;
    //! det of the conjugation matrix equals (-1)^steps.
    bool parity_ok = false;
};

struct FactorizationReport {
    std::vector<FactorizationResult> results;

    bool ok() const
    {
        for (const auto& r : results) {
            if (!r.holds || !r.parity_ok) {
                return false;
            }
        }
        return !results.empty();
    }
};

inline FactorizationReport factorization_check(const std::vector<FactorizationClaim>& claims = standard_factorizations())
{
    FactorizationReport report;
    for (const auto& claim : claims) {
        FactorizationResult r{claim};
        Mat4<Rational> composite = Mat4<Rational>::identity();
        bool known = true;
        for (const auto& step : claim.steps) {
            auto m = named_reflection(step);
            if (!m) {
                known = false;
                break;
            }
            composite = composite * *m;
        }
        const Mat4<Rational> target = as_matrix(claim.tag);
        r.holds = known && composite == target;
        const Rational expected_det = claim.steps.size() % 2 ? -1 : 1;
        r.parity_ok = determinant(target) == expected_det;
        report.results.push_back(std::move(r));
    }
    return report;
}

}  // namespace bicx
