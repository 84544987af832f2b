// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <ostream>

#include "bicx/bicomplex.hpp"

namespace bicx {

//! Dense 4x4 matrix acting on Vec4 (row-major, column vectors).
template<Scalar T>
struct Mat4 {
    std::array<std::array<T, 4>, 4> m{};

    static Mat4 identity()
    {
        Mat4 r;
        for (std::size_t k = 0; k < 4; ++k) {
            r.m[k][k] = T(1);
        }
        return r;
    }

    static Mat4 diagonal(const Vec4<T>& d)
    {
        Mat4 r;
        for (std::size_t k = 0; k < 4; ++k) {
            r.m[k][k] = d[k];
        }
        return r;
    }

    T& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

    friend Mat4 operator*(const Mat4& a, const Mat4& b)
    {
        Mat4 r;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                T acc(0);
                for (std::size_t k = 0; k < 4; ++k) {
                    acc += a.m[i][k] * b.m[k][j];
                }
                r.m[i][j] = acc;
            }
        }
        return r;
    }

    friend Vec4<T> operator*(const Mat4& a, const Vec4<T>& v)
    {
        Vec4<T> r;
        for (std::size_t i = 0; i < 4; ++i) {
            T acc(0);
            for (std::size_t k = 0; k < 4; ++k) {
                acc += a.m[i][k] * v[k];
            }
            r[i] = acc;
        }
        return r;
    }

    friend bool operator==(const Mat4& a, const Mat4& b) { return a.m == b.m; }
};

template<Scalar T>
Mat4<T> matrix_power(Mat4<T> base, unsigned exponent)
{
    Mat4<T> result = Mat4<T>::identity();
    for (; exponent; --exponent) {
        result = result * base;
    }
    return result;
}

//! Exact determinant by Gaussian elimination.
template<Scalar T>
T determinant(Mat4<T> a)
{
    T det(1);
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        while (pivot < 4 && scalar_traits<T>::is_zero(a.m[pivot][col])) {
            ++pivot;
        }
        if (pivot == 4) {
            return T(0);
        }
        if (pivot != col) {
            std::swap(a.m[pivot], a.m[col]);
            det = -det;
        }
        det *= a.m[col][col];
        for (std::size_t r = col + 1; r < 4; ++r) {
            const T factor = a.m[r][col] / a.m[col][col];
            for (std::size_t c = col; c < 4; ++c) {
                a.m[r][c] -= factor * a.m[col][c];
            }
        }
    }
    return det;
}

//! Exactly one entry of +-1 in each row and column, zeros elsewhere.
template<Scalar T>
bool is_signed_permutation(const Mat4<T>& a)
{
    std::array<int, 4> col_count{};
    for (std::size_t i = 0; i < 4; ++i) {
        int row_count = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            const T& x = a.m[i][j];
            if (scalar_traits<T>::is_zero(x)) {
                continue;
            }
            if (x != T(1) && x != T(-1)) {
                return false;
            }
            ++row_count;
            ++col_count[j];
        }
        if (row_count != 1) {
            return false;
        }
    }
    for (int n : col_count) {
        if (n != 1) {
            return false;
        }
    }
    return true;
}

template<Scalar T>
std::ostream& operator<<(std::ostream& os, const Mat4<T>& a)
{
    for (std::size_t i = 0; i < 4; ++i) {
        os << '[';
        for (std::size_t j = 0; j < 4; ++j) {
            os << (j ? " " : "") << scalar_traits<T>::to_string(a.m[i][j]);
        }
        os << ']';
    }
    return os;
}

}  // namespace bicx
