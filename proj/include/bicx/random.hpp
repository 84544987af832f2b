// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "bicx/bicomplex.hpp"

namespace bicx {

inline constexpr std::uint64_t default_seed = 20260101;

//! Seed from BICX_SEED, or \p fallback when unset or malformed.
inline std::uint64_t seed_from_env(std::uint64_t fallback = default_seed)
{
    const char* env = std::getenv("BICX_SEED");
    if (!env || !*env) {
        return fallback;
    }
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        return fallback;
    }
}

//! Small random rationals p/q, |p| <= max_num, 1 <= q <= max_den.
class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed, int max_num = 24, int max_den = 12)
        : engine_(seed), num_(-max_num, max_num), den_(1, max_den)
    {
    }

    Rational scalar() { return Rational(num_(engine_), den_(engine_)); }

    Complex<Rational> complex() { return {scalar(), scalar()}; }

    Bicomplex<Rational> bicomplex() { return {complex(), complex()}; }

    Bicomplex<Rational> invertible()
    {
        for (;;) {
            auto s = bicomplex();
            if (is_invertible(s)) {
                return s;
            }
        }
    }

    //! lambda*e1 or lambda*e2 with lambda a nonzero complex scalar.
    Bicomplex<Rational> zero_divisor()
    {
        Complex<Rational> lambda;
        do {
            lambda = complex();
        } while (lambda.is_zero());
        const auto e = coin_(engine_) ? Bicomplex<Rational>::e1() : Bicomplex<Rational>::e2();
        return Bicomplex<Rational>{lambda, {}} * e;
    }

  private:
    std::mt19937_64 engine_;
    std::uniform_int_distribution<int> num_;
    std::uniform_int_distribution<int> den_;
    std::bernoulli_distribution coin_{0.5};
};

}  // namespace bicx
