// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bicx {

//! Raised when an element with a vanishing idempotent component is inverted.
class NonInvertible : public std::domain_error {
  public:
    explicit NonInvertible(const std::string& what) : std::domain_error(what) {}
};

//! Raised when an exact square root does not exist in the scalar ring.
class NotRepresentable : public std::domain_error {
  public:
    explicit NotRepresentable(const std::string& what) : std::domain_error(what) {}
};

//! Raised when a hyperplane is built from the zero vector.
class ZeroNormal : public std::invalid_argument {
  public:
    explicit ZeroNormal(const std::string& what) : std::invalid_argument(what) {}
};

//! A composition of conjugations matched none of the eight maps.
class UnidentifiableComposition : public std::logic_error {
  public:
    explicit UnidentifiableComposition(const std::string& what) : std::logic_error(what) {}
};

//! Non-finite result in floating-point mode.
class Overflow : public std::overflow_error {
  public:
    explicit Overflow(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace bicx
