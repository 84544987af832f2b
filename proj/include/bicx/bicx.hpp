// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bicx/bicomplex.hpp"
#include "bicx/complex.hpp"
#include "bicx/errors.hpp"
#include "bicx/expr.hpp"
#include "bicx/format.hpp"
#include "bicx/geometry.hpp"
#include "bicx/group.hpp"
#include "bicx/invert.hpp"
#include "bicx/involution.hpp"
#include "bicx/mat4.hpp"
#include "bicx/random.hpp"
#include "bicx/scalar.hpp"
#include "bicx/verify.hpp"
