// Copyright 2026 The pathmodel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include "pathmodel/geometry.hpp"

namespace pathmodel {

enum class ShapeKind { parabola, rectangle, quarter_circle, spiral, half_circle };

std::string to_string(ShapeKind kind);
ShapeKind shape_kind_from_string(const std::string& name);

/// Parameters of a synthetic teaching shape. Each kind reads only its own
/// size fields:
///   parabola       y = coeff * x^2 over x in [-1, 1]
///   rectangle      closed w x h loop starting at the origin corner
///   quarter_circle arc of `radius` over a quarter turn
///   spiral         Archimedean spiral, `turns` revolutions growing to
///                  `radius`, climbing `pitch` in z per revolution
///   half_circle    arc of `radius` over a half turn
struct ShapeSpec {
    ShapeKind kind = ShapeKind::half_circle;
    std::size_t n_points = 200;
    double radius = 1.0;
    double width = 2.0;
    double height = 1.0;
    double turns = 2.0;
    double pitch = 0.0;
    double coeff = 1.0;
};

/// Samples the shape uniformly in its natural parameter (angle, abscissa
/// or arc length). Deterministic; endpoints lie exactly on the parametric
/// endpoints.
Polyline3 gen_shape(const ShapeSpec& spec);

struct NoiseSpec {
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

/// Perturbs every coordinate with an independent draw from
/// Normal(0, sigma^2). Draws come from mt19937_64 through a Box-Muller
/// transform so the stream is identical across platforms. sigma == 0
/// returns the input untouched.
Polyline3 add_noise(const Polyline3& points, const NoiseSpec& noise);

/// Absolute sigma for a relative noise level: fraction of the bounding-box
/// diagonal of `points`.
double relative_sigma(const Polyline3& points, double fraction);

/// Deterministic per-set seed stream for multi-set generation (splitmix64
/// over the base seed).
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

}  // namespace pathmodel
