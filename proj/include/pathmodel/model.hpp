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

#include <cstddef>
#include <string>
#include <vector>

#include "pathmodel/decimate.hpp"
#include "pathmodel/geometry.hpp"

namespace pathmodel {

/// Default diagonal regularization added to keypoint covariances, in
/// canonical units squared. Keeps covariances invertible when teaching
/// data is noise-free.
inline constexpr double kDefaultCovarianceFloor = 1e-9;

/// Default Gaussian filter width in samples.
inline constexpr double kDefaultFilterSigma = 2.0;

enum class FlipAxis { none, x, y, z };

/// Variant tag of a path model: an optional 180-degree rotation about a
/// coordinate axis plus an optional reversal of keypoint order. Base
/// models carry {none, false}.
struct ModelVariant {
    FlipAxis flip = FlipAxis::none;
    bool reversed = false;

    bool is_base() const { return flip == FlipAxis::none && !reversed; }
    bool operator==(const ModelVariant&) const = default;
};

std::string to_string(FlipAxis axis);
FlipAxis flip_axis_from_string(const std::string& name);

/// Short display tag, e.g. "none", "x", "x-rev".
std::string variant_label(const ModelVariant& variant);

/// 180-degree rotation matrix about the given axis (identity for none).
Mat3 flip_rotation(FlipAxis axis);

/// One keypoint Gaussian in the canonical frame.
struct KeypointGaussian {
    Point3 mu = Point3::Zero();
    Mat3 sigma = Mat3::Identity();
};

/// Ordered keypoint Gaussians describing one path shape in canonical
/// coordinates, plus provenance metadata.
struct GaussianPathModel {
    std::string name;
    std::vector<KeypointGaussian> keypoints;
    ModelVariant variant;
    double rdp_epsilon = 0.0;
    std::size_t teaching_set_count = 0;

    std::size_t keypoint_count() const { return keypoints.size(); }
};

/// Componentwise mean and regularized sample covariance (divisor n-1) of
/// keypoint `index` across equally sized keypoint sets. `covariance_floor`
/// is added to the diagonal; pass 0 to inspect the raw sample covariance.
KeypointGaussian keypoint_stats(const std::vector<Keypoints>& keypoint_sets, std::size_t index,
                                double covariance_floor = kDefaultCovarianceFloor);

struct BuildParams {
    double rdp_epsilon = 0.05;
    double filter_sigma = kDefaultFilterSigma;
    double covariance_floor = kDefaultCovarianceFloor;
};

/// Builds a base Gaussian path model from at least four teaching sets:
/// canonicalize the group, smooth each set, take the keypoint count from
/// RDP on the first set, decimate every set to that count with VW, then
/// estimate one Gaussian per keypoint index.
GaussianPathModel build_model(const std::vector<Polyline3>& sets, const std::string& name,
                              const BuildParams& params);

/// Expands a base model into its 8 library variants: {none, x, y, z} flips
/// times {forward, reversed}. Element 0 is the base model itself. A flip
/// maps mu to R*mu and sigma to R*sigma*R^T.
std::vector<GaussianPathModel> make_variants(const GaussianPathModel& model);

/// Named collection of base path models sharing one filter width. Variants
/// are generated on demand, never stored.
struct ModelLibrary {
    double filter_sigma = kDefaultFilterSigma;
    std::vector<GaussianPathModel> models;

    /// Appends a base model; the name must be new.
    void add(GaussianPathModel model);

    const GaussianPathModel* find(const std::string& name) const;

    /// All models with their variants expanded, in insertion order
    /// (8 candidates per base model).
    std::vector<GaussianPathModel> candidates() const;
};

}  // namespace pathmodel
