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

#include "pathmodel/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathmodel/canonical.hpp"

namespace pathmodel {

std::string to_string(FlipAxis axis) {
    switch (axis) {
        case FlipAxis::none: return "none";
        case FlipAxis::x: return "x";
        case FlipAxis::y: return "y";
        case FlipAxis::z: return "z";
    }
    throw std::logic_error("unknown flip axis");
}

FlipAxis flip_axis_from_string(const std::string& name) {
    if (name == "none") return FlipAxis::none;
    if (name == "x") return FlipAxis::x;
    if (name == "y") return FlipAxis::y;
    if (name == "z") return FlipAxis::z;
    throw std::invalid_argument("unknown flip axis: " + name);
}

std::string variant_label(const ModelVariant& variant) {
    std::string label = to_string(variant.flip);
    if (variant.reversed) label += "-rev";
    return label;
}

Mat3 flip_rotation(FlipAxis axis) {
    Mat3 r = Mat3::Identity();
    switch (axis) {
        case FlipAxis::none: break;
        case FlipAxis::x: r(1, 1) = -1.0; r(2, 2) = -1.0; break;
        case FlipAxis::y: r(0, 0) = -1.0; r(2, 2) = -1.0; break;
        case FlipAxis::z: r(0, 0) = -1.0; r(1, 1) = -1.0; break;
    }
    return r;
}

KeypointGaussian keypoint_stats(const std::vector<Keypoints>& keypoint_sets, std::size_t index,
                                double covariance_floor) {
    if (keypoint_sets.size() < 2) throw std::invalid_argument("keypoint_stats: need at least 2 sets");
    const std::size_t count = keypoint_sets.front().size();
    for (const Keypoints& kp : keypoint_sets) {
        if (kp.size() != count) throw std::invalid_argument("keypoint_stats: mismatched keypoint counts");
    }
    if (index >= count) throw std::invalid_argument("keypoint_stats: index out of range");

    const double n = static_cast<double>(keypoint_sets.size());
    Point3 mu = Point3::Zero();
    for (const Keypoints& kp : keypoint_sets) mu += kp.points[index];
    mu /= n;

    Mat3 cov = Mat3::Zero();
    for (const Keypoints& kp : keypoint_sets) {
        const Point3 d = kp.points[index] - mu;
        cov += d * d.transpose();
    }
    cov /= n - 1.0;
    cov += covariance_floor * Mat3::Identity();
    return KeypointGaussian{mu, cov};
}

GaussianPathModel build_model(const std::vector<Polyline3>& sets, const std::string& name,
                              const BuildParams& params) {
    if (sets.size() < 4) {
        throw std::invalid_argument(
            "build_model: insufficient teaching sets (need >= 4 for rank-3 covariances)");
    }
    if (params.covariance_floor < 0.0) throw std::invalid_argument("build_model: negative covariance floor");

    auto [canonical_sets, basis] = canonicalize_group(sets);

    std::vector<Polyline3> smoothed;
    smoothed.reserve(canonical_sets.size());
    for (const CanonicalSet& cs : canonical_sets) {
        smoothed.push_back(gaussian_smooth(cs.points, params.filter_sigma));
    }

    const std::size_t keypoint_count = rdp(smoothed.front(), params.rdp_epsilon).size();

    std::vector<Keypoints> keypoint_sets;
    keypoint_sets.reserve(smoothed.size());
    for (const Polyline3& s : smoothed) keypoint_sets.push_back(vw(s, keypoint_count));

    GaussianPathModel model;
    model.name = name;
    model.rdp_epsilon = params.rdp_epsilon;
    model.teaching_set_count = sets.size();
    model.keypoints.reserve(keypoint_count);
    for (std::size_t i = 0; i < keypoint_count; ++i) {
        model.keypoints.push_back(keypoint_stats(keypoint_sets, i, params.covariance_floor));
    }
    return model;
}

std::vector<GaussianPathModel> make_variants(const GaussianPathModel& model) {
    if (!model.variant.is_base()) throw std::invalid_argument("make_variants: input is already a variant");

    std::vector<GaussianPathModel> out;
    out.reserve(8);
    for (bool reversed : {false, true}) {
        for (FlipAxis axis : {FlipAxis::none, FlipAxis::x, FlipAxis::y, FlipAxis::z}) {
            GaussianPathModel variant = model;
            variant.variant = ModelVariant{axis, reversed};
            const Mat3 r = flip_rotation(axis);
            if (axis != FlipAxis::none) {
                for (KeypointGaussian& kp : variant.keypoints) {
                    kp.mu = r * kp.mu;
                    kp.sigma = r * kp.sigma * r.transpose();
                }
            }
            if (reversed) std::reverse(variant.keypoints.begin(), variant.keypoints.end());
            out.push_back(std::move(variant));
        }
    }
    return out;
}

void ModelLibrary::add(GaussianPathModel model) {
    if (!model.variant.is_base()) throw std::invalid_argument("library: only base models can be added");
    if (find(model.name) != nullptr) throw std::invalid_argument("library: duplicate model name: " + model.name);
    models.push_back(std::move(model));
}

const GaussianPathModel* ModelLibrary::find(const std::string& name) const {
    for (const GaussianPathModel& m : models) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

std::vector<GaussianPathModel> ModelLibrary::candidates() const {
    std::vector<GaussianPathModel> out;
    out.reserve(models.size() * 8);
    for (const GaussianPathModel& m : models) {
        auto variants = make_variants(m);
        for (GaussianPathModel& v : variants) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace pathmodel
