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

#include "pathmodel/correct.hpp"

#include <stdexcept>

namespace pathmodel {

namespace {

std::size_t closest_keypoint(const Polyline3& kps, const Point3& p) {
    std::size_t best = 0;
    double best_sq = (kps[0] - p).squaredNorm();
    for (std::size_t i = 1; i < kps.size(); ++i) {
        const double d = (kps[i] - p).squaredNorm();
        if (d < best_sq) {
            best_sq = d;
            best = i;
        }
    }
    return best;
}

// Parameter of the orthogonal projection of p onto the line through a, b.
double projection_parameter(const Point3& p, const Point3& a, const Point3& b) {
    const Point3 ab = b - a;
    const double len_sq = ab.squaredNorm();
    if (len_sq == 0.0) return 0.0;
    return (p - a).dot(ab) / len_sq;
}

}  // namespace

std::pair<std::size_t, std::size_t> locate_redundant_range(const Polyline3& model_kps,
                                                           const Point3& first_corr,
                                                           const Point3& last_corr) {
    const std::size_t n = model_kps.size();
    if (n < 2) throw std::invalid_argument("locate_redundant_range: need at least 2 model keypoints");
    if (!is_finite(first_corr) || !is_finite(last_corr)) {
        throw std::invalid_argument("locate_redundant_range: non-finite correction endpoint");
    }

    long long first_index;
    {
        const std::size_t c = closest_keypoint(model_kps, first_corr);
        if (c == 0) {
            first_index = 1;
        } else if (c == n - 1) {
            first_index = static_cast<long long>(c) - 1;
        } else {
            const double t = projection_parameter(first_corr, model_kps[c], model_kps[c + 1]);
            first_index = static_cast<long long>(t > 0.0 && t < 1.0 ? c + 1 : c);
        }
    }

    long long last_index;
    {
        const std::size_t c = closest_keypoint(model_kps, last_corr);
        if (c == 0) {
            last_index = 1;
        } else if (c == n - 1) {
            last_index = static_cast<long long>(c) - 1;
        } else {
            const double t = projection_parameter(last_corr, model_kps[c], model_kps[c + 1]);
            last_index = static_cast<long long>(t > 0.0 && t < 1.0 ? c : c - 1);
        }
    }

    if (first_index > last_index) std::swap(first_index, last_index);
    if (last_index < 0 || first_index >= static_cast<long long>(n)) {
        throw std::runtime_error("correction outside model extent");
    }
    return {static_cast<std::size_t>(first_index), static_cast<std::size_t>(last_index)};
}

CorrectionResult correct_path(const GaussianPathModel& model, const Polyline3& correction,
                              double rdp_epsilon, const CanonicalParams& demo_params) {
    if (correction.size() < 2) throw std::invalid_argument("correct_path: correction needs at least 2 points");
    if (!is_finite_polyline(correction)) throw std::invalid_argument("correct_path: non-finite correction");

    Polyline3 means;
    means.reserve(model.keypoint_count());
    for (const KeypointGaussian& kp : model.keypoints) means.push_back(kp.mu);
    const Polyline3 model_kps = decanonicalize(means, demo_params);

    CorrectionResult result;
    result.correction_keypoints = rdp(correction, rdp_epsilon);
    result.redundant_range = locate_redundant_range(model_kps, result.correction_keypoints.points.front(),
                                                    result.correction_keypoints.points.back());

    const auto [first, last] = result.redundant_range;
    result.corrected.reserve(model_kps.size() - (last - first + 1) + result.correction_keypoints.size());
    result.corrected.insert(result.corrected.end(), model_kps.begin(),
                            model_kps.begin() + static_cast<std::ptrdiff_t>(first));
    result.corrected.insert(result.corrected.end(), result.correction_keypoints.points.begin(),
                            result.correction_keypoints.points.end());
    result.corrected.insert(result.corrected.end(), model_kps.begin() + static_cast<std::ptrdiff_t>(last) + 1,
                            model_kps.end());
    return result;
}

}  // namespace pathmodel
