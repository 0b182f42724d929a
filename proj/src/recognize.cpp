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

#include "pathmodel/recognize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace pathmodel {

double loglikelihood(const Point3& x, const KeypointGaussian& g) {
    const Eigen::LLT<Mat3> llt(g.sigma);
    if (llt.info() != Eigen::Success) throw std::runtime_error("singular covariance");

    const Point3 diff = x - g.mu;
    const Point3 half = llt.matrixL().solve(diff);  // L y = diff
    const double mahalanobis_sq = half.squaredNorm();

    const Mat3 l = llt.matrixL();
    const double log_det = 2.0 * (std::log(l(0, 0)) + std::log(l(1, 1)) + std::log(l(2, 2)));
    constexpr double log_two_pi = 1.8378770664093453;  // ln(2*pi)
    return -0.5 * mahalanobis_sq - 0.5 * (3.0 * log_two_pi + log_det);
}

double score_model(const Keypoints& demo_keypoints, const GaussianPathModel& model) {
    if (demo_keypoints.size() != model.keypoint_count()) {
        throw std::invalid_argument("score_model: keypoint count mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < model.keypoint_count(); ++i) {
        sum += loglikelihood(demo_keypoints.points[i], model.keypoints[i]);
    }
    return sum;
}

RecognitionResult recognize(const Polyline3& demo, const ModelLibrary& library, double filter_sigma) {
    if (library.models.empty()) throw std::invalid_argument("recognize: empty library");
    const double sigma = filter_sigma < 0.0 ? library.filter_sigma : filter_sigma;

    const CanonicalSet canonical = canonicalize_single(demo);
    const Polyline3 smoothed = gaussian_smooth(canonical.points, sigma);

    // Candidates sharing a keypoint count share the decimated demo.
    std::map<std::size_t, Keypoints> decimated;

    RecognitionResult result;
    result.demo_params = canonical.params;
    for (const GaussianPathModel& candidate : library.candidates()) {
        ScoredCandidate entry;
        entry.name = candidate.name;
        entry.variant = candidate.variant;
        const std::size_t count = candidate.keypoint_count();
        if (count > smoothed.size()) {
            entry.score = -std::numeric_limits<double>::infinity();
            entry.scored = false;
        } else {
            auto it = decimated.find(count);
            if (it == decimated.end()) it = decimated.emplace(count, vw(smoothed, count)).first;
            entry.score = score_model(it->second, candidate);
        }
        result.ranked.push_back(std::move(entry));
    }

    std::stable_sort(result.ranked.begin(), result.ranked.end(),
                     [](const ScoredCandidate& a, const ScoredCandidate& b) { return a.score > b.score; });
    return result;
}

ConfusionMatrix confusion_matrix(const std::vector<std::pair<std::string, Polyline3>>& demos,
                                 const ModelLibrary& library, double filter_sigma) {
    if (demos.empty()) throw std::invalid_argument("confusion_matrix: no demonstrations");

    ConfusionMatrix matrix;
    matrix.model_names.reserve(library.models.size());
    for (const GaussianPathModel& m : library.models) matrix.model_names.push_back(m.name);
    matrix.scores.assign(matrix.model_names.size(), std::vector<double>(demos.size(), 0.0));

    for (std::size_t col = 0; col < demos.size(); ++col) {
        matrix.demo_labels.push_back(demos[col].first);
        const RecognitionResult result = recognize(demos[col].second, library, filter_sigma);

        // Collapse variants to their base model by best score.
        for (std::size_t row = 0; row < matrix.model_names.size(); ++row) {
            double best = -std::numeric_limits<double>::infinity();
            for (const ScoredCandidate& entry : result.ranked) {
                if (entry.name == matrix.model_names[row]) best = std::max(best, entry.score);
            }
            matrix.scores[row][col] = best;
        }
        std::size_t argmax = 0;
        for (std::size_t row = 1; row < matrix.model_names.size(); ++row) {
            if (matrix.scores[row][col] > matrix.scores[argmax][col]) argmax = row;
        }
        matrix.best_model_per_demo.push_back(matrix.model_names[argmax]);
    }
    return matrix;
}

}  // namespace pathmodel
