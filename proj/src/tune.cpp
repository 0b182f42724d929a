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

#include "pathmodel/tune.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pathmodel/recognize.hpp"

namespace pathmodel {

TuneCurve tune_epsilon(const std::vector<Polyline3>& teaching_sets, const Polyline3& demo,
                       const std::vector<GaussianPathModel>& other_models,
                       const std::vector<double>& epsilon_grid, double filter_sigma) {
    if (epsilon_grid.empty()) throw std::invalid_argument("tune_epsilon: empty grid");
    for (std::size_t i = 1; i < epsilon_grid.size(); ++i) {
        if (epsilon_grid[i] <= epsilon_grid[i - 1]) {
            throw std::invalid_argument("tune_epsilon: grid must be strictly ascending");
        }
    }
    if (other_models.empty()) throw std::invalid_argument("tune_epsilon: no other models");
    for (const GaussianPathModel& m : other_models) {
        if (!m.variant.is_base()) throw std::invalid_argument("tune_epsilon: other models must be base models");
    }

    constexpr const char* kCandidateName = "__tune_candidate__";
    const double neg_inf = -std::numeric_limits<double>::infinity();

    TuneCurve curve;
    double best_difference = neg_inf;
    bool any_valid = false;

    for (const double epsilon : epsilon_grid) {
        curve.epsilons.push_back(epsilon);

        BuildParams params;
        params.rdp_epsilon = epsilon;
        params.filter_sigma = filter_sigma;
        const GaussianPathModel candidate = build_model(teaching_sets, kCandidateName, params);

        ModelLibrary library;
        library.filter_sigma = filter_sigma;
        library.add(candidate);
        for (const GaussianPathModel& m : other_models) library.add(m);

        double correct = neg_inf;
        double best_incorrect = neg_inf;
        if (candidate.keypoint_count() >= 2) {
            const RecognitionResult result = recognize(demo, library, filter_sigma);
            for (const ScoredCandidate& entry : result.ranked) {
                if (entry.name == kCandidateName) {
                    correct = std::max(correct, entry.score);
                } else {
                    best_incorrect = std::max(best_incorrect, entry.score);
                }
            }
        }

        const bool ok = std::isfinite(correct) && std::isfinite(best_incorrect);
        curve.correct_scores.push_back(correct);
        curve.best_incorrect_scores.push_back(best_incorrect);
        curve.valid.push_back(ok);
        if (ok) {
            const double difference = correct - best_incorrect;
            if (!any_valid || difference > best_difference) {
                best_difference = difference;
                curve.selected_epsilon = epsilon;
            }
            any_valid = true;
        }
    }

    if (!any_valid) throw std::runtime_error("tune_epsilon: no valid grid point");
    return curve;
}

}  // namespace pathmodel
