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

#include <string>
#include <vector>

#include "pathmodel/canonical.hpp"
#include "pathmodel/model.hpp"

namespace pathmodel {

/// Log-density of x under the trivariate normal N(mu, sigma):
/// -1/2 (x-mu)^T sigma^-1 (x-mu) - 1/2 ln((2 pi)^3 det sigma),
/// evaluated through a Cholesky factorization. Throws
/// std::runtime_error("singular covariance") when sigma is not positive
/// definite.
double loglikelihood(const Point3& x, const KeypointGaussian& g);

/// Sum of per-keypoint log-likelihoods of the demonstration keypoints
/// under the model. Counts must match.
double score_model(const Keypoints& demo_keypoints, const GaussianPathModel& model);

/// One scored library candidate. `scored` is false when the demonstration
/// had fewer points than the candidate's keypoint count; such candidates
/// carry a score of -infinity instead of aborting recognition.
struct ScoredCandidate {
    std::string name;
    ModelVariant variant;
    double score = 0.0;
    bool scored = true;
};

struct RecognitionResult {
    /// All candidates, sorted by score descending; ties keep library
    /// insertion order.
    std::vector<ScoredCandidate> ranked;
    CanonicalParams demo_params;

    const ScoredCandidate& best() const { return ranked.front(); }
};

/// Scores a single demonstration against every candidate in the library
/// (all variants of all models): canonicalize, smooth, then decimate to
/// each candidate's keypoint count with VW and sum keypoint
/// log-likelihoods. Pass a negative filter_sigma to use the library's.
RecognitionResult recognize(const Polyline3& demo, const ModelLibrary& library,
                            double filter_sigma = -1.0);

/// Best-score-per-base-model matrix over a batch of labelled
/// demonstrations (rows = models, columns = demos), with each column's
/// winning model name. Variants collapse to their base name by max score.
struct ConfusionMatrix {
    std::vector<std::string> model_names;
    std::vector<std::string> demo_labels;
    std::vector<std::vector<double>> scores;  // [model][demo]
    std::vector<std::string> best_model_per_demo;
};

ConfusionMatrix confusion_matrix(const std::vector<std::pair<std::string, Polyline3>>& demos,
                                 const ModelLibrary& library, double filter_sigma = -1.0);

}  // namespace pathmodel
