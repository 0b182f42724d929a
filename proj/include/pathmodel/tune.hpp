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

#include <vector>

#include "pathmodel/model.hpp"

namespace pathmodel {

/// Result of a decimation-tolerance sweep. All lists share the grid's
/// length; `valid[i]` is false for grid points that could not be scored
/// (those are skipped when selecting the best epsilon).
struct TuneCurve {
    std::vector<double> epsilons;
    std::vector<double> correct_scores;
    std::vector<double> best_incorrect_scores;
    std::vector<bool> valid;
    double selected_epsilon = 0.0;
};

/// Sweeps the RDP tolerance for one path: at every grid epsilon a
/// candidate model is built from the teaching sets and the demonstration
/// is scored against it (best over its variants) and against every other
/// model with variants. The epsilon maximizing correct - best_incorrect
/// wins; ties go to the smaller epsilon, whose lower decimation keeps the
/// model geometrically closer to the path.
TuneCurve tune_epsilon(const std::vector<Polyline3>& teaching_sets, const Polyline3& demo,
                       const std::vector<GaussianPathModel>& other_models,
                       const std::vector<double>& epsilon_grid, double filter_sigma);

}  // namespace pathmodel
