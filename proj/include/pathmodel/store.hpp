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

#include <stdexcept>
#include <string>
#include <vector>

#include "pathmodel/model.hpp"
#include "pathmodel/recognize.hpp"
#include "pathmodel/tune.hpp"

namespace pathmodel {

/// Raised for malformed or invalid files; the message carries the failing
/// field or parse location.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// On-disk collection of teaching sets or demonstrations
/// (format_version 1). Every set needs at least 2 finite points.
struct PathSetFile {
    int format_version = 1;
    std::string label;
    std::vector<Polyline3> sets;
};

void save_path_set(const std::string& file_path, const PathSetFile& data);
PathSetFile load_path_set(const std::string& file_path);

/// Libraries persist base models only; variants are regenerated on load.
void save_library(const std::string& file_path, const ModelLibrary& library);
ModelLibrary load_library(const std::string& file_path);

/// CSV with a header row of demo labels, one score row per model and a
/// trailing row with each column's winning model.
void write_matrix_csv(const std::string& file_path, const ConfusionMatrix& matrix);

/// CSV of a tolerance sweep: epsilon, correct, best_incorrect, difference.
void write_tune_csv(const std::string& file_path, const TuneCurve& curve);

/// JSON report of a recognition run (ranked candidate scores plus the
/// demonstration's canonical parameters).
void save_recognition_report(const std::string& file_path, const RecognitionResult& result);

/// Shortest round-trip decimal form of a double (used for CSV cells).
std::string format_double(double value);

}  // namespace pathmodel
