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

// Drives the installed CLI end to end: generation, library building,
// recognition, decanonicalization, correction, tuning, the score matrix,
// exit codes and byte-identical reruns. argv[1] is the CLI binary.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pathmodel/store.hpp"
#include "pathmodel/synth.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool condition, const std::string& what) {
    if (condition) {
        std::cout << "[PASS] " << what << "\n";
    } else {
        std::cout << "[FAIL] " << what << "\n";
        ++failures;
    }
}

std::string cli;
fs::path work;

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const fs::path out_file = work / "stdout.txt";
    const std::string command = cli + " " + args + " > " + out_file.string() + " 2> /dev/null";
    const int status = std::system(command.c_str());

    RunResult result;
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    result.stdout_text = ss.str();
    return result;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string q(const fs::path& p) { return p.string(); }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_pipeline <path-to-cli>\n";
        return 2;
    }
    cli = argv[1];
    work = fs::temp_directory_path() / "pathmodel_cli_pipeline";
    fs::remove_all(work);
    fs::create_directories(work);

    // --- gen -----------------------------------------------------------
    RunResult r = run("gen --shape half_circle --sets 8 --points 200 --noise-rel 0.02 --seed 7 --out " +
                      q(work / "teach_hc.json"));
    check(r.exit_code == 0, "gen writes teaching sets");
    {
        const pathmodel::PathSetFile file = pathmodel::load_path_set(q(work / "teach_hc.json"));
        check(file.label == "half_circle" && file.sets.size() == 8 && file.sets[0].size() == 200,
              "gen output has 8 sets of 200 points");
    }
    run("gen --shape parabola --sets 8 --points 200 --noise-rel 0.02 --seed 8 --out " +
        q(work / "teach_pb.json"));
    run("gen --shape half_circle --sets 1 --points 200 --noise-rel 0 --seed 9 --out " +
        q(work / "demo_hc.json"));
    run("gen --shape parabola --sets 1 --points 200 --noise-rel 0 --seed 10 --out " +
        q(work / "demo_pb.json"));

    // --- build ---------------------------------------------------------
    r = run("build --in " + q(work / "teach_hc.json") + " --epsilon 0.04 --filter-sigma 2 " +
            "--name half_circle --out " + q(work / "lib.json"));
    check(r.exit_code == 0, "build creates a library");
    r = run("build --in " + q(work / "teach_pb.json") + " --epsilon 0.04 --filter-sigma 2 " +
            "--name parabola --out " + q(work / "lib.json"));
    check(r.exit_code == 0, "build appends to an existing library");
    {
        const pathmodel::ModelLibrary lib = pathmodel::load_library(q(work / "lib.json"));
        check(lib.models.size() == 2, "library holds both models");
    }

    // Too few teaching sets: data error, exit 2.
    run("gen --shape spiral --sets 3 --points 100 --noise-rel 0.02 --seed 11 --out " +
        q(work / "teach_three.json"));
    r = run("build --in " + q(work / "teach_three.json") + " --epsilon 0.04 --name spiral --out " +
            q(work / "lib3.json"));
    check(r.exit_code == 2, "build with 3 sets exits with code 2");

    // --- recognize -----------------------------------------------------
    r = run("recognize --lib " + q(work / "lib.json") + " --demo " + q(work / "demo_hc.json") +
            " --report " + q(work / "report.json"));
    check(r.exit_code == 0, "recognize runs");
    check(r.stdout_text.find("best: half_circle") != std::string::npos, "recognize names the right model");
    check(r.stdout_text.find("parabola") != std::string::npos, "recognize prints all ranked candidates");
    check(fs::exists(work / "report.json"), "recognize writes the report");

    // --- decanon -------------------------------------------------------
    r = run("decanon --lib " + q(work / "lib.json") + " --demo " + q(work / "demo_hc.json") +
            " --model half_circle --out " + q(work / "kps.json"));
    check(r.exit_code == 0, "decanon runs");
    {
        const pathmodel::PathSetFile file = pathmodel::load_path_set(q(work / "kps.json"));
        bool in_demo_range = file.sets.size() == 1 && file.sets[0].size() >= 2;
        // Demo is the unit half circle; keypoints must land near it.
        for (const pathmodel::Point3& p : file.sets[0]) {
            if (p.norm() > 2.0) in_demo_range = false;
        }
        check(in_demo_range, "decanon keypoints land in demonstration coordinates");
    }

    // --- correct -------------------------------------------------------
    {
        // Correction in the demo frame: push a short stretch of the arc
        // outward.
        pathmodel::PathSetFile corr;
        corr.label = "correction";
        corr.sets.push_back({{std::cos(1.2), std::sin(1.2) + 0.3, 0.0},
                             {std::cos(1.5), std::sin(1.5) + 0.35, 0.0},
                             {std::cos(1.8), std::sin(1.8) + 0.3, 0.0}});
        pathmodel::save_path_set(q(work / "correction.json"), corr);
    }
    r = run("correct --lib " + q(work / "lib.json") + " --demo " + q(work / "demo_hc.json") +
            " --correction " + q(work / "correction.json") + " --epsilon 0.05 --out " +
            q(work / "corrected.json"));
    check(r.exit_code == 0, "correct runs");
    check(fs::exists(work / "corrected.json"), "correct writes the corrected path");

    // --- tune ----------------------------------------------------------
    {
        // Library of "other" models only (parabola).
        const pathmodel::ModelLibrary lib = pathmodel::load_library(q(work / "lib.json"));
        pathmodel::ModelLibrary others;
        others.filter_sigma = lib.filter_sigma;
        others.add(*lib.find("parabola"));
        pathmodel::save_library(q(work / "others.json"), others);
    }
    r = run("tune --teach " + q(work / "teach_hc.json") + " --demo " + q(work / "demo_hc.json") +
            " --lib " + q(work / "others.json") + " --grid 0.02:0.2:0.06 --out " + q(work / "curve.csv"));
    check(r.exit_code == 0, "tune runs");
    check(r.stdout_text.find("selected_epsilon:") != std::string::npos, "tune prints the selected epsilon");
    {
        std::ifstream in(work / "curve.csv");
        std::string line;
        int lines = 0;
        while (std::getline(in, line)) ++lines;
        check(lines == 5, "tune curve has header plus 4 grid rows");
    }

    // --- matrix --------------------------------------------------------
    r = run("matrix --lib " + q(work / "lib.json") + " --demos " + q(work / "demo_hc.json") + " " +
            q(work / "demo_pb.json") + " --out " + q(work / "matrix.csv"));
    check(r.exit_code == 0, "matrix runs");
    {
        const std::string csv = slurp(work / "matrix.csv");
        check(csv.rfind("best,half_circle,parabola\n") != std::string::npos,
              "matrix argmax row names the right models");
    }

    // --- exit codes ----------------------------------------------------
    check(run("nonsense").exit_code == 1, "unknown subcommand exits with code 1");
    check(run("build --epsilon 0.1").exit_code == 1, "missing required flags exit with code 1");
    check(run("recognize --lib " + q(work / "does_not_exist.json") + " --demo " +
              q(work / "demo_hc.json"))
                  .exit_code == 2,
          "missing library file exits with code 2");

    // --- determinism ---------------------------------------------------
    {
        const fs::path rerun = work / "rerun";
        fs::create_directories(rerun);
        run("gen --shape half_circle --sets 8 --points 200 --noise-rel 0.02 --seed 7 --out " +
            q(rerun / "teach_hc.json"));
        run("build --in " + q(rerun / "teach_hc.json") + " --epsilon 0.04 --filter-sigma 2 " +
            "--name half_circle --out " + q(rerun / "lib_one.json"));
        run("build --in " + q(work / "teach_hc.json") + " --epsilon 0.04 --filter-sigma 2 " +
            "--name half_circle --out " + q(work / "lib_one.json"));

        check(slurp(rerun / "teach_hc.json") == slurp(work / "teach_hc.json"),
              "identical gen invocations are byte-identical");
        check(slurp(rerun / "lib_one.json") == slurp(work / "lib_one.json"),
              "identical build invocations are byte-identical");
    }

    // --- thin adapter: CLI output equals direct library output ---------
    {
        pathmodel::ShapeSpec spec;
        spec.kind = pathmodel::ShapeKind::half_circle;
        spec.n_points = 200;
        const pathmodel::Polyline3 base = pathmodel::gen_shape(spec);
        const double sigma = pathmodel::relative_sigma(base, 0.02);
        pathmodel::PathSetFile file;
        file.label = "half_circle";
        for (std::size_t i = 0; i < 8; ++i) {
            file.sets.push_back(pathmodel::add_noise(base, {sigma, pathmodel::derive_seed(7, i)}));
        }
        pathmodel::save_path_set(q(work / "teach_direct.json"), file);
        check(slurp(work / "teach_direct.json") == slurp(work / "teach_hc.json"),
              "gen output matches a direct library run byte for byte");
    }

    // --- five-shape library, transformed demo --------------------------
    {
        const fs::path lib5 = work / "lib5.json";
        int seed = 20;
        for (const char* shape :
             {"parabola", "rectangle", "quarter_circle", "spiral", "half_circle"}) {
            run("gen --shape " + std::string(shape) + " --sets 8 --points 200 --noise-rel 0.02 --seed " +
                std::to_string(seed++) + " --out " + q(work / (std::string(shape) + "_teach.json")));
            r = run("build --in " + q(work / (std::string(shape) + "_teach.json")) +
                    " --epsilon 0.04 --filter-sigma 2 --name " + shape + " --out " + q(lib5));
            check(r.exit_code == 0, std::string("build ") + shape + " into the 5-shape library");
        }
        r = run("recognize --lib " + q(lib5) + " --demo " + q(work / "demo_hc.json"));
        check(r.exit_code == 0 && r.stdout_text.find("best: half_circle") != std::string::npos,
              "half-circle demo wins against the 5-shape library");
    }

    if (failures == 0) fs::remove_all(work);
    return failures == 0 ? 0 : 1;
}
