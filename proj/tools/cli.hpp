#pragma once

#include "stabjgl/ebic.hpp"
#include "stabjgl/fgl.hpp"
#include "stabjgl/stability.hpp"
#include "stabjgl/synthetic.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace stabjgl::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,
    kInvalidInput = 2,
    kSolverAbort = 3,
};

/// Parses `lo:hi:count` into count evenly spaced values, endpoints included.
std::vector<double> parse_grid(const std::string& text);

struct SimulateConfig {
    SimulationSpec spec;
    std::filesystem::path out_dir = "simulation";
};

struct InferConfig {
    std::vector<std::filesystem::path> inputs;
    std::filesystem::path out_dir = "stabjgl_out";
    StabilityConfig stability;
    EbicConfig ebic;
    SolverOptions solver;
    bool standardize = true;
    bool reuse_selection_fit = false;
    std::size_t threads = 1;
};

struct EvaluateConfig {
    std::vector<std::filesystem::path> estimated;
    std::vector<std::filesystem::path> truth;
    Index p = 0;
    std::filesystem::path manifest;
    std::filesystem::path out_dir = "evaluation";
};

int cmd_simulate(const SimulateConfig& cfg, std::ostream& log);
int cmd_infer(const InferConfig& cfg, std::ostream& log);
int cmd_evaluate(const EvaluateConfig& cfg, std::ostream& log);

/// Full command-line entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabjgl::cli
