#pragma once

#include "stabjgl/ebic.hpp"
#include "stabjgl/fgl.hpp"
#include "stabjgl/model.hpp"
#include "stabjgl/stability.hpp"
#include "stabjgl/worker_pool.hpp"

#include <vector>

namespace stabjgl {

struct RunOptions {
    bool standardize = true;
    /// Reuse the lambda2-selection fit at the winner instead of refitting.
    bool reuse_selection_fit = false;
    const WorkerPool* pool = nullptr;
};

struct StageTimings {
    double covariance_seconds = 0.0;
    double lambda1_seconds = 0.0;
    double lambda2_seconds = 0.0;
    double final_fit_seconds = 0.0;

    double total() const noexcept {
        return covariance_seconds + lambda1_seconds + lambda2_seconds + final_fit_seconds;
    }
};

struct StabJglResult {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    PrecisionSet precision;
    SolveReport final_report;
    std::vector<EdgeSet> edges;
    std::vector<double> sparsity;
    std::vector<Matrix> partial_correlations;
    VariabilityTrace variability;
    EbicTrace ebic;
    StageTimings timings;
};

/// Stability-based lambda1, eBIC-based lambda2, then a full-data fit at the
/// selected pair. Stage failures surface as StageError naming the stage.
StabJglResult run_stabjgl(const GroupedDataset& data, const StabilityConfig& stability, const EbicConfig& ebic,
                          const SolverOptions& solver, const RunOptions& options = {});

}  // namespace stabjgl
