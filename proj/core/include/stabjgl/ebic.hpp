#pragma once

#include "stabjgl/fgl.hpp"
#include "stabjgl/model.hpp"
#include "stabjgl/stability.hpp"
#include "stabjgl/worker_pool.hpp"

#include <span>
#include <vector>

namespace stabjgl {

struct EbicConfig {
    std::vector<double> lambda2_grid = linspace(0.0, 0.1, 20);
    double gamma = 0.0;

    void validate() const;
};

struct EbicTrace {
    std::vector<double> lambda2;
    std::vector<double> score;                          // +inf for failed fits
    std::vector<std::vector<std::size_t>> edge_counts;  // [lambda][group]
    std::vector<bool> failed;
    std::vector<bool> converged;
    double selected_lambda2 = 0.0;
    std::size_t selected_index = 0;
};

struct Lambda2Selection {
    double lambda2 = 0.0;
    EbicTrace trace;
    FglFit fit;  // fit at the selected lambda2
};

/// sum_k [ n_k tr(S_k Theta_k) - n_k log det Theta_k + |E_k| log n_k + 4 |E_k| gamma log p ]
/// with Theta from the dense iterates and |E_k| from the sparse consensus copies.
double ebic_score(const CovarianceSet& cov, const PrecisionSet& fit, double gamma,
                  double zero_eps = kDefaultZeroEps);

/// Index of the minimum; equal scores resolve to the smaller index.
std::size_t argmin_prefer_first(std::span<const double> scores);

/// Fits every grid lambda2 at fixed lambda1 on the full data and returns the
/// eBIC minimizer.
Lambda2Selection select_lambda2(const CovarianceSet& cov, double lambda1, const EbicConfig& cfg,
                                const SolverOptions& solver, const WorkerPool* pool = nullptr);

}  // namespace stabjgl
