#pragma once

#include "stabjgl/model.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace stabjgl {

/// Largest K handled by the exact fused proximal operator.
inline constexpr std::size_t kMaxFusedGroups = 8;

/// How the per-group log-likelihood terms are weighted in the objective.
///   equal       : every group weighted 1 (penalties live on the scale of S)
///   sample_size : group k weighted n_k
enum class LikelihoodWeighting { equal, sample_size };

struct SolverOptions {
    double admm_rho = 1.0;
    int max_iter = 500;
    double primal_tol = 1e-5;
    double dual_tol = 1e-5;
    double zero_eps = kDefaultZeroEps;
    LikelihoodWeighting weighting = LikelihoodWeighting::equal;

    void validate() const;
};

struct SolveReport {
    int iterations = 0;
    bool converged = false;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double objective = 0.0;
};

/// Full ADMM state; pass a populated state to warm-start a solve.
struct AdmmState {
    std::vector<Matrix> theta;
    std::vector<Matrix> z;
    std::vector<Matrix> u;

    bool empty() const noexcept { return theta.empty(); }
};

struct FglFit {
    PrecisionSet estimate;
    SolveReport report;
};

/// Minimizes
///   sum_k w_k [ -log det Theta_k + tr(S_k Theta_k) ]
///     + lambda1 sum_k sum_{i!=j} |theta_ij^k| + lambda2 sum_{k<k'} ||Theta_k - Theta_k'||_1
/// by ADMM with a fixed penalty parameter rho. The weights w_k follow
/// `opts.weighting`. Non-convergence is reported through `report.converged`.
FglFit solve_fgl(const CovarianceSet& cov, const PenaltyPair& penalties, const SolverOptions& opts = {});

/// Warm-started variant. A non-empty `state` seeds the iteration and is
/// overwritten with the final iterates.
FglFit solve_fgl(const CovarianceSet& cov, const PenaltyPair& penalties, const SolverOptions& opts,
                 AdmmState& state);

std::vector<double> likelihood_weights(const CovarianceSet& cov, LikelihoodWeighting weighting);

/// Objective above evaluated at `theta` (the dense iterates).
double fgl_objective(const CovarianceSet& cov, std::span<const Matrix> theta, const PenaltyPair& penalties,
                     std::span<const double> weights);

/// argmin_T  -n log det T + n tr(S T) + (rho/2) ||T - A||_F^2, computed from
/// the eigendecomposition of S - (rho/n) A. Always positive definite.
Matrix theta_update(const Matrix& s, const Matrix& a, double n, double rho);

inline double soft_threshold(double x, double t) noexcept {
    if (x > t) return x - t;
    if (x < -t) return x + t;
    return 0.0;
}

/// argmin_y 1/2 sum_k (y_k - a_k)^2 + lam sum_{k<k'} |y_k - y_k'|.
/// Exact for K <= kMaxFusedGroups; `out` may alias `values`.
void fused_prox(std::span<const double> values, double lam, std::span<double> out);
std::vector<double> fused_prox(std::span<const double> values, double lam);

/// Consensus step: fused prox across groups with lam2/rho, then off-diagonal
/// soft-thresholding with lam1/rho. The upper triangle of the inputs is read;
/// outputs are exactly symmetric.
std::vector<Matrix> z_update(std::span<const Matrix> theta_plus_u, double lam1, double lam2, double rho);

}  // namespace stabjgl
