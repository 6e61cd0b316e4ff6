#include "stabjgl/ebic.hpp"

#include "stabjgl/error.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace stabjgl {

void EbicConfig::validate() const {
    if (lambda2_grid.empty()) throw InputError("lambda2 grid is empty");
    for (std::size_t i = 0; i < lambda2_grid.size(); ++i) {
        if (!(lambda2_grid[i] >= 0.0)) throw InputError("lambda2 grid values must be nonnegative");
        if (i > 0 && !(lambda2_grid[i] > lambda2_grid[i - 1])) {
            throw InputError("lambda2 grid must be strictly ascending");
        }
    }
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw InputError("gamma must lie in [0, 1]");
}

double ebic_score(const CovarianceSet& cov, const PrecisionSet& fit, double gamma, double zero_eps) {
    const std::size_t k = cov.num_groups();
    if (fit.theta.size() != k || fit.z.size() != k) throw InputError("fit and covariance group counts differ");
    const double log_p = std::log(static_cast<double>(cov.dimension()));
    double score = 0.0;
    for (std::size_t g = 0; g < k; ++g) {
        const Matrix& theta = fit.theta[g];
        Eigen::LLT<Matrix> llt(theta);
        if (llt.info() != Eigen::Success) {
            throw NumericalError("eBIC needs a positive definite fit (group " + std::to_string(g + 1) + ")");
        }
        const double logdet = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
        const auto n = static_cast<double>(cov.n[g]);
        const auto edges = static_cast<double>(edge_set_from_precision(fit.z[g], zero_eps).size());
        const double trace = cov.matrices[g].cwiseProduct(theta).sum();
        score += n * trace - n * logdet + edges * std::log(n) + 4.0 * edges * gamma * log_p;
    }
    return score;
}

std::size_t argmin_prefer_first(std::span<const double> scores) {
    if (scores.empty()) throw InputError("no scores to minimize");
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] < scores[best]) best = i;
    }
    return best;
}

Lambda2Selection select_lambda2(const CovarianceSet& cov, double lambda1, const EbicConfig& cfg,
                                const SolverOptions& solver, const WorkerPool* pool) {
    cov.validate();
    cfg.validate();
    solver.validate();

    const std::size_t n_lambda = cfg.lambda2_grid.size();
    std::vector<std::optional<FglFit>> fits(n_lambda);
    run_indexed(pool, n_lambda, [&](std::size_t l) {
        try {
            fits[l] = solve_fgl(cov, PenaltyPair{lambda1, cfg.lambda2_grid[l]}, solver);
        } catch (const NumericalError&) {
            fits[l].reset();
        }
    });

    EbicTrace trace;
    trace.lambda2 = cfg.lambda2_grid;
    trace.score.assign(n_lambda, std::numeric_limits<double>::infinity());
    trace.edge_counts.assign(n_lambda, {});
    trace.failed.assign(n_lambda, true);
    trace.converged.assign(n_lambda, false);
    bool any = false;
    for (std::size_t l = 0; l < n_lambda; ++l) {
        if (!fits[l]) continue;
        try {
            trace.score[l] = ebic_score(cov, fits[l]->estimate, cfg.gamma, solver.zero_eps);
        } catch (const NumericalError&) {
            continue;
        }
        for (const auto& z : fits[l]->estimate.z) {
            trace.edge_counts[l].push_back(edge_set_from_precision(z, solver.zero_eps).size());
        }
        trace.failed[l] = false;
        trace.converged[l] = fits[l]->report.converged;
        any = true;
    }
    if (!any) throw NumericalError("every lambda2 fit failed");

    trace.selected_index = argmin_prefer_first(trace.score);
    trace.selected_lambda2 = cfg.lambda2_grid[trace.selected_index];
    FglFit best = std::move(*fits[trace.selected_index]);
    return Lambda2Selection{trace.selected_lambda2, std::move(trace), std::move(best)};
}

}  // namespace stabjgl
