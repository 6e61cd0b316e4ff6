#include "stabjgl/pipeline.hpp"

#include "stabjgl/error.hpp"

#include <chrono>
#include <exception>
#include <string>
#include <utility>

namespace stabjgl {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
auto run_stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

}  // namespace

StabJglResult run_stabjgl(const GroupedDataset& data, const StabilityConfig& stability, const EbicConfig& ebic,
                          const SolverOptions& solver, const RunOptions& options) {
    data.validate();
    stability.validate();
    ebic.validate();
    solver.validate();

    StabJglResult result;

    auto t0 = Clock::now();
    const CovarianceSet cov =
        run_stage("covariance", [&] { return compute_sample_covariance(data, options.standardize); });
    result.timings.covariance_seconds = seconds_since(t0);

    t0 = Clock::now();
    Lambda1Selection sel1 = run_stage("lambda1 selection", [&] {
        return select_lambda1(data, stability, solver, options.standardize, options.pool);
    });
    result.timings.lambda1_seconds = seconds_since(t0);
    result.lambda1 = sel1.lambda1;
    result.variability = std::move(sel1.trace);

    t0 = Clock::now();
    Lambda2Selection sel2 =
        run_stage("lambda2 selection", [&] { return select_lambda2(cov, result.lambda1, ebic, solver, options.pool); });
    result.timings.lambda2_seconds = seconds_since(t0);
    result.lambda2 = sel2.lambda2;
    result.ebic = std::move(sel2.trace);

    t0 = Clock::now();
    FglFit final_fit = options.reuse_selection_fit
                           ? std::move(sel2.fit)
                           : run_stage("final fit", [&] {
                                 return solve_fgl(cov, PenaltyPair{result.lambda1, result.lambda2}, solver);
                             });
    result.timings.final_fit_seconds = seconds_since(t0);

    result.precision = std::move(final_fit.estimate);
    result.final_report = final_fit.report;
    for (std::size_t k = 0; k < result.precision.num_groups(); ++k) {
        result.edges.push_back(edge_set_from_precision(result.precision.z[k], solver.zero_eps));
        result.sparsity.push_back(sparsity_of(result.edges.back()));
        result.partial_correlations.push_back(partial_correlations(result.precision.theta[k]));
    }
    return result;
}

}  // namespace stabjgl
