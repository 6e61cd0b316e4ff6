#include "stabjgl/stability.hpp"

#include "stabjgl/error.hpp"
#include "stabjgl/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

namespace stabjgl {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0) return {};
    if (count == 1) return {lo};
    std::vector<double> out(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

void StabilityConfig::validate() const {
    if (lambda1_grid.empty()) throw InputError("lambda1 grid is empty");
    for (std::size_t i = 0; i < lambda1_grid.size(); ++i) {
        if (!(lambda1_grid[i] > 0.0)) throw InputError("lambda1 grid values must be positive");
        if (i > 0 && !(lambda1_grid[i] > lambda1_grid[i - 1])) {
            throw InputError("lambda1 grid must be strictly ascending");
        }
    }
    if (!(lambda2_init >= 0.0)) throw InputError("lambda2_init must be nonnegative");
    if (!(beta1 > 0.0 && beta1 <= 0.5)) throw InputError("beta1 must lie in (0, 0.5]");
    if (n_sample < 1) throw InputError("n_sample must be positive");
    if (!(subsample_cap_ratio > 0.0 && subsample_cap_ratio < 1.0)) {
        throw InputError("subsample_cap_ratio must lie in (0, 1)");
    }
}

std::vector<Index> subsample_sizes(std::span<const Index> n, double cap_ratio) {
    if (!(cap_ratio > 0.0 && cap_ratio < 1.0)) throw InputError("cap_ratio must lie in (0, 1)");
    std::vector<Index> b;
    b.reserve(n.size());
    for (const Index nk : n) {
        if (nk < 2) throw InputError("each group needs at least 2 observations to subsample");
        auto size = static_cast<Index>(std::floor(10.0 * std::sqrt(static_cast<double>(nk))));
        if (size >= nk) size = static_cast<Index>(std::floor(cap_ratio * static_cast<double>(nk)));
        if (size < 1 || size >= nk) {
            throw InputError("group with " + std::to_string(nk) + " observations is too small to subsample");
        }
        b.push_back(size);
    }
    return b;
}

SubsampleDraws draw_subsamples(const GroupedDataset& data, const StabilityConfig& cfg) {
    const std::vector<Index> n = data.sample_sizes();
    const std::vector<Index> b = subsample_sizes(n, cfg.subsample_cap_ratio);
    Rng rng = make_rng(cfg.seed, 0x5ab5);

    SubsampleDraws draws(static_cast<std::size_t>(cfg.n_sample));
    std::vector<Index> pool;
    for (auto& tuple : draws) {
        tuple.resize(n.size());
        for (std::size_t k = 0; k < n.size(); ++k) {
            pool.resize(static_cast<std::size_t>(n[k]));
            std::iota(pool.begin(), pool.end(), Index{0});
            // partial Fisher-Yates: the first b_k slots are a uniform draw
            for (Index i = 0; i < b[k]; ++i) {
                std::uniform_int_distribution<Index> pick(i, n[k] - 1);
                std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
            }
            tuple[k].assign(pool.begin(), pool.begin() + b[k]);
            std::sort(tuple[k].begin(), tuple[k].end());
        }
    }
    return draws;
}

Matrix edge_instability(const Matrix& psi) { return (2.0 * psi.array() * (1.0 - psi.array())).matrix(); }

double graph_variability(const Matrix& xi) {
    const Index p = xi.rows();
    if (p < 2 || xi.cols() != p) throw InputError("variability needs a square matrix with p >= 2");
    double sum = 0.0;
    for (Index j = 1; j < p; ++j) {
        for (Index i = 0; i < j; ++i) sum += xi(i, j);
    }
    return sum / (0.5 * static_cast<double>(p) * static_cast<double>(p - 1));
}

std::vector<double> monotonize_from_sparse_end(std::span<const double> variability) {
    std::vector<double> out(variability.begin(), variability.end());
    for (std::size_t i = out.size(); i-- > 1;) out[i - 1] = std::max(out[i - 1], out[i]);
    return out;
}

ThresholdChoice choose_by_threshold(std::span<const double> monotone, double beta1) {
    if (monotone.empty()) throw InputError("cannot select from an empty trace");
    for (std::size_t i = 0; i < monotone.size(); ++i) {
        if (monotone[i] <= beta1) return {i, false};
    }
    return {monotone.size() - 1, true};
}

namespace {

struct SubsampleOutcome {
    // [lambda] -> per-group graphs, empty optional when the fit failed
    std::vector<std::optional<std::vector<EdgeSet>>> graphs;
    int nonconverged = 0;
};

Matrix take_rows(const Matrix& x, const std::vector<Index>& rows) {
    Matrix out(static_cast<Index>(rows.size()), x.cols());
    for (std::size_t r = 0; r < rows.size(); ++r) out.row(static_cast<Index>(r)) = x.row(rows[r]);
    return out;
}

SubsampleOutcome fit_subsample_path(const GroupedDataset& data, const std::vector<std::vector<Index>>& rows,
                                    const StabilityConfig& cfg, const SolverOptions& solver, bool standardize) {
    const std::size_t n_lambda = cfg.lambda1_grid.size();
    SubsampleOutcome outcome;
    outcome.graphs.resize(n_lambda);

    CovarianceSet cov;
    try {
        for (std::size_t k = 0; k < data.num_groups(); ++k) {
            cov.matrices.push_back(sample_covariance(take_rows(data.groups[k], rows[k]), standardize, k));
            cov.n.push_back(static_cast<Index>(rows[k].size()));
        }
    } catch (const std::exception&) {
        return outcome;  // every lambda counts as a failed fit for this subsample
    }

    AdmmState state;
    for (std::size_t l = n_lambda; l-- > 0;) {
        try {
            const FglFit fit = solve_fgl(cov, PenaltyPair{cfg.lambda1_grid[l], cfg.lambda2_init}, solver, state);
            if (!fit.report.converged) ++outcome.nonconverged;
            std::vector<EdgeSet> graphs;
            graphs.reserve(fit.estimate.z.size());
            for (const auto& z : fit.estimate.z) graphs.push_back(edge_set_from_precision(z, solver.zero_eps));
            outcome.graphs[l] = std::move(graphs);
        } catch (const NumericalError&) {
            state = AdmmState{};
        }
    }
    return outcome;
}

}  // namespace

Lambda1Selection select_lambda1(const GroupedDataset& data, const StabilityConfig& cfg, const SolverOptions& solver,
                                bool standardize, const WorkerPool* pool) {
    data.validate();
    cfg.validate();
    solver.validate();

    const SubsampleDraws draws = draw_subsamples(data, cfg);
    std::vector<SubsampleOutcome> outcomes(draws.size());
    run_indexed(pool, draws.size(), [&](std::size_t eta) {
        outcomes[eta] = fit_subsample_path(data, draws[eta], cfg, solver, standardize);
    });

    const std::size_t n_lambda = cfg.lambda1_grid.size();
    const std::size_t k_groups = data.num_groups();
    const Index p = data.num_variables();

    VariabilityTrace trace;
    trace.lambda1 = cfg.lambda1_grid;
    trace.per_group.assign(n_lambda, std::vector<double>(k_groups, 0.0));
    trace.aggregate.assign(n_lambda, 0.0);
    trace.edge_frequency.assign(n_lambda, std::vector<Matrix>(k_groups, Matrix::Zero(p, p)));
    trace.successful_fits.assign(n_lambda, 0);
    for (const auto& o : outcomes) trace.nonconverged_fits += o.nonconverged;

    for (std::size_t l = 0; l < n_lambda; ++l) {
        int ok = 0;
        for (const auto& o : outcomes) {
            if (!o.graphs[l]) continue;
            ++ok;
            for (std::size_t k = 0; k < k_groups; ++k) {
                Matrix& counts = trace.edge_frequency[l][k];
                for (const auto& e : (*o.graphs[l])[k]) {
                    counts(e.i, e.j) += 1.0;
                    counts(e.j, e.i) += 1.0;
                }
            }
        }
        trace.successful_fits[l] = ok;
        const int failed = cfg.n_sample - ok;
        if (2 * failed > cfg.n_sample) {
            throw NumericalError(std::to_string(failed) + " of " + std::to_string(cfg.n_sample) +
                                 " subsample fits failed at lambda1 = " + std::to_string(cfg.lambda1_grid[l]));
        }
        double sum = 0.0;
        for (std::size_t k = 0; k < k_groups; ++k) {
            Matrix& psi = trace.edge_frequency[l][k];
            psi /= static_cast<double>(ok);
            const double d = graph_variability(edge_instability(psi));
            trace.per_group[l][k] = d;
            sum += d;
        }
        trace.aggregate[l] = sum / static_cast<double>(k_groups);
    }

    trace.monotone = monotonize_from_sparse_end(trace.aggregate);
    const ThresholdChoice choice = choose_by_threshold(trace.monotone, cfg.beta1);
    trace.selected_index = choice.index;
    trace.threshold_unmet = choice.threshold_unmet;
    trace.selected_lambda1 = cfg.lambda1_grid[choice.index];
    return Lambda1Selection{trace.selected_lambda1, std::move(trace)};
}

}  // namespace stabjgl
