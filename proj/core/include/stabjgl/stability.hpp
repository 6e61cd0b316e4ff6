#pragma once

#include "stabjgl/fgl.hpp"
#include "stabjgl/model.hpp"
#include "stabjgl/worker_pool.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace stabjgl {

/// Evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t count);

struct StabilityConfig {
    std::vector<double> lambda1_grid = linspace(0.01, 1.0, 20);
    double lambda2_init = 0.01;
    double beta1 = 0.1;
    int n_sample = 20;
    double subsample_cap_ratio = 0.8;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Per-lambda1 instability statistics, indexed in grid order.
struct VariabilityTrace {
    std::vector<double> lambda1;
    std::vector<std::vector<double>> per_group;  // [lambda][group] D_(k)
    std::vector<double> aggregate;               // D(lambda1), mean over groups
    std::vector<double> monotone;                // max of D over t >= lambda1
    /// psi estimates, [lambda][group], p x p with a zero diagonal.
    std::vector<std::vector<Matrix>> edge_frequency;
    std::vector<int> successful_fits;            // per lambda, out of n_sample
    int nonconverged_fits = 0;
    double selected_lambda1 = 0.0;
    std::size_t selected_index = 0;
    /// Set when no grid value met the threshold and the largest was returned.
    bool threshold_unmet = false;
};

struct Lambda1Selection {
    double lambda1 = 0.0;
    VariabilityTrace trace;
};

/// Row indices of one subsample per group: draws[eta][k].
using SubsampleDraws = std::vector<std::vector<std::vector<Index>>>;

/// b_k = floor(10 sqrt(n_k)) when that is a strict subset of the rows,
/// otherwise floor(cap_ratio * n_k).
std::vector<Index> subsample_sizes(std::span<const Index> n, double cap_ratio = 0.8);

/// All N_sample x K index sets, drawn sequentially from `cfg.seed` before any
/// fitting happens. Indices within a set are sorted and distinct.
SubsampleDraws draw_subsamples(const GroupedDataset& data, const StabilityConfig& cfg);

/// Entrywise 2 psi (1 - psi).
Matrix edge_instability(const Matrix& psi);

/// Mean of the strict upper triangle.
double graph_variability(const Matrix& xi);

/// monotone[i] = max_{j >= i} variability[j] for a grid in ascending order.
std::vector<double> monotonize_from_sparse_end(std::span<const double> variability);

struct ThresholdChoice {
    std::size_t index = 0;
    bool threshold_unmet = false;
};

/// Smallest index whose monotone variability is <= beta1; the last index
/// with threshold_unmet set when none qualifies.
ThresholdChoice choose_by_threshold(std::span<const double> monotone, double beta1);

/// Selects lambda1 by subsample edge instability across all groups. Each
/// subsample is refitted along the grid from the sparse end with warm starts.
Lambda1Selection select_lambda1(const GroupedDataset& data, const StabilityConfig& cfg, const SolverOptions& solver,
                                bool standardize = true, const WorkerPool* pool = nullptr);

}  // namespace stabjgl
