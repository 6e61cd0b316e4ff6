#pragma once

#include "stabjgl/model.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace stabjgl {

struct SimulationSpec {
    Index p = 100;
    std::size_t k = 3;
    std::vector<Index> n{150, 200, 300};
    double target_sparsity = 0.02;
    /// Fraction of the base graph's edges present in every group.
    double similarity = 1.0;
    std::pair<double, double> partial_corr_range{0.1, 0.2};
    std::uint64_t seed = 1;

    void validate() const;
};

struct SyntheticInstance {
    std::vector<EdgeSet> true_edges;
    std::vector<Matrix> true_precision;
    std::vector<Matrix> true_covariance;
    GroupedDataset data;
};

/// Preferential-attachment tree on p nodes, then edges are added
/// preferentially (or leaf edges removed) until the edge count equals
/// round(target_sparsity * p (p - 1) / 2).
EdgeSet generate_scale_free_graph(Index p, double target_sparsity, std::uint64_t seed);

/// Group 0 is `base`. One uniformly chosen subset of round(similarity |E|)
/// base edges is kept in every other group; each of those groups then draws
/// its remaining edges uniformly from the non-edges of `base`.
std::vector<EdgeSet> perturb_for_similarity(const EdgeSet& base, std::size_t k, double similarity,
                                            std::uint64_t seed);

/// Symmetric p x p matrix of signed magnitudes drawn uniformly from
/// [lo, hi] with random signs, one per unordered pair.
Matrix draw_edge_values(Index p, std::pair<double, double> range, std::uint64_t seed);

/// Unit diagonal plus `edge_values` on the edges of `g`, repaired to a
/// minimum eigenvalue of at least 0.01 by diagonal inflation followed by
/// rescaling back to a unit diagonal.
Matrix precision_from_graph(const EdgeSet& g, const Matrix& edge_values);
Matrix precision_from_graph(const EdgeSet& g, std::pair<double, double> range, std::uint64_t seed);

/// n draws from N(0, theta^{-1}) using the Cholesky factor of theta.
Matrix sample_gaussian(const Matrix& theta, Index n, std::uint64_t seed);

/// |a and b| / |a|; 1 when a is empty.
double edge_sharing_fraction(const EdgeSet& a, const EdgeSet& b);

/// Mean edge-sharing fraction over all group pairs (1 for a single group).
double mean_pairwise_similarity(const std::vector<EdgeSet>& graphs);

/// Shared edges carry identical precision entries in every group.
SyntheticInstance generate_instance(const SimulationSpec& spec);

}  // namespace stabjgl
