#pragma once

#include <Eigen/Dense>

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace stabjgl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// K observation matrices (rows = samples, columns = variables) over a shared
/// variable set.
struct GroupedDataset {
    std::vector<Matrix> groups;
    std::vector<std::string> variable_names;  // optional, size p when present
    std::vector<std::string> group_names;     // optional, size K when present

    std::size_t num_groups() const noexcept { return groups.size(); }
    Index num_variables() const noexcept { return groups.empty() ? 0 : groups.front().cols(); }
    std::vector<Index> sample_sizes() const;

    /// Throws InputError unless K >= 1, p >= 2, every n_k >= 2, all groups
    /// share p and every entry is finite.
    void validate() const;
};

struct CovarianceSet {
    std::vector<Matrix> matrices;
    std::vector<Index> n;

    std::size_t num_groups() const noexcept { return matrices.size(); }
    Index dimension() const noexcept { return matrices.empty() ? 0 : matrices.front().rows(); }

    /// Throws InputError on shape mismatch, asymmetry beyond 1e-12 or a
    /// negative diagonal entry.
    void validate() const;
};

/// Dense ADMM primal iterates (theta, positive definite) together with the
/// consensus copies (z) that carry exact zeros and define the graphs.
struct PrecisionSet {
    std::vector<Matrix> theta;
    std::vector<Matrix> z;

    std::size_t num_groups() const noexcept { return theta.size(); }
};

struct Edge {
    Index i;
    Index j;

    auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on p nodes. Edges are stored with i < j.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(Index p);

    Index num_nodes() const noexcept { return p_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    /// Inserts the unordered pair {a, b}; returns false if already present.
    bool insert(Index a, Index b);
    bool erase(Index a, Index b);
    bool contains(Index a, Index b) const;

    const std::set<Edge>& edges() const noexcept { return edges_; }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    std::vector<Index> degrees() const;

    bool operator==(const EdgeSet&) const = default;

private:
    Edge normalize(Index a, Index b) const;

    Index p_ = 0;
    std::set<Edge> edges_;
};

struct PenaltyPair {
    double lambda1 = 0.1;
    double lambda2 = 0.0;

    void validate() const;
};

inline constexpr double kDefaultZeroEps = 1e-10;

/// Per-group sample covariance 1/(n_k - 1) X^T X of column-centred data.
/// With `standardize`, columns are also scaled to unit sample standard
/// deviation so every S^(k) is a correlation matrix.
CovarianceSet compute_sample_covariance(const GroupedDataset& data, bool standardize = true);

/// Single-group variant used for subsamples.
Matrix sample_covariance(const Matrix& x, bool standardize, std::size_t group_index = 0);

/// -theta_ij / sqrt(theta_ii theta_jj) off the diagonal, 1 on it.
Matrix partial_correlations(const Matrix& theta);

EdgeSet edge_set_from_precision(const Matrix& z, double zero_eps = kDefaultZeroEps);

/// 2|E| / (p^2 - p).
double sparsity_of(const EdgeSet& edges);

}  // namespace stabjgl
