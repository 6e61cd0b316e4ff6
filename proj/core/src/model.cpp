#include "stabjgl/model.hpp"

#include "stabjgl/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace stabjgl {

ZeroVarianceError::ZeroVarianceError(std::size_t group, std::size_t column)
    : InputError("zero-variance column " + std::to_string(column + 1) + " in group " +
                 std::to_string(group + 1) + " cannot be standardized"),
      group_(group),
      column_(column) {}

StageError::StageError(std::string stage, const std::string& what)
    : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}

std::vector<Index> GroupedDataset::sample_sizes() const {
    std::vector<Index> n;
    n.reserve(groups.size());
    for (const auto& g : groups) n.push_back(g.rows());
    return n;
}

void GroupedDataset::validate() const {
    if (groups.empty()) throw InputError("dataset has no groups");
    const Index p = groups.front().cols();
    if (p < 2) throw InputError("dataset needs at least 2 variables");
    for (std::size_t k = 0; k < groups.size(); ++k) {
        const auto& g = groups[k];
        if (g.cols() != p) {
            throw InputError("group " + std::to_string(k + 1) + " has " + std::to_string(g.cols()) +
                             " columns, expected " + std::to_string(p));
        }
        if (g.rows() < 2) {
            throw InputError("group " + std::to_string(k + 1) + " needs at least 2 observations");
        }
        if (!g.allFinite()) {
            throw InputError("group " + std::to_string(k + 1) + " contains non-finite values");
        }
    }
    if (!variable_names.empty() && static_cast<Index>(variable_names.size()) != p) {
        throw InputError("variable_names must have one entry per column");
    }
    if (!group_names.empty() && group_names.size() != groups.size()) {
        throw InputError("group_names must have one entry per group");
    }
}

void CovarianceSet::validate() const {
    if (matrices.empty()) throw InputError("covariance set is empty");
    if (n.size() != matrices.size()) throw InputError("covariance set needs one sample size per group");
    const Index p = matrices.front().rows();
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        const auto& s = matrices[k];
        if (s.rows() != p || s.cols() != p) throw InputError("covariance matrices must all be p x p");
        if (!s.allFinite()) throw InputError("covariance matrix contains non-finite values");
        if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
            throw InputError("covariance matrix " + std::to_string(k + 1) + " is not symmetric");
        }
        if (s.diagonal().minCoeff() < 0.0) throw InputError("covariance diagonal must be nonnegative");
        if (n[k] < 1) throw InputError("sample sizes must be positive");
    }
}

EdgeSet::EdgeSet(Index p) : p_(p) {
    if (p < 0) throw InputError("node count must be nonnegative");
}

Edge EdgeSet::normalize(Index a, Index b) const {
    if (a == b) throw InputError("self-loops are not allowed");
    if (a < 0 || b < 0 || a >= p_ || b >= p_) throw InputError("edge endpoint out of range");
    return a < b ? Edge{a, b} : Edge{b, a};
}

bool EdgeSet::insert(Index a, Index b) { return edges_.insert(normalize(a, b)).second; }

bool EdgeSet::erase(Index a, Index b) { return edges_.erase(normalize(a, b)) > 0; }

bool EdgeSet::contains(Index a, Index b) const {
    if (a == b || a < 0 || b < 0 || a >= p_ || b >= p_) return false;
    return edges_.contains(a < b ? Edge{a, b} : Edge{b, a});
}

std::vector<Index> EdgeSet::degrees() const {
    std::vector<Index> deg(static_cast<std::size_t>(p_), 0);
    for (const auto& e : edges_) {
        ++deg[static_cast<std::size_t>(e.i)];
        ++deg[static_cast<std::size_t>(e.j)];
    }
    return deg;
}

void PenaltyPair::validate() const {
    if (!(lambda1 > 0.0) || !std::isfinite(lambda1)) throw InputError("lambda1 must be positive");
    if (!(lambda2 >= 0.0) || !std::isfinite(lambda2)) throw InputError("lambda2 must be nonnegative");
}

Matrix sample_covariance(const Matrix& x, bool standardize, std::size_t group_index) {
    const Index n = x.rows();
    if (n < 2) throw InputError("sample covariance needs at least 2 observations");
    Matrix centered = x.rowwise() - x.colwise().mean();
    if (standardize) {
        for (Index c = 0; c < centered.cols(); ++c) {
            const double sd = std::sqrt(centered.col(c).squaredNorm() / static_cast<double>(n - 1));
            if (!(sd > 0.0)) throw ZeroVarianceError(group_index, static_cast<std::size_t>(c));
            centered.col(c) /= sd;
        }
    }
    Matrix s = (centered.transpose() * centered) / static_cast<double>(n - 1);
    // exact symmetry; the product is symmetric only up to rounding
    s = (0.5 * (s + s.transpose())).eval();
    if (standardize) s.diagonal().setOnes();
    return s;
}

CovarianceSet compute_sample_covariance(const GroupedDataset& data, bool standardize) {
    data.validate();
    CovarianceSet cov;
    cov.matrices.reserve(data.num_groups());
    for (std::size_t k = 0; k < data.num_groups(); ++k) {
        cov.matrices.push_back(sample_covariance(data.groups[k], standardize, k));
        cov.n.push_back(data.groups[k].rows());
    }
    return cov;
}

Matrix partial_correlations(const Matrix& theta) {
    if (theta.rows() != theta.cols()) throw InputError("precision matrix must be square");
    const Vector d = theta.diagonal();
    if (d.size() > 0 && !(d.minCoeff() > 0.0)) {
        throw InputError("precision matrix must have a positive diagonal");
    }
    const Vector inv_sqrt = d.cwiseSqrt().cwiseInverse();
    Matrix rho = -(inv_sqrt.asDiagonal() * theta * inv_sqrt.asDiagonal());
    rho = (0.5 * (rho + rho.transpose())).eval();
    rho = rho.cwiseMax(-1.0).cwiseMin(1.0);
    rho.diagonal().setOnes();
    return rho;
}

EdgeSet edge_set_from_precision(const Matrix& z, double zero_eps) {
    if (z.rows() != z.cols()) throw InputError("precision matrix must be square");
    if (zero_eps < 0.0) throw InputError("zero_eps must be nonnegative");
    EdgeSet edges(z.rows());
    for (Index j = 1; j < z.cols(); ++j) {
        for (Index i = 0; i < j; ++i) {
            if (std::max(std::abs(z(i, j)), std::abs(z(j, i))) > zero_eps) edges.insert(i, j);
        }
    }
    return edges;
}

double sparsity_of(const EdgeSet& edges) {
    const auto p = static_cast<double>(edges.num_nodes());
    if (edges.num_nodes() < 2) throw InputError("sparsity needs at least 2 nodes");
    return 2.0 * static_cast<double>(edges.size()) / (p * p - p);
}

}  // namespace stabjgl
