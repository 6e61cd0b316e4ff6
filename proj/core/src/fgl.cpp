#include "stabjgl/fgl.hpp"

#include "stabjgl/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace stabjgl {

void SolverOptions::validate() const {
    if (!(admm_rho > 0.0) || !std::isfinite(admm_rho)) throw InputError("admm_rho must be positive");
    if (max_iter < 1) throw InputError("max_iter must be at least 1");
    if (!(primal_tol > 0.0) || !(dual_tol > 0.0)) throw InputError("solver tolerances must be positive");
    if (!(zero_eps >= 0.0)) throw InputError("zero_eps must be nonnegative");
}

std::vector<double> likelihood_weights(const CovarianceSet& cov, LikelihoodWeighting weighting) {
    std::vector<double> w(cov.num_groups(), 1.0);
    if (weighting == LikelihoodWeighting::sample_size) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] = static_cast<double>(cov.n[k]);
    }
    return w;
}

Matrix theta_update(const Matrix& s, const Matrix& a, double n, double rho) {
    if (!(rho > 0.0)) throw InputError("rho must be positive");
    if (!(n > 0.0)) throw InputError("likelihood weight must be positive");
    const double ratio = rho / n;
    const Matrix m = s - ratio * a;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
    if (eig.info() != Eigen::Success) throw NumericalError("eigendecomposition failed in theta update");
    const Vector& d = eig.eigenvalues();
    Vector root(d.size());
    for (Index j = 0; j < d.size(); ++j) {
        // (-d + sqrt(d^2 + 4 ratio)) / (2 ratio), rewritten to avoid cancellation for d >> 0
        const double disc = std::sqrt(d(j) * d(j) + 4.0 * ratio);
        root(j) = d(j) > 0.0 ? 2.0 / (d(j) + disc) : (disc - d(j)) / (2.0 * ratio);
    }
    const Matrix& v = eig.eigenvectors();
    Matrix theta = v * root.asDiagonal() * v.transpose();
    return 0.5 * (theta + theta.transpose());
}

std::vector<Matrix> z_update(std::span<const Matrix> theta_plus_u, double lam1, double lam2, double rho) {
    const std::size_t k = theta_plus_u.size();
    if (k == 0) return {};
    if (k > kMaxFusedGroups) throw InputError("at most 8 groups are supported");
    const Index p = theta_plus_u.front().rows();
    const double fuse = lam2 / rho;
    const double shrink = lam1 / rho;

    std::vector<Matrix> z(k, Matrix(p, p));
    std::array<double, kMaxFusedGroups> in{};
    std::array<double, kMaxFusedGroups> out{};
    const std::span<const double> in_view(in.data(), k);
    const std::span<double> out_view(out.data(), k);
    for (Index j = 0; j < p; ++j) {
        for (Index i = 0; i <= j; ++i) {
            for (std::size_t g = 0; g < k; ++g) in[g] = theta_plus_u[g](i, j);
            fused_prox(in_view, fuse, out_view);
            for (std::size_t g = 0; g < k; ++g) {
                const double v = i == j ? out[g] : soft_threshold(out[g], shrink);
                z[g](i, j) = v;
                z[g](j, i) = v;
            }
        }
    }
    return z;
}

double fgl_objective(const CovarianceSet& cov, std::span<const Matrix> theta, const PenaltyPair& penalties,
                     std::span<const double> weights) {
    const std::size_t k = theta.size();
    if (k != cov.num_groups() || weights.size() != k) throw InputError("objective input size mismatch");
    double value = 0.0;
    for (std::size_t g = 0; g < k; ++g) {
        Eigen::LLT<Matrix> llt(theta[g]);
        if (llt.info() != Eigen::Success) throw NumericalError("objective evaluated at a non-PD matrix");
        const double logdet = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
        const double trace = (cov.matrices[g].cwiseProduct(theta[g])).sum();
        value += weights[g] * (trace - logdet);
        Matrix off = theta[g];
        off.diagonal().setZero();
        value += penalties.lambda1 * off.cwiseAbs().sum();
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            value += penalties.lambda2 * (theta[a] - theta[b]).cwiseAbs().sum();
        }
    }
    return value;
}

namespace {

double total_squared_norm(const std::vector<Matrix>& ms) {
    double s = 0.0;
    for (const auto& m : ms) s += m.squaredNorm();
    return s;
}

void check_state(const AdmmState& state, std::size_t k, Index p) {
    const auto ok = [&](const std::vector<Matrix>& ms) {
        return ms.size() == k && std::all_of(ms.begin(), ms.end(), [&](const Matrix& m) {
                   return m.rows() == p && m.cols() == p;
               });
    };
    if (!ok(state.theta) || !ok(state.z) || !ok(state.u)) {
        throw InputError("warm-start state does not match the problem dimensions");
    }
}

}  // namespace

FglFit solve_fgl(const CovarianceSet& cov, const PenaltyPair& penalties, const SolverOptions& opts) {
    AdmmState state;
    return solve_fgl(cov, penalties, opts, state);
}

FglFit solve_fgl(const CovarianceSet& cov, const PenaltyPair& penalties, const SolverOptions& opts,
                 AdmmState& state) {
    cov.validate();
    penalties.validate();
    opts.validate();
    const std::size_t k = cov.num_groups();
    const Index p = cov.dimension();
    if (k > kMaxFusedGroups) throw InputError("at most 8 groups are supported");

    if (state.empty()) {
        state.theta.assign(k, Matrix::Identity(p, p));
        state.z.assign(k, Matrix::Zero(p, p));
        state.u.assign(k, Matrix::Zero(p, p));
    } else {
        check_state(state, k, p);
    }

    const std::vector<double> w = likelihood_weights(cov, opts.weighting);
    const double rho = opts.admm_rho;
    SolveReport report;
    std::vector<Matrix> theta_plus_u(k);

    for (int it = 1; it <= opts.max_iter; ++it) {
        for (std::size_t g = 0; g < k; ++g) {
            state.theta[g] = theta_update(cov.matrices[g], state.z[g] - state.u[g], w[g], rho);
            theta_plus_u[g] = state.theta[g] + state.u[g];
        }
        std::vector<Matrix> z_new = z_update(theta_plus_u, penalties.lambda1, penalties.lambda2, rho);

        double primal_sq = 0.0;
        double dual_sq = 0.0;
        for (std::size_t g = 0; g < k; ++g) {
            const Matrix r = state.theta[g] - z_new[g];
            primal_sq += r.squaredNorm();
            dual_sq += (z_new[g] - state.z[g]).squaredNorm();
            state.u[g] += r;
        }
        state.z = std::move(z_new);

        const double primal_scale =
            std::max({1.0, std::sqrt(total_squared_norm(state.theta)), std::sqrt(total_squared_norm(state.z))});
        const double dual_scale = std::max(1.0, rho * std::sqrt(total_squared_norm(state.u)));
        report.iterations = it;
        report.primal_residual = std::sqrt(primal_sq) / primal_scale;
        report.dual_residual = rho * std::sqrt(dual_sq) / dual_scale;
        if (!std::isfinite(report.primal_residual) || !std::isfinite(report.dual_residual)) {
            throw NumericalError("ADMM iterates diverged");
        }
        if (report.primal_residual <= opts.primal_tol && report.dual_residual <= opts.dual_tol) {
            report.converged = true;
            break;
        }
    }

    report.objective = fgl_objective(cov, state.theta, penalties, w);
    return FglFit{PrecisionSet{state.theta, state.z}, report};
}

}  // namespace stabjgl
