#include "stabjgl/synthetic.hpp"

#include "stabjgl/error.hpp"
#include "stabjgl/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stabjgl {

void SimulationSpec::validate() const {
    if (p < 3) throw InputError("simulation needs p >= 3");
    if (k < 1) throw InputError("simulation needs at least one group");
    if (n.size() != k) throw InputError("need one sample size per group");
    for (const Index nk : n) {
        if (nk < 1) throw InputError("sample sizes must be positive");
    }
    if (!(target_sparsity > 0.0 && target_sparsity <= 1.0)) throw InputError("target sparsity must lie in (0, 1]");
    if (!(similarity >= 0.0 && similarity <= 1.0)) throw InputError("similarity must lie in [0, 1]");
    const auto [lo, hi] = partial_corr_range;
    if (!(lo > 0.0 && lo < hi && hi < 1.0)) throw InputError("partial correlation range must satisfy 0 < lo < hi < 1");
}

namespace {

std::size_t max_edges(Index p) { return static_cast<std::size_t>(p) * static_cast<std::size_t>(p - 1) / 2; }

std::vector<Edge> non_edges(const EdgeSet& g) {
    std::vector<Edge> out;
    const Index p = g.num_nodes();
    for (Index j = 1; j < p; ++j) {
        for (Index i = 0; i < j; ++i) {
            if (!g.contains(i, j)) out.push_back({i, j});
        }
    }
    return out;
}

template <typename T>
T pick_uniform(const std::vector<T>& items, Rng& rng) {
    std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
    return items[d(rng)];
}

}  // namespace

EdgeSet generate_scale_free_graph(Index p, double target_sparsity, std::uint64_t seed) {
    if (p < 3) throw InputError("scale-free graph needs p >= 3");
    if (!(target_sparsity >= 0.0 && target_sparsity <= 1.0)) throw InputError("target sparsity must lie in [0, 1]");
    const auto target = static_cast<std::size_t>(std::llround(target_sparsity * static_cast<double>(max_edges(p))));

    Rng rng = make_rng(seed, 0x5f);
    EdgeSet g(p);
    // each edge contributes both endpoints, so a uniform pick from this list
    // selects a node with probability proportional to its degree
    std::vector<Index> endpoints;
    g.insert(0, 1);
    endpoints.insert(endpoints.end(), {0, 1});
    for (Index node = 2; node < p; ++node) {
        const Index target_node = pick_uniform(endpoints, rng);
        g.insert(node, target_node);
        endpoints.insert(endpoints.end(), {node, target_node});
    }

    while (g.size() > target) {
        std::vector<Index> deg = g.degrees();
        std::vector<Edge> leaves;
        for (const auto& e : g) {
            if (deg[static_cast<std::size_t>(e.i)] == 1 || deg[static_cast<std::size_t>(e.j)] == 1) leaves.push_back(e);
        }
        const Edge e = pick_uniform(leaves, rng);
        g.erase(e.i, e.j);
    }

    int misses = 0;
    while (g.size() < target) {
        if (misses < 200) {
            const Index a = pick_uniform(endpoints, rng);
            const Index b = pick_uniform(endpoints, rng);
            if (a == b || g.contains(a, b)) {
                ++misses;
                continue;
            }
            g.insert(a, b);
            endpoints.insert(endpoints.end(), {a, b});
            misses = 0;
        } else {
            const Edge e = pick_uniform(non_edges(g), rng);
            g.insert(e.i, e.j);
            endpoints.insert(endpoints.end(), {e.i, e.j});
            misses = 0;
        }
    }
    return g;
}

std::vector<EdgeSet> perturb_for_similarity(const EdgeSet& base, std::size_t k, double similarity,
                                            std::uint64_t seed) {
    if (!(similarity >= 0.0 && similarity <= 1.0)) throw InputError("similarity must lie in [0, 1]");
    if (k < 1) throw InputError("need at least one group");
    const std::size_t total = base.size();
    const auto keep = static_cast<std::size_t>(std::llround(similarity * static_cast<double>(total)));
    const std::size_t rewire = total - keep;
    const std::vector<Edge> candidates = non_edges(base);
    if (k > 1 && candidates.size() < rewire) throw InputError("not enough non-edges to rewire the base graph");

    Rng rng = make_rng(seed, 0x51);
    std::vector<Edge> edges(base.begin(), base.end());
    std::shuffle(edges.begin(), edges.end(), rng);

    std::vector<EdgeSet> out;
    out.reserve(k);
    out.push_back(base);
    for (std::size_t g = 1; g < k; ++g) {
        EdgeSet graph(base.num_nodes());
        for (std::size_t i = 0; i < keep; ++i) graph.insert(edges[i].i, edges[i].j);
        std::vector<Edge> pool = candidates;
        for (std::size_t i = 0; i < rewire; ++i) {
            std::uniform_int_distribution<std::size_t> d(i, pool.size() - 1);
            std::swap(pool[i], pool[d(rng)]);
            graph.insert(pool[i].i, pool[i].j);
        }
        out.push_back(std::move(graph));
    }
    return out;
}

Matrix draw_edge_values(Index p, std::pair<double, double> range, std::uint64_t seed) {
    const auto [lo, hi] = range;
    if (!(lo >= 0.0 && lo <= hi)) throw InputError("invalid magnitude range");
    Rng rng = make_rng(seed, 0xed);
    std::uniform_real_distribution<double> magnitude(lo, hi);
    std::bernoulli_distribution negative(0.5);
    Matrix values = Matrix::Zero(p, p);
    for (Index j = 1; j < p; ++j) {
        for (Index i = 0; i < j; ++i) {
            const double m = magnitude(rng);
            const double v = negative(rng) ? -m : m;
            values(i, j) = v;
            values(j, i) = v;
        }
    }
    return values;
}

Matrix precision_from_graph(const EdgeSet& g, const Matrix& edge_values) {
    const Index p = g.num_nodes();
    if (edge_values.rows() != p || edge_values.cols() != p) throw InputError("edge value matrix has the wrong shape");
    Matrix theta = Matrix::Identity(p, p);
    for (const auto& e : g) {
        theta(e.i, e.j) = edge_values(e.i, e.j);
        theta(e.j, e.i) = edge_values(e.i, e.j);
    }

    constexpr double kMinEigen = 0.01;
    constexpr int kMaxSteps = 50;
    for (int step = 0; step <= kMaxSteps; ++step) {
        const double lambda_min = Eigen::SelfAdjointEigenSolver<Matrix>(theta, Eigen::EigenvaluesOnly).eigenvalues()(0);
        if (lambda_min >= kMinEigen) return theta;
        if (step == kMaxSteps) break;
        // inflate so that the eigenvalue bound survives the rescale below
        const double delta = (1.01 * kMinEigen - lambda_min) / (1.0 - kMinEigen);
        theta.diagonal().array() += delta;
        const Vector inv_sqrt = theta.diagonal().cwiseSqrt().cwiseInverse();
        theta = inv_sqrt.asDiagonal() * theta * inv_sqrt.asDiagonal();
        theta = (0.5 * (theta + theta.transpose())).eval();
        theta.diagonal().setOnes();
    }
    throw NumericalError("precision matrix could not be made positive definite; reseed");
}

Matrix precision_from_graph(const EdgeSet& g, std::pair<double, double> range, std::uint64_t seed) {
    return precision_from_graph(g, draw_edge_values(g.num_nodes(), range, seed));
}

Matrix sample_gaussian(const Matrix& theta, Index n, std::uint64_t seed) {
    if (n < 1) throw InputError("sample size must be positive");
    Eigen::LLT<Matrix> llt(theta);
    if (llt.info() != Eigen::Success) throw NumericalError("precision matrix is not positive definite");
    const Index p = theta.rows();
    Rng rng = make_rng(seed, 0x9a);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix z(p, n);
    for (Index c = 0; c < n; ++c) {
        for (Index r = 0; r < p; ++r) z(r, c) = normal(rng);
    }
    // theta = L L^T, so x = L^{-T} z has covariance theta^{-1}
    const Matrix x = llt.matrixU().solve(z);
    return x.transpose();
}

double edge_sharing_fraction(const EdgeSet& a, const EdgeSet& b) {
    if (a.empty()) return 1.0;
    std::size_t shared = 0;
    for (const auto& e : a) shared += b.contains(e.i, e.j) ? 1 : 0;
    return static_cast<double>(shared) / static_cast<double>(a.size());
}

double mean_pairwise_similarity(const std::vector<EdgeSet>& graphs) {
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < graphs.size(); ++a) {
        for (std::size_t b = a + 1; b < graphs.size(); ++b) {
            sum += edge_sharing_fraction(graphs[a], graphs[b]);
            ++pairs;
        }
    }
    return pairs == 0 ? 1.0 : sum / static_cast<double>(pairs);
}

SyntheticInstance generate_instance(const SimulationSpec& spec) {
    spec.validate();
    const EdgeSet base = generate_scale_free_graph(spec.p, spec.target_sparsity, derive_seed(spec.seed, 1));
    SyntheticInstance inst;
    inst.true_edges = perturb_for_similarity(base, spec.k, spec.similarity, derive_seed(spec.seed, 2));
    const Matrix values = draw_edge_values(spec.p, spec.partial_corr_range, derive_seed(spec.seed, 3));
    for (std::size_t g = 0; g < spec.k; ++g) {
        Matrix theta = precision_from_graph(inst.true_edges[g], values);
        inst.true_covariance.push_back(theta.llt().solve(Matrix::Identity(spec.p, spec.p)));
        inst.data.groups.push_back(sample_gaussian(theta, spec.n[g], derive_seed(spec.seed, 100 + g)));
        inst.true_precision.push_back(std::move(theta));
        inst.data.group_names.push_back("group" + std::to_string(g + 1));
    }
    for (Index j = 0; j < spec.p; ++j) inst.data.variable_names.push_back("V" + std::to_string(j + 1));
    return inst;
}

}  // namespace stabjgl
