// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion; details go
// on indented lines above it. Exit status is nonzero if any criterion fails.

#include "oracles.hpp"

#include "stabjgl/ebic.hpp"
#include "stabjgl/fgl.hpp"
#include "stabjgl/metrics.hpp"
#include "stabjgl/pipeline.hpp"
#include "stabjgl/random.hpp"
#include "stabjgl/stability.hpp"
#include "stabjgl/synthetic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace stabjgl;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        detail << "    " << (ok ? "ok   " : "FAIL ") << what << '\n';
    }
};

std::string fmt(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

SolverOptions tight_solver() {
    SolverOptions o;
    o.max_iter = 50000;
    o.primal_tol = 1e-10;
    o.dual_tol = 1e-10;
    return o;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------- criterion 1

Verdict criterion1() {
    Verdict v;
    Rng rng = make_rng(2024, 1);
    std::uniform_real_distribution<double> value(-1.5, 1.5);
    std::uniform_real_distribution<double> lam(0.0, 1.0);
    for (std::size_t k : {2, 3, 4}) {
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<double> a(k);
            for (auto& x : a) x = value(rng);
            if (trial % 50 == 0) a[1] = a[0];
            const double l = lam(rng);
            const auto got = fused_prox(a, l);
            const auto ref = oracle::grid_prox(a, 0.0, l);
            for (std::size_t i = 0; i < k; ++i) worst = std::max(worst, std::abs(got[i] - ref[i]));
        }
        v.require(worst <= 2e-3, "fused_prox K=" + std::to_string(k) + ", 1000 inputs, max deviation " + fmt(worst));
    }
    for (std::size_t k : {1, 2, 3}) {
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<Matrix> in(k, Matrix(2, 2));
            for (auto& m : in) {
                m(0, 0) = value(rng);
                m(1, 1) = value(rng);
                m(0, 1) = m(1, 0) = value(rng);
            }
            const double rho = 0.5 + lam(rng);
            const double l1 = rho * 0.5 * lam(rng);
            const double l2 = rho * 0.5 * lam(rng);
            const auto z = z_update(in, l1, l2, rho);
            std::vector<double> off(k);
            std::vector<double> diag(k);
            for (std::size_t g = 0; g < k; ++g) {
                off[g] = in[g](0, 1);
                diag[g] = in[g](1, 1);
            }
            const auto ref_off = oracle::grid_prox(off, l1 / rho, l2 / rho);
            const auto ref_diag = oracle::grid_prox(diag, 0.0, l2 / rho);
            for (std::size_t g = 0; g < k; ++g) {
                worst = std::max({worst, std::abs(z[g](0, 1) - ref_off[g]), std::abs(z[g](1, 1) - ref_diag[g])});
            }
        }
        v.require(worst <= 2e-3, "z_update K=" + std::to_string(k) + ", 1000 inputs, max deviation " + fmt(worst));
    }
    return v;
}

// ---------------------------------------------------------------- criterion 2

Verdict criterion2() {
    Verdict v;
    double worst_residual = 0.0;
    double worst_gap = 0.0;
    int failures = 0;
    for (int i = 0; i < 50; ++i) {
        const Index p = 3 + i % 6;
        const std::size_t k = 1 + static_cast<std::size_t>(i % 3);
        const double lambda1 = (i / 3) % 2 == 0 ? 0.05 : 0.2;
        const double lambda2 = (i / 6) % 2 == 0 ? 0.0 : 0.05;
        CovarianceSet cov;
        for (std::size_t g = 0; g < k; ++g) {
            cov.matrices.push_back(oracle::random_covariance(p, 1000 * static_cast<std::uint64_t>(i) + g));
            cov.n.push_back(30);
        }
        const std::vector<double> w(k, 1.0);
        const auto ref = oracle::minimize_fgl(cov, lambda1, lambda2, w);
        const auto fit = solve_fgl(cov, PenaltyPair{lambda1, lambda2}, tight_solver());
        const double residual =
            oracle::optimality_residual(cov, fit.estimate.theta, fit.estimate.z, lambda1, lambda2, w);
        const double ours = oracle::fgl_objective(cov, fit.estimate.theta, lambda1, lambda2, w);
        const double gap = std::abs(ours - ref.objective) / std::abs(ref.objective);
        worst_residual = std::max(worst_residual, residual);
        worst_gap = std::max(worst_gap, gap);
        if (!fit.report.converged || residual >= 1e-4 || gap > 1e-5) {
            ++failures;
            v.detail << "    instance " << i << " (p=" << p << ", K=" << k << ", l1=" << lambda1 << ", l2=" << lambda2
                     << "): residual " << fmt(residual) << ", relative gap " << fmt(gap) << ", converged "
                     << fit.report.converged << '\n';
        }
    }
    v.require(worst_residual < 1e-4, "50 instances, max optimality residual " + fmt(worst_residual));
    v.require(worst_gap <= 1e-5, "max relative objective gap to the independent minimizer " + fmt(worst_gap));
    v.require(failures == 0, std::to_string(failures) + " instances outside tolerance");
    return v;
}

// ---------------------------------------------------------------- criterion 3

Verdict criterion3() {
    Verdict v;
    CovarianceSet cov;
    for (std::uint64_t g = 0; g < 3; ++g) {
        cov.matrices.push_back(oracle::random_covariance(20, 500 + g));
        cov.n.push_back(100);
    }
    const auto joint = solve_fgl(cov, PenaltyPair{0.1, 0.0}, tight_solver());
    double decouple = 0.0;
    for (std::size_t g = 0; g < 3; ++g) {
        const auto alone = solve_fgl(CovarianceSet{{cov.matrices[g]}, {cov.n[g]}}, PenaltyPair{0.1, 0.0}, tight_solver());
        decouple = std::max(decouple, max_abs(alone.estimate.theta[0] - joint.estimate.theta[g]));
    }
    v.require(decouple < 1e-6, "lambda2 = 0 vs independent solves, max entry difference " + fmt(decouple));

    const auto fused = solve_fgl(cov, PenaltyPair{0.1, 5.0}, tight_solver());
    double spread_theta = 0.0;
    double spread_z = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) {
            spread_theta = std::max(spread_theta, max_abs(fused.estimate.theta[a] - fused.estimate.theta[b]));
            spread_z = std::max(spread_z, max_abs(fused.estimate.z[a] - fused.estimate.z[b]));
        }
    }
    v.require(spread_theta < 1e-6 && spread_z < 1e-6,
              "lambda2 = 5 (p=20, K=3), max cross-group difference theta " + fmt(spread_theta) + ", z " +
                  fmt(spread_z));

    std::size_t edges = 0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        SimulationSpec spec;
        spec.seed = seed;
        const auto data_cov = compute_sample_covariance(generate_instance(spec).data, true);
        for (double lambda2 : {0.0, 0.05, 0.1}) {
            const auto fit = solve_fgl(data_cov, PenaltyPair{1.0, lambda2}, SolverOptions{});
            for (const auto& z : fit.estimate.z) edges += edge_set_from_precision(z).size();
        }
    }
    v.require(edges == 0, "lambda1 = 1 on standardized data (3 instances x 3 lambda2), total edges " +
                              std::to_string(edges));
    return v;
}

// ---------------------------------------------------------------- criterion 5

Verdict criterion5() {
    Verdict v;
    double worst_term = 0.0;
    double worst_additive = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Index p = 4 + static_cast<Index>(seed % 4);
        CovarianceSet cov;
        for (std::uint64_t g = 0; g < 3; ++g) {
            cov.matrices.push_back(oracle::random_covariance(p, 77 + 10 * seed + g));
            cov.n.push_back(static_cast<Index>(20 + 15 * g + seed));
        }
        const auto fit = solve_fgl(cov, PenaltyPair{0.1 + 0.02 * static_cast<double>(seed), 0.03}, SolverOptions{});
        double bic = 0.0;
        double parts = 0.0;
        for (std::size_t g = 0; g < 3; ++g) {
            const Vector ev = Eigen::SelfAdjointEigenSolver<Matrix>(fit.estimate.theta[g]).eigenvalues();
            const double logdet = ev.array().log().sum();
            const double n = static_cast<double>(cov.n[g]);
            const double edges = static_cast<double>(edge_set_from_precision(fit.estimate.z[g]).size());
            bic += n * (cov.matrices[g] * fit.estimate.theta[g]).trace() - n * logdet + edges * std::log(n);
            parts += ebic_score(CovarianceSet{{cov.matrices[g]}, {cov.n[g]}},
                                PrecisionSet{{fit.estimate.theta[g]}, {fit.estimate.z[g]}}, 0.7);
        }
        const double score = ebic_score(cov, fit.estimate, 0.0);
        worst_term = std::max(worst_term, std::abs(score - bic) / std::abs(bic));
        const double joint = ebic_score(cov, fit.estimate, 0.7);
        worst_additive = std::max(worst_additive, std::abs(joint - parts) / std::abs(parts));
    }
    v.require(worst_term <= 1e-10, "gamma = 0 equals the plain BIC sum, max relative difference " + fmt(worst_term));
    v.require(worst_additive <= 1e-10, "additivity over groups, max relative difference " + fmt(worst_additive));

    Matrix theta(2, 2);
    theta << 2, -1, -1, 2;
    const double hand = ebic_score(CovarianceSet{{Matrix::Identity(2, 2)}, {10}}, PrecisionSet{{theta}, {theta}}, 1.0);
    v.require(std::abs(hand - 34.090) <= 1e-3, "hand example score " + fmt(hand, 8) + " vs 34.090");
    return v;
}

// ------------------------------------------------------- simulation scenarios

struct Replicate {
    std::uint64_t seed = 0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::vector<double> sparsity;
    std::vector<std::optional<double>> precision;
    std::vector<double> recall;
    std::vector<EdgeSet> edges;
    VariabilityTrace trace;
    double seconds = 0.0;
};

struct Scenario {
    std::vector<Replicate> reps;

    double mean_lambda1() const { return mean([](const Replicate& r) { return r.lambda1; }); }
    double mean_lambda2() const { return mean([](const Replicate& r) { return r.lambda2; }); }
    double mean_sparsity(std::size_t g) const { return mean([g](const Replicate& r) { return r.sparsity[g]; }); }
    double mean_recall(std::size_t g) const { return mean([g](const Replicate& r) { return r.recall[g]; }); }
    // replicates with an empty estimate have no precision and are left out
    std::pair<double, int> mean_precision(std::size_t g) const {
        double s = 0.0;
        int count = 0;
        for (const auto& r : reps) {
            if (r.precision[g]) {
                s += *r.precision[g];
                ++count;
            }
        }
        return {count ? s / count : std::nan(""), count};
    }

    template <typename F>
    double mean(F f) const {
        double s = 0.0;
        for (const auto& r : reps) s += f(r);
        return s / static_cast<double>(reps.size());
    }
};

void score_replicate(Replicate& rep, const std::vector<EdgeSet>& truth) {
    rep.sparsity.clear();
    rep.precision.clear();
    rep.recall.clear();
    for (std::size_t g = 0; g < truth.size(); ++g) {
        const auto pr = precision_recall(confusion(rep.edges[g], truth[g]));
        rep.sparsity.push_back(sparsity_of(rep.edges[g]));
        rep.precision.push_back(pr.precision);
        rep.recall.push_back(pr.recall.value_or(0.0));
    }
}

std::string describe(const Replicate& r) {
    std::ostringstream s;
    s << "    seed " << r.seed << ": lambda1 " << fmt(r.lambda1) << ", lambda2 " << fmt(r.lambda2) << ", sparsity";
    for (double x : r.sparsity) s << ' ' << fmt(x, 3);
    s << ", precision";
    for (const auto& x : r.precision) s << ' ' << (x ? fmt(*x, 3) : std::string("-"));
    s << ", recall";
    for (double x : r.recall) s << ' ' << fmt(x, 3);
    s << " (" << fmt(r.seconds, 3) << " s)\n";
    return s.str();
}

Scenario run_table1(double similarity, std::size_t threads, int replicates, std::ostream& log) {
    Scenario sc;
    const WorkerPool pool(threads);
    RunOptions opts;
    opts.pool = &pool;
    for (int r = 1; r <= replicates; ++r) {
        SimulationSpec spec;
        spec.similarity = similarity;
        spec.seed = static_cast<std::uint64_t>(r);
        const auto inst = generate_instance(spec);
        StabilityConfig stab;
        stab.seed = static_cast<std::uint64_t>(r);
        const auto t0 = std::chrono::steady_clock::now();
        const auto result = run_stabjgl(inst.data, stab, EbicConfig{}, SolverOptions{}, opts);
        Replicate rep;
        rep.seed = spec.seed;
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.lambda1 = result.lambda1;
        rep.lambda2 = result.lambda2;
        rep.edges = result.edges;
        rep.trace = result.variability;
        score_replicate(rep, inst.true_edges);
        log << describe(rep);
        log.flush();
        sc.reps.push_back(std::move(rep));
    }
    return sc;
}

bool within(double x, double centre, double half) { return std::abs(x - centre) <= half; }

Verdict criterion4(const std::vector<const Scenario*>& scenarios) {
    Verdict v;
    double psi_lo = 1.0, psi_hi = 0.0, xi_hi = 0.0, d_lo = 1.0, d_hi = 0.0;
    bool monotone = true;
    std::size_t traces = 0;
    for (const auto* sc : scenarios) {
        for (const auto& rep : sc->reps) {
            const auto& t = rep.trace;
            ++traces;
            for (std::size_t l = 0; l < t.lambda1.size(); ++l) {
                for (const auto& psi : t.edge_frequency[l]) {
                    psi_lo = std::min(psi_lo, psi.minCoeff());
                    psi_hi = std::max(psi_hi, psi.maxCoeff());
                    xi_hi = std::max(xi_hi, edge_instability(psi).maxCoeff());
                }
                for (double d : t.per_group[l]) {
                    d_lo = std::min(d_lo, d);
                    d_hi = std::max(d_hi, d);
                }
                d_lo = std::min({d_lo, t.aggregate[l], t.monotone[l]});
                d_hi = std::max({d_hi, t.aggregate[l], t.monotone[l]});
                if (l > 0 && t.monotone[l] > t.monotone[l - 1]) monotone = false;
            }
        }
    }
    v.require(traces > 0, std::to_string(traces) + " traces inspected");
    v.require(psi_lo >= 0.0 && psi_hi <= 1.0, "psi range [" + fmt(psi_lo) + ", " + fmt(psi_hi) + "]");
    v.require(xi_hi <= 0.5, "max xi " + fmt(xi_hi));
    v.require(d_lo >= 0.0 && d_hi <= 0.5, "D range [" + fmt(d_lo) + ", " + fmt(d_hi) + "]");
    v.require(monotone, "monotonized D nonincreasing along ascending lambda1");
    return v;
}

Verdict criterion6(const Scenario& sc) {
    Verdict v;
    const double l1 = sc.mean_lambda1();
    const double l2 = sc.mean_lambda2();
    v.require(within(l1, 0.166, 0.05), "mean lambda1 " + fmt(l1) + " in 0.166 +- 0.05");
    v.require(within(l2, 0.067, 0.03), "mean lambda2 " + fmt(l2) + " in 0.067 +- 0.03");
    for (std::size_t g = 0; g < 3; ++g) {
        const double s = sc.mean_sparsity(g);
        v.require(within(s, 0.015, 0.005), "group " + std::to_string(g + 1) + " mean sparsity " + fmt(s) +
                                               " in 0.015 +- 0.005");
    }
    const auto [prec, count] = sc.mean_precision(2);
    v.require(count > 0 && prec >= 0.80, "group 3 (n=300) mean precision " + fmt(prec) + " >= 0.80 over " +
                                             std::to_string(count) + " nonempty estimates");
    for (std::size_t g = 0; g < 3; ++g) {
        const double r = sc.mean_recall(g);
        v.require(within(r, 0.66, 0.12), "group " + std::to_string(g + 1) + " mean recall " + fmt(r) +
                                             " in 0.66 +- 0.12");
    }
    return v;
}

Verdict criterion7(const Scenario& zero, const Scenario& full) {
    Verdict v;
    v.require(zero.mean_lambda2() < full.mean_lambda2(), "mean lambda2 at 0% similarity " +
                                                             fmt(zero.mean_lambda2()) + " < 100% similarity " +
                                                             fmt(full.mean_lambda2()));
    const auto [prec, count] = zero.mean_precision(0);
    v.require(count > 0 && within(prec, 0.43, 0.15),
              "group 1 mean precision " + fmt(prec) + " in 0.43 +- 0.15 over " + std::to_string(count) +
                  " nonempty estimates");
    return v;
}

Verdict criterion8(std::size_t threads, int replicates, std::ostream& log) {
    Verdict v;
    const std::vector<double> betas{0.01, 0.1, 0.2};
    std::vector<Scenario> by_beta(betas.size());
    const WorkerPool pool(threads);
    for (int r = 1; r <= replicates; ++r) {
        SimulationSpec spec;
        spec.k = 2;
        spec.n = {100, 150};
        spec.similarity = 0.2;
        spec.seed = static_cast<std::uint64_t>(r);
        const auto inst = generate_instance(spec);
        const auto cov = compute_sample_covariance(inst.data, true);
        StabilityConfig stab;
        stab.seed = spec.seed;
        // the variability trace does not depend on beta1, only the threshold choice does
        const auto sel = select_lambda1(inst.data, stab, SolverOptions{}, true, &pool);
        for (std::size_t b = 0; b < betas.size(); ++b) {
            const auto choice = choose_by_threshold(sel.trace.monotone, betas[b]);
            const double lambda1 = stab.lambda1_grid[choice.index];
            const auto sel2 = select_lambda2(cov, lambda1, EbicConfig{}, SolverOptions{}, &pool);
            const auto fit = solve_fgl(cov, PenaltyPair{lambda1, sel2.lambda2}, SolverOptions{});
            Replicate rep;
            rep.seed = spec.seed;
            rep.lambda1 = lambda1;
            rep.lambda2 = sel2.lambda2;
            for (const auto& z : fit.estimate.z) rep.edges.push_back(edge_set_from_precision(z));
            score_replicate(rep, inst.true_edges);
            log << "    beta1 " << betas[b] << describe(rep).substr(3);
            if (r == 1 && b + 1 == betas.size()) {
                StabilityConfig direct = stab;
                direct.beta1 = betas[b];
                RunOptions opts;
                opts.pool = &pool;
                const auto full = run_stabjgl(inst.data, direct, EbicConfig{}, SolverOptions{}, opts);
                v.require(full.lambda1 == rep.lambda1 && full.lambda2 == rep.lambda2 && full.edges == rep.edges,
                          "shared-trace shortcut agrees with a full pipeline run (seed 1, beta1 0.2)");
            }
            by_beta[b].reps.push_back(std::move(rep));
        }
        log.flush();
    }
    std::vector<double> sparsity;
    for (std::size_t b = 0; b < betas.size(); ++b) {
        sparsity.push_back(0.5 * (by_beta[b].mean_sparsity(0) + by_beta[b].mean_sparsity(1)));
    }
    v.require(sparsity[0] < sparsity[1] && sparsity[1] < sparsity[2],
              "mean sparsity by beta1 (0.01, 0.1, 0.2): " + fmt(sparsity[0]) + " < " + fmt(sparsity[1]) + " < " +
                  fmt(sparsity[2]));
    const double low = by_beta[0].mean_recall(0);
    const double high = by_beta[2].mean_recall(0);
    v.require(high >= low + 0.2, "group 1 mean recall at beta1 0.2 (" + fmt(high) + ") >= at 0.01 (" + fmt(low) +
                                     ") + 0.2");
    return v;
}

Verdict criterion9(const Scenario& first, std::size_t threads, int replicates, std::ostream& log) {
    Verdict v;
    log << "    rerun with " << threads << " worker(s)\n";
    const Scenario again = run_table1(1.0, threads, replicates, log);
    int mismatches = 0;
    for (std::size_t r = 0; r < first.reps.size(); ++r) {
        const auto& a = first.reps[r];
        const auto& b = again.reps[r];
        if (a.lambda1 != b.lambda1 || a.lambda2 != b.lambda2 || a.edges != b.edges) ++mismatches;
    }
    v.require(mismatches == 0, std::to_string(first.reps.size()) + " replicates rerun, " +
                                   std::to_string(mismatches) + " differ in selected parameters or edge sets");
    return v;
}

void report(int id, const Verdict& v, double seconds, int& failed) {
    std::cout << v.detail.str();
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  (" << fmt(seconds, 3) << " s)"
              << std::endl;
    if (!v.pass) ++failed;
}

std::set<int> parse_criteria(const std::string& text) {
    std::set<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const int id = std::stoi(item);
        if (id < 1 || id > 9) throw std::invalid_argument("criteria are numbered 1 to 9");
        out.insert(id);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::size_t threads = 1;
    int replicates = 10;
    try {
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            const auto next = [&]() -> std::string {
                if (i + 1 >= argc) throw std::invalid_argument(arg + " needs a value");
                return argv[++i];
            };
            if (arg == "--criteria") {
                wanted = parse_criteria(next());
            } else if (arg == "--threads") {
                threads = std::stoul(next());
            } else if (arg == "--replicates") {
                replicates = std::stoi(next());
            } else {
                throw std::invalid_argument("unknown argument " + arg);
            }
        }
        if (threads < 1 || replicates < 1) throw std::invalid_argument("threads and replicates must be positive");
    } catch (const std::exception& e) {
        std::cerr << "usage: stabjgl_acceptance [--criteria 1,2,...] [--threads N] [--replicates N]\n"
                  << "error: " << e.what() << '\n';
        return 2;
    }

    int failed = 0;
    using Clock = std::chrono::steady_clock;
    const auto timed = [&](int id, auto&& fn) {
        const auto t0 = Clock::now();
        Verdict v = fn();
        report(id, v, std::chrono::duration<double>(Clock::now() - t0).count(), failed);
    };

    if (wanted.contains(1)) timed(1, criterion1);
    if (wanted.contains(2)) timed(2, criterion2);
    if (wanted.contains(3)) timed(3, criterion3);
    if (wanted.contains(5)) timed(5, criterion5);

    std::optional<Scenario> full;
    std::optional<Scenario> zero;
    double full_seconds = 0.0;
    double zero_seconds = 0.0;
    if (wanted.contains(4) || wanted.contains(6) || wanted.contains(7) || wanted.contains(9)) {
        std::cout << "  100% similarity scenario (" << replicates << " replicates, " << threads << " worker(s))\n";
        const auto t0 = Clock::now();
        full = run_table1(1.0, threads, replicates, std::cout);
        full_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
    if (wanted.contains(4) || wanted.contains(7)) {
        std::cout << "  0% similarity scenario (" << replicates << " replicates)\n";
        const auto t0 = Clock::now();
        zero = run_table1(0.0, threads, replicates, std::cout);
        zero_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
    if (wanted.contains(4)) {
        std::vector<const Scenario*> scenarios{&*full};
        if (zero) scenarios.push_back(&*zero);
        timed(4, [&] { return criterion4(scenarios); });
    }
    if (wanted.contains(6)) report(6, criterion6(*full), full_seconds, failed);
    if (wanted.contains(7)) report(7, criterion7(*zero, *full), zero_seconds, failed);
    if (wanted.contains(8)) timed(8, [&] { return criterion8(threads, replicates, std::cout); });
    if (wanted.contains(9)) {
        const std::size_t other = threads == 1 ? 3 : 1;
        timed(9, [&] { return criterion9(*full, other, replicates, std::cout); });
    }

    std::cout << (failed == 0 ? "all selected criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
