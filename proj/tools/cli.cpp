#include "cli.hpp"

#include "stabjgl/error.hpp"
#include "stabjgl/io.hpp"
#include "stabjgl/metrics.hpp"
#include "stabjgl/pipeline.hpp"
#include "stabjgl/worker_pool.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

namespace stabjgl::cli {

using nlohmann::json;
namespace fs = std::filesystem;

std::vector<double> parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
        throw InputError("grid must look like lo:hi:count, got '" + text + "'");
    }
    const auto number = [&](std::size_t from, std::size_t to) {
        double v = 0.0;
        const char* b = text.data() + from;
        const char* e = text.data() + to;
        const auto [ptr, ec] = std::from_chars(b, e, v);
        if (ec != std::errc{} || ptr != e) throw InputError("bad number in grid '" + text + "'");
        return v;
    };
    const double lo = number(0, first);
    const double hi = number(first + 1, second);
    const double count = number(second + 1, text.size());
    if (count < 1 || count != std::floor(count)) throw InputError("grid count must be a positive integer");
    if (count > 1 && !(hi > lo)) throw InputError("grid needs hi > lo");
    return linspace(lo, hi, static_cast<std::size_t>(count));
}

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

void write_json(const fs::path& path, const json& doc) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out << doc.dump(2) << '\n';
    if (!out) throw InputError("failed writing " + path.string());
}

json read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

/// Creates the directory and proves it is writable before any computation.
void prepare_output_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw InputError("cannot create output directory " + dir.string());
    const fs::path probe = dir / ".stabjgl_write_probe";
    {
        std::ofstream out(probe);
        if (!out) throw InputError("output directory " + dir.string() + " is not writable");
    }
    fs::remove(probe, ec);
}

int guarded(std::ostream& log, const std::function<void()>& body) {
    try {
        body();
        return kSuccess;
    } catch (const io::ParseError& e) {
        log << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InputError& e) {
        log << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const StageError& e) {
        log << "error: stage '" << e.stage() << "' aborted: " << e.what() << '\n';
        return kSolverAbort;
    } catch (const NumericalError& e) {
        log << "error: " << e.what() << '\n';
        return kSolverAbort;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return kFailure;
    }
}

std::string group_file(const std::string& stem, std::size_t group, const std::string& ext) {
    return stem + "_group" + std::to_string(group + 1) + ext;
}

json stability_json(const StabilityConfig& c) {
    return {{"lambda1_grid", c.lambda1_grid}, {"lambda2_init", c.lambda2_init},     {"beta1", c.beta1},
            {"n_sample", c.n_sample},         {"subsample_cap_ratio", c.subsample_cap_ratio}, {"seed", c.seed}};
}

json solver_json(const SolverOptions& s) {
    return {{"admm_rho", s.admm_rho},
            {"max_iter", s.max_iter},
            {"primal_tol", s.primal_tol},
            {"dual_tol", s.dual_tol},
            {"zero_eps", s.zero_eps},
            {"weights", s.weighting == LikelihoodWeighting::equal ? "equal" : "sample_size"}};
}

}  // namespace

int cmd_simulate(const SimulateConfig& cfg, std::ostream& log) {
    return guarded(log, [&] {
        cfg.spec.validate();
        prepare_output_dir(cfg.out_dir);
        const SyntheticInstance inst = generate_instance(cfg.spec);

        json files = json::object();
        json measured_sparsity = json::array();
        for (std::size_t g = 0; g < cfg.spec.k; ++g) {
            const std::string data_name = group_file("data", g, ".csv");
            const std::string precision_name = group_file("precision", g, ".csv");
            io::write_csv_matrix(cfg.out_dir / data_name, inst.data.groups[g], inst.data.variable_names);
            io::write_csv_matrix(cfg.out_dir / precision_name, inst.true_precision[g]);
            files["data"].push_back(data_name);
            files["precision"].push_back(precision_name);
            measured_sparsity.push_back(sparsity_of(inst.true_edges[g]));
        }
        io::write_group_edge_list(cfg.out_dir / "true_edges.tsv", inst.true_edges);
        files["true_edges"] = "true_edges.tsv";

        const auto& s = cfg.spec;
        json manifest = {
            {"spec",
             {{"p", s.p},
              {"k", s.k},
              {"n", s.n},
              {"target_sparsity", s.target_sparsity},
              {"similarity", s.similarity},
              {"partial_corr_range", {s.partial_corr_range.first, s.partial_corr_range.second}}}},
            {"seed", s.seed},
            {"measured_similarity", mean_pairwise_similarity(inst.true_edges)},
            {"measured_sparsity", measured_sparsity},
            {"true_edge_counts", json::array()},
            {"files", files},
        };
        for (const auto& e : inst.true_edges) manifest["true_edge_counts"].push_back(e.size());
        write_json(cfg.out_dir / "manifest.json", manifest);
        log << "wrote " << s.k << " groups to " << cfg.out_dir.string() << '\n';
    });
}

int cmd_infer(const InferConfig& cfg, std::ostream& log) {
    return guarded(log, [&] {
        if (cfg.inputs.empty()) throw InputError("at least one input file is required");
        cfg.stability.validate();
        cfg.ebic.validate();
        cfg.solver.validate();
        if (cfg.threads < 1) throw InputError("threads must be at least 1");
        prepare_output_dir(cfg.out_dir);

        GroupedDataset data;
        for (const auto& path : cfg.inputs) {
            io::CsvMatrix m = io::read_csv_matrix(path);
            if (!data.groups.empty() && m.values.cols() != data.groups.front().cols()) {
                throw InputError("column count mismatch: " + path.string() + " has " +
                                 std::to_string(m.values.cols()) + " columns, expected " +
                                 std::to_string(data.groups.front().cols()));
            }
            if (data.groups.empty()) data.variable_names = m.header;
            data.groups.push_back(std::move(m.values));
            data.group_names.push_back(path.stem().string());
        }
        data.validate();
        compute_sample_covariance(data, cfg.standardize);  // reject zero-variance columns as bad input

        const WorkerPool pool(cfg.threads);
        const RunOptions options{cfg.standardize, cfg.reuse_selection_fit, &pool};
        const StabJglResult result = run_stabjgl(data, cfg.stability, cfg.ebic, cfg.solver, options);

        json groups = json::array();
        for (std::size_t g = 0; g < data.num_groups(); ++g) {
            const std::string edge_name = group_file("edges", g, ".tsv");
            io::write_estimated_edge_list(cfg.out_dir / edge_name, result.edges[g], result.precision.theta[g],
                                          result.partial_correlations[g]);
            groups.push_back({{"name", data.group_names[g]},
                              {"input", cfg.inputs[g].string()},
                              {"n", data.groups[g].rows()},
                              {"edges", result.edges[g].size()},
                              {"sparsity", result.sparsity[g]},
                              {"edge_file", edge_name}});
        }

        const auto& vt = result.variability;
        json variability = json::array();
        for (std::size_t l = 0; l < vt.lambda1.size(); ++l) {
            variability.push_back({{"lambda1", vt.lambda1[l]},
                                   {"D", vt.aggregate[l]},
                                   {"D_bar", vt.monotone[l]},
                                   {"D_groups", vt.per_group[l]},
                                   {"successful_fits", vt.successful_fits[l]}});
        }
        const auto& et = result.ebic;
        json ebic = json::array();
        for (std::size_t l = 0; l < et.lambda2.size(); ++l) {
            ebic.push_back({{"lambda2", et.lambda2[l]},
                            {"score", number_or_null(et.score[l])},
                            {"edge_counts", et.edge_counts[l]}});
        }

        json doc = {
            {"lambda1", result.lambda1},
            {"lambda2", result.lambda2},
            {"threshold_unmet", vt.threshold_unmet},
            {"groups", groups},
            {"variability_trace", variability},
            {"nonconverged_subsample_fits", vt.nonconverged_fits},
            {"ebic_trace", ebic},
            {"final_fit",
             {{"converged", result.final_report.converged},
              {"iterations", result.final_report.iterations},
              {"objective", result.final_report.objective}}},
            {"config",
             {{"stability", stability_json(cfg.stability)},
              {"ebic", {{"lambda2_grid", cfg.ebic.lambda2_grid}, {"gamma", cfg.ebic.gamma}}},
              {"solver", solver_json(cfg.solver)},
              {"standardize", cfg.standardize},
              {"reuse_selection_fit", cfg.reuse_selection_fit}}},
            {"seed", cfg.stability.seed},
            {"timings",
             {{"threads", cfg.threads},
              {"covariance_seconds", result.timings.covariance_seconds},
              {"lambda1_seconds", result.timings.lambda1_seconds},
              {"lambda2_seconds", result.timings.lambda2_seconds},
              {"final_fit_seconds", result.timings.final_fit_seconds},
              {"total_seconds", result.timings.total()}}},
        };
        write_json(cfg.out_dir / "result.json", doc);
        log << "lambda1 = " << result.lambda1 << ", lambda2 = " << result.lambda2 << '\n';
    });
}

int cmd_evaluate(const EvaluateConfig& cfg, std::ostream& log) {
    return guarded(log, [&] {
        if (cfg.estimated.empty()) throw InputError("at least one estimated edge list is required");
        if (cfg.truth.empty()) throw InputError("at least one truth edge list is required");
        Index p = cfg.p;
        if (p <= 0 && !cfg.manifest.empty()) p = read_json(cfg.manifest).at("spec").at("p").get<Index>();
        if (p < 2) throw InputError("node count unknown: pass --p or --manifest");
        prepare_output_dir(cfg.out_dir);

        const std::size_t k = cfg.estimated.size();
        std::vector<EdgeSet> estimated;
        for (const auto& path : cfg.estimated) estimated.push_back(io::edge_set_from_records(io::read_edge_list(path), p));

        std::vector<EdgeSet> truth;
        if (cfg.truth.size() == 1 && k > 1) {
            const auto records = io::read_edge_list(cfg.truth.front());
            for (std::size_t g = 0; g < k; ++g) truth.push_back(io::edge_set_from_records(records, p, static_cast<int>(g)));
        } else if (cfg.truth.size() == k) {
            for (const auto& path : cfg.truth) {
                auto records = io::read_edge_list(path);
                const bool grouped = !records.empty() && records.front().group >= 0;
                truth.push_back(io::edge_set_from_records(records, p, grouped ? 0 : -1));
            }
        } else {
            throw InputError("give one truth file with a group column or one truth file per estimated group");
        }

        json groups = json::array();
        for (std::size_t g = 0; g < k; ++g) {
            const ConfusionCounts c = confusion(estimated[g], truth[g]);
            const PrecisionRecall pr = precision_recall(c);
            groups.push_back({{"group", g + 1},
                              {"sparsity", sparsity_of(estimated[g])},
                              {"true_sparsity", sparsity_of(truth[g])},
                              {"precision", optional_json(pr.precision)},
                              {"recall", optional_json(pr.recall)},
                              {"mcc_vs_truth", mcc(estimated[g], truth[g])},
                              {"tp", c.tp},
                              {"fp", c.fp},
                              {"fn", c.fn},
                              {"tn", c.tn}});
        }
        json mcc_matrix = json::array();
        for (std::size_t a = 0; a < k; ++a) {
            json row = json::array();
            for (std::size_t b = 0; b < k; ++b) row.push_back(mcc(estimated[a], estimated[b]));
            mcc_matrix.push_back(row);
        }
        write_json(cfg.out_dir / "metrics.json", {{"p", p}, {"groups", groups}, {"pairwise_mcc", mcc_matrix}});
        log << "evaluated " << k << " groups\n";
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stabjgl: joint sparse Gaussian graphical models with stability-selected penalties"};
    app.require_subcommand(1);

    SimulateConfig sim;
    std::vector<double> pcor_range{0.1, 0.2};
    auto* simulate = app.add_subcommand("simulate", "generate scale-free multi-group instances");
    simulate->add_option("--p", sim.spec.p, "number of variables")->capture_default_str();
    simulate->add_option("--k", sim.spec.k, "number of groups")->capture_default_str();
    simulate->add_option("--n", sim.spec.n, "per-group sample sizes, comma separated")->delimiter(',');
    simulate->add_option("--sparsity", sim.spec.target_sparsity, "true graph sparsity")->capture_default_str();
    simulate->add_option("--similarity", sim.spec.similarity, "fraction of shared edges")->capture_default_str();
    simulate->add_option("--pcor-range", pcor_range, "partial correlation magnitude range lo,hi")
        ->delimiter(',')
        ->expected(2);
    simulate->add_option("--seed", sim.spec.seed, "random seed")->capture_default_str();
    simulate->add_option("--out", sim.out_dir, "output directory")->capture_default_str();

    InferConfig inf;
    std::string lambda1_grid = "0.01:1:20";
    std::string lambda2_grid = "0:0.1:20";
    std::string weights = "equal";
    bool no_standardize = false;
    auto* infer = app.add_subcommand("infer", "select penalties and estimate the joint graphs");
    infer->add_option("--inputs", inf.inputs, "per-group CSV data files, comma separated")
        ->delimiter(',')
        ->required();
    infer->add_option("--out", inf.out_dir, "output directory")->capture_default_str();
    infer->add_option("--beta1", inf.stability.beta1, "variability threshold")->capture_default_str();
    infer->add_option("--gamma", inf.ebic.gamma, "eBIC edge penalty")->capture_default_str();
    infer->add_option("--nsample", inf.stability.n_sample, "number of subsamples")->capture_default_str();
    infer->add_option("--lambda1-grid", lambda1_grid, "lo:hi:count")->capture_default_str();
    infer->add_option("--lambda2-grid", lambda2_grid, "lo:hi:count")->capture_default_str();
    infer->add_option("--lambda2-init", inf.stability.lambda2_init, "lambda2 used while selecting lambda1")
        ->capture_default_str();
    infer->add_option("--subsample-cap", inf.stability.subsample_cap_ratio,
                      "subsample fraction used when 10 sqrt(n) is not below n")
        ->capture_default_str();
    infer->add_option("--seed", inf.stability.seed, "subsampling seed")->capture_default_str();
    infer->add_option("--threads", inf.threads, "worker threads")->capture_default_str();
    infer->add_option("--rho", inf.solver.admm_rho, "ADMM penalty parameter")->capture_default_str();
    infer->add_option("--max-iter", inf.solver.max_iter, "ADMM iteration cap")->capture_default_str();
    infer->add_option("--tol", inf.solver.primal_tol, "ADMM primal and dual tolerance")->capture_default_str();
    infer->add_option("--zero-eps", inf.solver.zero_eps, "edge threshold on the sparse estimate")
        ->capture_default_str();
    infer->add_option("--weights", weights, "likelihood weights: equal or sample_size")
        ->check(CLI::IsMember({"equal", "sample_size"}))
        ->capture_default_str();
    infer->add_flag("--no-standardize", no_standardize, "center columns without scaling");
    infer->add_flag("--reuse-fit", inf.reuse_selection_fit, "reuse the lambda2-selection fit as the final fit");

    EvaluateConfig ev;
    auto* evaluate = app.add_subcommand("evaluate", "compare estimated edge lists against truth");
    evaluate->add_option("--estimated", ev.estimated, "estimated edge lists, one per group")
        ->delimiter(',')
        ->required();
    evaluate->add_option("--truth", ev.truth, "truth edge list(s)")->delimiter(',')->required();
    evaluate->add_option("--p", ev.p, "number of nodes");
    evaluate->add_option("--manifest", ev.manifest, "simulation manifest providing p");
    evaluate->add_option("--out", ev.out_dir, "output directory")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    if (*simulate) {
        sim.spec.partial_corr_range = {pcor_range.at(0), pcor_range.at(1)};
        return cmd_simulate(sim, err);
    }
    if (*infer) {
        try {
            inf.stability.lambda1_grid = parse_grid(lambda1_grid);
            inf.ebic.lambda2_grid = parse_grid(lambda2_grid);
        } catch (const InputError& e) {
            err << "error: " << e.what() << '\n';
            return kInvalidInput;
        }
        inf.solver.dual_tol = inf.solver.primal_tol;
        inf.solver.weighting = weights == "equal" ? LikelihoodWeighting::equal : LikelihoodWeighting::sample_size;
        inf.standardize = !no_standardize;
        return cmd_infer(inf, err);
    }
    return cmd_evaluate(ev, err);
}

}  // namespace stabjgl::cli
