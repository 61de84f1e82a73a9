#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "pmseq/harness.hpp"
#include "pmseq/json_io.hpp"

namespace {

using namespace pmseq;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

std::string verdict_table(const DensityVerdict& v) {
    std::ostringstream os;
    os << "verdict: " << v.kind_name();
    if (v.exact_value) os << "  value=" << to_double(*v.exact_value);
    if (v.limsup_estimate >= 0) {
        os << "  limsup~" << v.limsup_estimate << "  liminf~" << v.liminf_estimate;
    }
    os << "\n" << checkpoints_to_csv(v.evidence);
    return os.str();
}

struct CommonOpts {
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("-o,--out", opts.out, "Write output to a file instead of stdout");
}

int run(int argc, char** argv) {
    CLI::App app{"Distribution-function arithmetic, probabilistic metric spaces, and "
                 "window-density sequence analysis"};
    app.require_subcommand(1);

    // check-space
    auto* sp_cmd = app.add_subcommand("check-space", "Verify the metric axioms of a space");
    std::string sp_file;
    CommonOpts sp_opts;
    sp_cmd->add_option("space", sp_file, "Space JSON file")->required();
    add_common(sp_cmd, sp_opts);

    // dl
    auto* dl_cmd = app.add_subcommand("dl", "Levy distance between two distribution functions");
    std::string dl_f, dl_g;
    double dl_tol = kDefaultLevyTol;
    CommonOpts dl_opts;
    dl_cmd->add_option("f", dl_f, "First function JSON file")->required();
    dl_cmd->add_option("g", dl_g, "Second function JSON file")->required();
    dl_cmd->add_option("--tol", dl_tol, "Bisection tolerance (0 < tol <= 1e-6)");
    add_common(dl_cmd, dl_opts);

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "Apply a t-norm triangle function to two functions");
    std::string tau_f, tau_g, tau_name = "min";
    CommonOpts tau_opts;
    tau_cmd->add_option("f", tau_f, "First function JSON file")->required();
    tau_cmd->add_option("g", tau_g, "Second function JSON file")->required();
    tau_cmd->add_option("--tnorm", tau_name, "t-norm")->check(CLI::IsMember({"min", "prod", "luk"}));
    add_common(tau_cmd, tau_opts);

    // density
    auto* den_cmd = app.add_subcommand("density", "Window density of a symbolic index set");
    std::string den_file, den_lambda = "identity", den_csv;
    Index den_horizon = kDefaultHorizon;
    double den_eps = kDefaultEps;
    bool den_classify = false;
    CommonOpts den_opts;
    den_cmd->add_option("set", den_file, "Set description JSON file")->required();
    den_cmd->add_option("--lambda", den_lambda, "Window family")
        ->check(CLI::IsMember({"identity", "ceil-sqrt", "half"}));
    den_cmd->add_option("--horizon", den_horizon, "Checkpoint horizon");
    den_cmd->add_option("--eps", den_eps, "Null-classification tolerance");
    den_cmd->add_flag("--classify", den_classify, "Classify nullity instead of reporting density");
    den_cmd->add_option("--csv", den_csv, "Also write the evidence table as CSV");
    add_common(den_cmd, den_opts);

    // analyze
    auto* an_cmd = app.add_subcommand("analyze", "Sequence analyzers");
    an_cmd->require_subcommand(1);
    std::string an_seq, an_lambda = "identity", an_candidate;
    Index an_horizon = kDefaultHorizon;
    double an_eps = kDefaultEps;
    CommonOpts an_opts;
    auto add_analyze_common = [&](CLI::App* sub, bool with_candidate) {
        sub->add_option("seq", an_seq, "Sequence JSON file")->required();
        sub->add_option("--lambda", an_lambda, "Window family")
            ->check(CLI::IsMember({"identity", "ceil-sqrt", "half"}));
        sub->add_option("--horizon", an_horizon, "Checkpoint horizon");
        sub->add_option("--eps", an_eps, "Null-classification tolerance");
        if (with_candidate) {
            sub->add_option("--candidate", an_candidate, "Candidate limit label");
        }
        add_common(sub, an_opts);
    };
    auto* an_conv = an_cmd->add_subcommand("converge", "Statistical convergence check");
    add_analyze_common(an_conv, true);
    auto* an_cauchy = an_cmd->add_subcommand("cauchy", "Statistical Cauchy check");
    add_analyze_common(an_cauchy, false);
    auto* an_points = an_cmd->add_subcommand("points", "Limit and cluster point sets");
    add_analyze_common(an_points, false);
    auto* an_extract = an_cmd->add_subcommand("extract-G", "Full-density subsequence extraction");
    add_analyze_common(an_extract, true);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Materialize a planted sequence instance");
    std::string gen_file;
    CommonOpts gen_opts;
    gen_cmd->add_option("plant", gen_file, "Plant spec JSON file")->required();
    add_common(gen_cmd, gen_opts);

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "Run the seeded verification suite");
    std::string ver_suite = "all", ver_witness_dir, ver_inject;
    int ver_instances = 100;
    std::uint64_t ver_seed = 42;
    Index ver_horizon = kDefaultHorizon;
    double ver_eps = kDefaultEps;
    CommonOpts ver_opts;
    ver_cmd->add_option("--suite", ver_suite, "\"all\" or comma-separated entry ids");
    ver_cmd->add_option("--instances", ver_instances, "Instances per entry");
    ver_cmd->add_option("--seed", ver_seed, "Master seed (PMSEQ_SEED overrides)");
    ver_cmd->add_option("--horizon", ver_horizon, "Checkpoint horizon");
    ver_cmd->add_option("--eps", ver_eps, "Null-classification tolerance");
    ver_cmd->add_option("--witness-dir", ver_witness_dir, "Directory for failure witness files");
    ver_cmd->add_option("--inject-fault", ver_inject, "Testing aid: corrupt generated instances")
        ->check(CLI::IsMember({"axiom3"}));
    ver_cmd->add_flag("--list", "List entry ids and exit");
    add_common(ver_cmd, ver_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sp_cmd->parsed()) {
            auto space = pmspace_from_json(load_json_file(sp_file));
            AxiomReport rep = verify_axioms(*space);
            if (sp_opts.format == "table") {
                std::ostringstream os;
                os << (rep.pass ? "pass" : "FAIL: axiom " + std::to_string(rep.failed_axiom) +
                                               " (" + rep.detail + ")")
                   << "\n";
                if (sp_opts.out.empty()) {
                    std::cout << os.str();
                } else {
                    write_file(sp_opts.out, os.str());
                }
            } else {
                emit(to_json(rep), sp_opts.out);
            }
            return rep.pass ? kExitOk : kExitPropertyFailure;
        }
        if (dl_cmd->parsed()) {
            StepDistFn f = step_dist_fn_from_json(load_json_file(dl_f));
            StepDistFn g = step_dist_fn_from_json(load_json_file(dl_g));
            LevyDistance d = levy_distance(f, g, dl_tol);
            if (dl_opts.format == "table") {
                std::cout << d.value << "\n";
            } else {
                emit(Json{{"value", d.value}, {"tolerance", d.tolerance}}, dl_opts.out);
            }
            return kExitOk;
        }
        if (tau_cmd->parsed()) {
            StepDistFn f = step_dist_fn_from_json(load_json_file(tau_f));
            StepDistFn g = step_dist_fn_from_json(load_json_file(tau_g));
            TriangleFn tau(tnorm_from_name(tau_name));
            emit(to_json(tau(f, g)), tau_opts.out);
            return kExitOk;
        }
        if (den_cmd->parsed()) {
            SetDescription m = set_description_from_json(load_json_file(den_file));
            LambdaSeq lambda = LambdaSeq::from_name(den_lambda);
            DensityVerdict v = den_classify ? classify_null(m, lambda, den_horizon, den_eps)
                                            : exact_density(m, lambda, den_horizon);
            if (!den_csv.empty()) write_file(den_csv, checkpoints_to_csv(v.evidence));
            if (den_opts.format == "table") {
                std::string text = verdict_table(v);
                if (den_opts.out.empty()) {
                    std::cout << text;
                } else {
                    write_file(den_opts.out, text);
                }
            } else {
                emit(to_json(v), den_opts.out);
            }
            return kExitOk;
        }
        if (an_cmd->parsed()) {
            SymbolicSequence seq = sequence_from_json(load_json_file(an_seq));
            LambdaSeq lambda = LambdaSeq::from_name(an_lambda);
            if (an_conv->parsed()) {
                if (an_candidate.empty()) {
                    auto lim = find_limit(seq, lambda, an_horizon, an_eps);
                    if (lim) {
                        emit(to_json(check_convergence(seq, *lim, lambda, an_horizon, an_eps)),
                             an_opts.out);
                    } else {
                        emit(Json{{"verdict", "no candidate converges"}}, an_opts.out);
                    }
                } else {
                    emit(to_json(check_convergence(seq, an_candidate, lambda, an_horizon, an_eps)),
                         an_opts.out);
                }
                return kExitOk;
            }
            if (an_cauchy->parsed()) {
                emit(to_json(check_cauchy(seq, lambda, an_horizon, an_eps)), an_opts.out);
                return kExitOk;
            }
            if (an_points->parsed()) {
                emit(to_json(point_sets(seq, lambda, an_horizon, an_eps)), an_opts.out);
                return kExitOk;
            }
            if (an_extract->parsed()) {
                if (an_candidate.empty()) {
                    std::cerr << "analyze extract-G: --candidate is required\n";
                    return kExitUsage;
                }
                emit(to_json(extract_full_density_subsequence(seq, an_candidate, lambda, an_horizon)),
                     an_opts.out);
                return kExitOk;
            }
        }
        if (gen_cmd->parsed()) {
            PlantSpec spec = plant_spec_from_json(load_json_file(gen_file));
            emit(to_json(generate(spec)), gen_opts.out);
            return kExitOk;
        }
        if (ver_cmd->parsed()) {
            SuiteConfig cfg;
            if (ver_cmd->count("--list")) {
                for (const auto& id : suite_entry_ids()) std::cout << id << "\n";
                return kExitOk;
            }
            if (ver_suite != "all") {
                std::stringstream ss(ver_suite);
                std::string id;
                while (std::getline(ss, id, ',')) {
                    if (!id.empty()) cfg.ids.push_back(id);
                }
            }
            cfg.instances = ver_instances;
            cfg.seed = ver_seed;
            if (const char* env = std::getenv("PMSEQ_SEED")) {
                cfg.seed = std::strtoull(env, nullptr, 10);
            }
            cfg.horizon = ver_horizon;
            cfg.eps = ver_eps;
            cfg.witness_dir = ver_witness_dir;
            cfg.inject_fault = ver_inject;
            SuiteReport report = run_suite(cfg);
            if (ver_opts.format == "table") {
                std::ostringstream os;
                for (const auto& e : report.entries) {
                    os << (e.pass ? "pass " : "FAIL ") << e.id << " " << e.passed << "/"
                       << e.instances;
                    if (!e.first_counterexample.empty()) os << "  [" << e.first_counterexample << "]";
                    os << "\n";
                }
                os << (report.overall_pass ? "overall: pass" : "overall: FAIL") << "\n";
                if (ver_opts.out.empty()) {
                    std::cout << os.str();
                } else {
                    write_file(ver_opts.out, os.str());
                }
            } else {
                emit(to_json(report), ver_opts.out);
            }
            return report.overall_pass ? kExitOk : kExitPropertyFailure;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFailure;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
