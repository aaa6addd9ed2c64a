#include "dipath/adversary.hpp"
#include "dipath/builder.hpp"
#include "dipath/harness.hpp"
#include "dipath/io.hpp"
#include "dipath/oracle.hpp"
#include "dipath/pseudorandom.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

using namespace dipath;

namespace {

ConstantsConfig load_config(const std::string& path)
{
    return path.empty() ? ConstantsConfig{} : read_config_file(path);
}

void print(const nlohmann::json& j)
{
    std::cout << j.dump(2) << "\n";
}

struct GenArgs {
    std::string model = "random";
    int n = 0;
    int p = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& a)
{
    std::optional<Tournament> t;
    if (a.model == "random") {
        if (a.n < 1)
            throw CLI::ValidationError("--n", "random tournaments need --n >= 1");
        t = random_tournament(a.n, a.seed);
    } else {
        if (a.p < 1)
            throw CLI::ValidationError("--p", "paley tournaments need --p");
        t = paley_tournament(a.p);
    }
    write_text_file(a.out, format_graph(t->graph()));
    return 0;
}

struct PrcheckArgs {
    std::string mode = "exact";
    int k = 0;
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 0;
    std::string in;
    std::string config;
};

int run_prcheck(const PrcheckArgs& a)
{
    const auto g = read_graph_file(a.in);
    const auto cfg = load_config(a.config);
    if (a.mode == "exact") {
        print(to_json(pseudorandomness_exact(g, cfg.pseudorandom_budget)));
        return 0;
    }
    if (a.k < 1)
        throw CLI::ValidationError("--k", "sampled mode needs --k >= 1");
    print(to_json(refute_pseudorandomness(g, a.k, a.trials, a.seed)));
    return 0;
}

struct AdversaryArgs {
    int q = 1;
    std::string config;
    std::string in;
    std::string out;
    std::string trace;
};

int run_adversary(const AdversaryArgs& a)
{
    const auto g = read_graph_file(a.in);
    const auto result = theorem1_adversary(g, a.q, load_config(a.config));
    write_text_file(a.out, format_coloring(g, result.coloring));
    if (!a.trace.empty())
        write_text_file(a.trace, to_json(result.trace).dump(2) + "\n");
    return 0;
}

struct BuildArgs {
    int colors = 2;
    int k = 1;
    int n_target = 0;
    std::string config;
    std::string in;
    std::string coloring;
    std::string out;
};

int run_build(const BuildArgs& a)
{
    const auto g = read_graph_file(a.in);
    const auto coloring = read_coloring_file(g, a.colors, a.coloring);
    const auto cfg = load_config(a.config);
    const int n_target = a.n_target > 0 ? a.n_target : std::max(1, cfg.target_path_length);
    BuilderCertificate cert;
    if (a.colors == 2 && !is_complete_symmetric(g))
        cert = two_color_path_finder(g, coloring, a.k, cfg);
    else if (is_complete_symmetric(g))
        cert = symmetric_multicolor_finder(g, coloring, n_target);
    else
        cert = multicolor_path_finder(g, coloring, a.k, n_target, cfg);
    const auto text = to_json(cert).dump(2) + "\n";
    if (a.out.empty())
        std::cout << text;
    else
        write_text_file(a.out, text);
    return 0;
}

struct OracleArgs {
    std::string mode = "path";
    int q = 2;
    int n = 0;
    std::string in;
    std::string coloring;
    std::string config;
};

int run_oracle(const OracleArgs& a)
{
    const auto g = read_graph_file(a.in);
    const auto cfg = load_config(a.config);
    const int workers = worker_count_from_env();
    if (a.mode == "path") {
        if (a.coloring.empty())
            throw CLI::ValidationError("--coloring", "path mode needs a coloring file");
        const auto coloring = read_coloring_file(g, a.q, a.coloring);
        const auto per_color = longest_mono_path(g, coloring, cfg.exact_path_limit);
        auto j = to_json(max_mono_path(g, coloring, cfg.exact_path_limit));
        j["per_color"] = nlohmann::json::array();
        for (const auto& r : per_color)
            j["per_color"].push_back(to_json(r));
        print(j);
    } else if (a.mode == "minmax") {
        print(to_json(min_max_mono_path(g, a.q, cfg.oracle_coloring_budget, workers)));
    } else {
        print(to_json(arrowing_check(g, a.n, a.q, cfg.oracle_coloring_budget, workers)));
    }
    return 0;
}

int run_experiment_command(const std::string& manifest_path)
{
    const auto manifest = read_manifest_file(manifest_path);
    const auto record = run_experiment(manifest, worker_count_from_env());
    write_outputs(record);
    std::cout << "runs " << record.rows.size() << " failures " << record.failures << " budget-exceeded "
              << record.budget_exceeded << "\n";
    return record.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monochromatic directed paths: adversarial colorings, path extraction and exhaustive checks"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a tournament");
    gen_cmd->add_option("--model", gen.model)->check(CLI::IsMember({"random", "paley"}));
    auto* gen_n = gen_cmd->add_option("--n", gen.n, "vertex count (random)");
    auto* gen_p = gen_cmd->add_option("--p", gen.p, "prime = 3 mod 4 (paley)");
    gen_n->excludes(gen_p);
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_option("--out", gen.out)->required();

    PrcheckArgs pr;
    auto* pr_cmd = app.add_subcommand("prcheck", "Check k-pseudorandomness");
    pr_cmd->add_option("--mode", pr.mode)->check(CLI::IsMember({"exact", "sampled"}));
    pr_cmd->add_option("--k", pr.k);
    pr_cmd->add_option("--trials", pr.trials);
    pr_cmd->add_option("--seed", pr.seed);
    pr_cmd->add_option("--in", pr.in)->required();
    pr_cmd->add_option("--config", pr.config);

    AdversaryArgs adv;
    auto* adv_cmd = app.add_subcommand("adversary", "Color an oriented graph against long monochromatic paths");
    adv_cmd->add_option("--q", adv.q)->check(CLI::PositiveNumber);
    adv_cmd->add_option("--config", adv.config);
    adv_cmd->add_option("--in", adv.in)->required();
    adv_cmd->add_option("--out", adv.out)->required();
    adv_cmd->add_option("--trace", adv.trace);

    BuildArgs build;
    auto* build_cmd = app.add_subcommand("build-path", "Extract a long monochromatic path");
    build_cmd->add_option("--colors", build.colors)->check(CLI::PositiveNumber);
    build_cmd->add_option("--k", build.k)->check(CLI::PositiveNumber);
    build_cmd->add_option("--n-target", build.n_target, "target length for three or more colors");
    build_cmd->add_option("--config", build.config);
    build_cmd->add_option("--in", build.in)->required();
    build_cmd->add_option("--coloring", build.coloring)->required();
    build_cmd->add_option("--out", build.out);

    OracleArgs orc;
    auto* orc_cmd = app.add_subcommand("oracle", "Exhaustive monochromatic path checks");
    orc_cmd->add_option("--mode", orc.mode)->check(CLI::IsMember({"path", "minmax", "arrow"}));
    orc_cmd->add_option("--q", orc.q)->check(CLI::PositiveNumber);
    orc_cmd->add_option("--n", orc.n, "target path length (arrow)");
    orc_cmd->add_option("--in", orc.in)->required();
    orc_cmd->add_option("--coloring", orc.coloring);
    orc_cmd->add_option("--config", orc.config);

    std::string manifest;
    auto* exp_cmd = app.add_subcommand("experiment", "Run an experiment manifest");
    exp_cmd->add_option("--manifest", manifest)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd)
            return run_gen(gen);
        if (*pr_cmd)
            return run_prcheck(pr);
        if (*adv_cmd)
            return run_adversary(adv);
        if (*build_cmd)
            return run_build(build);
        if (*orc_cmd)
            return run_oracle(orc);
        return run_experiment_command(manifest);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
