#include "dipath/config.hpp"
#include "dipath/io.hpp"

#include <cmath>
#include <stdexcept>

namespace dipath {

void ConstantsConfig::validate() const
{
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0))
            throw std::invalid_argument(std::string(name) + " must be positive");
    };
    positive(c, "c");
    if (c1 < 0.0)
        throw std::invalid_argument("c1 must be positive (0 selects the default)");
    if (target_path_length < 0)
        throw std::invalid_argument("target_path_length must be nonnegative");
    positive(degree_exponent_factor, "degree_exponent_factor");
    positive(termination_edge_factor, "termination_edge_factor");
    positive(block_size_factor, "block_size_factor");
    if (min_block_size < 1)
        throw std::invalid_argument("min_block_size must be at least 1");
    positive(red_threshold_divisor, "red_threshold_divisor");
    positive(block_factor, "block_factor");
    positive(path_factor, "path_factor");
    positive(cycle_factor, "cycle_factor");
    positive(red_guarantee_divisor, "red_guarantee_divisor");
    positive(blue_guarantee_divisor, "blue_guarantee_divisor");
    if (exact_path_limit < 1)
        throw std::invalid_argument("exact_path_limit must be positive");
    if (oracle_coloring_budget == 0 || pseudorandom_budget == 0)
        throw std::invalid_argument("budgets must be positive");
}

double default_c1(double c, int q)
{
    const double qd = q;
    return 0.5 * std::pow(c, 1.0 / qd) / (8.0 * std::pow(2.0 * qd, qd) * std::pow(16.0 * qd * qd, qd + 1.0));
}

double ConstantsConfig::effective_c1(int q) const
{
    return c1 > 0.0 ? c1 : default_c1(c, q);
}

double ConstantsConfig::effective_degree_threshold(int n, int q) const
{
    if (relax && degree_threshold >= 0.0)
        return degree_threshold;
    return degree_exponent_factor * std::pow(static_cast<double>(n) / (2.0 * q), q);
}

double ConstantsConfig::effective_termination_threshold(int n, int q) const
{
    if (relax && termination_edge_threshold >= 0.0)
        return termination_edge_threshold;
    return termination_edge_factor * std::pow(static_cast<double>(n) / (16.0 * q), 2.0 * q);
}

nlohmann::json to_json(const ConstantsConfig& cfg)
{
    return {
        {"c", cfg.c},
        {"c1", cfg.c1},
        {"target_path_length", cfg.target_path_length},
        {"degree_exponent_factor", cfg.degree_exponent_factor},
        {"termination_edge_factor", cfg.termination_edge_factor},
        {"relax", cfg.relax},
        {"degree_threshold", cfg.degree_threshold},
        {"termination_edge_threshold", cfg.termination_edge_threshold},
        {"block_size_factor", cfg.block_size_factor},
        {"min_block_size", cfg.min_block_size},
        {"red_threshold_divisor", cfg.red_threshold_divisor},
        {"block_factor", cfg.block_factor},
        {"path_factor", cfg.path_factor},
        {"cycle_factor", cfg.cycle_factor},
        {"red_guarantee_divisor", cfg.red_guarantee_divisor},
        {"blue_guarantee_divisor", cfg.blue_guarantee_divisor},
        {"exact_path_limit", cfg.exact_path_limit},
        {"oracle_coloring_budget", cfg.oracle_coloring_budget},
        {"pseudorandom_budget", cfg.pseudorandom_budget},
    };
}

ConstantsConfig config_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("config must be a JSON object");
    ConstantsConfig cfg;
    const auto known = to_json(cfg);
    for (const auto& [key, value] : j.items())
        if (!known.contains(key))
            throw std::invalid_argument("unknown config key '" + key + "'");

    auto take = [&](const char* key, auto& field) {
        if (j.contains(key))
            j.at(key).get_to(field);
    };
    take("c", cfg.c);
    take("c1", cfg.c1);
    take("target_path_length", cfg.target_path_length);
    take("degree_exponent_factor", cfg.degree_exponent_factor);
    take("termination_edge_factor", cfg.termination_edge_factor);
    take("relax", cfg.relax);
    take("degree_threshold", cfg.degree_threshold);
    take("termination_edge_threshold", cfg.termination_edge_threshold);
    take("block_size_factor", cfg.block_size_factor);
    take("min_block_size", cfg.min_block_size);
    take("red_threshold_divisor", cfg.red_threshold_divisor);
    take("block_factor", cfg.block_factor);
    take("path_factor", cfg.path_factor);
    take("cycle_factor", cfg.cycle_factor);
    take("red_guarantee_divisor", cfg.red_guarantee_divisor);
    take("blue_guarantee_divisor", cfg.blue_guarantee_divisor);
    take("exact_path_limit", cfg.exact_path_limit);
    take("oracle_coloring_budget", cfg.oracle_coloring_budget);
    take("pseudorandom_budget", cfg.pseudorandom_budget);
    cfg.validate();
    return cfg;
}

ConstantsConfig read_config_file(const std::string& path)
{
    return config_from_json(nlohmann::json::parse(read_text_file(path)));
}

} // namespace dipath
