#include "progevo/gp.hpp"

#include <stdexcept>
#include <string>

#include "evolve.hpp"

namespace progevo {

void validate(GpConfig const& cfg)
{
    if (cfg.pop_size < 2 || cfg.pop_size % 2 != 0) {
        throw std::invalid_argument("population size must be even and at least 2, got " + std::to_string(cfg.pop_size));
    }
    if (cfg.max_generations < 0) {
        throw std::invalid_argument("max generations must be non-negative");
    }
    if (cfg.crossover_retries < 0) {
        throw std::invalid_argument("crossover retries must be non-negative");
    }
    if (!(cfg.internal_node_bias >= 0.0 && cfg.internal_node_bias <= 1.0)) {
        throw std::invalid_argument("internal node bias must lie in [0, 1]");
    }
}

int resolved_max_depth(GpConfig const& cfg, ProblemSpec const& spec)
{
    return cfg.max_depth >= 0 ? cfg.max_depth : DepthBudget::for_pairs(spec.primitives().pairs()).max_depth;
}

std::size_t tournament_index(std::span<Individual const> pop, Rng& rng)
{
    if (pop.empty()) {
        throw std::invalid_argument("tournament over an empty population");
    }
    std::uniform_int_distribution<std::size_t> draw(0, pop.size() - 1);
    auto const a = draw(rng);
    auto const b = draw(rng);
    if (pop[a].fitness > pop[b].fitness) {
        return a;
    }
    if (pop[b].fitness > pop[a].fitness) {
        return b;
    }
    return coin_flip(rng) ? a : b;
}

Individual const& binary_tournament(std::span<Individual const> pop, Rng& rng)
{
    return pop[tournament_index(pop, rng)];
}

std::pair<ProgramTree, ProgramTree> swap_subtrees(ProgramTree const& p1, std::size_t pos1,
                                                  ProgramTree const& p2, std::size_t pos2)
{
    auto const end1 = p1.subtree_end(pos1);
    auto const end2 = p2.subtree_end(pos2);
    return {splice(p1, pos1, end1, p2, pos2, end2), splice(p2, pos2, end2, p1, pos1, end1)};
}

namespace {

std::size_t pick_point(ProgramTree const& t, double internal_bias, Rng& rng)
{
    auto const nodes = t.nodes();
    // Binary functions only: a tree with n nodes has (n - 1) / 2 internal ones.
    std::size_t const internal = (nodes.size() - 1) / 2;
    std::size_t const leaves = nodes.size() - internal;
    bool const want_internal = internal > 0 && std::bernoulli_distribution(internal_bias)(rng);
    std::size_t target = std::uniform_int_distribution<std::size_t>(0, (want_internal ? internal : leaves) - 1)(rng);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].is_function() == want_internal) {
            if (target == 0) {
                return i;
            }
            --target;
        }
    }
    return 0;
}

} // namespace

std::pair<ProgramTree, ProgramTree> subtree_crossover(ProgramTree const& p1, ProgramTree const& p2,
                                                      GpConfig const& cfg, Rng& rng)
{
    for (int attempt = 0; attempt <= cfg.crossover_retries; ++attempt) {
        auto const pos1 = pick_point(p1, cfg.internal_node_bias, rng);
        auto const pos2 = pick_point(p2, cfg.internal_node_bias, rng);
        auto children = swap_subtrees(p1, pos1, p2, pos2);
        if (children.first.depth() <= cfg.max_depth && children.second.depth() <= cfg.max_depth) {
            return children;
        }
    }
    return {p1, p2};
}

RunResult run_gp(ProblemSpec const& spec, GpConfig const& cfg)
{
    GpConfig crossover_cfg = cfg;
    crossover_cfg.max_depth = resolved_max_depth(cfg, spec);
    return detail::evolve(spec, cfg, [&](std::vector<ProgramTree const*> const& parents, int, Rng& rng) {
        std::vector<ProgramTree> offspring;
        offspring.reserve(parents.size());
        for (std::size_t i = 0; i + 1 < parents.size(); i += 2) {
            auto [a, b] = subtree_crossover(*parents[i], *parents[i + 1], crossover_cfg, rng);
            offspring.push_back(std::move(a));
            offspring.push_back(std::move(b));
        }
        return offspring;
    });
}

} // namespace progevo
