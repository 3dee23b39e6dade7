#ifndef PROGEVO_GP_HPP
#define PROGEVO_GP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "progevo/problems.hpp"
#include "progevo/rng.hpp"
#include "progevo/tree.hpp"

namespace progevo {

struct Individual {
    ProgramTree tree;
    double fitness = 0.0;
};

// Run parameters shared by GP and PIPE. A negative max_depth means "one more
// than the depth of the smallest tree holding the optimum".
struct GpConfig {
    int pop_size = 100;
    int max_generations = 200;
    int max_depth = -1;
    int crossover_retries = 10;
    double internal_node_bias = 0.9;
    std::uint64_t seed = 1;
};

// Throws std::invalid_argument on an unusable configuration.
void validate(GpConfig const& cfg);
int resolved_max_depth(GpConfig const& cfg, ProblemSpec const& spec);

struct RunResult {
    bool success = false;
    std::uint64_t evaluations = 0;
    int generations_used = 0;
    double best_fitness = 0.0;
    std::optional<ProgramTree> best_tree;

    friend bool operator==(RunResult const&, RunResult const&) = default;
};

// Two uniform draws with replacement; the fitter wins, ties go to a fair coin.
std::size_t tournament_index(std::span<Individual const> pop, Rng& rng);
Individual const& binary_tournament(std::span<Individual const> pop, Rng& rng);

// Exchanges the subtree at prefix position `pos1` of p1 with the one at `pos2`
// of p2.
std::pair<ProgramTree, ProgramTree> swap_subtrees(ProgramTree const& p1, std::size_t pos1,
                                                  ProgramTree const& p2, std::size_t pos2);

// Subtree crossover. Each parent's point is an internal node with probability
// internal_node_bias (when it has one), otherwise a leaf, uniform within the
// class. Depth-violating pairs are redrawn up to crossover_retries times, after
// which the parents are returned unchanged.
std::pair<ProgramTree, ProgramTree> subtree_crossover(ProgramTree const& p1, ProgramTree const& p2,
                                                      GpConfig const& cfg, Rng& rng);

// Generational GP: ramped half-and-half start, binary tournament, crossover on
// every pair, whole-population replacement. Stops at the optimum or after
// cfg.max_generations generations.
RunResult run_gp(ProblemSpec const& spec, GpConfig const& cfg);

} // namespace progevo

#endif
