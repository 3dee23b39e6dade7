#ifndef PROGEVO_EVOLVE_HPP
#define PROGEVO_EVOLVE_HPP

// Generational loop shared by GP and PIPE; only the variation step differs.

#include <vector>

#include "progevo/gp.hpp"
#include "progevo/random_tree.hpp"

namespace progevo::detail {

// `vary(selected, generation, rng)` receives pop_size tournament winners and
// returns pop_size new trees.
template <class Variation>
RunResult evolve(ProblemSpec const& spec, GpConfig const& cfg, Variation&& vary)
{
    validate(cfg);
    int const max_depth = resolved_max_depth(cfg, spec);
    Rng rng(cfg.seed);
    Evaluator evaluate(spec);

    std::vector<Individual> population;
    population.reserve(static_cast<std::size_t>(cfg.pop_size));
    for (auto& tree : ramped_half_and_half(spec.primitives(), cfg.pop_size, max_depth, rng)) {
        double const f = evaluate(tree);
        population.push_back({std::move(tree), f});
    }

    RunResult result;
    std::vector<ProgramTree const*> selected(population.size());
    for (int generation = 0;; ++generation) {
        auto best = population.begin();
        for (auto it = population.begin(); it != population.end(); ++it) {
            if (it->fitness > best->fitness) {
                best = it;
            }
        }
        result.best_fitness = best->fitness;
        result.best_tree = best->tree;
        result.generations_used = generation;
        result.evaluations = evaluate.evaluations();

        if (spec.is_optimal(best->fitness)) {
            result.success = true;
            return result;
        }
        if (generation >= cfg.max_generations) {
            return result;
        }

        for (auto& s : selected) {
            s = &population[tournament_index(population, rng)].tree;
        }
        std::vector<ProgramTree> offspring = vary(selected, generation, rng);

        std::vector<Individual> next;
        next.reserve(population.size());
        for (auto& tree : offspring) {
            double const f = evaluate(tree);
            next.push_back({std::move(tree), f});
        }
        population = std::move(next);
    }
}

} // namespace progevo::detail

#endif
