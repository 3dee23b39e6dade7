#include "progevo/random_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace progevo {

namespace {

Primitive pick(PrimitiveSet const& ps, std::size_t first, std::size_t count, Rng& rng)
{
    std::uniform_int_distribution<std::size_t> dist(0, count - 1);
    return ps.at(first + dist(rng));
}

void grow_into(std::vector<Primitive>& prefix, PrimitiveSet const& ps, int depth, int limit, InitMethod method, Rng& rng)
{
    auto const nf = ps.num_functions();
    Primitive p;
    if (depth >= limit) {
        p = pick(ps, nf, ps.num_terminals(), rng);
    } else if (method == InitMethod::Full) {
        p = pick(ps, 0, nf, rng);
    } else {
        p = pick(ps, 0, ps.size(), rng);
    }
    prefix.push_back(p);
    for (int c = 0; c < p.arity(); ++c) {
        grow_into(prefix, ps, depth + 1, limit, method, rng);
    }
}

} // namespace

ProgramTree generate_random_tree(PrimitiveSet const& ps, int depth_limit, InitMethod method, Rng& rng)
{
    if (depth_limit < 0) {
        throw std::invalid_argument("depth limit must be non-negative");
    }
    std::vector<Primitive> prefix;
    grow_into(prefix, ps, 0, depth_limit, method, rng);
    return ProgramTree(std::move(prefix));
}

std::vector<RampSlot> ramp_plan(int pop_size, int max_depth)
{
    if (pop_size < 1) {
        throw std::invalid_argument("population size must be positive");
    }
    if (max_depth < 0) {
        throw std::invalid_argument("max depth must be non-negative");
    }
    int const first = std::min(min_ramp_depth, max_depth);
    int const levels = max_depth - first + 1;
    int const per_level = pop_size / levels;
    int const extra = pop_size % levels;

    std::vector<RampSlot> plan;
    plan.reserve(static_cast<std::size_t>(pop_size));
    for (int level = 0; level < levels; ++level) {
        int const count = per_level + (level < extra ? 1 : 0);
        int const full = count / 2;
        for (int i = 0; i < count; ++i) {
            plan.push_back({first + level, i < full ? InitMethod::Full : InitMethod::Grow});
        }
    }
    return plan;
}

std::vector<ProgramTree> ramped_half_and_half(PrimitiveSet const& ps, int pop_size, int max_depth, Rng& rng)
{
    std::vector<ProgramTree> population;
    population.reserve(static_cast<std::size_t>(pop_size));
    for (auto const& slot : ramp_plan(pop_size, max_depth)) {
        population.push_back(generate_random_tree(ps, slot.depth, slot.method, rng));
    }
    return population;
}

} // namespace progevo
