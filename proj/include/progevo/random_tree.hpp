#ifndef PROGEVO_RANDOM_TREE_HPP
#define PROGEVO_RANDOM_TREE_HPP

#include <vector>

#include "progevo/primitives.hpp"
#include "progevo/rng.hpp"
#include "progevo/tree.hpp"

namespace progevo {

enum class InitMethod { Full, Grow };

// Full: every leaf sits at exactly depth_limit. Grow: above the limit each
// symbol is drawn uniformly from the whole alphabet, at the limit from the
// terminals only.
ProgramTree generate_random_tree(PrimitiveSet const& ps, int depth_limit, InitMethod method, Rng& rng);

struct RampSlot {
    int depth = 0;
    InitMethod method = InitMethod::Full;
};

inline constexpr int min_ramp_depth = 2;

// Assignment of population slots to (depth, method) pairs: the population is
// split evenly across depths min(2, max_depth)..max_depth, leftover slots going
// to the shallowest depths; within a depth the first half is Full and the rest
// (including an odd one out) Grow.
std::vector<RampSlot> ramp_plan(int pop_size, int max_depth);

std::vector<ProgramTree> ramped_half_and_half(PrimitiveSet const& ps, int pop_size, int max_depth, Rng& rng);

} // namespace progevo

#endif
