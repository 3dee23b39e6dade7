#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "progevo/gp.hpp"
#include "progevo/random_tree.hpp"

using namespace progevo;

namespace {

std::multiset<std::string> leaf_multiset(ProgramTree const& t)
{
    std::multiset<std::string> out;
    for (auto const& p : t.nodes()) {
        out.insert(to_string(p));
    }
    return out;
}

std::vector<Individual> ranked_population(int n)
{
    std::vector<Individual> pop;
    for (int i = 0; i < n; ++i) {
        pop.push_back({ProgramTree::leaf(Primitive::positive(1)), static_cast<double>(i)});
    }
    return pop;
}

} // namespace

TEST_CASE("tournament over a single individual always returns it")
{
    std::vector<Individual> const pop{{parse_tree("X1"), 0.5}};
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        CHECK(tournament_index(pop, rng) == 0);
    }
    CHECK_THROWS_AS(tournament_index(std::span<Individual const>{}, rng), std::invalid_argument);
}

TEST_CASE("the fittest individual wins with probability 2/n - 1/n^2")
{
    int const n = 10;
    auto const pop = ranked_population(n);
    Rng rng(123);
    int const trials = 100000;
    int wins = 0;
    for (int i = 0; i < trials; ++i) {
        wins += tournament_index(pop, rng) == static_cast<std::size_t>(n - 1) ? 1 : 0;
    }
    double const p = 2.0 / n - 1.0 / (n * n);
    double const sigma = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(static_cast<double>(wins) / trials - p) < 3 * sigma);
}

TEST_CASE("selection by rank follows the with-replacement law")
{
    // P(rank r wins) = (2r + 1) / n^2 for ranks 0..n-1 with distinct fitness.
    int const n = 6;
    auto const pop = ranked_population(n);
    Rng rng(5);
    std::vector<long> counts(n, 0);
    for (int i = 0; i < 60000; ++i) {
        ++counts[tournament_index(pop, rng)];
    }
    std::vector<double> probs;
    for (int r = 0; r < n; ++r) {
        probs.push_back((2.0 * r + 1) / (n * n));
    }
    // 5 degrees of freedom, p = 0.001.
    CHECK(oracle::chi_square(counts, probs) < 20.52);
}

TEST_CASE("ties are broken uniformly")
{
    std::vector<Individual> pop(8, Individual{parse_tree("X1"), 1.0});
    Rng rng(17);
    std::vector<long> counts(pop.size(), 0);
    for (int i = 0; i < 40000; ++i) {
        ++counts[tournament_index(pop, rng)];
    }
    // 7 degrees of freedom, p = 0.001.
    CHECK(oracle::chi_square(counts, std::vector<double>(pop.size(), 1.0 / 8)) < 24.32);

    // A pair of equals is also split evenly.
    std::vector<Individual> two(2, Individual{parse_tree("X1"), 3.0});
    long first = 0;
    for (int i = 0; i < 40000; ++i) {
        first += tournament_index(two, rng) == 0 ? 1 : 0;
    }
    CHECK(std::abs(static_cast<double>(first) / 40000 - 0.5) < 3 * std::sqrt(0.25 / 40000));
}

TEST_CASE("swapping at the roots exchanges the parents")
{
    auto const a = parse_tree("(JOIN X1 X2)");
    auto const b = parse_tree("(JOIN ~X1 (JOIN X3 J1))");
    auto const [c1, c2] = swap_subtrees(a, 0, b, 0);
    CHECK(c1 == b);
    CHECK(c2 == a);

    auto const [d1, d2] = swap_subtrees(a, 2, b, 2);
    CHECK(to_string(d1) == "(JOIN X1 (JOIN X3 J1))");
    CHECK(to_string(d2) == "(JOIN ~X1 X2)");
}

TEST_CASE("leaf-leaf crossover of two small trees")
{
    auto const a = parse_tree("(JOIN X1 X2)");
    auto const b = parse_tree("(JOIN ~X1 ~X2)");
    GpConfig cfg;
    cfg.max_depth = 1;
    cfg.internal_node_bias = 0.9;
    Rng rng(4);
    std::set<std::string> seen;
    for (int i = 0; i < 2000; ++i) {
        auto const [c1, c2] = subtree_crossover(a, b, cfg, rng);
        CHECK(c1.depth() <= 1);
        CHECK(c2.depth() <= 1);
        seen.insert(to_string(c1));
    }
    // Crossing ~X1 in for X1 is one of the reachable offspring.
    CHECK(seen.count("(JOIN ~X1 X2)") == 1);
    CHECK(seen.count("(JOIN X1 ~X2)") == 1);
}

TEST_CASE("crossover falls back to the parents when no legal swap exists")
{
    auto const a = parse_tree("(JOIN X1 X2)");
    auto const b = parse_tree("(JOIN X3 X4)");
    GpConfig cfg;
    cfg.max_depth = 0;
    Rng rng(2);
    auto const [c1, c2] = subtree_crossover(a, b, cfg, rng);
    CHECK(c1 == a);
    CHECK(c2 == b);
}

TEST_CASE("crossover respects the depth bound and conserves symbols")
{
    PrimitiveSet const ps(8, 2, true);
    GpConfig cfg;
    cfg.max_depth = 5;
    Rng rng(31);
    for (int i = 0; i < 3000; ++i) {
        auto const a = generate_random_tree(ps, 1 + i % 5, i % 2 ? InitMethod::Grow : InitMethod::Full, rng);
        auto const b = generate_random_tree(ps, 1 + (i / 2) % 5, InitMethod::Grow, rng);
        auto const [c1, c2] = subtree_crossover(a, b, cfg, rng);
        CHECK(c1.depth() <= 5);
        CHECK(c2.depth() <= 5);
        CHECK(c1.size() + c2.size() == a.size() + b.size());

        auto parents = leaf_multiset(a);
        parents.merge(leaf_multiset(b));
        auto children = leaf_multiset(c1);
        children.merge(leaf_multiset(c2));
        CHECK(parents == children);
    }
}

TEST_CASE("internal-node bias steers crossover points")
{
    // With bias 1 on a full depth-3 tree the root is never swapped for a
    // leaf, so both children stay full binary trees with internal roots.
    auto const a = parse_tree("(JOIN (JOIN (JOIN X1 X2) (JOIN X3 X4)) (JOIN (JOIN X5 X6) (JOIN X7 X8)))");
    auto const b = parse_tree("(JOIN (JOIN (JOIN ~X1 ~X2) (JOIN ~X3 ~X4)) (JOIN (JOIN ~X5 ~X6) (JOIN ~X7 ~X8)))");
    GpConfig cfg;
    cfg.max_depth = 6;
    cfg.internal_node_bias = 1.0;
    Rng rng(8);
    for (int i = 0; i < 500; ++i) {
        auto const [c1, c2] = subtree_crossover(a, b, cfg, rng);
        CHECK(c1.root().is_function());
        CHECK(c2.root().is_function());
    }

    cfg.internal_node_bias = 0.0;
    for (int i = 0; i < 500; ++i) {
        auto const [c1, c2] = subtree_crossover(a, b, cfg, rng);
        CHECK(c1.size() == a.size());
        CHECK(c2.size() == b.size());
    }
}

TEST_CASE("config validation")
{
    GpConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    cfg.pop_size = 7;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.pop_size = 0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = GpConfig{};
    cfg.internal_node_bias = 1.5;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = GpConfig{};
    cfg.max_generations = -1;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

    auto const spec = ProblemSpec::order(PrimitiveSet(20));
    CHECK(resolved_max_depth(GpConfig{}, spec) == 6);
    cfg = GpConfig{};
    cfg.max_depth = 7;
    CHECK(resolved_max_depth(cfg, spec) == 7);
}

TEST_CASE("GP solves the single-pair problem")
{
    auto const spec = ProblemSpec::order(PrimitiveSet(1));
    GpConfig cfg;
    cfg.pop_size = 16;
    cfg.seed = 7;
    auto const r = run_gp(spec, cfg);
    CHECK(r.success);
    CHECK(r.best_fitness == 1.0);
    REQUIRE(r.best_tree.has_value());
    CHECK(evaluate(*r.best_tree, spec) == 1.0);
    CHECK(r.evaluations == 16u * static_cast<unsigned>(r.generations_used + 1));
}

TEST_CASE("zero generations evaluates only the initial population")
{
    auto const spec = ProblemSpec::order(PrimitiveSet(40));
    GpConfig cfg;
    cfg.pop_size = 20;
    cfg.max_generations = 0;
    auto const r = run_gp(spec, cfg);
    CHECK_FALSE(r.success);
    CHECK(r.evaluations == 20);
    CHECK(r.generations_used == 0);
}

TEST_CASE("evaluations are pop * (generations + 1) and runs are deterministic")
{
    auto const spec = ProblemSpec::order(PrimitiveSet(10));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GpConfig cfg;
        cfg.pop_size = 30;
        cfg.max_generations = 15;
        cfg.seed = seed;
        auto const r = run_gp(spec, cfg);
        CHECK(r.evaluations == 30u * static_cast<unsigned>(r.generations_used + 1));
        CHECK(r.generations_used <= 15);
        CHECK(r.success == (r.best_fitness == 10.0));
        if (!r.success) {
            CHECK(r.generations_used == 15);
        }
        CHECK(run_gp(spec, cfg) == r);
    }
}

TEST_CASE("GP finds the ORDER optimum at l = 10 with a reasonable population")
{
    auto const spec = ProblemSpec::order(PrimitiveSet(10));
    GpConfig cfg;
    cfg.pop_size = 200;
    int successes = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        cfg.seed = seed;
        auto const r = run_gp(spec, cfg);
        successes += r.success ? 1 : 0;
        if (r.success) {
            REQUIRE(r.best_tree.has_value());
            CHECK(r.best_tree->depth() <= resolved_max_depth(cfg, spec));
        }
    }
    CHECK(successes == 5);
}
