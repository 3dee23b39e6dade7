#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "progevo/random_tree.hpp"

using namespace progevo;

TEST_CASE("Full trees are complete to the limit")
{
    PrimitiveSet const ps(5);
    Rng rng(3);
    for (int d = 0; d <= 6; ++d) {
        for (int i = 0; i < 50; ++i) {
            auto const t = generate_random_tree(ps, d, InitMethod::Full, rng);
            CHECK(t.depth() == d);
            CHECK(t.size() == (std::size_t{1} << (d + 1)) - 1);
            CHECK(belongs_to(t, ps));
        }
    }
    auto const single = generate_random_tree(ps, 0, InitMethod::Full, rng);
    CHECK(single.size() == 1);
    CHECK(single.root().is_terminal());
    CHECK(generate_random_tree(ps, 2, InitMethod::Full, rng).size() == 7);
}

TEST_CASE("Full leaves are uniform over terminals")
{
    PrimitiveSet const ps(3, 2);
    Rng rng(11);
    std::vector<long> counts(ps.num_terminals(), 0);
    for (int i = 0; i < 20000; ++i) {
        auto const t = generate_random_tree(ps, 0, InitMethod::Full, rng);
        ++counts[ps.index_of(t.root()) - ps.num_functions()];
    }
    std::vector<double> probs(ps.num_terminals(), 1.0 / static_cast<double>(ps.num_terminals()));
    // 7 degrees of freedom, p = 0.001.
    CHECK(oracle::chi_square(counts, probs) < 24.32);
}

TEST_CASE("Grow depth distribution matches the exact distribution")
{
    // l = 5 without NEG_JOIN: one function among 11 symbols.
    PrimitiveSet const ps(5);
    int const limit = 3;
    double const q = 1.0 / static_cast<double>(ps.size());
    auto const pmf = oracle::grow_depth_distribution(q, limit);

    Rng rng(2024);
    std::vector<long> counts(limit + 1, 0);
    for (int i = 0; i < 10000; ++i) {
        auto const t = generate_random_tree(ps, limit, InitMethod::Grow, rng);
        REQUIRE(t.depth() <= limit);
        ++counts[static_cast<std::size_t>(t.depth())];
    }
    // Merge sparse tail cells so every expected count is >= 5.
    std::vector<long> merged{counts[0], counts[1], counts[2] + counts[3]};
    std::vector<double> merged_p{pmf[0], pmf[1], pmf[2] + pmf[3]};
    // 2 degrees of freedom, p = 0.001.
    CHECK(oracle::chi_square(merged, merged_p) < 13.82);
    CHECK(pmf[0] == doctest::Approx(10.0 / 11.0));
}

TEST_CASE("Grow with NEG_JOIN: depth distribution over a denser function set")
{
    PrimitiveSet const ps(2, 0, true);  // 2 functions out of 6 symbols
    int const limit = 4;
    auto const pmf = oracle::grow_depth_distribution(2.0 / 6.0, limit);
    Rng rng(77);
    std::vector<long> counts(limit + 1, 0);
    for (int i = 0; i < 20000; ++i) {
        ++counts[static_cast<std::size_t>(generate_random_tree(ps, limit, InitMethod::Grow, rng).depth())];
    }
    // 4 degrees of freedom, p = 0.001.
    CHECK(oracle::chi_square(counts, pmf) < 18.47);
}

TEST_CASE("ramp plan: single level splits Full and Grow")
{
    auto const plan = ramp_plan(4, 2);
    REQUIRE(plan.size() == 4);
    int full = 0;
    for (auto const& s : plan) {
        CHECK(s.depth == 2);
        full += s.method == InitMethod::Full ? 1 : 0;
    }
    CHECK(full == 2);
}

TEST_CASE("ramp plan: 100 trees over depths 2..6")
{
    auto const plan = ramp_plan(100, 6);
    std::map<int, int> per_depth;
    std::map<int, int> full_per_depth;
    for (auto const& s : plan) {
        ++per_depth[s.depth];
        full_per_depth[s.depth] += s.method == InitMethod::Full ? 1 : 0;
    }
    CHECK(per_depth == std::map<int, int>{{2, 20}, {3, 20}, {4, 20}, {5, 20}, {6, 20}});
    for (auto const& [d, n] : full_per_depth) {
        CHECK(n == 10);
    }
}

TEST_CASE("ramp plan: odd counts give the extra slot to Grow")
{
    auto const plan = ramp_plan(7, 3);  // depths 2, 3 get 4 and 3
    std::map<std::pair<int, bool>, int> cells;
    for (auto const& s : plan) {
        ++cells[{s.depth, s.method == InitMethod::Full}];
    }
    CHECK(cells[{2, true}] == 2);
    CHECK(cells[{2, false}] == 2);
    CHECK(cells[{3, true}] == 1);
    CHECK(cells[{3, false}] == 2);
}

TEST_CASE("ramp plan below the usual minimum depth")
{
    for (auto const& s : ramp_plan(6, 1)) {
        CHECK(s.depth == 1);
    }
    for (auto const& s : ramp_plan(4, 0)) {
        CHECK(s.depth == 0);
    }
}

TEST_CASE("ramped half-and-half honours the depth bound and the ramp")
{
    PrimitiveSet const ps(10, 2, true);
    Rng rng(9);
    auto const pop = ramped_half_and_half(ps, 100, 6, rng);
    auto const plan = ramp_plan(100, 6);
    REQUIRE(pop.size() == 100);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        CHECK(pop[i].depth() <= 6);
        CHECK(belongs_to(pop[i], ps));
        if (plan[i].method == InitMethod::Full) {
            CHECK(pop[i].depth() == plan[i].depth);
        } else {
            CHECK(pop[i].depth() <= plan[i].depth);
        }
    }
}
