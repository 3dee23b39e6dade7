#include "progevo/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "progevo/rng.hpp"

namespace progevo {

SizingFailure::SizingFailure(int ceiling, std::vector<SizingStep> history, BatchOutcome last)
    : std::runtime_error("population sizing found no successful size up to the ceiling of " + std::to_string(ceiling)),
      ceiling_(ceiling), history_(std::move(history)), last_(std::move(last))
{
}

int round_to_even(double n)
{
    auto const even = 2 * static_cast<long long>(std::llround(n / 2.0));
    return static_cast<int>(std::max<long long>(even, 2));
}

double mean_evaluations(std::vector<RunResult> const& runs)
{
    if (runs.empty()) {
        return 0.0;
    }
    double const total = std::accumulate(runs.begin(), runs.end(), 0.0,
                                         [](double acc, RunResult const& r) { return acc + static_cast<double>(r.evaluations); });
    return total / static_cast<double>(runs.size());
}

SizingResult bisect_population_size(BatchOracle const& oracle, SizingOptions const& options)
{
    if (options.start < 2 || !(options.tolerance > 0.0)) {
        throw std::invalid_argument("sizing needs start >= 2 and a positive tolerance");
    }
    SizingResult result;
    auto attempt = [&](int n) {
        auto outcome = oracle(n);
        result.history.push_back({n, outcome.all_succeeded});
        return outcome;
    };

    // Bracketing by doubling.
    int lo = 0;
    int hi = round_to_even(options.start);
    BatchOutcome best;
    for (;;) {
        if (hi > options.ceiling) {
            throw SizingFailure(options.ceiling, result.history, std::move(best));
        }
        auto outcome = attempt(hi);
        if (outcome.all_succeeded) {
            best = std::move(outcome);
            break;
        }
        best = std::move(outcome);
        lo = hi;
        hi *= 2;
    }

    bool lo_tested = lo > 0;
    if (!lo_tested) {
        lo = 2;
    }
    while (hi - lo > options.tolerance * hi) {
        int const mid = round_to_even((lo + hi) / 2.0);
        if (mid <= lo || mid >= hi) {
            break;
        }
        auto outcome = attempt(mid);
        if (outcome.all_succeeded) {
            hi = mid;
            best = std::move(outcome);
        } else {
            lo = mid;
            lo_tested = true;
        }
    }
    // The floor of 2 is assumed, not observed, when the first size succeeded.
    if (!lo_tested && lo < hi) {
        auto outcome = attempt(lo);
        if (outcome.all_succeeded) {
            hi = lo;
            best = std::move(outcome);
        }
    }

    result.min_pop_size = hi;
    result.bracket_lo = lo;
    result.runs = std::move(best.runs);
    result.avg_evaluations = mean_evaluations(result.runs);
    return result;
}

SizingResult bisect_population_size(ProblemSpec const& spec, BatchRequest const& req, SizingOptions const& options)
{
    auto oracle = [&](int n) {
        BatchRequest sized = req;
        sized.cfg.pop_size = n;
        sized.seed_base = mix_seed(req.seed_base, static_cast<std::uint64_t>(n));
        return batch_success(spec, sized);
    };
    return bisect_population_size(oracle, options);
}

ProblemSpec SweepCase::spec() const
{
    PrimitiveSet ps(l, num_junk, neg_join);
    return family == ProblemFamily::Order ? ProblemSpec::order(ps) : ProblemSpec::trap(ps, trap);
}

std::vector<std::string> const& builtin_plan_names()
{
    static std::vector<std::string> const names{"order", "trap", "order-neg", "order-junk", "junk-fixed-l"};
    return names;
}

SweepPlan custom_plan(ProblemFamily family, std::vector<Algorithm> const& algos, std::vector<int> const& sizes,
                      int num_junk, bool neg_join, TrapParams trap, std::optional<int> max_depth)
{
    SweepPlan plan{"custom", SweepAxis::ProblemSize, {}};
    for (auto const algo : algos) {
        for (int const l : sizes) {
            SweepCase c{algo, family, l, num_junk, neg_join, trap, 0};
            c.max_depth = max_depth.value_or(DepthBudget::for_pairs(l).max_depth);
            plan.cases.push_back(c);
        }
    }
    return plan;
}

SweepPlan builtin_plan(std::string_view name, std::vector<Algorithm> const& algos,
                       std::optional<std::vector<int>> const& sizes, TrapParams trap)
{
    std::vector<int> const order_sizes{5, 10, 20, 40, 60, 80, 100};
    SweepPlan plan;
    if (name == "order") {
        plan = custom_plan(ProblemFamily::Order, algos, sizes.value_or(order_sizes), 0, false, trap);
    } else if (name == "trap") {
        plan = custom_plan(ProblemFamily::Trap, algos, sizes.value_or(std::vector<int>{6, 12, 18, 21, 24, 33}), 0, false,
                           trap);
    } else if (name == "order-neg") {
        plan = custom_plan(ProblemFamily::Order, algos, sizes.value_or(order_sizes), 0, true, trap);
    } else if (name == "order-junk") {
        plan = custom_plan(ProblemFamily::Order, algos, sizes.value_or(order_sizes), 0, false, trap);
        for (auto& c : plan.cases) {
            c.num_junk = c.l / 5;
        }
    } else if (name == "junk-fixed-l") {
        plan.axis = SweepAxis::JunkCount;
        auto const junk = sizes.value_or(std::vector<int>{5, 10, 15, 20, 40});
        for (int const depth : {6, 7}) {
            for (auto const algo : algos) {
                for (int const j : junk) {
                    plan.cases.push_back({algo, ProblemFamily::Order, 20, j, false, trap, depth});
                }
            }
        }
    } else {
        throw std::invalid_argument("unknown sweep plan '" + std::string(name) + "'");
    }
    plan.name = std::string(name);
    return plan;
}

std::vector<SweepRow> scalability_sweep(SweepPlan const& plan, HarnessOptions const& options)
{
    std::vector<SweepRow> rows;
    for (auto const& c : plan.cases) {
        auto const spec = c.spec();
        BatchRequest req;
        req.algo = c.algo;
        req.cfg.max_generations = options.max_generations;
        req.cfg.max_depth = c.max_depth;
        req.cfg.crossover_retries = options.crossover_retries;
        req.cfg.internal_node_bias = options.internal_node_bias;
        req.n_runs = options.n_runs;
        req.seed_base = options.seed_base;

        SweepRow row;
        row.algo = c.algo;
        row.family = c.family;
        row.l = c.l;
        row.num_junk = c.num_junk;
        row.neg_join = c.neg_join;
        if (c.family == ProblemFamily::Trap) {
            row.k = c.trap.k;
            row.delta = c.trap.delta;
        }
        row.max_depth = c.max_depth;
        row.seed_base = options.seed_base;
        try {
            auto const sized = bisect_population_size(spec, req, options.sizing);
            row.pop_size = sized.min_pop_size;
            row.avg_evaluations = sized.avg_evaluations;
            row.success_rate = 1.0;
        } catch (SizingFailure const& failure) {
            auto const& last = failure.last_batch();
            std::vector<RunResult> good;
            std::copy_if(last.runs.begin(), last.runs.end(), std::back_inserter(good),
                         [](RunResult const& r) { return r.success; });
            row.pop_size = failure.history().empty() ? 0 : failure.history().back().pop_size;
            row.avg_evaluations = mean_evaluations(good);
            row.success_rate = last.runs.empty() ? 0.0 : static_cast<double>(good.size()) / static_cast<double>(last.runs.size());
        }
        if (options.on_row) {
            options.on_row(row);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace progevo
