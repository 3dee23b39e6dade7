#ifndef PROGEVO_HARNESS_HPP
#define PROGEVO_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "progevo/batch.hpp"
#include "progevo/problems.hpp"

namespace progevo {

struct SizingOptions {
    int start = 16;
    int ceiling = 1 << 20;
    // Bisection stops once (hi - lo) <= tolerance * hi.
    double tolerance = 0.10;
};

struct SizingStep {
    int pop_size = 0;
    bool succeeded = false;

    friend bool operator==(SizingStep const&, SizingStep const&) = default;
};

struct SizingResult {
    int min_pop_size = 0;
    // Largest size known to fail, or the untested floor of 2.
    int bracket_lo = 0;
    double avg_evaluations = 0.0;
    std::vector<RunResult> runs;
    std::vector<SizingStep> history;
};

class SizingFailure : public std::runtime_error {
public:
    SizingFailure(int ceiling, std::vector<SizingStep> history, BatchOutcome last);

    [[nodiscard]] int ceiling() const { return ceiling_; }
    [[nodiscard]] std::vector<SizingStep> const& history() const { return history_; }
    // The batch run at the largest size tried.
    [[nodiscard]] BatchOutcome const& last_batch() const { return last_; }

private:
    int ceiling_;
    std::vector<SizingStep> history_;
    BatchOutcome last_;
};

// Rounds to the nearest even integer, never below 2.
int round_to_even(double n);

double mean_evaluations(std::vector<RunResult> const& runs);

using BatchOracle = std::function<BatchOutcome(int pop_size)>;

// Doubles from options.start until a batch succeeds, then bisects between the
// last failing and first succeeding sizes. Throws SizingFailure once the next
// size to try would exceed options.ceiling.
SizingResult bisect_population_size(BatchOracle const& oracle, SizingOptions const& options = {});

// Batches at size N are seeded from mix_seed(req.seed_base, N).
SizingResult bisect_population_size(ProblemSpec const& spec, BatchRequest const& req, SizingOptions const& options = {});

enum class SweepAxis { ProblemSize, JunkCount };

struct SweepCase {
    Algorithm algo = Algorithm::Gp;
    ProblemFamily family = ProblemFamily::Order;
    int l = 0;
    int num_junk = 0;
    bool neg_join = false;
    TrapParams trap{};
    int max_depth = 0;

    [[nodiscard]] ProblemSpec spec() const;
};

struct SweepPlan {
    std::string name;
    SweepAxis axis = SweepAxis::ProblemSize;
    std::vector<SweepCase> cases;
};

std::vector<std::string> const& builtin_plan_names();

// Plans: order, trap, order-neg, order-junk (l/5 junk terminals) and
// junk-fixed-l (l = 20 at depths 6 and 7). `sizes` replaces the default l
// list, or the junk-count list for junk-fixed-l. Throws std::invalid_argument
// for unknown names.
SweepPlan builtin_plan(std::string_view name, std::vector<Algorithm> const& algos,
                       std::optional<std::vector<int>> const& sizes = std::nullopt, TrapParams trap = {3, 1.0});

// One case per (algorithm, l) with depths derived from l.
SweepPlan custom_plan(ProblemFamily family, std::vector<Algorithm> const& algos, std::vector<int> const& sizes,
                      int num_junk, bool neg_join, TrapParams trap, std::optional<int> max_depth = std::nullopt);

struct SweepRow {
    Algorithm algo = Algorithm::Gp;
    ProblemFamily family = ProblemFamily::Order;
    int l = 0;
    int num_junk = 0;
    bool neg_join = false;
    int k = 0;
    double delta = 0.0;
    int max_depth = 0;
    int pop_size = 0;
    double avg_evaluations = 0.0;
    double success_rate = 0.0;
    std::uint64_t seed_base = 0;

    [[nodiscard]] bool aborted() const { return success_rate < 1.0; }

    friend bool operator==(SweepRow const&, SweepRow const&) = default;
};

struct HarnessOptions {
    int n_runs = 30;
    int max_generations = 200;
    int crossover_retries = 10;
    double internal_node_bias = 0.9;
    SizingOptions sizing;
    std::uint64_t seed_base = 1;
    std::function<void(SweepRow const&)> on_row;
};

// Sizes every case of the plan. Cases whose sizing hits the ceiling yield a
// row with success_rate < 1 instead of throwing.
std::vector<SweepRow> scalability_sweep(SweepPlan const& plan, HarnessOptions const& options);

} // namespace progevo

#endif
