#ifndef PROGEVO_BATCH_HPP
#define PROGEVO_BATCH_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "progevo/gp.hpp"
#include "progevo/problems.hpp"

namespace progevo {

enum class Algorithm { Gp, Pipe };

std::string_view to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);

RunResult run_algorithm(Algorithm algo, ProblemSpec const& spec, GpConfig const& cfg);

struct BatchOutcome {
    bool all_succeeded = false;
    // Ordered by run index. With stop_at_first_failure the list ends at the
    // first failing run.
    std::vector<RunResult> runs;

    friend bool operator==(BatchOutcome const&, BatchOutcome const&) = default;
};

struct BatchRequest {
    Algorithm algo = Algorithm::Gp;
    GpConfig cfg;  // cfg.seed is ignored; run i is seeded with seed_base + i
    int n_runs = 30;
    std::uint64_t seed_base = 0;
    bool stop_at_first_failure = true;
};

// Independent runs spread over OpenMP threads. Output is identical to
// batch_success_serial for every thread count.
BatchOutcome batch_success(ProblemSpec const& spec, BatchRequest const& req);

// Reference implementation: the same runs, one after another.
BatchOutcome batch_success_serial(ProblemSpec const& spec, BatchRequest const& req);

} // namespace progevo

#endif
