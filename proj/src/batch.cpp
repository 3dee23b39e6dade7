#include "progevo/batch.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>

#include "progevo/pipe.hpp"

namespace progevo {

std::string_view to_string(Algorithm algo)
{
    return algo == Algorithm::Gp ? "gp" : "pipe";
}

std::optional<Algorithm> parse_algorithm(std::string_view name)
{
    if (name == "gp") {
        return Algorithm::Gp;
    }
    if (name == "pipe") {
        return Algorithm::Pipe;
    }
    return std::nullopt;
}

RunResult run_algorithm(Algorithm algo, ProblemSpec const& spec, GpConfig const& cfg)
{
    return algo == Algorithm::Gp ? run_gp(spec, cfg) : run_pipe(spec, cfg);
}

namespace {

GpConfig seeded(BatchRequest const& req, int run)
{
    GpConfig cfg = req.cfg;
    cfg.seed = req.seed_base + static_cast<std::uint64_t>(run);
    return cfg;
}

void check(BatchRequest const& req)
{
    if (req.n_runs < 1) {
        throw std::invalid_argument("a batch needs at least one run");
    }
    validate(req.cfg);
}

} // namespace

BatchOutcome batch_success_serial(ProblemSpec const& spec, BatchRequest const& req)
{
    check(req);
    BatchOutcome out;
    out.all_succeeded = true;
    for (int i = 0; i < req.n_runs; ++i) {
        out.runs.push_back(run_algorithm(req.algo, spec, seeded(req, i)));
        if (!out.runs.back().success) {
            out.all_succeeded = false;
            if (req.stop_at_first_failure) {
                break;
            }
        }
    }
    return out;
}

BatchOutcome batch_success(ProblemSpec const& spec, BatchRequest const& req)
{
    check(req);
    int const n = req.n_runs;
    std::vector<std::optional<RunResult>> results(static_cast<std::size_t>(n));
    // Lowest failing run index seen so far; runs above it cannot be reported.
    std::atomic<int> first_failure{n};
    std::exception_ptr error;
    std::mutex error_mutex;

#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < n; ++i) {
        if (req.stop_at_first_failure && i > first_failure.load(std::memory_order_relaxed)) {
            continue;
        }
        try {
            auto r = run_algorithm(req.algo, spec, seeded(req, i));
            if (!r.success) {
                int seen = first_failure.load();
                while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
                }
            }
            results[static_cast<std::size_t>(i)] = std::move(r);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    BatchOutcome out;
    out.all_succeeded = true;
    for (auto& r : results) {
        if (!r) {
            break;
        }
        out.runs.push_back(std::move(*r));
        if (!out.runs.back().success) {
            out.all_succeeded = false;
            if (req.stop_at_first_failure) {
                break;
            }
        }
    }
    return out;
}

} // namespace progevo
