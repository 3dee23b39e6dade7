// progevo: GP and PIPE on the ORDER / TRAP program benchmarks.
//
//   progevo run     --algo gp --problem order --l 10 --pop 200 --seed 7
//   progevo bisect  --algo pipe --problem trap --l 6 --k 3 --delta 0.25
//   progevo sweep   --plan order --sizes 5,10 --algo both --out results/
//   progevo express --problem order --l 4 "(JOIN (JOIN ~X3 X1) (JOIN X4 ~X2))"
//
// Exit codes: 0 success, 1 run or sizing failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "progevo/batch.hpp"
#include "progevo/harness.hpp"
#include "progevo/pipe.hpp"
#include "progevo/problems.hpp"
#include "progevo/report.hpp"
#include "progevo/tree.hpp"

namespace {

using namespace progevo;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProblemFlags {
    std::string problem = "order";
    int l = 10;
    int k = 3;
    double delta = 1.0;
    bool neg_join = false;
    int junk = 0;

    void attach(CLI::App* app)
    {
        app->add_option("--problem", problem, "Problem family: order or trap")->capture_default_str();
        app->add_option("--l", l, "Number of complementary terminal pairs")->capture_default_str();
        app->add_option("--k", k, "Trap group size")->capture_default_str();
        app->add_option("--delta", delta, "Trap signal parameter in [0, 1]")->capture_default_str();
        app->add_flag("--neg-join", neg_join, "Add the NEG_JOIN function to the alphabet");
        app->add_option("--junk", junk, "Number of unique JUNK terminals")->capture_default_str();
    }

    ProblemFamily family() const
    {
        if (problem == "order") {
            return ProblemFamily::Order;
        }
        if (problem == "trap") {
            return ProblemFamily::Trap;
        }
        throw UsageError("--problem must be 'order' or 'trap', got '" + problem + "'");
    }

    TrapParams trap() const
    {
        if (k < 2) {
            throw UsageError("--k must be at least 2");
        }
        if (!(delta >= 0.0 && delta <= 1.0)) {
            throw UsageError("--delta must lie in [0, 1]");
        }
        return {k, delta};
    }

    ProblemSpec spec() const
    {
        auto const fam = family();
        if (l < 1) {
            throw UsageError("--l must be at least 1");
        }
        if (junk < 0) {
            throw UsageError("--junk must be non-negative");
        }
        PrimitiveSet ps(l, junk, neg_join);
        if (fam == ProblemFamily::Order) {
            return ProblemSpec::order(ps);
        }
        auto const tp = trap();
        if (l % k != 0) {
            throw UsageError("--k=" + std::to_string(k) + " must divide --l=" + std::to_string(l));
        }
        return ProblemSpec::trap(ps, tp);
    }
};

struct EngineFlags {
    int max_gens = 200;
    int max_depth = -1;
    int retries = 10;
    double internal_bias = 0.9;

    void attach(CLI::App* app)
    {
        app->add_option("--max-gens", max_gens, "Generation cap per run")->capture_default_str();
        app->add_option("--max-depth", max_depth, "Maximum tree depth in edges (default: derived from l)");
        app->add_option("--retries", retries, "Crossover retries before copying parents")->capture_default_str();
        app->add_option("--internal-bias", internal_bias, "Probability of an internal crossover point")
            ->capture_default_str();
    }

    GpConfig config() const
    {
        if (max_gens < 0) {
            throw UsageError("--max-gens must be non-negative");
        }
        if (retries < 0) {
            throw UsageError("--retries must be non-negative");
        }
        if (!(internal_bias >= 0.0 && internal_bias <= 1.0)) {
            throw UsageError("--internal-bias must lie in [0, 1]");
        }
        GpConfig cfg;
        cfg.max_generations = max_gens;
        cfg.max_depth = max_depth;
        cfg.crossover_retries = retries;
        cfg.internal_node_bias = internal_bias;
        return cfg;
    }
};

std::vector<Algorithm> algorithms(std::string const& name, bool allow_both)
{
    if (allow_both && name == "both") {
        return {Algorithm::Gp, Algorithm::Pipe};
    }
    if (auto a = parse_algorithm(name)) {
        return {*a};
    }
    throw UsageError(std::string("--algo must be gp, pipe") + (allow_both ? " or both" : "") + ", got '" + name + "'");
}

std::string history_text(std::vector<SizingStep> const& history)
{
    std::string out;
    for (auto const& s : history) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(s.pop_size) + (s.succeeded ? ":ok" : ":fail");
    }
    return out;
}

void print_problem(ProblemSpec const& spec)
{
    auto const& ps = spec.primitives();
    std::cout << "problem=" << (spec.family() == ProblemFamily::Order ? "order" : "trap") << '\n'
              << "l=" << ps.pairs() << '\n'
              << "num_junk=" << ps.num_junk() << '\n'
              << "neg_join=" << (ps.neg_join_enabled() ? "true" : "false") << '\n';
    if (spec.family() == ProblemFamily::Trap) {
        std::cout << "k=" << spec.trap_params().k << '\n' << "delta=" << format_double(spec.trap_params().delta) << '\n';
    }
}

struct RunCommand {
    ProblemFlags problem;
    EngineFlags engine;
    std::string algo = "gp";
    int pop = 100;
    std::uint64_t seed = 1;
    bool dump_model = false;

    int execute() const
    {
        auto const spec = problem.spec();
        auto const algo_id = algorithms(algo, false).front();
        auto cfg = engine.config();
        if (pop < 2 || pop % 2 != 0) {
            throw UsageError("--pop must be even and at least 2");
        }
        cfg.pop_size = pop;
        cfg.seed = seed;
        if (dump_model && algo_id != Algorithm::Pipe) {
            throw UsageError("--dump-model requires --algo pipe");
        }

        RunResult result;
        if (algo_id == Algorithm::Pipe) {
            std::optional<std::string> last_dump;
            int last_gen = -1;
            ModelObserver observer;
            if (dump_model) {
                observer = [&](int gen, PipeModel const& model) {
                    last_gen = gen;
                    last_dump = model.dump();
                };
            }
            result = run_pipe(spec, cfg, observer);
            if (last_dump) {
                std::cerr << "# model built in generation " << last_gen << '\n' << *last_dump;
            }
        } else {
            result = run_gp(spec, cfg);
        }

        std::cout << "algorithm=" << to_string(algo_id) << '\n';
        print_problem(spec);
        std::cout << "max_depth=" << resolved_max_depth(cfg, spec) << '\n'
                  << "pop_size=" << cfg.pop_size << '\n'
                  << "seed=" << cfg.seed << '\n'
                  << "success=" << (result.success ? "true" : "false") << '\n'
                  << "evaluations=" << result.evaluations << '\n'
                  << "generations=" << result.generations_used << '\n'
                  << "best_fitness=" << format_double(result.best_fitness) << '\n'
                  << "optimum=" << format_double(spec.optimum_fitness()) << '\n';
        if (result.best_tree) {
            std::cout << "best_tree=" << to_string(*result.best_tree) << '\n';
        }
        return result.success ? exit_ok : exit_failure;
    }
};

struct BisectCommand {
    ProblemFlags problem;
    EngineFlags engine;
    std::string algo = "gp";
    int runs = 30;
    std::uint64_t seed = 1;
    int max_pop = 1 << 20;

    int execute() const
    {
        auto const spec = problem.spec();
        if (runs < 1) {
            throw UsageError("--runs must be at least 1");
        }
        if (max_pop < 2) {
            throw UsageError("--max-pop must be at least 2");
        }
        BatchRequest req;
        req.algo = algorithms(algo, false).front();
        req.cfg = engine.config();
        req.cfg.pop_size = 2;
        req.n_runs = runs;
        req.seed_base = seed;
        SizingOptions opts;
        opts.ceiling = max_pop;

        std::cout << "algorithm=" << to_string(req.algo) << '\n';
        print_problem(spec);
        std::cout << "max_depth=" << resolved_max_depth(req.cfg, spec) << '\n' << "seed_base=" << seed << '\n';
        try {
            auto const sized = bisect_population_size(spec, req, opts);
            std::cout << "sizing=ok\n"
                      << "min_pop_size=" << sized.min_pop_size << '\n'
                      << "bracket_lo=" << sized.bracket_lo << '\n'
                      << "avg_evaluations=" << format_double(sized.avg_evaluations) << '\n'
                      << "runs=" << sized.runs.size() << '\n'
                      << "tested=" << history_text(sized.history) << '\n';
            return exit_ok;
        } catch (SizingFailure const& failure) {
            auto const& last = failure.last_batch();
            std::size_t ok = 0;
            for (auto const& r : last.runs) {
                ok += r.success ? 1 : 0;
            }
            std::cout << "sizing=failed\n"
                      << "ceiling=" << failure.ceiling() << '\n'
                      << "tested=" << history_text(failure.history()) << '\n'
                      << "last_batch_successes=" << ok << '/' << last.runs.size() << '\n';
            std::cerr << "progevo: " << failure.what() << '\n';
            return exit_failure;
        }
    }
};

struct SweepCommand {
    ProblemFlags problem;
    EngineFlags engine;
    std::string plan;
    std::vector<int> sizes;
    std::string algo = "both";
    int runs = 30;
    std::uint64_t seed = 1;
    int max_pop = 1 << 20;
    std::string out = "results";

    int execute() const
    {
        auto const algos = algorithms(algo, true);
        auto const cfg = engine.config();
        if (runs < 1) {
            throw UsageError("--runs must be at least 1");
        }
        if (max_pop < 2) {
            throw UsageError("--max-pop must be at least 2");
        }
        for (int const s : sizes) {
            if (s < 0) {
                throw UsageError("--sizes entries must be non-negative");
            }
        }
        std::optional<std::vector<int>> size_override;
        if (!sizes.empty()) {
            size_override = sizes;
        }

        SweepPlan sweep_plan;
        if (!plan.empty()) {
            bool known = false;
            for (auto const& n : builtin_plan_names()) {
                known = known || n == plan;
            }
            if (!known) {
                throw UsageError("--plan must be one of order, trap, order-neg, order-junk, junk-fixed-l; got '" + plan + "'");
            }
            sweep_plan = builtin_plan(plan, algos, size_override, problem.trap());
        } else {
            if (sizes.empty()) {
                throw UsageError("--sizes is required when no --plan is given");
            }
            auto const fam = problem.family();
            auto const tp = problem.trap();
            for (int const l : sizes) {
                if (l < 1) {
                    throw UsageError("--sizes entries must be at least 1");
                }
                if (fam == ProblemFamily::Trap && l % tp.k != 0) {
                    throw UsageError("--k=" + std::to_string(tp.k) + " must divide every --sizes entry");
                }
            }
            std::optional<int> depth;
            if (cfg.max_depth >= 0) {
                depth = cfg.max_depth;
            }
            sweep_plan = custom_plan(fam, algos, sizes, problem.junk, problem.neg_join, tp, depth);
        }
        if (sweep_plan.axis == SweepAxis::ProblemSize) {
            for (auto const& c : sweep_plan.cases) {
                if (c.l < 1) {
                    throw UsageError("--sizes entries must be at least 1");
                }
                if (c.family == ProblemFamily::Trap && c.l % c.trap.k != 0) {
                    throw UsageError("--k=" + std::to_string(c.trap.k) + " must divide every problem size");
                }
            }
        }

        HarnessOptions opts;
        opts.n_runs = runs;
        opts.max_generations = cfg.max_generations;
        opts.crossover_retries = cfg.crossover_retries;
        opts.internal_node_bias = cfg.internal_node_bias;
        opts.sizing.ceiling = max_pop;
        opts.seed_base = seed;
        opts.on_row = [](SweepRow const& r) {
            std::cerr << "row " << to_string(r.algo) << " l=" << r.l << " junk=" << r.num_junk
                      << " depth=" << r.max_depth << " pop=" << r.pop_size
                      << " avg_evaluations=" << format_double(r.avg_evaluations)
                      << (r.aborted() ? " (sizing failed)" : "") << '\n';
        };

        auto const rows = scalability_sweep(sweep_plan, opts);
        auto const stem = plan.empty() ? std::string("custom") : plan;
        auto const files = emit_report(rows, sweep_plan.axis, out, stem);

        bool aborted = false;
        for (auto const& r : rows) {
            aborted = aborted || r.aborted();
        }
        std::cout << "plan=" << sweep_plan.name << '\n'
                  << "rows=" << rows.size() << '\n'
                  << "csv=" << files.csv.string() << '\n';
        if (!rows.empty()) {
            std::cout << "svg=" << files.svg.string() << '\n';
        }
        std::cout << "aborted_rows=" << (aborted ? "true" : "false") << '\n';
        return aborted ? exit_failure : exit_ok;
    }
};

struct ExpressCommand {
    ProblemFlags problem;
    std::string tree_text;

    int execute() const
    {
        ProgramTree tree = [&] {
            try {
                return parse_tree(tree_text);
            } catch (ParseError const& e) {
                throw UsageError(std::string("TREE: ") + e.what());
            }
        }();
        for (auto const p : tree.nodes()) {
            if (p.kind == PrimitiveKind::NegJoin && !problem.neg_join) {
                throw UsageError("tree uses NEG_JOIN; pass --neg-join");
            }
            if (p.kind == PrimitiveKind::JunkTerminal && p.index > problem.junk) {
                throw UsageError("tree uses " + to_string(p) + "; --junk must be at least " + std::to_string(p.index));
            }
            if ((p.kind == PrimitiveKind::PositiveTerminal || p.kind == PrimitiveKind::NegativeTerminal) &&
                p.index > problem.l) {
                throw UsageError("tree uses " + to_string(p) + "; --l must be at least " + std::to_string(p.index));
            }
        }
        auto const spec = problem.spec();
        auto const leaves = inorder_leaves(tree);
        auto const ev = express(tree, spec.primitives());

        std::string raw, effective, expressed, bits;
        for (auto const& leaf : leaves) {
            raw += (raw.empty() ? "" : " ") + to_string(leaf.symbol);
            if (leaf.symbol.kind == PrimitiveKind::JunkTerminal) {
                continue;
            }
            auto const eff = leaf.neg_ancestor ? leaf.symbol.complement() : leaf.symbol;
            effective += (effective.empty() ? "" : " ") + to_string(eff);
        }
        for (std::size_t i = 0; i < ev.size(); ++i) {
            int const idx = static_cast<int>(i) + 1;
            expressed += (i ? " " : "") + to_string(ev.bits[i] ? Primitive::positive(idx) : Primitive::negative(idx));
            bits += ev.bits[i] ? '1' : '0';
        }
        std::cout << "tree=" << to_string(tree) << '\n'
                  << "depth=" << tree.depth() << '\n'
                  << "leaves=" << raw << '\n'
                  << "effective_leaves=" << effective << '\n'
                  << "expressed=" << expressed << '\n'
                  << "bits=" << bits << '\n'
                  << "fitness=" << format_double(fitness_of(ev, spec)) << '\n'
                  << "optimum=" << format_double(spec.optimum_fitness()) << '\n';
        return exit_ok;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Genetic programming and PIPE on the ORDER and TRAP benchmarks", "progevo"};
    app.require_subcommand(1);

    RunCommand run;
    auto* run_cmd = app.add_subcommand("run", "One seeded run; prints the result as key=value lines");
    run.problem.attach(run_cmd);
    run.engine.attach(run_cmd);
    run_cmd->add_option("--algo", run.algo, "gp or pipe")->capture_default_str();
    run_cmd->add_option("--pop", run.pop, "Population size (even)")->capture_default_str();
    run_cmd->add_option("--seed", run.seed, "Random seed")->capture_default_str();
    run_cmd->add_flag("--dump-model", run.dump_model, "Print the last PIPE model to stderr");

    BisectCommand bisect;
    auto* bisect_cmd = app.add_subcommand("bisect", "Smallest population solving every run of a batch");
    bisect.problem.attach(bisect_cmd);
    bisect.engine.attach(bisect_cmd);
    bisect_cmd->add_option("--algo", bisect.algo, "gp or pipe")->capture_default_str();
    bisect_cmd->add_option("--runs", bisect.runs, "Runs per batch")->capture_default_str();
    bisect_cmd->add_option("--seed", bisect.seed, "Seed base")->capture_default_str();
    bisect_cmd->add_option("--max-pop", bisect.max_pop, "Population ceiling for sizing")->capture_default_str();

    SweepCommand sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Population sizing over a list of problem instances; writes CSV and SVG");
    sweep.problem.attach(sweep_cmd);
    sweep.engine.attach(sweep_cmd);
    sweep_cmd->add_option("--plan", sweep.plan, "order, trap, order-neg, order-junk or junk-fixed-l");
    sweep_cmd->add_option("--sizes", sweep.sizes, "Comma-separated l values (junk counts for junk-fixed-l)")
        ->delimiter(',');
    sweep_cmd->add_option("--algo", sweep.algo, "gp, pipe or both")->capture_default_str();
    sweep_cmd->add_option("--runs", sweep.runs, "Runs per batch")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep.seed, "Seed base")->capture_default_str();
    sweep_cmd->add_option("--max-pop", sweep.max_pop, "Population ceiling for sizing")->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out, "Output directory")->capture_default_str();

    ExpressCommand express_c;
    auto* express_cmd = app.add_subcommand("express", "Show the leaf walk, expression and fitness of one tree");
    express_c.problem.attach(express_cmd);
    express_cmd->add_option("tree", express_c.tree_text, "Tree in prefix form, e.g. \"(JOIN X1 ~X2)\"")->required();

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (run_cmd->parsed()) {
            return run.execute();
        }
        if (bisect_cmd->parsed()) {
            return bisect.execute();
        }
        if (sweep_cmd->parsed()) {
            return sweep.execute();
        }
        return express_c.execute();
    } catch (UsageError const& e) {
        std::cerr << "progevo: " << e.what() << '\n';
        return exit_usage;
    } catch (std::exception const& e) {
        std::cerr << "progevo: " << e.what() << '\n';
        return exit_failure;
    }
}
