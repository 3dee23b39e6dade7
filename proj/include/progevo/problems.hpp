#ifndef PROGEVO_PROBLEMS_HPP
#define PROGEVO_PROBLEMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "progevo/primitives.hpp"
#include "progevo/tree.hpp"

namespace progevo {

// bits[i] is true iff X(i+1) is expressed; false means ~X(i+1) is.
struct ExpressionVector {
    std::vector<bool> bits;

    [[nodiscard]] std::size_t size() const { return bits.size(); }
    [[nodiscard]] int count_expressed() const;

    friend bool operator==(ExpressionVector const&, ExpressionVector const&) = default;
};

// Expression of a tree: walk the leaves left to right, drop JUNK, flip the
// polarity of any leaf below a NEG_JOIN (once, however many there are), and
// let the first occurrence of either Xi or ~Xi decide pair i. Pairs that never
// occur express ~Xi.
ExpressionVector express(ProgramTree const& tree, PrimitiveSet const& ps);

double order_fitness(ExpressionVector const& ev);

struct TrapParams {
    int k = 3;
    double delta = 1.0;
};

// 1 at u == k, (1 - delta) * (1 - u / (k - 1)) below it.
double trap_subfunction(int ones, TrapParams const& tp);

// Sum of trap_subfunction over consecutive k-bit groups.
double trap_fitness(ExpressionVector const& ev, TrapParams const& tp);

enum class ProblemFamily { Order, Trap };

class ProblemSpec {
public:
    static ProblemSpec order(PrimitiveSet ps);
    // Throws std::invalid_argument unless k >= 2, delta in [0, 1] and k divides l.
    static ProblemSpec trap(PrimitiveSet ps, TrapParams tp);

    [[nodiscard]] ProblemFamily family() const { return family_; }
    [[nodiscard]] PrimitiveSet const& primitives() const { return ps_; }
    [[nodiscard]] TrapParams const& trap_params() const { return trap_; }
    [[nodiscard]] double optimum_fitness() const { return optimum_; }
    [[nodiscard]] bool is_optimal(double fitness) const;
    [[nodiscard]] std::string name() const;

private:
    ProblemSpec(ProblemFamily family, PrimitiveSet ps, TrapParams tp, double optimum)
        : family_(family), ps_(ps), trap_(tp), optimum_(optimum)
    {
    }

    ProblemFamily family_;
    PrimitiveSet ps_;
    TrapParams trap_;
    double optimum_;
};

double fitness_of(ExpressionVector const& ev, ProblemSpec const& spec);

// Pure fitness of a tree; does not count.
double evaluate(ProgramTree const& tree, ProblemSpec const& spec);

// Fitness evaluation for one run. Each call counts as exactly one function
// evaluation; scratch buffers are reused across calls, so an Evaluator must
// not be shared between threads.
class Evaluator {
public:
    explicit Evaluator(ProblemSpec spec);

    double operator()(ProgramTree const& tree);

    [[nodiscard]] std::uint64_t evaluations() const { return evaluations_; }
    [[nodiscard]] ProblemSpec const& spec() const { return spec_; }

private:
    ProblemSpec spec_;
    std::uint64_t evaluations_ = 0;
    std::vector<std::int8_t> decided_;
    std::vector<char> slots_;
};

} // namespace progevo

#endif
