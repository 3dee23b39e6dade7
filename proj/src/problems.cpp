#include "progevo/problems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace progevo {

namespace {

// Single prefix pass shared by express() and Evaluator. On return decided[i]
// is 1 when X(i+1) is expressed and 0 otherwise.
void express_into(std::span<Primitive const> nodes, std::vector<std::int8_t>& decided, std::vector<char>& slots)
{
    std::fill(decided.begin(), decided.end(), std::int8_t{-1});
    slots.clear();
    slots.push_back(0);
    for (auto const p : nodes) {
        bool const negated = slots.back() != 0;
        slots.pop_back();
        switch (p.kind) {
        case PrimitiveKind::Join:
        case PrimitiveKind::NegJoin: {
            char const child = (negated || p.kind == PrimitiveKind::NegJoin) ? 1 : 0;
            slots.push_back(child);
            slots.push_back(child);
            break;
        }
        case PrimitiveKind::PositiveTerminal:
        case PrimitiveKind::NegativeTerminal: {
            auto& slot = decided[p.index - 1u];
            if (slot < 0) {
                bool const positive = (p.kind == PrimitiveKind::PositiveTerminal) != negated;
                slot = positive ? 1 : 0;
            }
            break;
        }
        case PrimitiveKind::JunkTerminal:
            break;
        }
    }
    for (auto& d : decided) {
        if (d < 0) {
            d = 0;
        }
    }
}

double trap_sum(std::vector<std::int8_t> const& decided, TrapParams const& tp)
{
    double total = 0.0;
    auto const k = static_cast<std::size_t>(tp.k);
    for (std::size_t g = 0; g + k <= decided.size(); g += k) {
        int ones = 0;
        for (std::size_t i = g; i < g + k; ++i) {
            ones += decided[i];
        }
        total += trap_subfunction(ones, tp);
    }
    return total;
}

double fitness_from(std::vector<std::int8_t> const& decided, ProblemSpec const& spec)
{
    if (spec.family() == ProblemFamily::Order) {
        return static_cast<double>(std::count(decided.begin(), decided.end(), std::int8_t{1}));
    }
    return trap_sum(decided, spec.trap_params());
}

} // namespace

int ExpressionVector::count_expressed() const
{
    return static_cast<int>(std::count(bits.begin(), bits.end(), true));
}

ExpressionVector express(ProgramTree const& tree, PrimitiveSet const& ps)
{
    if (!belongs_to(tree, ps)) {
        throw std::invalid_argument("tree uses symbols outside the alphabet: " + to_string(tree));
    }
    std::vector<std::int8_t> decided(static_cast<std::size_t>(ps.pairs()));
    std::vector<char> slots;
    express_into(tree.nodes(), decided, slots);
    ExpressionVector ev;
    ev.bits.assign(decided.begin(), decided.end());
    return ev;
}

double order_fitness(ExpressionVector const& ev)
{
    return static_cast<double>(ev.count_expressed());
}

double trap_subfunction(int ones, TrapParams const& tp)
{
    if (tp.k < 2) {
        throw std::invalid_argument("trap group size must be at least 2");
    }
    if (ones < 0 || ones > tp.k) {
        throw std::out_of_range("trap input " + std::to_string(ones) + " outside [0, " + std::to_string(tp.k) + "]");
    }
    if (ones == tp.k) {
        return 1.0;
    }
    return (1.0 - tp.delta) * (1.0 - static_cast<double>(ones) / static_cast<double>(tp.k - 1));
}

double trap_fitness(ExpressionVector const& ev, TrapParams const& tp)
{
    if (tp.k < 2 || ev.size() % static_cast<std::size_t>(tp.k) != 0) {
        throw std::invalid_argument("trap group size must divide the number of pairs");
    }
    std::vector<std::int8_t> decided(ev.bits.begin(), ev.bits.end());
    return trap_sum(decided, tp);
}

ProblemSpec ProblemSpec::order(PrimitiveSet ps)
{
    return ProblemSpec(ProblemFamily::Order, ps, TrapParams{}, static_cast<double>(ps.pairs()));
}

ProblemSpec ProblemSpec::trap(PrimitiveSet ps, TrapParams tp)
{
    if (tp.k < 2) {
        throw std::invalid_argument("trap group size k must be at least 2");
    }
    if (!(tp.delta >= 0.0 && tp.delta <= 1.0)) {
        throw std::invalid_argument("trap delta must lie in [0, 1]");
    }
    if (ps.pairs() % tp.k != 0) {
        throw std::invalid_argument("trap group size k=" + std::to_string(tp.k) + " does not divide l=" +
                                    std::to_string(ps.pairs()));
    }
    return ProblemSpec(ProblemFamily::Trap, ps, tp, static_cast<double>(ps.pairs() / tp.k));
}

bool ProblemSpec::is_optimal(double fitness) const
{
    return fitness >= optimum_ - 1e-9;
}

std::string ProblemSpec::name() const
{
    std::ostringstream os;
    os << (family_ == ProblemFamily::Order ? "order" : "trap") << " l=" << ps_.pairs();
    if (family_ == ProblemFamily::Trap) {
        os << " k=" << trap_.k << " delta=" << trap_.delta;
    }
    if (ps_.neg_join_enabled()) {
        os << " neg_join";
    }
    if (ps_.num_junk() > 0) {
        os << " junk=" << ps_.num_junk();
    }
    return os.str();
}

double fitness_of(ExpressionVector const& ev, ProblemSpec const& spec)
{
    return spec.family() == ProblemFamily::Order ? order_fitness(ev) : trap_fitness(ev, spec.trap_params());
}

double evaluate(ProgramTree const& tree, ProblemSpec const& spec)
{
    return fitness_of(express(tree, spec.primitives()), spec);
}

Evaluator::Evaluator(ProblemSpec spec)
    : spec_(spec), decided_(static_cast<std::size_t>(spec.primitives().pairs()))
{
}

double Evaluator::operator()(ProgramTree const& tree)
{
    ++evaluations_;
    express_into(tree.nodes(), decided_, slots_);
    return fitness_from(decided_, spec_);
}

} // namespace progevo
