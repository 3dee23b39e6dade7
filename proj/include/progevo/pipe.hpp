#ifndef PROGEVO_PIPE_HPP
#define PROGEVO_PIPE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "progevo/gp.hpp"
#include "progevo/primitives.hpp"
#include "progevo/rng.hpp"
#include "progevo/tree.hpp"

namespace progevo {

// One position of the prototype tree. Tables are indexed by the dense
// alphabet order of the PrimitiveSet.
struct ModelNode {
    std::vector<std::uint32_t> counts;
    std::vector<double> probabilities;
    std::uint32_t total = 0;
    // Indices into PipeModel::nodes(); -1 when the position has no children.
    std::array<std::int32_t, 2> children{-1, -1};

    [[nodiscard]] bool has_children() const { return children[0] >= 0; }
};

// Prototype tree of independent per-position symbol distributions: the
// smallest tree containing the shape of every program it was built from.
// Node 0 is the root.
class PipeModel {
public:
    [[nodiscard]] PrimitiveSet const& primitives() const { return ps_; }
    [[nodiscard]] std::span<ModelNode const> nodes() const { return nodes_; }
    [[nodiscard]] ModelNode const& root() const { return nodes_.front(); }
    [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }
    [[nodiscard]] int depth() const;

    // Node reached by following 0-based child indices from the root, or -1.
    [[nodiscard]] std::int32_t find(std::span<int const> path) const;

    // Product of the per-position probabilities of the tree's symbols; zero
    // if the tree leaves the model.
    [[nodiscard]] double probability_of(ProgramTree const& tree) const;

    // One line per position in preorder: `path: {SYMBOL=prob,...}` with the
    // root spelled `root`, children appended as `.1` / `.2`, and probabilities
    // printed to six decimals.
    [[nodiscard]] std::string dump() const;

    // Draws a symbol index from a node's table. `r` must be uniform in [0, total).
    [[nodiscard]] std::size_t symbol_for(ModelNode const& node, std::uint32_t r) const;

private:
    explicit PipeModel(PrimitiveSet ps) : ps_(ps) {}

    friend PipeModel build_model(std::span<ProgramTree const* const> selected, PrimitiveSet const& ps);

    PrimitiveSet ps_;
    std::vector<ModelNode> nodes_;
    // Per node: cumulative counts over the symbols with a nonzero count.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cumulative_;
};

// Relative symbol frequencies per position, counted over the programs that
// have a node at that position. Throws std::invalid_argument on an empty
// selection or on a tree with symbols outside `ps`.
PipeModel build_model(std::span<ProgramTree const* const> selected, PrimitiveSet const& ps);
PipeModel build_model(std::span<ProgramTree const> selected, PrimitiveSet const& ps);

ProgramTree sample_model(PipeModel const& model, Rng& rng);

using ModelObserver = std::function<void(int generation, PipeModel const&)>;

// Same loop as run_gp; variation is build_model over the tournament winners
// followed by pop_size samples. `observer`, if set, sees every model built.
RunResult run_pipe(ProblemSpec const& spec, GpConfig const& cfg, ModelObserver const& observer = {});

} // namespace progevo

#endif
