#include "progevo/pipe.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "evolve.hpp"

namespace progevo {

PipeModel build_model(std::span<ProgramTree const* const> selected, PrimitiveSet const& ps)
{
    if (selected.empty()) {
        throw std::invalid_argument("cannot build a model from an empty selection");
    }
    PipeModel model(ps);
    auto const alphabet = ps.size();
    auto new_node = [&] {
        model.nodes_.emplace_back();
        model.nodes_.back().counts.assign(alphabet, 0);
        return static_cast<std::int32_t>(model.nodes_.size() - 1);
    };
    new_node();

    std::vector<std::int32_t> slots;
    for (auto const* tree : selected) {
        slots.assign(1, 0);
        for (auto const p : tree->nodes()) {
            if (!ps.contains(p)) {
                throw std::invalid_argument("selected program uses " + to_string(p) + " outside the alphabet");
            }
            auto const at = slots.back();
            slots.pop_back();
            ++model.nodes_[at].counts[ps.index_of(p)];
            ++model.nodes_[at].total;
            if (p.is_function()) {
                if (!model.nodes_[at].has_children()) {
                    auto const left = new_node();
                    auto const right = new_node();
                    model.nodes_[at].children = {left, right};
                }
                slots.push_back(model.nodes_[at].children[1]);
                slots.push_back(model.nodes_[at].children[0]);
            }
        }
    }

    model.cumulative_.resize(model.nodes_.size());
    for (std::size_t n = 0; n < model.nodes_.size(); ++n) {
        auto& node = model.nodes_[n];
        node.probabilities.assign(alphabet, 0.0);
        std::uint32_t running = 0;
        for (std::size_t s = 0; s < alphabet; ++s) {
            if (node.counts[s] == 0) {
                continue;
            }
            node.probabilities[s] = static_cast<double>(node.counts[s]) / static_cast<double>(node.total);
            running += node.counts[s];
            model.cumulative_[n].emplace_back(running, static_cast<std::uint32_t>(s));
        }
    }
    return model;
}

PipeModel build_model(std::span<ProgramTree const> selected, PrimitiveSet const& ps)
{
    std::vector<ProgramTree const*> ptrs;
    ptrs.reserve(selected.size());
    for (auto const& t : selected) {
        ptrs.push_back(&t);
    }
    return build_model(std::span<ProgramTree const* const>(ptrs), ps);
}

int PipeModel::depth() const
{
    int deepest = 0;
    std::vector<std::pair<std::int32_t, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [n, d] = stack.back();
        stack.pop_back();
        deepest = std::max(deepest, d);
        if (nodes_[n].has_children()) {
            stack.emplace_back(nodes_[n].children[0], d + 1);
            stack.emplace_back(nodes_[n].children[1], d + 1);
        }
    }
    return deepest;
}

std::int32_t PipeModel::find(std::span<int const> path) const
{
    std::int32_t n = 0;
    for (int const c : path) {
        if (c < 0 || c > 1 || !nodes_[n].has_children()) {
            return -1;
        }
        n = nodes_[n].children[c];
    }
    return n;
}

double PipeModel::probability_of(ProgramTree const& tree) const
{
    double product = 1.0;
    std::vector<std::int32_t> slots{0};
    for (auto const p : tree.nodes()) {
        auto const at = slots.back();
        slots.pop_back();
        if (at < 0 || !ps_.contains(p)) {
            return 0.0;
        }
        auto const& node = nodes_[at];
        product *= node.probabilities[ps_.index_of(p)];
        if (p.is_function()) {
            slots.push_back(node.children[1]);
            slots.push_back(node.children[0]);
        }
    }
    return product;
}

std::string PipeModel::dump() const
{
    std::string out;
    std::vector<std::pair<std::int32_t, std::string>> stack{{0, "root"}};
    char buf[32];
    while (!stack.empty()) {
        auto [n, path] = std::move(stack.back());
        stack.pop_back();
        auto const& node = nodes_[n];
        out += path;
        out += ": {";
        bool first = true;
        for (std::size_t s = 0; s < node.probabilities.size(); ++s) {
            if (node.counts[s] == 0) {
                continue;
            }
            if (!first) {
                out += ',';
            }
            first = false;
            std::snprintf(buf, sizeof buf, "%.6f", node.probabilities[s]);
            out += to_string(ps_.at(s));
            out += '=';
            out += buf;
        }
        out += "}\n";
        if (node.has_children()) {
            stack.emplace_back(node.children[1], path + ".2");
            stack.emplace_back(node.children[0], path + ".1");
        }
    }
    return out;
}

std::size_t PipeModel::symbol_for(ModelNode const& node, std::uint32_t r) const
{
    auto const& cum = cumulative_[static_cast<std::size_t>(&node - nodes_.data())];
    auto it = std::upper_bound(cum.begin(), cum.end(), r, [](std::uint32_t v, auto const& e) { return v < e.first; });
    if (it == cum.end()) {
        throw std::logic_error("model position has an empty probability table");
    }
    return it->second;
}

ProgramTree sample_model(PipeModel const& model, Rng& rng)
{
    auto const nodes = model.nodes();
    std::vector<Primitive> prefix;
    std::vector<std::int32_t> slots{0};
    while (!slots.empty()) {
        auto const at = slots.back();
        slots.pop_back();
        auto const& node = nodes[at];
        if (node.total == 0) {
            throw std::logic_error("sampling reached a model position with no observations");
        }
        auto const r = std::uniform_int_distribution<std::uint32_t>(0, node.total - 1)(rng);
        auto const p = model.primitives().at(model.symbol_for(node, r));
        prefix.push_back(p);
        if (p.is_function()) {
            if (!node.has_children()) {
                throw std::logic_error("sampled a function at a model leaf");
            }
            slots.push_back(node.children[1]);
            slots.push_back(node.children[0]);
        }
    }
    return ProgramTree(std::move(prefix));
}

RunResult run_pipe(ProblemSpec const& spec, GpConfig const& cfg, ModelObserver const& observer)
{
    return detail::evolve(spec, cfg, [&](std::vector<ProgramTree const*> const& selected, int generation, Rng& rng) {
        auto const model = build_model(std::span<ProgramTree const* const>(selected), spec.primitives());
        if (observer) {
            observer(generation, model);
        }
        std::vector<ProgramTree> offspring;
        offspring.reserve(selected.size());
        for (std::size_t i = 0; i < selected.size(); ++i) {
            offspring.push_back(sample_model(model, rng));
        }
        return offspring;
    });
}

} // namespace progevo
