#ifndef PROGEVO_TREE_HPP
#define PROGEVO_TREE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "progevo/primitives.hpp"

namespace progevo {

// An immutable program tree stored in prefix (preorder) order. Since every
// function is binary the prefix sequence alone determines the shape, and the
// terminals appear in the same left-to-right order an inorder walk visits them.
class ProgramTree {
public:
    // Throws std::invalid_argument if the sequence is not exactly one
    // arity-consistent tree.
    explicit ProgramTree(std::vector<Primitive> prefix);

    static ProgramTree leaf(Primitive terminal);
    static ProgramTree node(Primitive function, ProgramTree const& left, ProgramTree const& right);

    [[nodiscard]] std::span<Primitive const> nodes() const { return nodes_; }
    [[nodiscard]] Primitive root() const { return nodes_.front(); }
    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    [[nodiscard]] int depth() const { return depth_; }

    // One past the last prefix position of the subtree rooted at `pos`.
    [[nodiscard]] std::size_t subtree_end(std::size_t pos) const;
    [[nodiscard]] ProgramTree subtree(std::size_t pos) const;

    friend bool operator==(ProgramTree const& a, ProgramTree const& b) { return a.nodes_ == b.nodes_; }

private:
    struct Trusted {};
    ProgramTree(Trusted, std::vector<Primitive> prefix, int depth);

    friend ProgramTree splice(ProgramTree const&, std::size_t, std::size_t, ProgramTree const&, std::size_t, std::size_t);

    std::vector<Primitive> nodes_;
    int depth_ = 0;
};

// Replaces target[begin, end) with donor[dbegin, dend). Both ranges must be
// complete subtrees.
ProgramTree splice(ProgramTree const& target, std::size_t begin, std::size_t end,
                   ProgramTree const& donor, std::size_t dbegin, std::size_t dend);

[[nodiscard]] inline int tree_depth(ProgramTree const& t) { return t.depth(); }
[[nodiscard]] inline std::size_t tree_size(ProgramTree const& t) { return t.size(); }

// Edge depth of every node, indexed by prefix position.
std::vector<int> node_depths(ProgramTree const& t);

struct Leaf {
    Primitive symbol;
    bool neg_ancestor = false;

    friend bool operator==(Leaf const&, Leaf const&) = default;
};

// Terminals in left-to-right order; neg_ancestor is set when at least one
// NEG_JOIN lies on the path to the root.
std::vector<Leaf> inorder_leaves(ProgramTree const& t);

// Checks that every symbol belongs to the alphabet.
bool belongs_to(ProgramTree const& t, PrimitiveSet const& ps);

// Prefix text form, e.g. `(JOIN (NEG_JOIN X1 ~X2) J3)`.
std::string to_string(ProgramTree const& t);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ProgramTree parse_tree(std::string_view text);

// Smallest edge depth of a binary JOIN tree with at least `pairs` leaves.
int minimum_optimum_depth(int pairs);

struct DepthBudget {
    int max_depth = 0;

    [[nodiscard]] int levels() const { return max_depth + 1; }
    // One more than the depth of the smallest tree holding the optimum.
    static DepthBudget for_pairs(int pairs) { return {minimum_optimum_depth(pairs) + 1}; }
};

} // namespace progevo

#endif
