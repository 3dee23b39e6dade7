#ifndef PROGEVO_TESTS_ORACLES_HPP
#define PROGEVO_TESTS_ORACLES_HPP

// Test-only reference implementations. Nothing here calls the library's
// traversal or expression code; trees are plain recursive structures built
// from symbol spellings.

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

struct Node;
using Tree = std::shared_ptr<Node const>;

struct Node {
    std::string symbol;  // JOIN, NEG_JOIN, Xi, ~Xi, Jk
    Tree left;
    Tree right;
};

inline Tree leaf(std::string s)
{
    return std::make_shared<Node const>(Node{std::move(s), nullptr, nullptr});
}

inline Tree node(std::string f, Tree a, Tree b)
{
    return std::make_shared<Node const>(Node{std::move(f), std::move(a), std::move(b)});
}

inline std::string text(Tree const& t)
{
    if (!t->left) {
        return t->symbol;
    }
    return "(" + t->symbol + " " + text(t->left) + " " + text(t->right) + ")";
}

// Every tree of edge depth <= depth over the given functions and terminals.
inline std::vector<Tree> enumerate(std::vector<std::string> const& functions, std::vector<std::string> const& terminals,
                                   int depth)
{
    std::vector<Tree> out;
    for (auto const& t : terminals) {
        out.push_back(leaf(t));
    }
    if (depth == 0) {
        return out;
    }
    auto const smaller = enumerate(functions, terminals, depth - 1);
    for (auto const& f : functions) {
        for (auto const& a : smaller) {
            for (auto const& b : smaller) {
                out.push_back(node(f, a, b));
            }
        }
    }
    return out;
}

// Polarity of the first occurrence of pair `i` (true = Xi) in the subtree,
// searching left before right. `negated` tracks whether a NEG_JOIN lies above.
inline std::optional<bool> first_occurrence(Tree const& t, int i, bool negated)
{
    if (!t->left) {
        auto const& s = t->symbol;
        if (s == "X" + std::to_string(i)) {
            return !negated;
        }
        if (s == "~X" + std::to_string(i)) {
            return negated;
        }
        return std::nullopt;
    }
    bool const below = negated || t->symbol == "NEG_JOIN";
    if (auto r = first_occurrence(t->left, i, below)) {
        return r;
    }
    return first_occurrence(t->right, i, below);
}

inline std::vector<int> expression_bits(Tree const& t, int l)
{
    std::vector<int> bits;
    for (int i = 1; i <= l; ++i) {
        bits.push_back(first_occurrence(t, i, false).value_or(false) ? 1 : 0);
    }
    return bits;
}

inline double order_value(std::vector<int> const& bits)
{
    double s = 0;
    for (int b : bits) {
        s += b;
    }
    return s;
}

// Trap by lookup: table[u] is the value of a group holding u ones.
inline double trap_value(std::vector<int> const& bits, int k, std::vector<double> const& table)
{
    double s = 0;
    for (std::size_t g = 0; g < bits.size(); g += static_cast<std::size_t>(k)) {
        int u = 0;
        for (int j = 0; j < k; ++j) {
            u += bits[g + static_cast<std::size_t>(j)];
        }
        s += table[static_cast<std::size_t>(u)];
    }
    return s;
}

// Exact distribution of the edge depth of a Grow tree: each position above the
// limit holds a binary function with probability q, otherwise a terminal.
// Returns P(depth == d) for d = 0..limit.
inline std::vector<double> grow_depth_distribution(double q, int limit)
{
    // cdf[j][d]: P(subtree rooted at level j has height <= d).
    std::vector<std::vector<double>> cdf(static_cast<std::size_t>(limit) + 1,
                                         std::vector<double>(static_cast<std::size_t>(limit) + 1, 1.0));
    for (int j = limit - 1; j >= 0; --j) {
        for (int d = 0; d <= limit; ++d) {
            double const child = d == 0 ? 0.0 : cdf[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(d) - 1];
            cdf[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] = (1.0 - q) + q * child * child;
        }
    }
    std::vector<double> pmf;
    double prev = 0.0;
    for (int d = 0; d <= limit; ++d) {
        double const c = cdf[0][static_cast<std::size_t>(d)];
        pmf.push_back(c - prev);
        prev = c;
    }
    return pmf;
}

// Pearson chi-square statistic of observed counts against expected probabilities.
inline double chi_square(std::vector<long> const& observed, std::vector<double> const& probs)
{
    long n = 0;
    for (long o : observed) {
        n += o;
    }
    double stat = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double const e = probs[i] * static_cast<double>(n);
        if (e > 0) {
            stat += (static_cast<double>(observed[i]) - e) * (static_cast<double>(observed[i]) - e) / e;
        }
    }
    return stat;
}

} // namespace oracle

#endif
