#include "progevo/tree.hpp"

#include <algorithm>
#include <cctype>

namespace progevo {

namespace {

// Returns the edge depth of a prefix sequence, or -1 if it is not exactly one
// well-formed tree.
int checked_depth(std::span<Primitive const> prefix)
{
    if (prefix.empty()) {
        return -1;
    }
    // Pending child slots, each tagged with the depth it will be filled at.
    std::vector<int> slots{0};
    int depth = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (slots.empty()) {
            return -1;
        }
        int const d = slots.back();
        slots.pop_back();
        depth = std::max(depth, d);
        for (int c = 0; c < prefix[i].arity(); ++c) {
            slots.push_back(d + 1);
        }
    }
    return slots.empty() ? depth : -1;
}

} // namespace

ProgramTree::ProgramTree(std::vector<Primitive> prefix)
    : nodes_(std::move(prefix))
{
    depth_ = checked_depth(nodes_);
    if (depth_ < 0) {
        throw std::invalid_argument("prefix sequence is not an arity-consistent tree");
    }
}

ProgramTree::ProgramTree(Trusted, std::vector<Primitive> prefix, int depth)
    : nodes_(std::move(prefix)), depth_(depth)
{
}

ProgramTree ProgramTree::leaf(Primitive terminal)
{
    if (!terminal.is_terminal()) {
        throw std::invalid_argument("leaf requires a terminal, got " + to_string(terminal));
    }
    return ProgramTree(Trusted{}, {terminal}, 0);
}

ProgramTree ProgramTree::node(Primitive function, ProgramTree const& left, ProgramTree const& right)
{
    if (!function.is_function()) {
        throw std::invalid_argument("internal node requires a function, got " + to_string(function));
    }
    std::vector<Primitive> prefix;
    prefix.reserve(1 + left.size() + right.size());
    prefix.push_back(function);
    prefix.insert(prefix.end(), left.nodes_.begin(), left.nodes_.end());
    prefix.insert(prefix.end(), right.nodes_.begin(), right.nodes_.end());
    return ProgramTree(Trusted{}, std::move(prefix), 1 + std::max(left.depth_, right.depth_));
}

std::size_t ProgramTree::subtree_end(std::size_t pos) const
{
    if (pos >= nodes_.size()) {
        throw std::out_of_range("subtree position out of range");
    }
    int open = 1;
    std::size_t i = pos;
    while (open > 0) {
        open += nodes_[i].arity() - 1;
        ++i;
    }
    return i;
}

ProgramTree ProgramTree::subtree(std::size_t pos) const
{
    auto const end = subtree_end(pos);
    std::vector<Primitive> prefix(nodes_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  nodes_.begin() + static_cast<std::ptrdiff_t>(end));
    int const d = checked_depth(prefix);
    return ProgramTree(Trusted{}, std::move(prefix), d);
}

ProgramTree splice(ProgramTree const& target, std::size_t begin, std::size_t end,
                   ProgramTree const& donor, std::size_t dbegin, std::size_t dend)
{
    std::vector<Primitive> prefix;
    prefix.reserve(target.size() - (end - begin) + (dend - dbegin));
    auto const& t = target.nodes_;
    auto const& d = donor.nodes_;
    prefix.insert(prefix.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(begin));
    prefix.insert(prefix.end(), d.begin() + static_cast<std::ptrdiff_t>(dbegin), d.begin() + static_cast<std::ptrdiff_t>(dend));
    prefix.insert(prefix.end(), t.begin() + static_cast<std::ptrdiff_t>(end), t.end());
    int const depth = checked_depth(prefix);
    if (depth < 0) {
        throw std::invalid_argument("splice ranges are not complete subtrees");
    }
    return ProgramTree(ProgramTree::Trusted{}, std::move(prefix), depth);
}

std::vector<int> node_depths(ProgramTree const& t)
{
    std::vector<int> depths;
    depths.reserve(t.size());
    std::vector<int> slots{0};
    for (auto const p : t.nodes()) {
        int const d = slots.back();
        slots.pop_back();
        depths.push_back(d);
        for (int c = 0; c < p.arity(); ++c) {
            slots.push_back(d + 1);
        }
    }
    return depths;
}

std::vector<Leaf> inorder_leaves(ProgramTree const& t)
{
    std::vector<Leaf> leaves;
    std::vector<char> slots{0};
    for (auto const p : t.nodes()) {
        bool const negated = slots.back() != 0;
        slots.pop_back();
        if (p.is_function()) {
            char const child = (negated || p.kind == PrimitiveKind::NegJoin) ? 1 : 0;
            slots.push_back(child);
            slots.push_back(child);
        } else {
            leaves.push_back({p, negated});
        }
    }
    return leaves;
}

bool belongs_to(ProgramTree const& t, PrimitiveSet const& ps)
{
    return std::all_of(t.nodes().begin(), t.nodes().end(), [&](Primitive p) { return ps.contains(p); });
}

namespace {

void print(std::span<Primitive const> nodes, std::size_t& pos, std::string& out)
{
    auto const p = nodes[pos++];
    if (p.is_terminal()) {
        out += to_string(p);
        return;
    }
    out += '(';
    out += to_string(p);
    for (int c = 0; c < p.arity(); ++c) {
        out += ' ';
        print(nodes, pos, out);
    }
    out += ')';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ProgramTree parse()
    {
        std::vector<Primitive> prefix;
        expression(prefix);
        skip_space();
        if (pos_ != text_.size()) {
            fail("trailing input");
        }
        return ProgramTree(std::move(prefix));
    }

private:
    void expression(std::vector<Primitive>& prefix)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            auto const head = symbol();
            if (!head.is_function()) {
                fail("expected a function after '(', got " + to_string(head));
            }
            prefix.push_back(head);
            for (int c = 0; c < head.arity(); ++c) {
                expression(prefix);
            }
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return;
        }
        auto const leaf = symbol();
        if (!leaf.is_terminal()) {
            fail(to_string(leaf) + " must be applied inside parentheses");
        }
        prefix.push_back(leaf);
    }

    Primitive symbol()
    {
        skip_space();
        auto const start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
               text_[pos_] != ')') {
            ++pos_;
        }
        auto const token = text_.substr(start, pos_ - start);
        if (token.empty()) {
            fail("expected a symbol");
        }
        auto p = parse_primitive(token);
        if (!p) {
            fail("unknown symbol '" + std::string(token) + "'");
        }
        return *p;
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(std::string const& what) const
    {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string to_string(ProgramTree const& t)
{
    std::string out;
    std::size_t pos = 0;
    print(t.nodes(), pos, out);
    return out;
}

ProgramTree parse_tree(std::string_view text)
{
    return Parser(text).parse();
}

int minimum_optimum_depth(int pairs)
{
    if (pairs < 1) {
        throw std::invalid_argument("minimum_optimum_depth needs at least one terminal pair");
    }
    int depth = 0;
    long long leaves = 1;
    while (leaves < pairs) {
        leaves *= 2;
        ++depth;
    }
    return depth;
}

} // namespace progevo
