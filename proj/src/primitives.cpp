#include "progevo/primitives.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace progevo {

std::string to_string(Primitive p)
{
    switch (p.kind) {
    case PrimitiveKind::Join: return "JOIN";
    case PrimitiveKind::NegJoin: return "NEG_JOIN";
    case PrimitiveKind::PositiveTerminal: return "X" + std::to_string(p.index);
    case PrimitiveKind::NegativeTerminal: return "~X" + std::to_string(p.index);
    case PrimitiveKind::JunkTerminal: return "J" + std::to_string(p.index);
    }
    return "?";
}

namespace {

std::optional<std::uint16_t> parse_index(std::string_view digits)
{
    if (digits.empty() || digits.front() == '0') {
        return std::nullopt;
    }
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value > std::numeric_limits<std::uint16_t>::max()) {
        return std::nullopt;
    }
    return static_cast<std::uint16_t>(value);
}

} // namespace

std::optional<Primitive> parse_primitive(std::string_view token)
{
    if (token == "JOIN") {
        return Primitive::join();
    }
    if (token == "NEG_JOIN") {
        return Primitive::neg_join();
    }
    if (token.starts_with("~X")) {
        if (auto i = parse_index(token.substr(2))) {
            return Primitive::negative(*i);
        }
        return std::nullopt;
    }
    if (token.starts_with("X")) {
        if (auto i = parse_index(token.substr(1))) {
            return Primitive::positive(*i);
        }
        return std::nullopt;
    }
    if (token.starts_with("J")) {
        if (auto j = parse_index(token.substr(1))) {
            return Primitive::junk(*j);
        }
    }
    return std::nullopt;
}

PrimitiveSet::PrimitiveSet(int pairs, int num_junk, bool neg_join)
    : pairs_(pairs), num_junk_(num_junk), neg_join_(neg_join)
{
    constexpr int max_index = std::numeric_limits<std::uint16_t>::max();
    if (pairs < 1 || pairs > max_index) {
        throw std::invalid_argument("number of terminal pairs must be in [1, 65535], got " + std::to_string(pairs));
    }
    if (num_junk < 0 || num_junk > max_index) {
        throw std::invalid_argument("number of junk terminals must be in [0, 65535], got " + std::to_string(num_junk));
    }
}

Primitive PrimitiveSet::function(std::size_t i) const
{
    if (i >= num_functions()) {
        throw std::out_of_range("function index out of range");
    }
    return i == 0 ? Primitive::join() : Primitive::neg_join();
}

Primitive PrimitiveSet::terminal(std::size_t i) const
{
    auto const l = static_cast<std::size_t>(pairs_);
    if (i < l) {
        return Primitive::positive(static_cast<int>(i + 1));
    }
    if (i < 2 * l) {
        return Primitive::negative(static_cast<int>(i - l + 1));
    }
    if (i < num_terminals()) {
        return Primitive::junk(static_cast<int>(i - 2 * l + 1));
    }
    throw std::out_of_range("terminal index out of range");
}

Primitive PrimitiveSet::at(std::size_t dense) const
{
    return dense < num_functions() ? function(dense) : terminal(dense - num_functions());
}

std::size_t PrimitiveSet::index_of(Primitive p) const
{
    if (!contains(p)) {
        throw std::out_of_range("primitive " + to_string(p) + " is not in the alphabet");
    }
    auto const nf = num_functions();
    auto const l = static_cast<std::size_t>(pairs_);
    switch (p.kind) {
    case PrimitiveKind::Join: return 0;
    case PrimitiveKind::NegJoin: return 1;
    case PrimitiveKind::PositiveTerminal: return nf + p.index - 1;
    case PrimitiveKind::NegativeTerminal: return nf + l + p.index - 1;
    case PrimitiveKind::JunkTerminal: return nf + 2 * l + p.index - 1;
    }
    return 0;
}

bool PrimitiveSet::contains(Primitive p) const
{
    switch (p.kind) {
    case PrimitiveKind::Join: return p.index == 0;
    case PrimitiveKind::NegJoin: return neg_join_ && p.index == 0;
    case PrimitiveKind::PositiveTerminal:
    case PrimitiveKind::NegativeTerminal: return p.index >= 1 && p.index <= pairs_;
    case PrimitiveKind::JunkTerminal: return p.index >= 1 && p.index <= num_junk_;
    }
    return false;
}

} // namespace progevo
