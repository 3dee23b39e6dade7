#ifndef PROGEVO_PRIMITIVES_HPP
#define PROGEVO_PRIMITIVES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace progevo {

enum class PrimitiveKind : std::uint8_t {
    Join,
    NegJoin,
    PositiveTerminal,
    NegativeTerminal,
    JunkTerminal,
};

// A symbol of the ORDER/TRAP alphabet. Terminal indices are 1-based (X1..Xl,
// J1..Jn); functions carry index 0.
struct Primitive {
    PrimitiveKind kind = PrimitiveKind::Join;
    std::uint16_t index = 0;

    static constexpr Primitive join() { return {PrimitiveKind::Join, 0}; }
    static constexpr Primitive neg_join() { return {PrimitiveKind::NegJoin, 0}; }
    static constexpr Primitive positive(int i) { return {PrimitiveKind::PositiveTerminal, static_cast<std::uint16_t>(i)}; }
    static constexpr Primitive negative(int i) { return {PrimitiveKind::NegativeTerminal, static_cast<std::uint16_t>(i)}; }
    static constexpr Primitive junk(int j) { return {PrimitiveKind::JunkTerminal, static_cast<std::uint16_t>(j)}; }

    [[nodiscard]] constexpr bool is_function() const
    {
        return kind == PrimitiveKind::Join || kind == PrimitiveKind::NegJoin;
    }
    [[nodiscard]] constexpr bool is_terminal() const { return !is_function(); }
    [[nodiscard]] constexpr int arity() const { return is_function() ? 2 : 0; }

    // The complementary terminal (Xi <-> ~Xi). Functions and junk map to themselves.
    [[nodiscard]] constexpr Primitive complement() const
    {
        switch (kind) {
        case PrimitiveKind::PositiveTerminal: return negative(index);
        case PrimitiveKind::NegativeTerminal: return positive(index);
        default: return *this;
        }
    }

    friend constexpr auto operator<=>(Primitive const&, Primitive const&) = default;
};

// Canonical spelling: JOIN, NEG_JOIN, Xi, ~Xi, Jk.
std::string to_string(Primitive p);
std::optional<Primitive> parse_primitive(std::string_view token);

// The alphabet of one problem instance.
//
// Dense indexing puts functions first (JOIN, then NEG_JOIN when enabled) and
// terminals after them in the order X1..Xl, ~X1..~Xl, J1..Jn. Probability
// tables and uniform draws over the alphabet use this ordering.
class PrimitiveSet {
public:
    explicit PrimitiveSet(int pairs, int num_junk = 0, bool neg_join = false);

    [[nodiscard]] int pairs() const { return pairs_; }
    [[nodiscard]] int num_junk() const { return num_junk_; }
    [[nodiscard]] bool neg_join_enabled() const { return neg_join_; }

    [[nodiscard]] std::size_t num_functions() const { return neg_join_ ? 2 : 1; }
    [[nodiscard]] std::size_t num_terminals() const { return 2 * static_cast<std::size_t>(pairs_) + num_junk_; }
    [[nodiscard]] std::size_t size() const { return num_functions() + num_terminals(); }

    [[nodiscard]] Primitive function(std::size_t i) const;
    [[nodiscard]] Primitive terminal(std::size_t i) const;
    [[nodiscard]] Primitive at(std::size_t dense) const;
    [[nodiscard]] std::size_t index_of(Primitive p) const;
    [[nodiscard]] bool contains(Primitive p) const;

    friend bool operator==(PrimitiveSet const&, PrimitiveSet const&) = default;

private:
    int pairs_;
    int num_junk_;
    bool neg_join_;
};

} // namespace progevo

#endif
