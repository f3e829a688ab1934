#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdist/rational.hpp"

namespace fdist {

// Binary operation labels across all variety signatures.
// The enum value order (succ < star < circ < bracket < mul) is also the
// label order used by the canonical term order; rule orientations in the
// built-in presentations rely on succ < star.
enum class OpLabel { succ, star, circ, bracket, mul };

inline const char* op_token(OpLabel op) {
    switch (op) {
        case OpLabel::succ: return ".";
        case OpLabel::star: return "*";
        case OpLabel::circ: return "o";
        case OpLabel::bracket: return "[]";
        case OpLabel::mul: return "*";
    }
    return "?";
}

enum class Variety { associative, lie, right_symmetric, novikov, pre_associative, leibniz };

inline const char* variety_name(Variety v) {
    switch (v) {
        case Variety::associative: return "assoc";
        case Variety::lie: return "lie";
        case Variety::right_symmetric: return "rsym";
        case Variety::novikov: return "novikov";
        case Variety::pre_associative: return "preassoc";
        case Variety::leibniz: return "leibniz";
    }
    return "?";
}

std::optional<Variety> variety_from_name(const std::string& name);

inline std::vector<OpLabel> variety_signature(Variety v) {
    switch (v) {
        case Variety::associative: return {OpLabel::mul};
        case Variety::lie: return {OpLabel::bracket};
        case Variety::right_symmetric: return {OpLabel::circ};
        case Variety::novikov: return {OpLabel::circ};
        case Variety::pre_associative: return {OpLabel::star, OpLabel::succ};
        case Variety::leibniz: return {OpLabel::bracket};
    }
    return {};
}

// A generator symbol: a short name plus an optional integer index (the
// subscript n of a_n). Model algebras may use un-indexed symbols.
struct GenSymbol {
    std::string name;
    std::optional<Int> index;

    GenSymbol() = default;
    explicit GenSymbol(std::string n) : name(std::move(n)) {}
    GenSymbol(std::string n, Int i) : name(std::move(n)), index(std::move(i)) {}

    bool indexed() const { return index.has_value(); }

    friend bool operator==(const GenSymbol& a, const GenSymbol& b) {
        return a.name == b.name && a.index == b.index;
    }
    friend bool operator!=(const GenSymbol& a, const GenSymbol& b) { return !(a == b); }

    std::string str() const {
        if (!index) return name;
        return name + "(" + index->get_str() + ")";
    }
};

// Total order on generators: name first, then un-indexed before indexed,
// then the index well-order a_0 < a_{-1} < a_1 < a_{-2} < a_2 < ...
// (|index| ascending, ties broken negative before positive).
inline int gen_compare(const GenSymbol& a, const GenSymbol& b) {
    if (a.name != b.name) return a.name < b.name ? -1 : 1;
    if (a.indexed() != b.indexed()) return a.indexed() ? 1 : -1;
    if (!a.indexed()) return 0;
    Int aa = abs(*a.index), ab = abs(*b.index);
    if (aa != ab) return aa < ab ? -1 : 1;
    int sa = sgn(*a.index), sb = sgn(*b.index);
    if (sa != sb) return sa < sb ? -1 : 1;
    return 0;
}

inline bool operator<(const GenSymbol& a, const GenSymbol& b) { return gen_compare(a, b) < 0; }

}  // namespace fdist
