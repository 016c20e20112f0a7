#pragma once

#include <string>
#include <string_view>

namespace chainplan {

// Domain value symbols come in two families: bare chain tokens ("0", "1", "x")
// and lettered tokens with a subscript ("a_x", "g_1", ...). Every symbol parses
// to a (letter, subscript) pair; tokens outside both families parse to
// (plain, none) so the parse is total.
enum class BaseLetter { a, b, c, g, plain };
enum class Subscript { zero, one, x, none };

struct ParsedSymbol {
    BaseLetter letter = BaseLetter::plain;
    Subscript subscript = Subscript::none;

    bool operator==(const ParsedSymbol&) const = default;
};

inline ParsedSymbol parse_symbol(std::string_view symbol) {
    if (symbol == "0")
        return {BaseLetter::plain, Subscript::zero};
    if (symbol == "1")
        return {BaseLetter::plain, Subscript::one};
    if (symbol == "x")
        return {BaseLetter::plain, Subscript::x};
    if (symbol.size() == 3 && symbol[1] == '_') {
        BaseLetter letter;
        switch (symbol[0]) {
        case 'a': letter = BaseLetter::a; break;
        case 'b': letter = BaseLetter::b; break;
        case 'c': letter = BaseLetter::c; break;
        case 'g': letter = BaseLetter::g; break;
        default: return {};
        }
        switch (symbol[2]) {
        case '0': return {letter, Subscript::zero};
        case '1': return {letter, Subscript::one};
        case 'x': return {letter, Subscript::x};
        default: return {};
        }
    }
    return {};
}

inline Subscript subscript_of(std::string_view symbol) {
    return parse_symbol(symbol).subscript;
}

// Builds a lettered symbol such as make_symbol('a', '1') == "a_1".
inline std::string make_symbol(char letter, char subscript) {
    std::string s;
    s += letter;
    s += '_';
    s += subscript;
    return s;
}

inline char bit_char(bool bit) { return bit ? '1' : '0'; }

} // namespace chainplan
