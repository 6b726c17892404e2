#include "palsum/word.hpp"

#include "palsum/errors.hpp"

namespace palsum {

char symbolLetter(TaggedSymbol s) {
    static const char table[3][2] = {{'a', 'b'}, {'c', 'd'}, {'e', 'f'}};
    return table[static_cast<int>(s.cls)][s.bit];
}

TaggedSymbol symbolFromLetter(char c) {
    switch (c) {
    case 'a': return SYM_A;
    case 'b': return SYM_B;
    case 'c': return SYM_C;
    case 'd': return SYM_D;
    case 'e': return SYM_E;
    case 'f': return SYM_F;
    default:
        throw ParseError(std::string("not a tagged symbol: '") + c + "'");
    }
}

std::string wordText(const NestedWord& w) {
    std::string out;
    out.reserve(w.size());
    for (TaggedSymbol s : w)
        out.push_back(symbolLetter(s));
    return out;
}

NestedWord wordFromText(const std::string& text) {
    NestedWord out;
    out.reserve(text.size());
    for (char c : text)
        out.push_back(symbolFromLetter(c));
    return out;
}

std::string foldedSymbolText(const FoldedSymbol& s) {
    switch (s.kind) {
    case FoldedKind::Lead1:
    case FoldedKind::Lead2:
        return std::to_string(static_cast<int>(s.hi));
    case FoldedKind::FirstPair:
        return "[" + std::to_string(static_cast<int>(s.hi)) + "," +
               std::to_string(static_cast<int>(s.lo)) + "]!";
    case FoldedKind::Pair:
        return "[" + std::to_string(static_cast<int>(s.hi)) + "," +
               std::to_string(static_cast<int>(s.lo)) + "]";
    case FoldedKind::Middle:
        return "(" + std::to_string(static_cast<int>(s.hi)) + ")";
    }
    return "?";
}

std::string foldedText(const FoldedWord& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            out.push_back(' ');
        out += foldedSymbolText(w[i]);
    }
    return out;
}

} // namespace palsum
