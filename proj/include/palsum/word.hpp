#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace palsum {

// The tagged alphabet: a/b push, c/d stay, e/f pop.  Each class carries one
// bit, so a word spells out a binary string with structural annotations.
enum class SymClass : uint8_t { Call = 0, Internal = 1, Return = 2 };

struct TaggedSymbol {
    SymClass cls;
    uint8_t bit; // 0 or 1
    friend auto operator<=>(const TaggedSymbol&, const TaggedSymbol&) = default;
};

inline constexpr TaggedSymbol SYM_A{SymClass::Call, 0};
inline constexpr TaggedSymbol SYM_B{SymClass::Call, 1};
inline constexpr TaggedSymbol SYM_C{SymClass::Internal, 0};
inline constexpr TaggedSymbol SYM_D{SymClass::Internal, 1};
inline constexpr TaggedSymbol SYM_E{SymClass::Return, 0};
inline constexpr TaggedSymbol SYM_F{SymClass::Return, 1};

using NestedWord = std::vector<TaggedSymbol>;

char symbolLetter(TaggedSymbol s);
TaggedSymbol symbolFromLetter(char c); // throws ParseError on anything else

std::string wordText(const NestedWord& w);
NestedWord wordFromText(const std::string& text);

// Folded digit words: two leading digits, then two-digit pairs (the first one
// tagged distinctly), then an optional lone middle digit.
enum class FoldedKind : uint8_t { Lead1 = 0, Lead2 = 1, FirstPair = 2, Pair = 3, Middle = 4 };

struct FoldedSymbol {
    FoldedKind kind;
    uint8_t hi; // the single digit for Lead1/Lead2/Middle
    uint8_t lo; // second component for pair kinds, 0 otherwise
    friend auto operator<=>(const FoldedSymbol&, const FoldedSymbol&) = default;
};

using FoldedWord = std::vector<FoldedSymbol>;

std::string foldedSymbolText(const FoldedSymbol& s);
std::string foldedText(const FoldedWord& w);

} // namespace palsum
