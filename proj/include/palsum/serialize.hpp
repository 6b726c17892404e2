#pragma once

#include <optional>
#include <string>

#include "palsum/nfa.hpp"
#include "palsum/nwa.hpp"

namespace palsum {

// Compact single-token spelling of a folded symbol: u2/v0 for the two lead
// digits, f01 for the tagged first pair, p12 for later pairs, m1 for the
// middle digit.
std::string foldedAtom(const FoldedSymbol& s);
FoldedSymbol foldedAtomParse(const std::string& atom);

// Native machine text: one header line, explicit sections, one transition
// per line, in a fixed canonical order.  This is the round-trip format;
// parseMachine reproduces the machine exactly, names and flags included.
std::string serializeNwa(const Nwa& m, const std::string& name);
std::string serializeNfa(const Nfa& m, const std::string& name);

// Automata-script flavored export: a single automaton declaration with
// alphabet, state and transition blocks, state names sanitized to plain
// identifiers.  Re-imports through parseMachine; machines with an implicit
// sink are not exportable in this form.
std::string exportAtsNwa(const Nwa& m, const std::string& name);
std::string exportAtsNfa(const Nfa& m, const std::string& name);

// Reads both formats back, telling them apart by the leading keyword.
// Exactly one of nwa/nfa is set.  Throws ParseError on malformed text.
struct ParsedMachine {
    std::string name;
    std::optional<Nwa> nwa;
    std::optional<Nfa> nfa;
};
ParsedMachine parseMachine(const std::string& text);

}  // namespace palsum
