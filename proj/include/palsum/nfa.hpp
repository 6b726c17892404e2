#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palsum/word.hpp"

namespace palsum {

// Classical finite automata over folded digit symbols.  The alphabet is an
// explicit part of the machine: determinization and complementation are total
// over it, so two machines being compared must carry the same alphabet.

struct Nfa {
    uint32_t numStates = 0;
    std::vector<FoldedSymbol> alphabet; // sorted, duplicate-free
    std::vector<uint32_t> initial;      // sorted
    std::vector<uint8_t> accepting;
    std::vector<std::string> names;
    // trans[state][symbol index] = sorted successor list
    std::vector<std::vector<std::vector<uint32_t>>> trans;

    explicit Nfa(std::vector<FoldedSymbol> sigma = {});

    uint32_t addState(std::string name, bool isAccepting, bool isInitial);
    size_t symIndex(const FoldedSymbol& s) const; // ContractError if absent
    void addEdge(uint32_t from, const FoldedSymbol& s, uint32_t to);
    size_t countEdges() const;
};

struct Dfa {
    uint32_t numStates = 0; // includes the sink; every state is total
    std::vector<FoldedSymbol> alphabet;
    uint32_t initial = 0;
    std::vector<uint8_t> accepting;
    std::vector<uint32_t> table; // numStates * alphabet.size()

    uint32_t next(uint32_t s, size_t sym) const { return table[s * alphabet.size() + sym]; }
};

// The full folded alphabet for a base: every lead, pair, and middle symbol
// with digits below the base.
std::vector<FoldedSymbol> foldedAlphabet(unsigned base);

bool nfaAccepts(const Nfa& m, const FoldedWord& w);
bool dfaAccepts(const Dfa& m, const FoldedWord& w);

// Reachable subset construction, total over the alphabet (the empty subset
// becomes an ordinary sink state).  Throws ResourceLimitError past the budget.
Dfa nfaDeterminize(const Nfa& m, uint32_t budget = 200000);

// Hopcroft partition refinement over the reachable part.  The result is the
// unique minimal total machine; countProductive says how many of its states
// can still reach acceptance (the two counts differ by one exactly when a
// rejecting sink class exists).
Dfa dfaMinimize(const Dfa& m);
uint32_t dfaCountProductive(const Dfa& m);

Dfa dfaComplement(Dfa m); // flips every state's acceptance

// View a Dfa as an Nfa so it can feed the set operations below.
Nfa nfaFromDfa(const Dfa& m);

// Disjoint union and product (intersection) over a shared alphabet.
Nfa nfaUnion(const Nfa& a, const Nfa& b);
Nfa nfaProduct(const Nfa& a, const Nfa& b);

// Quotient by the coarsest forward bisimulation: states are merged when they
// agree on acceptance and, symbol by symbol, reach the same classes.  This is
// the standard structural reduction for machines too nondeterministic to
// determinize cheaply; the language is preserved exactly, though the result
// is generally larger than the minimal deterministic machine.
Nfa nfaReduce(const Nfa& m);

struct NfaInclusionResult {
    bool holds = false;
    std::optional<FoldedWord> counterexample; // shortest, then lexicographically least
};

// L(a) <= L(b), with the witness searched breadth-first so the reported
// counterexample is the shortest one (symbol order breaking ties).
NfaInclusionResult nfaIsIncluded(const Nfa& a, const Nfa& b, uint32_t budget = 200000);

// Canonical renumbering by breadth-first search from the initial state with
// symbol-ordered edges; two machines are isomorphic iff their canonical forms
// are identical tables.
Dfa dfaCanonical(const Dfa& m);
bool dfaIsomorphic(const Dfa& a, const Dfa& b);

} // namespace palsum
