#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "palsum/word.hpp"

namespace palsum {

// Nested-word automaton over the tagged alphabet {a,b | c,d | e,f}.
// Symbols carry one input bit each; the class decides the stack action.
// A call transition pushes the *source* state; a return transition reads the
// popped state. A return on an empty stack kills the run (it is not an
// error). A word is accepted iff some run ends in an accepting state; any
// leftover stack is ignored.
//
// Machines may be partial: a missing transition kills the run. A machine
// produced by flipTotal instead routes every missing transition into an
// implied total sink (implicitSink), whose acceptance is sinkAccepting.
// The sink is never materialized; product() resolves it into real states
// where reachable.
struct Nwa {
    uint32_t numStates = 0;
    bool deterministic = false;  // single initial state, functional transitions
    bool implicitSink = false;
    bool sinkAccepting = false;

    std::vector<uint32_t> initial;
    std::vector<uint8_t> accepting;
    std::vector<std::string> names;  // empty, or one name per state

    // callTo[bit][q] / intTo[bit][q] -> successor states
    std::array<std::vector<std::vector<uint32_t>>, 2> callTo;
    std::array<std::vector<std::vector<uint32_t>>, 2> intTo;
    // retTo[bit][key(q, popped)] -> successor states
    std::array<std::unordered_map<uint64_t, std::vector<uint32_t>>, 2> retTo;

    static uint64_t retKey(uint32_t q, uint32_t popped) {
        return (uint64_t(q) << 32) | popped;
    }

    uint32_t addState(std::string name = {}, bool acc = false, bool init = false);
    void addCall(uint32_t q, int bit, uint32_t to);
    void addInternal(uint32_t q, int bit, uint32_t to);
    void addReturn(uint32_t q, uint32_t popped, int bit, uint32_t to);

    std::string stateName(uint32_t q) const;
    uint32_t stateByName(const std::string& name) const;  // throws if absent

    size_t countCallEdges() const;
    size_t countInternalEdges() const;
    size_t countReturnEdges() const;
};

// Checks that the deterministic flag is honest: at most one initial state and
// at most one successor per (state, symbol) resp. (state, popped, symbol).
bool validateDeterministic(const Nwa& m);

bool accepts(const Nwa& m, const NestedWord& w);

// Subset construction with summary pairs. The result is deterministic and
// language-equivalent; throws ResourceLimitError before materializing more
// than `budget` states.
Nwa determinize(const Nwa& m, size_t budget = 200000);

// Totalize-and-flip of a deterministic machine: accepting states toggle and
// the implied sink becomes accepting. Only the flags change; no states are
// added. Requires m.deterministic.
Nwa flipTotal(const Nwa& m);

// Synchronous product (intersection). Implicit sinks on either side are
// resolved into materialized pair states where reachable. Only pairs
// reachable with a consistent stack are built (summary saturation, not plain
// graph search). Throws ResourceLimitError beyond `budget` states.
Nwa product(const Nwa& a, const Nwa& b, size_t budget = 200000);

// within ∩ complement(a). `a` is determinized first if needed.
Nwa complementWithin(const Nwa& a, const Nwa& within, size_t budget = 200000);

// De Morgan: complement(complement(a) ∩ complement(b)) relative to `within`.
Nwa unionWithin(const Nwa& a, const Nwa& b, const Nwa& within, size_t budget = 200000);

// Shortest accepted word, ties broken lexicographically (a<b<c<d<e<f).
// nullopt iff the language is empty.
std::optional<NestedWord> shortestAcceptedWord(const Nwa& m);

bool isEmpty(const Nwa& m);

struct InclusionResult {
    bool holds = false;
    std::optional<NestedWord> counterexample;  // shortest, then lex-min
};

// L(a) ⊆ L(b)? The counterexample, if any, is the shortest lex-min word in
// L(a) \ L(b).
InclusionResult isIncluded(const Nwa& a, const Nwa& b, size_t budget = 200000);

// Deterministic machine accepting exactly {w}. w must be well matched
// (every return has a matching call).
Nwa buildWordMachine(const NestedWord& w);

}  // namespace palsum
