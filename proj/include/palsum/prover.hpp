#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palsum/nfa.hpp"
#include "palsum/nwa.hpp"

namespace palsum {

// End-to-end result of one theorem-level run.  Everything a caller needs to
// judge the run is in here; renderReport turns it into one key=value pair per
// line, in a fixed order, with the elapsed time deliberately left out so two
// identical runs print identical bytes.
struct ProofReport {
    std::string theoremId;
    bool holds = false;
    std::optional<std::string> counterexample;   // rendered word
    std::optional<uint64_t> counterexampleValue; // decoded, when the word decodes
    std::string baseCaseRange;                   // "lo..hi" when an oracle sweep ran
    std::vector<std::pair<std::string, uint64_t>> machineSizes; // insertion order kept
    std::vector<std::pair<std::string, std::string>> facts;     // everything else
    double elapsedSeconds = 0.0;
};

std::string renderReport(const ProofReport& r);

// Deliberate damage for negative-control runs: drop one named piece of a
// union machine, or excise a single number's encoding from the assembled
// machine.  A damaged run must come back holds=false with a counterexample
// the oracle confirms really is covered by the undamaged construction.
struct WeakenSpec {
    std::string dropCase;               // "" keeps every case
    std::optional<uint64_t> removeWord; // strike this number's encoding
};

// Sum-of-palindromes machine for odd binary inputs of length >= 8: the
// palindromy checker and both three-summand length profiles, unioned inside
// the canonical odd input shape, then checked to cover that whole shape.
ProofReport proveBinary(const WeakenSpec& weaken = {}, size_t budget = 1000000);

// Oracle-side corollary: every positive integer below 2^16 is a sum of at
// most four binary palindromes, with four needed first at 176.
ProofReport proveCorollaryMain();

// Folded-checker theorems: the union over the tabulated summand-length cases
// accepts every canonical fold of the stated digit length, and agrees with
// the oracle over the tested range.
ProofReport proveBase3(const WeakenSpec& weaken = {}, uint32_t budget = 4000000);
ProofReport proveBase4(const WeakenSpec& weaken = {}, uint32_t budget = 4000000);

// Three generalized binary palindromes cover every input of length >= 6.
ProofReport proveGenPal(const WeakenSpec& weaken = {}, size_t budget = 1000000);

// Six generalized antipalindromes of length n-2 cover every even-length
// input of length >= 6; plus the at-most-seven corollary sweep.
ProofReport proveGap(const WeakenSpec& weaken = {}, size_t budget = 1000000);

// Computation-only evidence for the antipalindrome conjectures: nothing here
// is a theorem, the report just states what a bounded search found.
ProofReport checkAntipalConjectures(uint64_t evenLimit = 16384);

// Dispatch by report id: binary, corollary, base3, base4, genpal, gap,
// antipal.  Throws ContractError for anything else.
// Dispatch by id; budget 0 keeps each theorem's own default.
ProofReport proveByName(const std::string& theoremId, const WeakenSpec& weaken = {},
                        size_t budget = 0);
const std::vector<std::string>& theoremIds();

// Machine-vs-oracle agreement over an inclusive integer range.
struct AgreementReport {
    uint64_t lo = 0, hi = 0;
    uint64_t checked = 0;
    std::vector<uint64_t> disagreements;
};

// The folded checker union for a base against sums of palindromes with the
// tabulated per-case length profiles.
AgreementReport checkFoldedAgreement(const Dfa& machine, unsigned base, uint64_t lo,
                                     uint64_t hi);

} // namespace palsum
