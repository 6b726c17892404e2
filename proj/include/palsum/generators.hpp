#pragma once

#include <string>
#include <vector>

#include "palsum/nfa.hpp"
#include "palsum/nwa.hpp"
#include "palsum/oracle.hpp"

namespace palsum {

// One summand of a sum checker: the summand's digit string is `offset`
// positions shorter than the input (padded with leading zeros for the
// generalized flavors, canonical otherwise).
struct SummandSpec {
    unsigned offset = 0;
    Flavor flavor = Flavor::Palindrome;
};

// Nested-word checker for "the input is a sum of these summands". Input bits
// arrive least-significant first: calls cover the low half, one internal
// symbol sits in the middle iff the length is odd, returns cover the high
// half. Each call pushes the machine state; returns read the saved state
// back, which is how a digit guessed in the low half is checked against its
// mirror position in the high half.
//
// The state space (carry x one record per summand, grouped into multisets
// per (offset, flavor)) is sized arithmetically up front; requests beyond
// `budget` states throw ResourceLimitError before anything is allocated.
Nwa genSumChecker(const std::vector<SummandSpec>& specs, size_t budget = 200000);

Nwa palChecker();       // one palindrome, offset 0
Nwa palChecker2();      // palindromes at offsets {0,2,3}
Nwa palChecker3();      // palindromes at offsets {1,2,3}
Nwa gpalChecker();      // generalized palindromes at offsets {0,0,1}
Nwa antipalChecker1();  // one antipalindrome, offset 0
Nwa gapChecker();       // six generalized antipalindromes, all offset 2

// Input-shape checker: {a,b}^h ({c,d})? {e,f}^h with h >= minHalf.
//   requireCanonicalMsb  the final return must carry bit 1 (no leading zero)
//   requireOddValue      the first call must carry bit 1 (odd integers)
//   forbidInternal       even-length inputs only
struct SyntaxOptions {
    unsigned minHalf = 1;
    bool requireCanonicalMsb = false;
    bool requireOddValue = false;
    bool forbidInternal = false;
};
Nwa genSyntaxChecker(const SyntaxOptions& opt);

// Classical NFA checking "the folded input is a sum of palindromes whose
// lengths fall short of the input's by exactly these offsets" (one summand
// per offset, offsets within 0..3, all distinct).  The folded word hands the
// machine a high digit and a low digit per step, so it runs two additions at
// once: the low side carries forward normally while the high side, read most
// significant first, guesses each incoming carry and verifies it one step
// later.  Works for unfolded lengths >= 4.
Nfa genFoldedChecker(unsigned base, const std::vector<unsigned>& offsets,
                     const std::string& namePrefix = "");

// Same arithmetic with the two lead stages folded into the tuple space
// instead of getting their own little pools: lead symbols land on tuple
// states directly, so pair and middle symbols are live from the second step
// on.  Canonical folds decide identically; the machine is laxer on malformed
// words and far smaller after bisimulation reduction than after
// determinization.  Kept because reduced unions of these are the
// conventional size measure for the base-3/base-4 machines.
Nfa genFoldedCheckerLoose(unsigned base, const std::vector<unsigned>& offsets,
                          const std::string& namePrefix = "");

// The summand-length cases that cover every residue class: offsets say how
// far each palindrome falls short of the input's digit count.
const std::vector<std::pair<std::string, std::vector<unsigned>>>& foldedCases(unsigned base);

// The machines behind the base-3 and base-4 results: `which` picks one
// summand-length case ("a".."d" for base 3, "a".."b" for base 4) or "all"
// for the union over every case.
Nfa base3Checker(const std::string& which);
Nfa base4Checker(const std::string& which);

// Folded words that decode to a canonical representation (leading digit
// nonzero) of unfolded length >= minUnfoldedLen.  Needs minUnfoldedLen >= 4.
Nfa foldedSyntax(unsigned base, unsigned minUnfoldedLen);

}  // namespace palsum
