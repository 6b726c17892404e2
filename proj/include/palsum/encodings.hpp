#pragma once

#include <cstdint>
#include <vector>

#include "palsum/word.hpp"

namespace palsum {

// Digit strings are most-significant-digit first, matching how you'd write
// the number down: toBaseK(43, 2) == {1,0,1,0,1,1}.  Zero is the one-digit
// string {0}; everything else has a nonzero leading digit.
std::vector<uint8_t> toBaseK(uint64_t n, unsigned base);

// Value of a digit vector, most significant first.  Digits may exceed the
// base (useful when digits carry sums): fromDigits({1,3,5}, 2) == 15.
uint64_t fromDigits(const std::vector<uint8_t>& digits, unsigned base);

// Number of digits in the canonical expansion; bitLength(0) == 1.
unsigned bitLength(uint64_t n, unsigned base);

// Tagged-word encoding of a positive integer, bits consumed least significant
// first: the low half as calls (a=0, b=1), one internal for the middle bit
// when the length is odd (c=0, d=1), then the high half as returns (e=0,
// f=1).  encodeNwaInput(43) == "bbafef".  Zero has no encoding here.
NestedWord encodeNwaInput(uint64_t n);

// Inverse of the above.  Rejects words that are not of the shape
// call^h internal^{0,1} return^h or whose most significant bit is 0.
uint64_t decodeNwaInput(const NestedWord& word);

// Folded digit encoding: leading two digits first, then pairs taking one
// digit from each end working inward, high side descending from the third
// most significant digit while the low side ascends from the least
// significant, with a lone middle digit last when the length is odd.  The
// first pair is tagged distinctly from later ones.  Needs length >= 3.
FoldedWord foldedEncode(uint64_t n, unsigned base);
uint64_t foldedDecode(const FoldedWord& word, unsigned base);

} // namespace palsum
