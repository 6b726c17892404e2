#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace palsum {

// ---------------------------------------------------------------------------
// Brute-force ground truth.  Everything here works directly on digit strings
// with no automata involved, so it is slow but independently trustworthy.
// ---------------------------------------------------------------------------

enum class Flavor : uint8_t {
    Palindrome,        // canonical expansion reads the same both ways; 0 counts
    GenPalindrome,     // palindrome after padding with leading zeros; 0 counts
    Antipalindrome,    // expansion equals the digit-complement of its reversal;
                       // 0 does not count (its canonical form is empty, and the
                       // nonempty padded forms fail)
    GenAntipalindrome, // antipalindrome after padding with leading zeros;
                       // 0 counts via the empty padding
};

const char* flavorName(Flavor f);
std::optional<Flavor> flavorFromName(const std::string& name);

// Membership tests for a single number.
bool isPalindrome(uint64_t n, unsigned base);
bool isGenPalindrome(uint64_t n, unsigned base);
bool isAntipalindrome(uint64_t n, unsigned base);
bool isGenAntipalindrome(uint64_t n, unsigned base);
bool hasFlavor(uint64_t n, unsigned base, Flavor f);

// All flavored numbers <= limit, ascending.
std::vector<uint64_t> enumerateFlavored(Flavor f, unsigned base, uint64_t limit);

// All flavored numbers realizable at exactly this length, ascending.  For the
// plain flavors that means canonical length (leading digit nonzero); for the
// generalized flavors it means the zero-padded string of exactly this length
// satisfies the flavor, so leading zeros are allowed.  Length 0 yields {0}
// except for the plain antipalindromes, where nothing qualifies.
std::vector<uint64_t> flavoredOfLength(unsigned length, unsigned base, Flavor f);

// ---------------------------------------------------------------------------
// Sum queries.
// ---------------------------------------------------------------------------

struct SumQuery {
    uint64_t target = 0;
    unsigned base = 2;
    unsigned maxSummands = 0; // exact count when lengthProfile is set, cap otherwise
    Flavor flavor = Flavor::Palindrome;
    // When present: one length per summand, with flavoredOfLength semantics.
    std::optional<std::vector<unsigned>> lengthProfile;
};

struct SumWitness {
    std::vector<uint64_t> summands;
};

// Finds any decomposition of the target, or nullopt.  With a length profile
// the search is over exactly those lengths; without one it is over all
// decompositions into at most maxSummands flavored numbers.
std::optional<SumWitness> decide(const SumQuery& q);

// Least s <= cap such that the target is a sum of s flavored numbers;
// nullopt when even cap summands do not suffice.  minSummands(0, ...) == 0
// via the empty sum.
std::optional<unsigned> minSummands(uint64_t target, unsigned base, Flavor f, unsigned cap);

// All targets in [0, limit] that are NOT sums of at most maxSummands flavored
// numbers.  Binary antipalindromes are all even, so for that flavor odd
// targets are skipped rather than reported.
std::vector<uint64_t> exceptions(Flavor f, unsigned base, unsigned maxSummands,
                                 uint64_t limit);

// How many distinct numbers are a sum of two generalized binary palindromes
// realizable at the same length n.  Enumerated, not assumed; comes out as
// 3^ceil(n/2).
uint64_t countSumTwoGenPalSameLength(unsigned length);

// ---------------------------------------------------------------------------
// Density of {n >= 1 : n is a sum of at most maxSummands flavored numbers}.
// ---------------------------------------------------------------------------

struct DensityEstimate {
    uint64_t limit = 0;       // scan bound (inclusive)
    uint64_t count = 0;       // how many representable n in [1, limit]
    uint64_t argminN = 0;     // n in [1, limit] minimizing count(n)/n
    uint64_t argminCount = 0; // count(argminN); the minimum is argminCount/argminN
};

// Scans n = 1 .. limit with a running count of representable numbers and
// tracks the minimum of count(n)/n as an exact rational (compared by
// cross-multiplication, never through floating point).
DensityEstimate densityPrefix(Flavor f, unsigned base, unsigned maxSummands,
                              uint64_t limit);

// True iff the estimate's minimum ratio is <= num/den, exactly.
bool densityAtMost(const DensityEstimate& d, uint64_t num, uint64_t den);

} // namespace palsum
