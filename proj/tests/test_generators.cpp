#include <set>

#include "doctest.h"
#include "palsum/encodings.hpp"
#include "palsum/errors.hpp"
#include "palsum/generators.hpp"
#include "palsum/nwa.hpp"
#include "palsum/oracle.hpp"

using namespace palsum;

namespace {

// Does the machine agree with the arithmetic oracle on "n is a sum of these
// summands", where summand lengths follow the input length minus the offsets?
void checkAgainstOracle(const Nwa& m, const std::vector<SummandSpec>& specs,
                        uint64_t lo, uint64_t hi) {
    for (uint64_t n = lo; n < hi; ++n) {
        unsigned len = bitLength(n, 2);
        SumQuery q;
        q.target = n;
        q.base = 2;
        q.maxSummands = unsigned(specs.size());
        q.flavor = specs[0].flavor;
        std::vector<unsigned> profile;
        for (const SummandSpec& sp : specs) profile.push_back(len - sp.offset);
        q.lengthProfile = profile;
        bool oracle = decide(q).has_value();
        bool machine = accepts(m, encodeNwaInput(n));
        INFO("n = ", n);
        CHECK(machine == oracle);
    }
}

}  // namespace

TEST_CASE("state counts of the classic checkers") {
    CHECK(palChecker().numStates == 9);
    CHECK(antipalChecker1().numStates == 9);
    CHECK(palChecker2().numStates == 771);
    CHECK(palChecker3().numStates == 1539);
    CHECK(gpalChecker().numStates == 39);
    CHECK(gapChecker().numStates == 10302);
}

TEST_CASE("initial states") {
    Nwa pc3 = palChecker3();
    REQUIRE(pc3.initial.size() == 1);
    CHECK(pc3.stateName(pc3.initial[0]) == "q_0_111_0_00_000");

    Nwa pc1 = palChecker();
    REQUIRE(pc1.initial.size() == 1);
    CHECK(pc1.stateName(pc1.initial[0]) == "q_0_1");

    CHECK(gpalChecker().initial.size() == 6);
    CHECK(gapChecker().initial.size() == 7);
}

TEST_CASE("each guess state consumes exactly one call symbol") {
    Nwa pc3 = palChecker3();
    size_t guessStates = 0;
    for (uint32_t q = 0; q < pc3.numStates; ++q) {
        bool isGuess = pc3.stateName(q)[0] == 'q';
        if (!isGuess) {
            CHECK(pc3.callTo[0][q].empty());
            CHECK(pc3.callTo[1][q].empty());
            continue;
        }
        ++guessStates;
        bool on0 = !pc3.callTo[0][q].empty();
        bool on1 = !pc3.callTo[1][q].empty();
        CHECK(on0 != on1);
    }
    CHECK(guessStates == 1536);
}

TEST_CASE("one call from the initial state reaches eight states") {
    Nwa pc3 = palChecker3();
    uint32_t q0 = pc3.initial[0];
    std::set<uint32_t> succ;
    for (int bit = 0; bit < 2; ++bit)
        for (uint32_t t : pc3.callTo[bit][q0]) succ.insert(t);
    CHECK(succ.size() == 8);
}

TEST_CASE("oversized requests are rejected before allocation") {
    std::vector<SummandSpec> ten(10, {3, Flavor::Antipalindrome});
    try {
        genSumChecker(ten);
        FAIL("expected ResourceLimitError");
    } catch (const ResourceLimitError& e) {
        CHECK(e.requested == 32687610);
        CHECK(e.budget == 200000);
    }
    // raising the budget makes the same request legal in principle
    CHECK_THROWS_AS(genSumChecker(ten, 1000000), ResourceLimitError);
}

TEST_CASE("palChecker matches the palindrome oracle") {
    Nwa m = palChecker();
    for (uint64_t n = 1; n < 8192; ++n) {
        INFO("n = ", n);
        CHECK(accepts(m, encodeNwaInput(n)) == isPalindrome(n, 2));
    }
}

TEST_CASE("antipalChecker1 matches the antipalindrome oracle") {
    Nwa m = antipalChecker1();
    for (uint64_t n = 1; n < 4096; ++n) {
        INFO("n = ", n);
        CHECK(accepts(m, encodeNwaInput(n)) == isAntipalindrome(n, 2));
    }
}

TEST_CASE("palChecker2 matches sums of three palindromes at offsets 0,2,3") {
    checkAgainstOracle(palChecker2(),
                       {{0, Flavor::Palindrome}, {2, Flavor::Palindrome}, {3, Flavor::Palindrome}},
                       8, 2048);
}

TEST_CASE("palChecker3 matches sums of three palindromes at offsets 1,2,3") {
    checkAgainstOracle(palChecker3(),
                       {{1, Flavor::Palindrome}, {2, Flavor::Palindrome}, {3, Flavor::Palindrome}},
                       8, 2048);
}

TEST_CASE("gpalChecker matches sums of generalized palindromes") {
    checkAgainstOracle(gpalChecker(),
                       {{0, Flavor::GenPalindrome},
                        {0, Flavor::GenPalindrome},
                        {1, Flavor::GenPalindrome}},
                       32, 4096);
}

TEST_CASE("gapChecker matches sums of six generalized antipalindromes") {
    checkAgainstOracle(gapChecker(), std::vector<SummandSpec>(6, {2, Flavor::GenAntipalindrome}),
                       64, 1025);
}

TEST_CASE("checkers confined to the input shape stay inside it") {
    SyntaxOptions any1;
    Nwa shape = genSyntaxChecker(any1);
    for (Nwa m : {palChecker(), gpalChecker()}) {
        // Raw checkers accept stray words (pending calls, lone internals),
        // so only the intersection with the shape is included in it.
        auto leak = isIncluded(m, shape);
        CHECK_FALSE(leak.holds);
        REQUIRE(leak.counterexample.has_value());
        CHECK(accepts(m, *leak.counterexample));
        CHECK_FALSE(accepts(shape, *leak.counterexample));
        CHECK(isIncluded(product(m, shape), shape).holds);
    }
}

namespace {

// Oracle reading of one summand-length case: n with digit count len is
// accepted iff it splits into palindromes of canonical lengths len - o.
bool caseOracle(uint64_t n, unsigned base, const std::vector<unsigned>& offs) {
    unsigned len = bitLength(n, base);
    SumQuery q;
    q.target = n;
    q.base = base;
    q.maxSummands = unsigned(offs.size());
    q.flavor = Flavor::Palindrome;
    std::vector<unsigned> profile;
    for (unsigned o : offs) profile.push_back(len - o);
    q.lengthProfile = profile;
    return decide(q).has_value();
}

} // namespace

TEST_CASE("folded checkers match the oracle case by case") {
    for (unsigned base : {3u, 4u}) {
        std::vector<Nfa> machines;
        for (const auto& [name, offs] : foldedCases(base))
            machines.push_back(genFoldedChecker(base, offs));
        Nfa u = base == 3 ? base3Checker("all") : base4Checker("all");
        uint64_t lo = 1;
        for (unsigned i = 0; i < 4; ++i) lo *= base; // smallest 5-digit value
        uint64_t hi = lo * base + lo;                // into 6-digit territory
        for (uint64_t n = lo; n < hi; n += base == 3 ? 1 : 3) {
            FoldedWord w = foldedEncode(n, base);
            bool any = false;
            for (size_t ci = 0; ci < machines.size(); ++ci) {
                bool oracle = caseOracle(n, base, foldedCases(base)[ci].second);
                INFO("base ", base, ", case ", foldedCases(base)[ci].first, ", n = ", n);
                CHECK(nfaAccepts(machines[ci], w) == oracle);
                any = any || oracle;
            }
            INFO("base ", base, ", union, n = ", n);
            CHECK(nfaAccepts(u, w) == any);
        }
    }
}

TEST_CASE("loose and staged folded checkers agree on encodings") {
    for (unsigned base : {3u, 4u}) {
        for (const auto& [name, offs] : foldedCases(base)) {
            Nfa staged = genFoldedChecker(base, offs);
            Nfa loose = genFoldedCheckerLoose(base, offs);
            uint64_t lo = base * base * base;
            for (uint64_t n = lo; n < lo * base * base; n += 7) {
                FoldedWord w = foldedEncode(n, base);
                INFO("base ", base, ", case ", name, ", n = ", n);
                CHECK(nfaAccepts(staged, w) == nfaAccepts(loose, w));
            }
        }
    }
}

TEST_CASE("folded machine sizes") {
    const uint32_t staged3[] = {335, 281, 95, 22};
    const uint32_t loose3[] = {245, 245, 83, 14};
    size_t i = 0;
    for (const auto& [name, offs] : foldedCases(3)) {
        CHECK(genFoldedChecker(3, offs).numStates == staged3[i]);
        CHECK(genFoldedCheckerLoose(3, offs).numStates == loose3[i]);
        ++i;
    }
    CHECK(base3Checker("all").numStates == 733);
    CHECK(base4Checker("all").numStates == 799);
}

TEST_CASE("cases without a full-length summand accept some zero-lead folds") {
    // The top fold digit is the bare carry when no summand reaches that
    // position, and a carry can be zero: such words decode to nothing (the
    // canonical encoding never emits them) but are honestly in the language.
    FoldedWord wc = {{FoldedKind::Lead1, 0, 0},
                     {FoldedKind::Lead2, 1, 0},
                     {FoldedKind::FirstPair, 1, 0},
                     {FoldedKind::Middle, 2, 0}};
    CHECK(nfaAccepts(base3Checker("c"), wc));
    CHECK(!nfaAccepts(base3Checker("a"), wc));
    CHECK(!nfaAccepts(base3Checker("b"), wc));

    FoldedWord wd = {{FoldedKind::Lead1, 0, 0},
                     {FoldedKind::Lead2, 1, 0},
                     {FoldedKind::FirstPair, 1, 2},
                     {FoldedKind::Middle, 0, 0}};
    CHECK(nfaAccepts(base3Checker("d"), wd));
}

TEST_CASE("offset validation for folded checkers") {
    CHECK_THROWS_AS(genFoldedChecker(3, {}), ContractError);
    CHECK_THROWS_AS(genFoldedChecker(3, {0, 0}), ContractError);
    CHECK_THROWS_AS(genFoldedChecker(3, {4}), ContractError);
    CHECK_THROWS_AS(genFoldedChecker(1, {0}), ContractError);
    CHECK_THROWS_AS(genFoldedCheckerLoose(3, {1, 1}), ContractError);
    CHECK_THROWS_AS(base3Checker("e"), ContractError);
    CHECK_THROWS_AS(base4Checker("c"), ContractError);
    CHECK_THROWS_AS(foldedCases(5), ContractError);
}
