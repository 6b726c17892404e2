#include <random>

#include "doctest.h"
#include "palsum/encodings.hpp"
#include "palsum/errors.hpp"
#include "palsum/generators.hpp"
#include "palsum/nfa.hpp"

using namespace palsum;

namespace {

// Words shaped lead, lead, first pair, r more pairs, optional middle: every
// accepting run consumes something of this shape, so these probe the
// interesting part of the state space.
std::vector<FoldedWord> structuredWords(unsigned base, unsigned maxExtraPairs) {
    std::vector<FoldedWord> out;
    for (uint8_t d1 = 0; d1 < base; ++d1)
        for (uint8_t d2 = 0; d2 < base; ++d2)
            for (uint8_t h = 0; h < base; ++h)
                for (uint8_t l = 0; l < base; ++l) {
                    FoldedWord stem = {{FoldedKind::Lead1, d1, 0},
                                       {FoldedKind::Lead2, d2, 0},
                                       {FoldedKind::FirstPair, h, l}};
                    for (unsigned r = 0; r <= maxExtraPairs; ++r) {
                        out.push_back(stem);
                        for (uint8_t d = 0; d < base; ++d) {
                            FoldedWord w = stem;
                            w.push_back({FoldedKind::Middle, d, 0});
                            out.push_back(std::move(w));
                        }
                        stem.push_back({FoldedKind::Pair, uint8_t((h + r) % base),
                                        uint8_t((l + r * r) % base)});
                    }
                }
    return out;
}

// Unconstrained symbol soup, mostly garbage, for the paths structured words
// never touch.
std::vector<FoldedWord> randomWords(unsigned base, size_t count, unsigned maxLen,
                                    uint32_t seed) {
    std::vector<FoldedSymbol> sigma = foldedAlphabet(base);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, sigma.size() - 1);
    std::uniform_int_distribution<unsigned> len(0, maxLen);
    std::vector<FoldedWord> out;
    for (size_t i = 0; i < count; ++i) {
        FoldedWord w;
        unsigned n = len(rng);
        for (unsigned j = 0; j < n; ++j)
            w.push_back(sigma[pick(rng)]);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<FoldedWord> sampleWords(unsigned base) {
    std::vector<FoldedWord> ws = structuredWords(base, 2);
    std::vector<FoldedWord> rs = randomWords(base, 2000, 6, 0x5eed + base);
    ws.insert(ws.end(), rs.begin(), rs.end());
    return ws;
}

Nfa looseUnion(unsigned base) {
    const auto& cases = foldedCases(base);
    Nfa u = genFoldedCheckerLoose(base, cases[0].second, cases[0].first + ".");
    for (size_t i = 1; i < cases.size(); ++i)
        u = nfaUnion(u, genFoldedCheckerLoose(base, cases[i].second, cases[i].first + "."));
    return u;
}

} // namespace

TEST_CASE("folded alphabet enumerates every symbol once") {
    CHECK(foldedAlphabet(3).size() == 27); // 3 kinds of lone digit + 2 kinds of pair
    CHECK(foldedAlphabet(4).size() == 44);
    std::vector<FoldedSymbol> sigma = foldedAlphabet(3);
    for (size_t i = 1; i < sigma.size(); ++i)
        CHECK(sigma[i - 1] < sigma[i]);
}

TEST_CASE("foreign symbols are rejected, not silently dropped") {
    Nfa m(foldedAlphabet(3));
    m.addState("only", false, true);
    CHECK_THROWS_AS(m.symIndex({FoldedKind::Lead1, 3, 0}), ContractError);
    CHECK_THROWS_AS(m.addEdge(0, {FoldedKind::Pair, 0, 7}, 0), ContractError);
}

TEST_CASE("determinize and minimize preserve the language") {
    for (const char* which : {"c", "d"}) {
        Nfa m = base3Checker(which);
        Dfa det = nfaDeterminize(m);
        Dfa mn = dfaMinimize(det);
        for (const FoldedWord& w : sampleWords(3)) {
            bool expect = nfaAccepts(m, w);
            CHECK(dfaAccepts(det, w) == expect);
            CHECK(dfaAccepts(mn, w) == expect);
        }
    }
}

TEST_CASE("minimize is idempotent up to isomorphism") {
    Dfa mn = dfaMinimize(nfaDeterminize(base3Checker("d")));
    CHECK(dfaIsomorphic(mn, dfaMinimize(mn)));
}

TEST_CASE("determinization is total: garbage lands in a live sink") {
    Dfa det = nfaDeterminize(base3Checker("d"));
    // a word starting mid-shape has no run in the NFA but a state here
    FoldedWord w = {{FoldedKind::Pair, 1, 1}};
    CHECK(!dfaAccepts(det, w));
    CHECK(dfaCountProductive(dfaMinimize(det)) == dfaMinimize(det).numStates - 1);
}

TEST_CASE("union accepts what either part accepts, product what both do") {
    Nfa c = base3Checker("c");
    Nfa d = base3Checker("d");
    Nfa u = nfaUnion(c, d);
    Nfa p = nfaProduct(c, d);
    for (const FoldedWord& w : sampleWords(3)) {
        bool inC = nfaAccepts(c, w), inD = nfaAccepts(d, w);
        CHECK(nfaAccepts(u, w) == (inC || inD));
        CHECK(nfaAccepts(p, w) == (inC && inD));
    }
}

TEST_CASE("union order does not matter to the minimized machine") {
    Nfa c = base3Checker("c");
    Nfa d = base3Checker("d");
    Dfa cd = dfaMinimize(nfaDeterminize(nfaUnion(c, d)));
    Dfa dc = dfaMinimize(nfaDeterminize(nfaUnion(d, c)));
    CHECK(dfaIsomorphic(cd, dc));
}

TEST_CASE("complement of a union is the product of the complements") {
    Dfa mc = dfaMinimize(nfaDeterminize(base3Checker("c")));
    Dfa md = dfaMinimize(nfaDeterminize(base3Checker("d")));
    Dfa lhs = dfaComplement(dfaMinimize(nfaDeterminize(nfaUnion(base3Checker("c"),
                                                                base3Checker("d")))));
    Nfa rhs = nfaProduct(nfaFromDfa(dfaComplement(mc)), nfaFromDfa(dfaComplement(md)));
    CHECK(dfaIsomorphic(dfaMinimize(lhs), dfaMinimize(nfaDeterminize(rhs))));
}

TEST_CASE("inclusion holds reflexively and fails with a checkable witness") {
    Nfa c = base3Checker("c");
    Nfa d = base3Checker("d");
    CHECK(nfaIsIncluded(d, d).holds);

    NfaInclusionResult r = nfaIsIncluded(c, d);
    REQUIRE(!r.holds);
    REQUIRE(r.counterexample.has_value());
    CHECK(nfaAccepts(c, *r.counterexample));
    CHECK(!nfaAccepts(d, *r.counterexample));
    // breadth-first search: nothing shorter than a full lead-lead-pair word
    // can separate them, so the witness has exactly 3 symbols
    CHECK(r.counterexample->size() == 3);
}

TEST_CASE("determinization respects its state budget") {
    CHECK_THROWS_AS(nfaDeterminize(base3Checker("a"), 10), ResourceLimitError);
}

TEST_CASE("bisimulation reduction preserves the language") {
    Nfa u = looseUnion(3);
    Nfa r = nfaReduce(u);
    for (const FoldedWord& w : sampleWords(3))
        CHECK(nfaAccepts(r, w) == nfaAccepts(u, w));
}

TEST_CASE("bisimulation reduction is idempotent and fixes minimal machines") {
    Nfa r = nfaReduce(looseUnion(3));
    CHECK(nfaReduce(r).numStates == r.numStates);

    Dfa mn = dfaMinimize(nfaDeterminize(base3Checker("d")));
    CHECK(nfaReduce(nfaFromDfa(mn)).numStates == mn.numStates);
}

TEST_CASE("reduced sizes of the loose unions") {
    CHECK(nfaReduce(looseUnion(3)).numStates == 378);
    CHECK(nfaReduce(looseUnion(4)).numStates == 480);
}

TEST_CASE("per-case minimized sizes and the canonical base-3 union") {
    Dfa u;
    const uint32_t expected[] = {21, 47, 29, 20};
    size_t i = 0;
    for (const auto& [name, offs] : foldedCases(3)) {
        Dfa mc = dfaMinimize(nfaDeterminize(genFoldedChecker(3, offs)));
        CHECK(mc.numStates == expected[i++]);
        u = i == 1 ? mc
                   : dfaMinimize(nfaDeterminize(nfaUnion(nfaFromDfa(u), nfaFromDfa(mc))));
    }
    CHECK(u.numStates == 83);
    CHECK(dfaCountProductive(u) == 82);
}

TEST_CASE("canonical syntax machine counts digits and nothing else") {
    Nfa syn = foldedSyntax(3, 9);
    Dfa mn = dfaMinimize(nfaDeterminize(syn));
    CHECK(mn.numStates == 9);
    CHECK(dfaCountProductive(mn) == 8);
    CHECK_THROWS_AS(foldedSyntax(3, 3), ContractError);

    // encodings of 3^8 .. 3^9-1 are the shortest members
    CHECK(nfaAccepts(syn, foldedEncode(6561, 3)));
    CHECK(!nfaAccepts(syn, foldedEncode(6560, 3)));
}
