#include <algorithm>
#include <vector>

#include "doctest.h"
#include "palsum/encodings.hpp"
#include "palsum/errors.hpp"
#include "palsum/generators.hpp"
#include "palsum/nwa.hpp"
#include "palsum/oracle.hpp"

using namespace palsum;

namespace {

// a^n c e^n with n >= 1: push-count must match pop-count exactly.
Nwa pyramidMachine() {
    Nwa m;
    uint32_t start = m.addState("start", false, true);
    uint32_t up = m.addState("up");
    uint32_t down = m.addState("down");
    uint32_t acc = m.addState("acc", true);
    m.addCall(start, 0, up);
    m.addCall(up, 0, up);
    m.addInternal(up, 0, down);
    m.addReturn(down, up, 0, down);
    m.addReturn(down, start, 0, acc);
    m.deterministic = true;
    return m;
}

std::vector<NestedWord> allWellMatched(size_t maxLen) {
    // grow by appending one symbol; keep only prefixes that never pop an
    // empty stack, then filter to balanced words
    std::vector<NestedWord> out;
    std::vector<std::pair<NestedWord, int>> frontier{{NestedWord{}, 0}};
    out.push_back({});
    for (size_t len = 1; len <= maxLen; ++len) {
        std::vector<std::pair<NestedWord, int>> next;
        for (const auto& [w, depth] : frontier) {
            for (int bit = 0; bit < 2; ++bit) {
                NestedWord wc = w;
                wc.push_back({SymClass::Call, uint8_t(bit)});
                next.push_back({wc, depth + 1});
                NestedWord wi = w;
                wi.push_back({SymClass::Internal, uint8_t(bit)});
                next.push_back({wi, depth});
                if (depth > 0) {
                    NestedWord wr = w;
                    wr.push_back({SymClass::Return, uint8_t(bit)});
                    next.push_back({wr, depth - 1});
                }
            }
        }
        for (const auto& [w, depth] : next)
            if (depth == 0) out.push_back(w);
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("pyramid machine accepts its language and nothing else") {
    Nwa m = pyramidMachine();
    CHECK(accepts(m, wordFromText("ace")));
    CHECK(accepts(m, wordFromText("aacee")));
    CHECK(accepts(m, wordFromText("aaaceee")));
    CHECK_FALSE(accepts(m, wordFromText("c")));
    CHECK_FALSE(accepts(m, wordFromText("ae")));
    CHECK_FALSE(accepts(m, wordFromText("acee")));
    CHECK_FALSE(accepts(m, wordFromText("aace")));
    CHECK_FALSE(accepts(m, wordFromText("e")));  // return on empty stack dies
    CHECK_FALSE(accepts(m, {}));
}

TEST_CASE("shortest accepted word is shortest and lex-min") {
    Nwa m = pyramidMachine();
    auto w = shortestAcceptedWord(m);
    REQUIRE(w.has_value());
    CHECK(wordText(*w) == "ace");

    // offer a lexicographically worse sibling; the witness must not change
    uint32_t up2 = m.addState("up2");
    m.addCall(0, 1, up2);
    m.addInternal(up2, 1, 2);
    m.deterministic = false;
    auto w2 = shortestAcceptedWord(m);
    REQUIRE(w2.has_value());
    CHECK(wordText(*w2) == "ace");

    Nwa empty;
    empty.addState("only", false, true);
    CHECK(isEmpty(empty));
    CHECK_FALSE(shortestAcceptedWord(empty).has_value());

    Nwa eps;
    eps.addState("fin", true, true);
    auto w3 = shortestAcceptedWord(eps);
    REQUIRE(w3.has_value());
    CHECK(w3->empty());
}

TEST_CASE("word machine accepts exactly its word") {
    for (uint64_t n : {1ull, 2ull, 6ull, 43ull, 100ull}) {
        NestedWord w = encodeNwaInput(n);
        Nwa m = buildWordMachine(w);
        CHECK(validateDeterministic(m));
        CHECK(accepts(m, w));
        auto back = shortestAcceptedWord(m);
        REQUIRE(back.has_value());
        CHECK(wordText(*back) == wordText(w));
        for (uint64_t k = 1; k <= 100; ++k) {
            if (k == n) continue;
            CHECK_FALSE(accepts(m, encodeNwaInput(k)));
        }
    }
    CHECK_THROWS_AS(buildWordMachine(wordFromText("e")), ContractError);
}

TEST_CASE("determinization preserves the language on all short well-matched words") {
    Nwa pal = palChecker();
    Nwa det = determinize(pal);
    CHECK(det.deterministic);
    CHECK(validateDeterministic(det));
    for (const NestedWord& w : allWellMatched(8))
        CHECK(accepts(pal, w) == accepts(det, w));
}

TEST_CASE("determinization also preserves encoded-integer membership") {
    Nwa pal = palChecker();
    Nwa det = determinize(pal);
    for (uint64_t n = 1; n < 2000; ++n)
        CHECK(accepts(det, encodeNwaInput(n)) == isPalindrome(n, 2));
}

TEST_CASE("determinize respects its budget") {
    CHECK_THROWS_AS(determinize(palChecker3(), 10), ResourceLimitError);
}

TEST_CASE("complement relative to the input shape") {
    SyntaxOptions any1;
    Nwa shape = genSyntaxChecker(any1);
    Nwa pal = palChecker();
    Nwa comp = complementWithin(pal, shape);
    // encode(1) = "d" has no calls, so the h >= 1 shape drops it
    for (uint64_t n = 2; n < 600; ++n)
        CHECK(accepts(comp, encodeNwaInput(n)) == !isPalindrome(n, 2));
    for (const NestedWord& w : allWellMatched(7))
        CHECK(accepts(comp, w) == (accepts(shape, w) && !accepts(pal, w)));
}

TEST_CASE("double complement restores the language within the shape") {
    SyntaxOptions any1;
    Nwa shape = genSyntaxChecker(any1);
    Nwa pal = palChecker();
    Nwa twice = complementWithin(complementWithin(pal, shape), shape);
    for (const NestedWord& w : allWellMatched(7))
        CHECK(accepts(twice, w) == (accepts(shape, w) && accepts(pal, w)));
}

TEST_CASE("product is the intersection") {
    Nwa pal = palChecker();
    Nwa anti = antipalChecker1();
    Nwa both = product(pal, anti);
    for (const NestedWord& w : allWellMatched(7))
        CHECK(accepts(both, w) == (accepts(pal, w) && accepts(anti, w)));
    CHECK_THROWS_AS(product(palChecker2(), palChecker3(), 50), ResourceLimitError);
}

TEST_CASE("union via De Morgan") {
    SyntaxOptions any1;
    Nwa shape = genSyntaxChecker(any1);
    Nwa pal = palChecker();
    Nwa anti = antipalChecker1();
    Nwa u = unionWithin(pal, anti, shape);
    for (uint64_t n = 2; n < 600; ++n)
        CHECK(accepts(u, encodeNwaInput(n)) ==
              (isPalindrome(n, 2) || isAntipalindrome(n, 2)));
    for (const NestedWord& w : allWellMatched(7))
        CHECK(accepts(u, w) == (accepts(shape, w) && (accepts(pal, w) || accepts(anti, w))));
}

TEST_CASE("inclusion holds and fails with the right counterexample") {
    SyntaxOptions any1;
    Nwa shape = genSyntaxChecker(any1);
    Nwa pal = palChecker();

    // Intersecting with the shape confines the checker to it.
    Nwa cut = product(pal, shape);
    auto ok = isIncluded(cut, shape);
    CHECK(ok.holds);
    CHECK_FALSE(ok.counterexample.has_value());
    CHECK(isIncluded(cut, pal).holds);

    // The raw checker leaks out of the shape: it accepts the lone
    // internal "d" (the number 1) and words with pending calls,
    // since leftover stack never blocks acceptance.
    auto leak = isIncluded(pal, shape);
    CHECK_FALSE(leak.holds);
    REQUIRE(leak.counterexample.has_value());
    CHECK(wordText(*leak.counterexample) == "d");
    CHECK(accepts(pal, *leak.counterexample));
    CHECK_FALSE(accepts(shape, *leak.counterexample));

    auto bad = isIncluded(shape, pal);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.counterexample.has_value());
    CHECK(wordText(*bad.counterexample) == "ae");
    CHECK(accepts(shape, *bad.counterexample));
    CHECK_FALSE(accepts(pal, *bad.counterexample));
}

TEST_CASE("flipTotal needs determinism and flips twice to identity") {
    CHECK_THROWS_AS(flipTotal(palChecker()), ContractError);
    Nwa det = determinize(palChecker());
    Nwa once = flipTotal(det);
    CHECK(once.implicitSink);
    CHECK(once.sinkAccepting);
    Nwa twice = flipTotal(once);
    CHECK_FALSE(twice.sinkAccepting);
    for (const NestedWord& w : allWellMatched(6)) {
        CHECK(accepts(once, w) == !accepts(det, w));
        CHECK(accepts(twice, w) == accepts(det, w));
    }
}

TEST_CASE("syntax checker shapes") {
    SyntaxOptions any1;
    Nwa shape1 = genSyntaxChecker(any1);
    CHECK(validateDeterministic(shape1));
    CHECK(accepts(shape1, wordFromText("ae")));
    CHECK(accepts(shape1, wordFromText("ace")));
    CHECK(accepts(shape1, wordFromText("bdf")));
    CHECK_FALSE(accepts(shape1, wordFromText("d")));
    CHECK_FALSE(accepts(shape1, wordFromText("acce")));   // two internals
    CHECK_FALSE(accepts(shape1, wordFromText("aecd")));   // internal after return
    CHECK_FALSE(accepts(shape1, wordFromText("aeae")));   // second ascent
    CHECK_FALSE(accepts(shape1, wordFromText("aaee" "ae"))); // ditto, deeper

    SyntaxOptions odd4{4, true, true, false};
    Nwa shapeOdd = genSyntaxChecker(odd4);
    CHECK(accepts(shapeOdd, encodeNwaInput(0b10000001)));       // 8 bits, odd
    CHECK(accepts(shapeOdd, encodeNwaInput(0b100000001)));      // 9 bits, odd
    CHECK_FALSE(accepts(shapeOdd, encodeNwaInput(0b10000001 - 1)));  // even value
    CHECK_FALSE(accepts(shapeOdd, encodeNwaInput(0b1000001)));  // only 7 bits
    // non-canonical: high return carrying bit 0
    CHECK_FALSE(accepts(shapeOdd, wordFromText("baaae" "eee")));

    SyntaxOptions even3{3, true, false, true};
    Nwa shapeEven = genSyntaxChecker(even3);
    CHECK(accepts(shapeEven, encodeNwaInput(0b100000)));
    CHECK(accepts(shapeEven, encodeNwaInput(0b10000000)));
    CHECK_FALSE(accepts(shapeEven, encodeNwaInput(0b1000000)));  // odd length
    CHECK_FALSE(accepts(shapeEven, encodeNwaInput(0b10000)));    // too short
    for (uint64_t n = 1; n < 512; ++n) {
        bool want = bitLength(n, 2) >= 6 && bitLength(n, 2) % 2 == 0;
        CHECK(accepts(shapeEven, encodeNwaInput(n)) == want);
    }
}

TEST_CASE("syntax checker minHalf must be positive") {
    SyntaxOptions bad{0, false, false, false};
    CHECK_THROWS_AS(genSyntaxChecker(bad), ContractError);
}
