#include "palsum/prover.hpp"

#include <algorithm>

#include "doctest.h"
#include "palsum/encodings.hpp"
#include "palsum/errors.hpp"
#include "palsum/generators.hpp"
#include "palsum/oracle.hpp"

using namespace palsum;

namespace {

uint64_t sizeOf(const ProofReport& r, const std::string& name) {
    for (const auto& [k, v] : r.machineSizes)
        if (k == name) return v;
    FAIL("no machine size recorded for ", name);
    return 0;
}

std::string factOf(const ProofReport& r, const std::string& key) {
    for (const auto& [k, v] : r.facts)
        if (k == key) return v;
    return "";
}

}  // namespace

TEST_CASE("the binary theorem holds with the published machine sizes") {
    auto r = proveBinary();
    CHECK(r.holds);
    CHECK(!r.counterexample.has_value());
    CHECK(r.baseCaseRange == "1..127");
    CHECK(sizeOf(r, "palchecker") == 9);
    CHECK(sizeOf(r, "palchecker2") == 771);
    CHECK(sizeOf(r, "palchecker3") == 1539);
    CHECK(sizeOf(r, "finalaut") == 32581);
    CHECK(factOf(r, "finalautDeterminized") == "32581");
    CHECK(factOf(r, "agreementDisagreements") == "0");
}

TEST_CASE("binary negative controls") {
    SUBCASE("dropping the three-summand case of full lengths breaks it") {
        WeakenSpec w;
        w.dropCase = "palchecker2";
        auto r = proveBinary(w);
        CHECK(!r.holds);
        REQUIRE(r.counterexampleValue.has_value());
        CHECK(factOf(r, "counterexampleRepresentable") == "true");
        CHECK(factOf(r, "counterexampleCoveredByKept") == "false");
        CHECK(*r.counterexampleValue % 2 == 1);
    }
    SUBCASE("the single-palindrome machine turns out to be redundant") {
        // The two three-summand cases cover palindromic inputs on their own.
        WeakenSpec w;
        w.dropCase = "palchecker";
        auto r = proveBinary(w);
        CHECK(r.holds);
    }
    SUBCASE("striking one word is found and decoded exactly") {
        WeakenSpec w;
        w.removeWord = 201;
        auto r = proveBinary(w);
        CHECK(!r.holds);
        REQUIRE(r.counterexampleValue.has_value());
        CHECK(*r.counterexampleValue == 201);
        CHECK(r.counterexample == factOf(r, "removedWord"));
        CHECK(factOf(r, "counterexampleRepresentable") == "true");
    }
}

TEST_CASE("the base-3 theorem holds and reproduces the conventional 378") {
    auto r = proveBase3();
    CHECK(r.holds);
    CHECK(sizeOf(r, "union") == 733);
    CHECK(sizeOf(r, "minimizedDfa") == 83);
    CHECK(factOf(r, "minimizedDfaProductive") == "82");
    CHECK(sizeOf(r, "looseUnion") == 587);
    CHECK(sizeOf(r, "reducedUnion") == 378);
    CHECK(r.baseCaseRange == "243..6560");
    CHECK(factOf(r, "agreementChecked") == "6318");
    CHECK(factOf(r, "agreementDisagreements") == "0");
}

TEST_CASE("base-3 negative controls") {
    SUBCASE("dropping case d") {
        WeakenSpec w;
        w.dropCase = "d";
        auto r = proveBase3(w);
        CHECK(!r.holds);
        REQUIRE(r.counterexampleValue.has_value());
        CHECK(factOf(r, "counterexampleRepresentable") == "true");
        CHECK(factOf(r, "counterexampleCoveredByKept") == "false");
        CHECK(bitLength(*r.counterexampleValue, 3) >= 9);
    }
    SUBCASE("striking one word") {
        WeakenSpec w;
        w.removeWord = 7000;
        auto r = proveBase3(w);
        CHECK(!r.holds);
        REQUIRE(r.counterexampleValue.has_value());
        CHECK(*r.counterexampleValue == 7000);
        CHECK(r.counterexample == factOf(r, "removedWord"));
    }
    SUBCASE("dropping an unknown case is a contract violation") {
        WeakenSpec w;
        w.dropCase = "e";
        CHECK_THROWS_AS((void)proveBase3(w), ContractError);
    }
}

TEST_CASE("the base-4 theorem holds; its reduced union lands at 480") {
    auto r = proveBase4();
    CHECK(r.holds);
    CHECK(sizeOf(r, "union") == 799);
    CHECK(sizeOf(r, "minimizedDfa") == 42);
    CHECK(factOf(r, "minimizedDfaProductive") == "41");
    CHECK(sizeOf(r, "looseUnion") == 724);
    CHECK(sizeOf(r, "reducedUnion") == 480);
    CHECK(r.baseCaseRange == "64..16383");
    CHECK(factOf(r, "agreementDisagreements") == "0");
}

TEST_CASE("the four-summand corollary sweeps clean below 2^16") {
    auto r = proveCorollaryMain();
    CHECK(r.holds);
    CHECK(factOf(r, "exceptionsWithinFour") == "0");
    CHECK(factOf(r, "oddNeedingFour") == "0");
    CHECK(factOf(r, "firstNeedingFour") == "176");
    CHECK(factOf(r, "minSummandsAtFirst") == "4");
}

TEST_CASE("the generalized-palindrome theorem holds") {
    auto r = proveGenPal();
    CHECK(r.holds);
    CHECK(sizeOf(r, "gpalchecker") == 39);
    CHECK(sizeOf(r, "gpalcheckerDet") == 869);
    CHECK(r.baseCaseRange == "0..31");
    CHECK(factOf(r, "agreementDisagreements") == "0");
    CHECK(factOf(r, "twoSummandExceptions") == "1");
    CHECK(factOf(r, "firstTwoSummandException") == "157441");

    WeakenSpec w;
    w.removeWord = 100;
    auto neg = proveGenPal(w);
    CHECK(!neg.holds);
    REQUIRE(neg.counterexampleValue.has_value());
    CHECK(*neg.counterexampleValue == 100);

    w.removeWord.reset();
    w.dropCase = "a";
    CHECK_THROWS_AS((void)proveGenPal(w), ContractError);
}

TEST_CASE("antipalindrome conjecture evidence") {
    auto r = checkAntipalConjectures();
    CHECK(r.holds);
    CHECK(factOf(r, "threeSummandExceptionCount") == "27");
    CHECK(factOf(r, "threeSummandExceptions") ==
          "8,18,28,130,134,138,148,158,176,318,530,538,548,576,644,1300,2170,"
          "2202,2212,2228,2230,2248,8706,8938,8948,34970,35082");
    CHECK(factOf(r, "fourSummandExceptions") == "0");
    // Ten summands of length n-3 would need this many states up front.
    CHECK(factOf(r, "tenSummandMachineRequested") == "32687610");
    CHECK(factOf(r, "tenSummandMachineBudget") == "200000");
}

TEST_CASE("proveByName dispatches every listed theorem") {
    const auto& ids = theoremIds();
    CHECK(ids.size() == 7);
    for (const char* expected :
         {"binary", "corollary", "base3", "base4", "genpal", "gap", "antipal"})
        CHECK(std::find(ids.begin(), ids.end(), expected) != ids.end());

    CHECK_THROWS_AS((void)proveByName("base5", {}), ContractError);
    WeakenSpec w;
    w.dropCase = "a";
    CHECK_THROWS_AS((void)proveByName("corollary", w), ContractError);
    CHECK_THROWS_AS((void)proveByName("antipal", w), ContractError);
}

TEST_CASE("reports render deterministically in a fixed key order") {
    auto a = renderReport(proveCorollaryMain());
    auto b = renderReport(proveCorollaryMain());
    CHECK(a == b);
    CHECK(a.rfind("theorem=corollary\nholds=true\n", 0) == 0);
    CHECK(a.find("baseCases=0..65535\n") != std::string::npos);
}

TEST_CASE("the agreement sweep flags a machine that is too small") {
    // One case alone cannot match the union oracle.
    Dfa partial = dfaMinimize(nfaDeterminize(base3Checker("a"), 4000000));
    auto agree = checkFoldedAgreement(partial, 3, 243, 700);
    CHECK(agree.checked == 458);
    REQUIRE(!agree.disagreements.empty());
    for (size_t i = 0; i < std::min<size_t>(3, agree.disagreements.size()); ++i) {
        uint64_t n = agree.disagreements[i];
        // The partial machine under-approximates, so every disagreement is a
        // value the full case list can represent.
        CHECK(!dfaAccepts(partial, foldedEncode(n, 3)));
        bool rep = false;
        for (const auto& [name, offs] : foldedCases(3)) {
            unsigned len = bitLength(n, 3);
            std::vector<unsigned> profile;
            bool fits = true;
            for (unsigned off : offs) {
                if (off >= len) { fits = false; break; }
                profile.push_back(len - off);
            }
            if (!fits) continue;
            SumQuery q;
            q.target = n;
            q.base = 3;
            q.maxSummands = static_cast<unsigned>(profile.size());
            q.flavor = Flavor::Palindrome;
            q.lengthProfile = profile;
            if (decide(q)) { rep = true; break; }
        }
        CHECK(rep);
    }
}
