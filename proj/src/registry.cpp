#include "palsum/registry.hpp"

#include "palsum/encodings.hpp"
#include "palsum/errors.hpp"
#include "palsum/generators.hpp"

namespace palsum {

namespace {

Nwa binaryUnion(size_t budget) {
    SyntaxOptions so;
    so.minHalf = 4;
    so.requireCanonicalMsb = true;
    so.requireOddValue = true;
    Nwa shape = genSyntaxChecker(so);
    Nwa acc = complementWithin(palChecker(), shape, budget);
    acc = product(acc, complementWithin(palChecker2(), shape, budget), budget);
    acc = product(acc, complementWithin(palChecker3(), shape, budget), budget);
    return complementWithin(acc, shape, budget);
}

Nwa syntaxFor(const std::string& name) {
    SyntaxOptions so;
    so.minHalf = 3;
    so.requireCanonicalMsb = true;
    if (name == "syntaxodd") {
        so.minHalf = 4;
        so.requireOddValue = true;
    } else if (name == "syntaxeven") {
        so.forbidInternal = true;
    }
    return genSyntaxChecker(so);
}

}  // namespace

const std::vector<MachineInfo>& machineCatalog() {
    static const std::vector<MachineInfo> catalog = {
        {"palchecker", "one binary palindrome, full length", true, 2},
        {"palchecker2", "three binary palindromes, lengths n, n-2, n-3", true, 2},
        {"palchecker3", "three binary palindromes, lengths n-1, n-2, n-3", true, 2},
        {"finalaut", "union of the three palindrome checkers within the odd syntax", true, 2},
        {"syntax", "inputs of length >= 6 with a leading 1", true, 2},
        {"syntaxodd", "odd inputs of length >= 8 with a leading 1", true, 2},
        {"syntaxeven", "even-length inputs of length >= 6 with a leading 1", true, 2},
        {"gpalchecker", "three generalized binary palindromes, lengths n, n, n-1", true, 2},
        {"antipalchecker1", "one binary antipalindrome, full length", true, 2},
        {"gapchecker", "six generalized binary antipalindromes, length n-2", true, 2},
        {"base3", "union of the four base-3 summand cases", false, 3},
        {"base3a", "base-3 palindromes at offsets 0,1,2", false, 3},
        {"base3b", "base-3 palindromes at offsets 0,2,3", false, 3},
        {"base3c", "base-3 palindromes at offsets 1,2,3", false, 3},
        {"base3d", "base-3 palindromes at offsets 1,2", false, 3},
        {"base4", "union of the two base-4 summand cases", false, 4},
        {"base4a", "base-4 palindromes at offsets 1,2,3", false, 4},
        {"base4b", "base-4 palindromes at offsets 0,2,3", false, 4},
        {"base3syntax", "canonical base-3 folds of length >= 9", false, 3},
        {"base4syntax", "canonical base-4 folds of length >= 7", false, 4},
    };
    return catalog;
}

const MachineInfo* machineInfo(const std::string& name) {
    for (const auto& info : machineCatalog())
        if (info.name == name) return &info;
    return nullptr;
}

BuiltMachine buildMachine(const std::string& name, size_t budget) {
    const MachineInfo* info = machineInfo(name);
    if (!info) throw ContractError("unknown machine: " + name);
    BuiltMachine out;
    out.info = *info;
    if (name == "palchecker") out.nwa = palChecker();
    else if (name == "palchecker2") out.nwa = palChecker2();
    else if (name == "palchecker3") out.nwa = palChecker3();
    else if (name == "finalaut") out.nwa = binaryUnion(budget);
    else if (name == "syntax" || name == "syntaxodd" || name == "syntaxeven")
        out.nwa = syntaxFor(name);
    else if (name == "gpalchecker") out.nwa = gpalChecker();
    else if (name == "antipalchecker1") out.nwa = antipalChecker1();
    else if (name == "gapchecker") out.nwa = gapChecker();
    else if (name == "base3") out.nfa = base3Checker("all");
    else if (name == "base4") out.nfa = base4Checker("all");
    else if (name.rfind("base3syntax", 0) == 0) out.nfa = foldedSyntax(3, 9);
    else if (name.rfind("base4syntax", 0) == 0) out.nfa = foldedSyntax(4, 7);
    else if (name.size() == 6 && name.rfind("base3", 0) == 0)
        out.nfa = base3Checker(name.substr(5));
    else if (name.size() == 6 && name.rfind("base4", 0) == 0)
        out.nfa = base4Checker(name.substr(5));
    else throw ContractError("unknown machine: " + name);
    return out;
}

int machineAcceptsValue(const BuiltMachine& m, uint64_t value) {
    if (m.nwa) {
        if (value == 0) return -1;
        return accepts(*m.nwa, encodeNwaInput(value)) ? 1 : 0;
    }
    unsigned base = m.info.base;
    if (bitLength(value, base) < 3) return -1;
    return nfaAccepts(*m.nfa, foldedEncode(value, base)) ? 1 : 0;
}

}  // namespace palsum
