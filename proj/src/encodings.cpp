#include "palsum/encodings.hpp"

#include <algorithm>
#include <string>

#include "palsum/errors.hpp"

namespace palsum {

namespace {

void requireBase(unsigned base) {
    if (base < 2)
        throw ContractError("base must be at least 2");
}

// Least significant digit first; empty for 0.  Internal helper: the public
// interface is MSB-first, but both encoders naturally walk from the low end.
std::vector<uint8_t> digitsLsb(uint64_t n, unsigned base) {
    std::vector<uint8_t> out;
    while (n > 0) {
        out.push_back(static_cast<uint8_t>(n % base));
        n /= base;
    }
    return out;
}

} // namespace

std::vector<uint8_t> toBaseK(uint64_t n, unsigned base) {
    requireBase(base);
    if (n == 0)
        return {0};
    std::vector<uint8_t> out = digitsLsb(n, base);
    std::reverse(out.begin(), out.end());
    return out;
}

uint64_t fromDigits(const std::vector<uint8_t>& digits, unsigned base) {
    requireBase(base);
    uint64_t value = 0;
    for (uint8_t d : digits)
        value = value * base + d;
    return value;
}

unsigned bitLength(uint64_t n, unsigned base) {
    requireBase(base);
    if (n == 0)
        return 1;
    unsigned len = 0;
    while (n > 0) {
        ++len;
        n /= base;
    }
    return len;
}

NestedWord encodeNwaInput(uint64_t n) {
    if (n == 0)
        throw ContractError("no tagged-word encoding for 0");
    std::vector<uint8_t> bits = digitsLsb(n, 2);
    const size_t len = bits.size();
    const size_t half = len / 2;
    NestedWord word;
    word.reserve(len);
    for (size_t i = 0; i < half; ++i)
        word.push_back({SymClass::Call, bits[i]});
    if (len % 2 == 1)
        word.push_back({SymClass::Internal, bits[half]});
    for (size_t i = len - half; i < len; ++i)
        word.push_back({SymClass::Return, bits[i]});
    return word;
}

uint64_t decodeNwaInput(const NestedWord& word) {
    const size_t len = word.size();
    if (len == 0)
        throw ContractError("empty word");
    const size_t half = len / 2;
    const bool odd = (len % 2 == 1);
    std::vector<uint8_t> bits;
    bits.reserve(len);
    for (size_t i = 0; i < len; ++i) {
        SymClass expect;
        if (i < half)
            expect = SymClass::Call;
        else if (odd && i == half)
            expect = SymClass::Internal;
        else
            expect = SymClass::Return;
        if (word[i].cls != expect)
            throw ContractError("word is not of the shape call* internal? return* at position " +
                                std::to_string(i));
        if (word[i].bit > 1)
            throw ContractError("bad bit in tagged word");
        bits.push_back(word[i].bit);
    }
    if (bits.back() != 1)
        throw ContractError("most significant bit must be 1");
    uint64_t value = 0;
    for (size_t i = len; i-- > 0;)
        value = value * 2 + bits[i];
    return value;
}

FoldedWord foldedEncode(uint64_t n, unsigned base) {
    requireBase(base);
    std::vector<uint8_t> digits = digitsLsb(n, base); // digits[i] is the base^i digit
    const size_t len = digits.size();
    if (len < 3)
        throw ContractError("folded encoding needs at least 3 digits, got " +
                            std::to_string(len));
    FoldedWord word;
    word.push_back({FoldedKind::Lead1, digits[len - 1], 0});
    word.push_back({FoldedKind::Lead2, digits[len - 2], 0});
    const size_t pairs = (len - 2) / 2;
    for (size_t r = 1; r <= pairs; ++r) {
        FoldedKind kind = (r == 1) ? FoldedKind::FirstPair : FoldedKind::Pair;
        word.push_back({kind, digits[len - 2 - r], digits[r - 1]});
    }
    if (len % 2 == 1)
        word.push_back({FoldedKind::Middle, digits[(len - 3) / 2], 0});
    return word;
}

uint64_t foldedDecode(const FoldedWord& word, unsigned base) {
    requireBase(base);
    if (word.size() < 3)
        throw ContractError("folded word too short");
    size_t pairs = 0;
    bool middle = false;
    for (size_t i = 0; i < word.size(); ++i) {
        FoldedKind expect;
        if (i == 0)
            expect = FoldedKind::Lead1;
        else if (i == 1)
            expect = FoldedKind::Lead2;
        else if (i + 1 == word.size() && word[i].kind == FoldedKind::Middle)
            expect = FoldedKind::Middle; // a 3-digit word has no pairs at all
        else if (i == 2)
            expect = FoldedKind::FirstPair;
        else
            expect = FoldedKind::Pair;
        if (word[i].kind != expect)
            throw ContractError("malformed folded word at position " + std::to_string(i));
        if (expect == FoldedKind::FirstPair || expect == FoldedKind::Pair)
            ++pairs;
        if (expect == FoldedKind::Middle)
            middle = true;
    }
    const size_t len = 2 + 2 * pairs + (middle ? 1 : 0);
    std::vector<uint8_t> digits(len, 0); // base^i order
    digits[len - 1] = word[0].hi;
    digits[len - 2] = word[1].hi;
    size_t r = 0;
    for (const FoldedSymbol& sym : word) {
        if (sym.kind != FoldedKind::FirstPair && sym.kind != FoldedKind::Pair)
            continue;
        ++r;
        digits[len - 2 - r] = sym.hi;
        digits[r - 1] = sym.lo;
    }
    if (middle)
        digits[(len - 3) / 2] = word.back().hi;
    for (uint8_t d : digits)
        if (d >= base)
            throw ContractError("digit out of range for base");
    if (digits[len - 1] == 0)
        throw ContractError("leading digit must be nonzero");
    uint64_t value = 0;
    for (size_t i = len; i-- > 0;)
        value = value * base + digits[i];
    return value;
}

} // namespace palsum
