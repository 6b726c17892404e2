#include "palsum/oracle.hpp"

#include <algorithm>

#include "palsum/encodings.hpp"
#include "palsum/errors.hpp"

namespace palsum {

namespace {

void requireBase(unsigned base) {
    if (base < 2)
        throw ContractError("base must be at least 2");
}

std::vector<uint8_t> digitsLsb(uint64_t n, unsigned base) {
    std::vector<uint8_t> out;
    while (n > 0) {
        out.push_back(static_cast<uint8_t>(n % base));
        n /= base;
    }
    return out;
}

bool isAntipalString(const std::vector<uint8_t>& s, size_t from, unsigned base) {
    const size_t len = s.size() - from;
    for (size_t i = 0; i < len; ++i)
        if (s[from + i] + s[from + len - 1 - i] != base - 1)
            return false;
    return true;
}

// Fixed-width bitset over [0, nbits], supporting dst |= src << p.
struct Bits {
    std::vector<uint64_t> w;
    explicit Bits(uint64_t nbits) : w(nbits / 64 + 1, 0) {}
    void set(uint64_t i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    bool test(uint64_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
};

void orShift(Bits& dst, const Bits& src, uint64_t p) {
    const uint64_t wordShift = p >> 6;
    const unsigned bitShift = static_cast<unsigned>(p & 63);
    if (wordShift >= dst.w.size())
        return;
    for (size_t i = dst.w.size(); i-- > wordShift;) {
        uint64_t v = src.w[i - wordShift] << bitShift;
        if (bitShift != 0 && i > wordShift)
            v |= src.w[i - wordShift - 1] >> (64 - bitShift);
        dst.w[i] |= v;
    }
}

// levels[s] holds every value in [0, limit] that is a sum of at most s
// flavored numbers.
std::vector<Bits> sumLevels(Flavor f, unsigned base, unsigned maxSummands, uint64_t limit) {
    const std::vector<uint64_t> items = enumerateFlavored(f, base, limit);
    std::vector<Bits> levels;
    Bits start(limit);
    start.set(0);
    levels.push_back(start);
    for (unsigned s = 1; s <= maxSummands; ++s) {
        Bits next = levels.back();
        for (uint64_t p : items) {
            if (p == 0)
                continue;
            orShift(next, levels.back(), p);
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

} // namespace

const char* flavorName(Flavor f) {
    switch (f) {
    case Flavor::Palindrome: return "palindrome";
    case Flavor::GenPalindrome: return "genpalindrome";
    case Flavor::Antipalindrome: return "antipalindrome";
    case Flavor::GenAntipalindrome: return "genantipalindrome";
    }
    return "?";
}

std::optional<Flavor> flavorFromName(const std::string& name) {
    if (name == "palindrome" || name == "pal")
        return Flavor::Palindrome;
    if (name == "genpalindrome" || name == "genpal")
        return Flavor::GenPalindrome;
    if (name == "antipalindrome" || name == "antipal")
        return Flavor::Antipalindrome;
    if (name == "genantipalindrome" || name == "genantipal")
        return Flavor::GenAntipalindrome;
    return std::nullopt;
}

bool isPalindrome(uint64_t n, unsigned base) {
    requireBase(base);
    const std::vector<uint8_t> d = digitsLsb(n, base);
    for (size_t i = 0, j = d.size(); i + 1 < j; ++i, --j)
        if (d[i] != d[j - 1])
            return false;
    return true;
}

bool isGenPalindrome(uint64_t n, unsigned base) {
    requireBase(base);
    while (n > 0 && n % base == 0)
        n /= base;
    return isPalindrome(n, base);
}

bool isAntipalindrome(uint64_t n, unsigned base) {
    requireBase(base);
    if (n == 0)
        return false;
    const std::vector<uint8_t> d = digitsLsb(n, base);
    return isAntipalString(d, 0, base);
}

bool isGenAntipalindrome(uint64_t n, unsigned base) {
    requireBase(base);
    const std::vector<uint8_t> d = digitsLsb(n, base);
    // Padding with z leading zeros works iff the z lowest digits are all
    // base-1 and the rest is an antipalindromic string on its own.
    size_t run = 0;
    while (run < d.size() && d[run] == base - 1)
        ++run;
    for (size_t z = 0; z <= run; ++z)
        if (isAntipalString(d, z, base))
            return true;
    return false;
}

bool hasFlavor(uint64_t n, unsigned base, Flavor f) {
    switch (f) {
    case Flavor::Palindrome: return isPalindrome(n, base);
    case Flavor::GenPalindrome: return isGenPalindrome(n, base);
    case Flavor::Antipalindrome: return isAntipalindrome(n, base);
    case Flavor::GenAntipalindrome: return isGenAntipalindrome(n, base);
    }
    return false;
}

std::vector<uint64_t> enumerateFlavored(Flavor f, unsigned base, uint64_t limit) {
    requireBase(base);
    std::vector<uint64_t> out;
    for (uint64_t n = 0; n <= limit; ++n)
        if (hasFlavor(n, base, f))
            out.push_back(n);
    return out;
}

std::vector<uint64_t> flavoredOfLength(unsigned length, unsigned base, Flavor f) {
    requireBase(base);
    const bool anti = (f == Flavor::Antipalindrome || f == Flavor::GenAntipalindrome);
    const bool gen = (f == Flavor::GenPalindrome || f == Flavor::GenAntipalindrome);
    if (length == 0) {
        if (f == Flavor::Antipalindrome)
            return {};
        return {0};
    }
    if (anti && length % 2 == 1 && (base - 1) % 2 != 0)
        return {}; // middle digit would need to be its own complement
    // Choose the upper half freely; the rest is forced by the flavor.  The
    // middle digit of an odd antipalindrome is forced too, not free.
    const unsigned free = anti ? length / 2 : (length + 1) / 2;
    std::vector<uint8_t> pick(free, 0);
    if (!gen && free > 0)
        pick[0] = 1;
    std::vector<uint64_t> out;
    for (;;) {
        std::vector<uint8_t> s(length, 0); // most significant first
        for (unsigned i = 0; i < free; ++i)
            s[i] = pick[i];
        if (anti && length % 2 == 1)
            s[length / 2] = static_cast<uint8_t>((base - 1) / 2);
        for (unsigned i = 0; i < length / 2; ++i)
            s[length - 1 - i] = anti ? static_cast<uint8_t>(base - 1 - s[i]) : s[i];
        uint64_t value = 0;
        for (uint8_t d : s)
            value = value * base + d;
        out.push_back(value);
        // Odometer over the free digits.
        unsigned i = free;
        while (i > 0) {
            --i;
            if (pick[i] + 1u < base) {
                ++pick[i];
                break;
            }
            pick[i] = (i == 0 && !gen) ? 1 : 0;
            if (i == 0)
                goto done;
        }
        if (free == 0)
            break;
    }
done:
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::optional<SumWitness> decideProfile(const SumQuery& q) {
    const auto& profile = *q.lengthProfile;
    std::vector<std::vector<uint64_t>> cands;
    cands.reserve(profile.size());
    for (unsigned len : profile) {
        cands.push_back(flavoredOfLength(len, q.base, q.flavor));
        if (cands.back().empty())
            return std::nullopt;
    }
    std::vector<uint64_t> suffixMax(cands.size() + 1, 0);
    for (size_t i = cands.size(); i-- > 0;)
        suffixMax[i] = suffixMax[i + 1] + cands[i].back();
    std::vector<uint64_t> chosen(cands.size(), 0);
    // Depth-first over the candidate lists, pruning by what the remaining
    // summands can still reach.
    std::vector<size_t> idx(cands.size(), 0);
    size_t depth = 0;
    uint64_t remaining = q.target;
    for (;;) {
        if (depth == cands.size()) {
            if (remaining == 0) {
                SumWitness w;
                w.summands = chosen;
                return w;
            }
            --depth;
            remaining += chosen[depth];
            ++idx[depth];
        }
        bool advanced = false;
        for (size_t i = idx[depth]; i < cands[depth].size(); ++i) {
            const uint64_t p = cands[depth][i];
            if (p > remaining)
                break;
            if (remaining - p > suffixMax[depth + 1])
                continue;
            idx[depth] = i;
            chosen[depth] = p;
            remaining -= p;
            ++depth;
            if (depth < cands.size())
                idx[depth] = 0;
            advanced = true;
            break;
        }
        if (advanced)
            continue;
        if (depth == 0)
            return std::nullopt;
        --depth;
        remaining += chosen[depth];
        ++idx[depth];
    }
}

} // namespace

std::optional<SumWitness> decide(const SumQuery& q) {
    requireBase(q.base);
    if (q.lengthProfile)
        return decideProfile(q);
    const std::vector<Bits> levels = sumLevels(q.flavor, q.base, q.maxSummands, q.target);
    unsigned s = 0;
    while (s <= q.maxSummands && !levels[s].test(q.target))
        ++s;
    if (s > q.maxSummands)
        return std::nullopt;
    // Peel one summand per level to reconstruct a witness.
    SumWitness w;
    const std::vector<uint64_t> items = enumerateFlavored(q.flavor, q.base, q.target);
    uint64_t t = q.target;
    for (; s > 0; --s) {
        bool found = false;
        for (uint64_t p : items) {
            if (p > t)
                break;
            if (levels[s - 1].test(t - p)) {
                w.summands.push_back(p);
                t -= p;
                found = true;
                break;
            }
        }
        if (!found)
            throw Error("witness reconstruction lost the trail"); // unreachable
    }
    return w;
}

std::optional<unsigned> minSummands(uint64_t target, unsigned base, Flavor f, unsigned cap) {
    requireBase(base);
    const std::vector<Bits> levels = sumLevels(f, base, cap, target);
    for (unsigned s = 0; s <= cap; ++s)
        if (levels[s].test(target))
            return s;
    return std::nullopt;
}

std::vector<uint64_t> exceptions(Flavor f, unsigned base, unsigned maxSummands,
                                 uint64_t limit) {
    requireBase(base);
    const std::vector<Bits> levels = sumLevels(f, base, maxSummands, limit);
    const Bits& top = levels.back();
    const bool skipOdd = (f == Flavor::Antipalindrome && base == 2);
    std::vector<uint64_t> out;
    for (uint64_t n = 0; n <= limit; ++n) {
        if (skipOdd && n % 2 == 1)
            continue;
        if (!top.test(n))
            out.push_back(n);
    }
    return out;
}

uint64_t countSumTwoGenPalSameLength(unsigned length) {
    const std::vector<uint64_t> pals = flavoredOfLength(length, 2, Flavor::GenPalindrome);
    std::vector<uint64_t> sums;
    sums.reserve(pals.size() * pals.size());
    for (uint64_t p : pals)
        for (uint64_t q : pals)
            sums.push_back(p + q);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums.size();
}

DensityEstimate densityPrefix(Flavor f, unsigned base, unsigned maxSummands,
                              uint64_t limit) {
    requireBase(base);
    if (limit == 0)
        throw ContractError("density needs a positive limit");
    const std::vector<Bits> levels = sumLevels(f, base, maxSummands, limit);
    const Bits& top = levels.back();
    DensityEstimate est;
    est.limit = limit;
    uint64_t count = 0;
    for (uint64_t n = 1; n <= limit; ++n) {
        if (top.test(n))
            ++count;
        // count/n < argminCount/argminN iff count*argminN < argminCount*n
        if (est.argminN == 0 || count * est.argminN < est.argminCount * n) {
            est.argminN = n;
            est.argminCount = count;
        }
    }
    est.count = count;
    return est;
}

bool densityAtMost(const DensityEstimate& d, uint64_t num, uint64_t den) {
    if (d.argminN == 0 || den == 0)
        throw ContractError("ill-formed density comparison");
    return d.argminCount * den <= num * d.argminN;
}

} // namespace palsum
