#include "palsum/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "palsum/errors.hpp"

namespace palsum {

namespace {

bool antiFlavored(Flavor f) {
    return f == Flavor::Antipalindrome || f == Flavor::GenAntipalindrome;
}

bool genFlavored(Flavor f) {
    return f == Flavor::GenPalindrome || f == Flavor::GenAntipalindrome;
}

uint64_t mulCap(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

// C(values + m - 1, m), saturating.
uint64_t multisetCount(uint64_t values, uint64_t m) {
    uint64_t r = 1;
    for (uint64_t i = 1; i <= m; ++i) {
        r = mulCap(r, values - 1 + i);
        if (r == UINT64_MAX) return r;
        r /= i;
    }
    return r;
}

// A record is one summand's bookkeeping, packed into bits:
// bit 0 = the digit guessed for the current input position, bit t (1..d) =
// the guess made t positions ago. Summands sharing (offset, flavor) are
// interchangeable, so their records form a multiset.
struct Group {
    unsigned offset = 0;
    Flavor flavor = Flavor::Palindrome;
    unsigned count = 0;
    std::vector<std::vector<uint16_t>> multisets;  // each sorted ascending
    std::unordered_map<uint64_t, uint32_t> indexByKey;

    bool anti() const { return antiFlavored(flavor); }

    uint64_t packKey(const std::vector<uint16_t>& ms) const {
        unsigned bits = offset + 1;
        uint64_t k = 0;
        for (size_t i = 0; i < ms.size(); ++i) k |= uint64_t(ms[i]) << (i * bits);
        return k;
    }

    uint32_t indexOf(const std::vector<uint16_t>& ms) const {
        auto it = indexByKey.find(packKey(ms));
        if (it == indexByKey.end()) throw Error("sum checker lookup miss");
        return it->second;
    }
};

void enumMultisetsRec(unsigned values, unsigned left, uint16_t from,
                      std::vector<uint16_t>& cur,
                      std::vector<std::vector<uint16_t>>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (uint16_t v = from; v < values; ++v) {
        cur.push_back(v);
        enumMultisetsRec(values, left - 1, v, cur, out);
        cur.pop_back();
    }
}

int flipIf(bool anti, int bit) { return anti ? 1 - bit : bit; }

// The digit this record contributes when its saved state is popped at a
// return: the guess made d steps before the push (the mirror position).
int poppedRead(uint16_t v, unsigned d, bool anti) {
    int r = d == 0 ? (v & 1) : ((v >> d) & 1);
    return flipIf(anti, r);
}

// Constraints on a record at the middle (internal) symbol of an odd-length
// input: the pairs of guessed positions that mirror each other inside the
// low half must already agree.
bool middleOk(uint16_t v, unsigned d, bool anti) {
    if (d == 0) return !anti;  // the summand's own middle digit: x+x = 1 is impossible
    int x = v & 1;
    if (x != flipIf(anti, (v >> d) & 1)) return false;
    for (unsigned s2 = 1; 2 * s2 < d; ++s2) {
        unsigned s1 = d - s2;
        if (((v >> s1) & 1) != unsigned(flipIf(anti, (v >> s2) & 1))) return false;
    }
    if (d % 2 == 0 && d >= 2 && anti) return false;  // self-paired slot d/2
    return true;
}

// Constraints on the state reached after the last call of an even-length
// input, checked when the first return fires.
bool evenRetOk(uint16_t v, unsigned d, bool anti) {
    if (d == 0) return true;
    for (unsigned s2 = 1; 2 * s2 < d + 1; ++s2) {
        unsigned s1 = d + 1 - s2;
        if (s1 > d) continue;  // partner beyond the window contributes nothing here
        if (((v >> s1) & 1) != unsigned(flipIf(anti, (v >> s2) & 1))) return false;
    }
    if (d % 2 == 1 && anti) return false;  // self-paired slot (d+1)/2
    return true;
}

}  // namespace

Nwa genSumChecker(const std::vector<SummandSpec>& specs, size_t budget) {
    if (specs.empty()) throw ContractError("genSumChecker needs at least one summand");

    std::map<std::pair<unsigned, int>, unsigned> tally;
    for (const SummandSpec& sp : specs) ++tally[{sp.offset, int(sp.flavor)}];
    std::vector<Group> groups;
    for (const auto& [key, c] : tally) {
        Group g;
        g.offset = key.first;
        g.flavor = Flavor(key.second);
        g.count = c;
        groups.push_back(std::move(g));
    }
    const size_t ng = groups.size();
    const unsigned s = unsigned(specs.size());
    const unsigned maxCarry = std::max(2u, s - 1);

    uint64_t prod = 1;
    for (const Group& g : groups) {
        if (mulCap(g.count, g.offset + 1) > 60)
            throw ContractError("genSumChecker: record group too wide to pack");
        prod = mulCap(prod, multisetCount(uint64_t(1) << (g.offset + 1), g.count));
    }
    uint64_t tCount = mulCap(prod, maxCarry + 1);
    uint64_t total = tCount == UINT64_MAX ? UINT64_MAX : tCount + maxCarry + 1;
    if (total > budget) throw ResourceLimitError("genSumChecker", size_t(total), budget);

    for (Group& g : groups) {
        std::vector<uint16_t> cur;
        enumMultisetsRec(1u << (g.offset + 1), g.count, 0, cur, g.multisets);
        g.indexByKey.reserve(g.multisets.size());
        for (uint32_t i = 0; i < g.multisets.size(); ++i)
            g.indexByKey.emplace(g.packKey(g.multisets[i]), i);
    }

    std::vector<uint64_t> stride(ng);
    {
        uint64_t acc = 1;
        for (size_t i = ng; i-- > 0;) {
            stride[i] = acc;
            acc *= groups[i].multisets.size();
        }
    }
    const uint64_t P = prod;
    const uint32_t sBase = uint32_t(tCount);

    auto stateId = [&](unsigned g, const std::vector<uint32_t>& msIdx) {
        uint64_t id = uint64_t(g) * P;
        for (size_t i = 0; i < ng; ++i) id += msIdx[i] * stride[i];
        return uint32_t(id);
    };
    auto decode = [&](uint64_t id, unsigned& g, std::vector<uint32_t>& msIdx) {
        g = unsigned(id / P);
        uint64_t rem = id % P;
        msIdx.resize(ng);
        for (size_t i = 0; i < ng; ++i) {
            msIdx[i] = uint32_t(rem / stride[i]);
            rem %= stride[i];
        }
    };

    Nwa m;
    {
        unsigned g;
        std::vector<uint32_t> msIdx;
        for (uint64_t id = 0; id < tCount; ++id) {
            decode(id, g, msIdx);
            std::string name = "q_" + std::to_string(g) + "_";
            for (size_t i = 0; i < ng; ++i)
                for (uint16_t v : groups[i].multisets[msIdx[i]]) name += char('0' + (v & 1));
            for (size_t i = 0; i < ng; ++i) {
                if (groups[i].offset == 0) continue;
                for (uint16_t v : groups[i].multisets[msIdx[i]]) {
                    name += '_';
                    for (unsigned t = 1; t <= groups[i].offset; ++t)
                        name += char('0' + ((v >> t) & 1));
                }
            }
            m.addState(std::move(name));
        }
        for (unsigned i = 0; i <= maxCarry; ++i)
            m.addState("s_" + std::to_string(i), i == 0);
    }

    // Per-group successor multisets under one call step: slots shift, the
    // current guess drops into slot 1, and each record picks a fresh guess.
    // Records sharing a shifted base are interchangeable, so successors are
    // counted by how many of them guess 1.
    auto groupCallSucc = [&](const Group& g, const std::vector<uint16_t>& ms,
                             std::vector<uint32_t>& out) {
        const uint16_t lowMask = uint16_t((1u << g.offset) - 1);
        std::map<uint16_t, unsigned> classes;
        for (uint16_t v : ms) ++classes[uint16_t((v & lowMask) << 1)];
        std::vector<std::pair<uint16_t, unsigned>> cls(classes.begin(), classes.end());
        std::vector<unsigned> ones(cls.size(), 0);
        std::vector<uint16_t> built;
        for (;;) {
            built.clear();
            for (size_t i = 0; i < cls.size(); ++i) {
                for (unsigned j = 0; j < cls[i].second - ones[i]; ++j)
                    built.push_back(cls[i].first);
                for (unsigned j = 0; j < ones[i]; ++j)
                    built.push_back(uint16_t(cls[i].first | 1));
            }
            std::sort(built.begin(), built.end());
            out.push_back(g.indexOf(built));
            size_t i = 0;
            while (i < cls.size() && ones[i] == cls[i].second) ones[i++] = 0;
            if (i == cls.size()) break;
            ++ones[i];
        }
    };

    unsigned g;
    std::vector<uint32_t> msIdx;
    std::vector<std::vector<uint32_t>> succPerGroup(ng);
    std::vector<uint32_t> succIdx(ng);
    std::vector<uint32_t> comboIdx(ng);
    unsigned gC;
    std::vector<uint32_t> msIdxC;

    for (uint64_t id = 0; id < tCount; ++id) {
        decode(id, g, msIdx);

        int guessSum = int(g);
        int reads = 0;
        bool midOk = true;
        for (size_t i = 0; i < ng; ++i) {
            const Group& grp = groups[i];
            for (uint16_t v : grp.multisets[msIdx[i]]) {
                guessSum += v & 1;
                reads += poppedRead(v, grp.offset, grp.anti());
                midOk = midOk && middleOk(v, grp.offset, grp.anti());
            }
        }

        // middle junction (odd-length input)
        if (midOk)
            m.addInternal(uint32_t(id), guessSum & 1, sBase + unsigned(guessSum >> 1));

        // calls, and the first-return entries of even-length inputs (the
        // popped state at the first return is always the call predecessor)
        const int callBit = guessSum & 1;
        const unsigned g2 = unsigned(guessSum >> 1);
        for (size_t i = 0; i < ng; ++i) {
            succPerGroup[i].clear();
            groupCallSucc(groups[i], groups[i].multisets[msIdx[i]], succPerGroup[i]);
        }
        std::fill(succIdx.begin(), succIdx.end(), 0);
        for (;;) {
            for (size_t i = 0; i < ng; ++i) comboIdx[i] = succPerGroup[i][succIdx[i]];
            uint32_t succ = stateId(g2, comboIdx);
            m.addCall(uint32_t(id), callBit, succ);

            decode(succ, gC, msIdxC);
            bool evenOk = true;
            for (size_t i = 0; i < ng && evenOk; ++i)
                for (uint16_t v : groups[i].multisets[msIdxC[i]])
                    if (!evenRetOk(v, groups[i].offset, groups[i].anti())) {
                        evenOk = false;
                        break;
                    }
            if (evenOk) {
                int sum = int(g2) + reads;
                m.addReturn(succ, uint32_t(id), sum & 1, sBase + unsigned(sum >> 1));
            }

            size_t i = 0;
            while (i < ng && succIdx[i] + 1 == succPerGroup[i].size()) succIdx[i++] = 0;
            if (i == ng) break;
            ++succIdx[i];
        }

        // unwinding returns: s_j pops this state
        for (unsigned j = 0; j <= maxCarry; ++j) {
            int sum = int(j) + reads;
            m.addReturn(sBase + j, uint32_t(id), sum & 1, sBase + unsigned(sum >> 1));
        }
    }

    // initial states: carry 0, slots preloaded so that reads beyond the
    // summand's top come out as 0 (all-ones under an antipalindromic flip),
    // first guess forced to 1 for plain palindromes (canonical lead digit),
    // 0 for plain antipalindromes, free for the generalized flavors.
    {
        std::vector<std::vector<std::vector<uint16_t>>> initPerGroup(ng);
        for (size_t i = 0; i < ng; ++i) {
            const Group& grp = groups[i];
            uint16_t slots = grp.anti() ? uint16_t(((1u << grp.offset) - 1) << 1) : 0;
            if (genFlavored(grp.flavor)) {
                for (unsigned k = 0; k <= grp.count; ++k) {
                    std::vector<uint16_t> ms;
                    for (unsigned j = 0; j < grp.count - k; ++j) ms.push_back(slots);
                    for (unsigned j = 0; j < k; ++j) ms.push_back(uint16_t(slots | 1));
                    std::sort(ms.begin(), ms.end());
                    initPerGroup[i].push_back(std::move(ms));
                }
            } else {
                uint16_t x = grp.flavor == Flavor::Palindrome ? 1 : 0;
                initPerGroup[i].push_back(std::vector<uint16_t>(grp.count, uint16_t(slots | x)));
            }
        }
        std::vector<uint32_t> pick(ng, 0);
        for (;;) {
            std::vector<uint32_t> combo(ng);
            for (size_t i = 0; i < ng; ++i) combo[i] = groups[i].indexOf(initPerGroup[i][pick[i]]);
            m.initial.push_back(stateId(0, combo));
            size_t i = 0;
            while (i < ng && pick[i] + 1 == initPerGroup[i].size()) pick[i++] = 0;
            if (i == ng) break;
            ++pick[i];
        }
        std::sort(m.initial.begin(), m.initial.end());
    }
    return m;
}

Nwa palChecker() { return genSumChecker({{0, Flavor::Palindrome}}); }

Nwa palChecker2() {
    return genSumChecker(
        {{0, Flavor::Palindrome}, {2, Flavor::Palindrome}, {3, Flavor::Palindrome}});
}

Nwa palChecker3() {
    return genSumChecker(
        {{1, Flavor::Palindrome}, {2, Flavor::Palindrome}, {3, Flavor::Palindrome}});
}

Nwa gpalChecker() {
    return genSumChecker(
        {{0, Flavor::GenPalindrome}, {0, Flavor::GenPalindrome}, {1, Flavor::GenPalindrome}});
}

Nwa antipalChecker1() { return genSumChecker({{0, Flavor::Antipalindrome}}); }

Nwa gapChecker() {
    return genSumChecker(std::vector<SummandSpec>(6, {2, Flavor::GenAntipalindrome}));
}

Nwa genSyntaxChecker(const SyntaxOptions& opt) {
    if (opt.minHalf < 1) throw ContractError("genSyntaxChecker needs minHalf >= 1");
    const unsigned K = opt.minHalf;
    Nwa m;
    m.deterministic = true;
    std::vector<uint32_t> c(K + 1);
    for (unsigned i = 0; i <= K; ++i)
        c[i] = m.addState("c" + std::to_string(i), false, i == 0);
    uint32_t mid = m.addState("m");
    uint32_t run = m.addState("r");
    uint32_t acc = m.addState("acc", true);

    for (unsigned i = 0; i < K; ++i) {
        if (i == 0 && opt.requireOddValue) {
            m.addCall(c[i], 1, c[i + 1]);
        } else {
            m.addCall(c[i], 0, c[i + 1]);
            m.addCall(c[i], 1, c[i + 1]);
        }
    }
    m.addCall(c[K], 0, c[K]);
    m.addCall(c[K], 1, c[K]);
    if (!opt.forbidInternal) {
        m.addInternal(c[K], 0, mid);
        m.addInternal(c[K], 1, mid);
    }

    // The first call pushed c0 and nothing else ever does, so popping c0
    // means this return is the last one.
    auto addRets = [&](uint32_t src) {
        for (unsigned i = 0; i < K; ++i) {
            uint32_t popped = c[i];
            uint32_t to = i == 0 ? acc : run;
            if (i == 0 && opt.requireCanonicalMsb) {
                m.addReturn(src, popped, 1, to);
            } else {
                m.addReturn(src, popped, 0, to);
                m.addReturn(src, popped, 1, to);
            }
        }
        m.addReturn(src, c[K], 0, run);
        m.addReturn(src, c[K], 1, run);
    };
    addRets(c[K]);  // even path: the first return fires straight from the call phase
    addRets(mid);
    addRets(run);
    return m;
}

// ---------------------------------------------------------------------------
// Folded machines.
// ---------------------------------------------------------------------------

namespace {

// Digit range for one summand's guess at a given step: absent summands
// contribute a fixed zero, a summand whose top digit lands on this step must
// guess nonzero, anything else ranges over the whole digit set.
struct GuessRange {
    unsigned lo = 0, hi = 1; // half-open [lo, hi)
};

GuessRange guessRange(bool present, bool top, unsigned base) {
    if (!present)
        return {0, 1};
    return {top ? 1u : 0u, base};
}

} // namespace

Nfa genFoldedChecker(unsigned base, const std::vector<unsigned>& offsets,
                     const std::string& namePrefix) {
    if (base < 2 || base > 9)
        throw ContractError("base out of range");
    std::vector<unsigned> offs = offsets;
    std::sort(offs.begin(), offs.end());
    if (offs.empty() || offs.back() > 3 ||
        std::adjacent_find(offs.begin(), offs.end()) != offs.end())
        throw ContractError("offsets must be distinct values in 0..3");

    const unsigned m = unsigned(offs.size()); // carries range over 0..m-1
    bool has[4] = {false, false, false, false};
    for (unsigned o : offs)
        has[o] = true;

    // The running state is the tuple (c1, c2, x1, x2, y, z): c1 is the carry
    // the next high-end addition must produce, c2 the carry entering the next
    // low-end addition.  x1/x2 hold the last two high guesses of the offset-0
    // summand (guessed at the high end, consumed at the low end two steps
    // later), y the last high guess of the offset-1 summand, z the last low
    // guess of the offset-3 summand (consumed at the high end one step
    // later).  Slots for absent offsets are dropped.
    //
    // The two lead digits and the first pair each get their own little pool
    // of states carrying only the coordinates that exist by then, so a word
    // that is not lead, lead, pairs (plus at most a final middle digit) has
    // no run at all.
    const bool sx = has[0], sy = has[1], sz = has[3];
    Nfa out(foldedAlphabet(base));
    const uint32_t start = out.addState(namePrefix + "start", false, true);

    auto slotName = [&](unsigned x1, unsigned x2, unsigned y, unsigned z, bool withX1) {
        std::string s;
        if (sx) {
            if (withX1)
                s += std::to_string(x1);
            s += std::to_string(x2);
        }
        if (sy)
            s += std::to_string(y);
        if (sz)
            s += std::to_string(z);
        return s.empty() ? s : "_" + s;
    };

    // after Lead1: promised carry plus the offset-0 top guess
    std::vector<uint32_t> l1Pool(m * (sx ? base : 1));
    for (unsigned c1 = 0; c1 < m; ++c1)
        for (unsigned x2 = 0; x2 < (sx ? base : 1); ++x2)
            l1Pool[c1 * (sx ? base : 1) + x2] = out.addState(
                namePrefix + "l1_" + std::to_string(c1) + slotName(0, x2, 0, 0, false),
                false, false);
    auto l1At = [&](unsigned c1, unsigned x2) { return l1Pool[c1 * (sx ? base : 1) + x2]; };

    // after Lead2: promised carry, the last two offset-0 guesses, the
    // offset-1 top guess
    const unsigned l2Slots = (sx ? base * base : 1) * (sy ? base : 1);
    std::vector<uint32_t> l2Pool(m * l2Slots);
    auto l2Slot = [&](unsigned x1, unsigned x2, unsigned y) {
        unsigned idx = 0;
        if (sx)
            idx = x1 * base + x2;
        if (sy)
            idx = idx * base + y;
        return idx;
    };
    for (unsigned c1 = 0; c1 < m; ++c1)
        for (unsigned x1 = 0; x1 < (sx ? base : 1); ++x1)
            for (unsigned x2 = 0; x2 < (sx ? base : 1); ++x2)
                for (unsigned y = 0; y < (sy ? base : 1); ++y)
                    l2Pool[c1 * l2Slots + l2Slot(x1, x2, y)] = out.addState(
                        namePrefix + "l2_" + std::to_string(c1) + slotName(x1, x2, y, 0, true),
                        false, false);
    auto l2At = [&](unsigned c1, unsigned x1, unsigned x2, unsigned y) {
        return l2Pool[c1 * l2Slots + l2Slot(x1, x2, y)];
    };

    // the full tuple space, live from the first pair on
    const unsigned tSlots = (sx ? base * base : 1) * (sy ? base : 1) * (sz ? base : 1);
    std::vector<uint32_t> tPool(m * m * tSlots);
    auto tSlot = [&](unsigned x1, unsigned x2, unsigned y, unsigned z) {
        unsigned idx = 0;
        if (sx)
            idx = x1 * base + x2;
        if (sy)
            idx = idx * base + y;
        if (sz)
            idx = idx * base + z;
        return idx;
    };
    for (unsigned c1 = 0; c1 < m; ++c1)
        for (unsigned c2 = 0; c2 < m; ++c2)
            for (unsigned x1 = 0; x1 < (sx ? base : 1); ++x1)
                for (unsigned x2 = 0; x2 < (sx ? base : 1); ++x2)
                    for (unsigned y = 0; y < (sy ? base : 1); ++y)
                        for (unsigned z = 0; z < (sz ? base : 1); ++z)
                            tPool[(c1 * m + c2) * tSlots + tSlot(x1, x2, y, z)] =
                                out.addState(namePrefix + "q_" + std::to_string(c1) +
                                                 std::to_string(c2) +
                                                 slotName(x1, x2, y, z, true),
                                             c1 == c2 && (!sx || x1 == x2), false);
    auto tAt = [&](unsigned c1, unsigned c2, unsigned x1, unsigned x2, unsigned y,
                   unsigned z) {
        return tPool[(c1 * m + c2) * tSlots + tSlot(x1, x2, y, z)];
    };
    const uint32_t acc = out.addState(namePrefix + "q_acc", true, false);

    // Lead1: only the offset-0 summand has a digit at the very top, and the
    // whole sum may not carry past it.
    {
        GuessRange rs = guessRange(has[0], true, base);
        for (unsigned s = rs.lo; s < rs.hi; ++s)
            for (unsigned al = 0; al < m; ++al) {
                unsigned sum = s + al;
                if (sum >= base)
                    continue;
                out.addEdge(start, {FoldedKind::Lead1, uint8_t(sum), 0}, l1At(al, s));
            }
    }

    // Lead2: offset 0 guesses freely, offset 1 guesses its top digit.
    {
        GuessRange ri = guessRange(has[0], false, base);
        GuessRange rj = guessRange(has[1], true, base);
        for (unsigned c1 = 0; c1 < m; ++c1)
            for (unsigned x2 = 0; x2 < (sx ? base : 1); ++x2)
                for (unsigned i = ri.lo; i < ri.hi; ++i)
                    for (unsigned j = rj.lo; j < rj.hi; ++j)
                        for (unsigned al = 0; al < m; ++al) {
                            unsigned sum = i + j + al;
                            if (sum / base != c1)
                                continue;
                            out.addEdge(l1At(c1, x2),
                                        {FoldedKind::Lead2, uint8_t(sum % base), 0},
                                        l2At(al, x2, i, j));
                        }
    }

    // First pair: offset 2 tops out on the high side, offset 3 on the low
    // side; the low addition starts carry-free.
    {
        GuessRange ri = guessRange(has[0], false, base);
        GuessRange rj = guessRange(has[1], false, base);
        GuessRange rk = guessRange(has[2], true, base);
        GuessRange rl = guessRange(has[3], true, base);
        for (unsigned c1 = 0; c1 < m; ++c1)
            for (unsigned x1 = 0; x1 < (sx ? base : 1); ++x1)
                for (unsigned x2 = 0; x2 < (sx ? base : 1); ++x2)
                    for (unsigned y = 0; y < (sy ? base : 1); ++y)
                        for (unsigned i = ri.lo; i < ri.hi; ++i)
                            for (unsigned j = rj.lo; j < rj.hi; ++j)
                                for (unsigned k = rk.lo; k < rk.hi; ++k)
                                    for (unsigned l = rl.lo; l < rl.hi; ++l)
                                        for (unsigned al = 0; al < m; ++al) {
                                            unsigned hiSum = i + j + k + al;
                                            if (hiSum / base != c1)
                                                continue;
                                            unsigned loSum = x1 + y + k + l;
                                            out.addEdge(
                                                l2At(c1, x1, x2, y),
                                                {FoldedKind::FirstPair,
                                                 uint8_t(hiSum % base),
                                                 uint8_t(loSum % base)},
                                                tAt(al, loSum / base, x2, i, j, l));
                                        }
    }

    // Later pairs and the optional final middle digit run over the full
    // tuple pool with unconstrained guesses.
    for (unsigned c1 = 0; c1 < m; ++c1)
        for (unsigned c2 = 0; c2 < m; ++c2)
            for (unsigned x1 = 0; x1 < (sx ? base : 1); ++x1)
                for (unsigned x2 = 0; x2 < (sx ? base : 1); ++x2)
                    for (unsigned y = 0; y < (sy ? base : 1); ++y)
                        for (unsigned z = 0; z < (sz ? base : 1); ++z) {
                            const uint32_t src = tAt(c1, c2, x1, x2, y, z);
                            GuessRange ri = guessRange(has[0], false, base);
                            GuessRange rj = guessRange(has[1], false, base);
                            GuessRange rk = guessRange(has[2], false, base);
                            GuessRange rl = guessRange(has[3], false, base);
                            for (unsigned i = ri.lo; i < ri.hi; ++i)
                                for (unsigned j = rj.lo; j < rj.hi; ++j)
                                    for (unsigned k = rk.lo; k < rk.hi; ++k)
                                        for (unsigned l = rl.lo; l < rl.hi; ++l)
                                            for (unsigned al = 0; al < m; ++al) {
                                                unsigned hiSum = i + j + k + z + al;
                                                if (hiSum / base != c1)
                                                    continue;
                                                unsigned loSum = x1 + y + k + l + c2;
                                                out.addEdge(
                                                    src,
                                                    {FoldedKind::Pair,
                                                     uint8_t(hiSum % base),
                                                     uint8_t(loSum % base)},
                                                    tAt(al, loSum / base, x2, i, j, l));
                                            }
                            // middle: the one addition both ends share
                            for (unsigned k = rk.lo; k < rk.hi; ++k) {
                                unsigned sum = x1 + y + k + z + c2;
                                if (sum / base != c1)
                                    continue;
                                out.addEdge(src, {FoldedKind::Middle, uint8_t(sum % base), 0},
                                            acc);
                            }
                        }
    return out;
}

Nfa genFoldedCheckerLoose(unsigned base, const std::vector<unsigned>& offsets,
                          const std::string& namePrefix) {
    if (base < 2 || base > 9)
        throw ContractError("base out of range");
    std::vector<unsigned> offs = offsets;
    std::sort(offs.begin(), offs.end());
    if (offs.empty() || offs.back() > 3 ||
        std::adjacent_find(offs.begin(), offs.end()) != offs.end())
        throw ContractError("offsets must be distinct values in 0..3");

    const unsigned m = unsigned(offs.size());
    bool has[4] = {false, false, false, false};
    for (unsigned o : offs)
        has[o] = true;
    const bool sx = has[0], sy = has[1], sz = has[3];
    const unsigned bx = sx ? base : 1, by = sy ? base : 1, bz = sz ? base : 1;

    Nfa out(foldedAlphabet(base));
    const uint32_t start = out.addState(namePrefix + "start", false, true);

    // Same tuple space as genFoldedChecker, but it is the whole machine:
    // lead symbols land on tuples whose not-yet-guessed coordinates are
    // still zero, rather than on dedicated stage states.
    const unsigned tSlots = bx * bx * by * bz;
    std::vector<uint32_t> tPool(m * m * tSlots);
    auto tSlot = [&](unsigned x1, unsigned x2, unsigned y, unsigned z) {
        unsigned idx = 0;
        if (sx)
            idx = x1 * base + x2;
        if (sy)
            idx = idx * base + y;
        if (sz)
            idx = idx * base + z;
        return idx;
    };
    auto tName = [&](unsigned c1, unsigned c2, unsigned x1, unsigned x2, unsigned y,
                     unsigned z) {
        std::string s = namePrefix + "q_" + std::to_string(c1) + std::to_string(c2);
        std::string tail;
        if (sx)
            tail += std::to_string(x1) + std::to_string(x2);
        if (sy)
            tail += std::to_string(y);
        if (sz)
            tail += std::to_string(z);
        return tail.empty() ? s : s + "_" + tail;
    };
    for (unsigned c1 = 0; c1 < m; ++c1)
        for (unsigned c2 = 0; c2 < m; ++c2)
            for (unsigned x1 = 0; x1 < bx; ++x1)
                for (unsigned x2 = 0; x2 < bx; ++x2)
                    for (unsigned y = 0; y < by; ++y)
                        for (unsigned z = 0; z < bz; ++z)
                            tPool[(c1 * m + c2) * tSlots + tSlot(x1, x2, y, z)] =
                                out.addState(tName(c1, c2, x1, x2, y, z),
                                             c1 == c2 && (!sx || x1 == x2), false);
    auto tAt = [&](unsigned c1, unsigned c2, unsigned x1, unsigned x2, unsigned y,
                   unsigned z) {
        return tPool[(c1 * m + c2) * tSlots + tSlot(x1, x2, y, z)];
    };
    const uint32_t acc = out.addState(namePrefix + "q_acc", true, false);

    {
        GuessRange rs = guessRange(has[0], true, base);
        for (unsigned s = rs.lo; s < rs.hi; ++s)
            for (unsigned al = 0; al < m; ++al) {
                unsigned sum = s + al;
                if (sum >= base)
                    continue;
                out.addEdge(start, {FoldedKind::Lead1, uint8_t(sum), 0},
                            tAt(al, 0, 0, s, 0, 0));
            }
    }
    {
        GuessRange ri = guessRange(has[0], false, base);
        GuessRange rj = guessRange(has[1], true, base);
        for (unsigned c1 = 0; c1 < m; ++c1)
            for (unsigned x2 = 0; x2 < bx; ++x2)
                for (unsigned i = ri.lo; i < ri.hi; ++i)
                    for (unsigned j = rj.lo; j < rj.hi; ++j)
                        for (unsigned al = 0; al < m; ++al) {
                            unsigned sum = i + j + al;
                            if (sum / base != c1)
                                continue;
                            out.addEdge(tAt(c1, 0, 0, x2, 0, 0),
                                        {FoldedKind::Lead2, uint8_t(sum % base), 0},
                                        tAt(al, 0, x2, i, j, 0));
                        }
    }
    {
        GuessRange ri = guessRange(has[0], false, base);
        GuessRange rj = guessRange(has[1], false, base);
        GuessRange rk = guessRange(has[2], true, base);
        GuessRange rl = guessRange(has[3], true, base);
        for (unsigned c1 = 0; c1 < m; ++c1)
            for (unsigned x1 = 0; x1 < bx; ++x1)
                for (unsigned x2 = 0; x2 < bx; ++x2)
                    for (unsigned y = 0; y < by; ++y)
                        for (unsigned i = ri.lo; i < ri.hi; ++i)
                            for (unsigned j = rj.lo; j < rj.hi; ++j)
                                for (unsigned k = rk.lo; k < rk.hi; ++k)
                                    for (unsigned l = rl.lo; l < rl.hi; ++l)
                                        for (unsigned al = 0; al < m; ++al) {
                                            unsigned hiSum = i + j + k + al;
                                            if (hiSum / base != c1)
                                                continue;
                                            unsigned loSum = x1 + y + k + l;
                                            out.addEdge(
                                                tAt(c1, 0, x1, x2, y, 0),
                                                {FoldedKind::FirstPair,
                                                 uint8_t(hiSum % base),
                                                 uint8_t(loSum % base)},
                                                tAt(al, loSum / base, x2, i, j, l));
                                        }
    }
    for (unsigned c1 = 0; c1 < m; ++c1)
        for (unsigned c2 = 0; c2 < m; ++c2)
            for (unsigned x1 = 0; x1 < bx; ++x1)
                for (unsigned x2 = 0; x2 < bx; ++x2)
                    for (unsigned y = 0; y < by; ++y)
                        for (unsigned z = 0; z < bz; ++z) {
                            const uint32_t src = tAt(c1, c2, x1, x2, y, z);
                            GuessRange ri = guessRange(has[0], false, base);
                            GuessRange rj = guessRange(has[1], false, base);
                            GuessRange rk = guessRange(has[2], false, base);
                            GuessRange rl = guessRange(has[3], false, base);
                            for (unsigned i = ri.lo; i < ri.hi; ++i)
                                for (unsigned j = rj.lo; j < rj.hi; ++j)
                                    for (unsigned k = rk.lo; k < rk.hi; ++k)
                                        for (unsigned l = rl.lo; l < rl.hi; ++l)
                                            for (unsigned al = 0; al < m; ++al) {
                                                unsigned hiSum = i + j + k + z + al;
                                                if (hiSum / base != c1)
                                                    continue;
                                                unsigned loSum = x1 + y + k + l + c2;
                                                out.addEdge(
                                                    src,
                                                    {FoldedKind::Pair,
                                                     uint8_t(hiSum % base),
                                                     uint8_t(loSum % base)},
                                                    tAt(al, loSum / base, x2, i, j, l));
                                            }
                            for (unsigned k = rk.lo; k < rk.hi; ++k) {
                                unsigned sum = x1 + y + k + z + c2;
                                if (sum / base != c1)
                                    continue;
                                out.addEdge(src, {FoldedKind::Middle, uint8_t(sum % base), 0},
                                            acc);
                            }
                        }
    return out;
}

const std::vector<std::pair<std::string, std::vector<unsigned>>>& foldedCases(unsigned base) {
    static const std::vector<std::pair<std::string, std::vector<unsigned>>> base3 = {
        {"a", {0, 1, 2}}, {"b", {0, 2, 3}}, {"c", {1, 2, 3}}, {"d", {1, 2}}};
    static const std::vector<std::pair<std::string, std::vector<unsigned>>> base4 = {
        {"a", {1, 2, 3}}, {"b", {0, 2, 3}}};
    if (base == 3)
        return base3;
    if (base == 4)
        return base4;
    throw ContractError("summand-length cases are tabulated for bases 3 and 4 only");
}

namespace {

Nfa caseUnion(unsigned base, const std::string& which) {
    const auto& cases = foldedCases(base);
    if (which == "all") {
        Nfa all = genFoldedChecker(base, cases[0].second, cases[0].first + ".");
        for (size_t i = 1; i < cases.size(); ++i)
            all = nfaUnion(all, genFoldedChecker(base, cases[i].second, cases[i].first + "."));
        return all;
    }
    for (const auto& [name, offs] : cases)
        if (which == name)
            return genFoldedChecker(base, offs);
    std::string menu;
    for (const auto& [name, offs] : cases)
        menu += name + ", ";
    throw ContractError("case must be one of " + menu + "all");
}

} // namespace

Nfa base3Checker(const std::string& which) {
    return caseUnion(3, which);
}

Nfa base4Checker(const std::string& which) {
    return caseUnion(4, which);
}

Nfa foldedSyntax(unsigned base, unsigned minUnfoldedLen) {
    if (minUnfoldedLen < 4)
        throw ContractError("folded words carry at least 4 digits");
    Nfa out(foldedAlphabet(base));
    uint32_t n0 = out.addState("n0", false, true);
    uint32_t n1 = out.addState("n1", false, false);
    uint32_t n2 = out.addState("n2", false, false);
    // pair states count unfolded digits so far, capped once past the bound
    const unsigned cap = minUnfoldedLen + (minUnfoldedLen % 2);
    std::vector<uint32_t> pairAt;
    for (unsigned k = 4; k <= cap; k += 2)
        pairAt.push_back(out.addState("p" + std::to_string(k), k >= minUnfoldedLen, false));
    uint32_t macc = out.addState("macc", true, false);

    for (uint8_t d = 1; d < base; ++d) // canonical: leading digit nonzero
        out.addEdge(n0, {FoldedKind::Lead1, d, 0}, n1);
    for (uint8_t d = 0; d < base; ++d)
        out.addEdge(n1, {FoldedKind::Lead2, d, 0}, n2);
    for (uint8_t h = 0; h < base; ++h)
        for (uint8_t l = 0; l < base; ++l)
            out.addEdge(n2, {FoldedKind::FirstPair, h, l}, pairAt[0]);
    for (size_t p = 0; p < pairAt.size(); ++p) {
        unsigned k = 4 + 2 * unsigned(p);
        uint32_t nextPair = pairAt[std::min(p + 1, pairAt.size() - 1)];
        for (uint8_t h = 0; h < base; ++h)
            for (uint8_t l = 0; l < base; ++l)
                out.addEdge(pairAt[p], {FoldedKind::Pair, h, l}, nextPair);
        if (k + 1 >= minUnfoldedLen)
            for (uint8_t d = 0; d < base; ++d)
                out.addEdge(pairAt[p], {FoldedKind::Middle, d, 0}, macc);
    }
    return out;
}

}  // namespace palsum
