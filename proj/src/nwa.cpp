#include "palsum/nwa.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_set>

#include "palsum/errors.hpp"

namespace palsum {

namespace {

void sortUnique(std::vector<uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sortUnique32(std::vector<uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Successor access that folds the implicit sink in as state m.numStates.
struct SuccView {
    const Nwa* m;
    bool hasSink;
    uint32_t sink;

    explicit SuccView(const Nwa& mm)
        : m(&mm), hasSink(mm.implicitSink), sink(mm.numStates) {}

    uint32_t stateCount() const { return m->numStates + (hasSink ? 1 : 0); }

    bool accepting(uint32_t q) const {
        return q >= m->numStates ? m->sinkAccepting : bool(m->accepting[q]);
    }

    void internal(uint32_t q, int bit, std::vector<uint32_t>& out) const {
        if (q >= m->numStates) { out.push_back(sink); return; }
        const auto& l = m->intTo[bit][q];
        if (l.empty()) { if (hasSink) out.push_back(sink); return; }
        out.insert(out.end(), l.begin(), l.end());
    }

    void call(uint32_t q, int bit, std::vector<uint32_t>& out) const {
        if (q >= m->numStates) { out.push_back(sink); return; }
        const auto& l = m->callTo[bit][q];
        if (l.empty()) { if (hasSink) out.push_back(sink); return; }
        out.insert(out.end(), l.begin(), l.end());
    }

    void ret(uint32_t q, uint32_t popped, int bit, std::vector<uint32_t>& out) const {
        if (q >= m->numStates) { out.push_back(sink); return; }
        auto it = m->retTo[bit].find(Nwa::retKey(q, popped));
        if (it == m->retTo[bit].end() || it->second.empty()) {
            if (hasSink) out.push_back(sink);
            return;
        }
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
};

}  // namespace

uint32_t Nwa::addState(std::string name, bool acc, bool init) {
    uint32_t id = numStates++;
    accepting.push_back(acc ? 1 : 0);
    for (int bit = 0; bit < 2; ++bit) {
        callTo[bit].emplace_back();
        intTo[bit].emplace_back();
    }
    if (!name.empty() || !names.empty()) {
        names.resize(numStates);
        names[id] = std::move(name);
    }
    if (init) initial.push_back(id);
    return id;
}

void Nwa::addCall(uint32_t q, int bit, uint32_t to) { callTo[bit][q].push_back(to); }
void Nwa::addInternal(uint32_t q, int bit, uint32_t to) { intTo[bit][q].push_back(to); }
void Nwa::addReturn(uint32_t q, uint32_t popped, int bit, uint32_t to) {
    retTo[bit][retKey(q, popped)].push_back(to);
}

std::string Nwa::stateName(uint32_t q) const {
    if (q < names.size() && !names[q].empty()) return names[q];
    return "q" + std::to_string(q);
}

uint32_t Nwa::stateByName(const std::string& name) const {
    for (uint32_t q = 0; q < numStates; ++q)
        if (stateName(q) == name) return q;
    throw ContractError("no state named " + name);
}

size_t Nwa::countCallEdges() const {
    size_t n = 0;
    for (int bit = 0; bit < 2; ++bit)
        for (const auto& l : callTo[bit]) n += l.size();
    return n;
}

size_t Nwa::countInternalEdges() const {
    size_t n = 0;
    for (int bit = 0; bit < 2; ++bit)
        for (const auto& l : intTo[bit]) n += l.size();
    return n;
}

size_t Nwa::countReturnEdges() const {
    size_t n = 0;
    for (int bit = 0; bit < 2; ++bit)
        for (const auto& [k, l] : retTo[bit]) n += l.size();
    return n;
}

bool validateDeterministic(const Nwa& m) {
    if (!m.deterministic) return true;
    if (m.initial.size() > 1) return false;
    for (int bit = 0; bit < 2; ++bit) {
        for (const auto& l : m.callTo[bit])
            if (l.size() > 1) return false;
        for (const auto& l : m.intTo[bit])
            if (l.size() > 1) return false;
        for (const auto& [k, l] : m.retTo[bit])
            if (l.size() > 1) return false;
    }
    return true;
}

// Simulation via summary pairs (pushContext, currentState), so the frontier
// stays polynomial even for nondeterministic machines.
bool accepts(const Nwa& m, const NestedWord& w) {
    SuccView v(m);
    std::vector<uint64_t> cur;
    for (uint32_t q : m.initial) cur.push_back((uint64_t(q) << 32) | q);
    sortUnique(cur);

    std::vector<std::vector<uint64_t>> stk;
    std::vector<uint32_t> succ;
    for (const TaggedSymbol& sym : w) {
        if (cur.empty()) return false;
        int bit = sym.bit;
        std::vector<uint64_t> nxt;
        switch (sym.cls) {
            case SymClass::Internal:
                for (uint64_t pk : cur) {
                    uint32_t p = uint32_t(pk >> 32), q = uint32_t(pk);
                    succ.clear();
                    v.internal(q, bit, succ);
                    for (uint32_t q2 : succ) nxt.push_back((uint64_t(p) << 32) | q2);
                }
                break;
            case SymClass::Call:
                stk.push_back(cur);
                for (uint64_t pk : cur) {
                    uint32_t q = uint32_t(pk);
                    succ.clear();
                    v.call(q, bit, succ);
                    for (uint32_t q2 : succ) nxt.push_back((uint64_t(q) << 32) | q2);
                }
                break;
            case SymClass::Return: {
                if (stk.empty()) return false;  // dead run
                std::vector<uint64_t> T = std::move(stk.back());
                stk.pop_back();
                std::unordered_map<uint32_t, std::vector<uint32_t>> byPusher;
                for (uint64_t pk : cur) byPusher[uint32_t(pk >> 32)].push_back(uint32_t(pk));
                for (uint64_t pk : T) {
                    uint32_t p = uint32_t(pk >> 32), q = uint32_t(pk);
                    auto it = byPusher.find(q);
                    if (it == byPusher.end()) continue;
                    for (uint32_t x : it->second) {
                        succ.clear();
                        v.ret(x, q, bit, succ);
                        for (uint32_t q2 : succ) nxt.push_back((uint64_t(p) << 32) | q2);
                    }
                }
                break;
            }
        }
        sortUnique(nxt);
        cur = std::move(nxt);
    }
    for (uint64_t pk : cur)
        if (v.accepting(uint32_t(pk))) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Materialization engine: builds the reachable part of an abstract NWA given
// by a System. Reachability is stack-aware (a state only counts if some run
// with a consistent stack gets there), so counts are exact.
//
// System interface:
//   std::vector<uint32_t> initialStates();              // interns
//   void intSucc(uint32_t s, int bit, std::vector<uint32_t>& out);
//   void callSucc(uint32_t s, int bit, std::vector<uint32_t>& out);
//   void retSucc(uint32_t s, uint32_t popped, int bit, std::vector<uint32_t>& out);
//   bool accepting(uint32_t s) const;
//   size_t count() const;                                // states interned
// ---------------------------------------------------------------------------

namespace {

constexpr uint32_t BOTTOM = std::numeric_limits<uint32_t>::max();

template <class System>
Nwa materializeNwa(System& sys, size_t budget, const char* what) {
    Nwa out;
    std::vector<uint8_t> expanded;

    auto sync = [&]() {
        size_t n = sys.count();
        if (n > budget) throw ResourceLimitError(what, n, budget);
        while (out.numStates < n) {
            uint32_t id = out.numStates++;
            out.accepting.push_back(sys.accepting(id) ? 1 : 0);
            for (int bit = 0; bit < 2; ++bit) {
                out.callTo[bit].emplace_back();
                out.intTo[bit].emplace_back();
            }
            expanded.push_back(0);
        }
    };

    auto configKey = [](uint32_t top, uint32_t cur) {
        return (uint64_t(top + 1) << 32) | cur;  // BOTTOM maps to 0
    };

    std::unordered_set<uint64_t> seenConfig;
    std::vector<std::pair<uint32_t, uint32_t>> work;
    std::unordered_map<uint32_t, std::vector<uint32_t>> byTop;   // top -> curs
    std::unordered_map<uint32_t, std::vector<uint32_t>> belows;  // pushed -> states below
    std::unordered_set<uint64_t> belowSeen;
    std::array<std::unordered_set<uint64_t>, 2> retComputed;

    auto addConfig = [&](uint32_t top, uint32_t cur) {
        if (seenConfig.insert(configKey(top, cur)).second) work.emplace_back(top, cur);
    };

    std::vector<uint32_t> succBuf;
    // Successors for (cur, popped, bit), computed once and cached in out.retTo.
    auto retTargets = [&](uint32_t cur, uint32_t popped, int bit) -> std::vector<uint32_t> {
        uint64_t rk = Nwa::retKey(cur, popped);
        if (retComputed[bit].insert(rk).second) {
            std::vector<uint32_t> v;
            sys.retSucc(cur, popped, bit, v);
            sortUnique32(v);
            sync();
            if (!v.empty()) out.retTo[bit][rk] = v;
            return v;
        }
        auto it = out.retTo[bit].find(rk);
        return it == out.retTo[bit].end() ? std::vector<uint32_t>{} : it->second;
    };

    auto addBelow = [&](uint32_t below, uint32_t pushed) {
        uint64_t key = (uint64_t(below + 1) << 32) | pushed;
        if (!belowSeen.insert(key).second) return;
        belows[pushed].push_back(below);
        // Returns already discovered on stacks topped by `pushed` now also
        // land with `below` as the new top.
        auto it = byTop.find(pushed);
        if (it == byTop.end()) return;
        for (uint32_t cur : it->second)
            for (int bit = 0; bit < 2; ++bit)
                for (uint32_t v2 : retTargets(cur, pushed, bit)) addConfig(below, v2);
    };

    {
        std::vector<uint32_t> inits = sys.initialStates();
        sync();
        out.initial = inits;
        sortUnique32(out.initial);
        for (uint32_t s : out.initial) addConfig(BOTTOM, s);
    }

    while (!work.empty()) {
        auto [top, cur] = work.back();
        work.pop_back();
        sync();
        if (top != BOTTOM) byTop[top].push_back(cur);

        if (!expanded[cur]) {
            expanded[cur] = 1;
            for (int bit = 0; bit < 2; ++bit) {
                succBuf.clear();
                sys.intSucc(cur, bit, succBuf);
                sortUnique32(succBuf);
                sync();
                out.intTo[bit][cur] = succBuf;
                succBuf.clear();
                sys.callSucc(cur, bit, succBuf);
                sortUnique32(succBuf);
                sync();
                out.callTo[bit][cur] = succBuf;
            }
        }

        for (int bit = 0; bit < 2; ++bit)
            for (uint32_t s2 : out.intTo[bit][cur]) addConfig(top, s2);

        bool anyCall = !out.callTo[0][cur].empty() || !out.callTo[1][cur].empty();
        if (anyCall) {
            addBelow(top, cur);
            for (int bit = 0; bit < 2; ++bit)
                for (uint32_t s2 : out.callTo[bit][cur]) addConfig(cur, s2);
        }

        if (top != BOTTOM) {
            for (int bit = 0; bit < 2; ++bit) {
                std::vector<uint32_t> ts = retTargets(cur, top, bit);
                if (ts.empty()) continue;
                const auto& bl = belows[top];
                for (uint32_t v2 : ts)
                    for (uint32_t below : bl) addConfig(below, v2);
            }
        }
    }
    return out;
}

struct VecU64Hash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        uint64_t h = 1469598103934665603ull ^ v.size();
        for (uint64_t x : v) h = (h ^ x) * 1099511628211ull;
        return size_t(h);
    }
};

// Subset construction over summary pairs (stateAtLastPendingCall, state).
struct DetSystem {
    const Nwa& in;
    std::unordered_map<std::vector<uint64_t>, uint32_t, VecU64Hash> ids;
    std::vector<const std::vector<uint64_t>*> content;

    explicit DetSystem(const Nwa& m) : in(m) {}

    uint32_t intern(std::vector<uint64_t>&& v) {
        auto [it, fresh] = ids.try_emplace(std::move(v), uint32_t(content.size()));
        if (fresh) content.push_back(&it->first);
        return it->second;
    }

    size_t count() const { return content.size(); }

    std::vector<uint32_t> initialStates() {
        std::vector<uint64_t> s0;
        for (uint32_t q : in.initial) s0.push_back((uint64_t(q) << 32) | q);
        sortUnique(s0);
        return {intern(std::move(s0))};
    }

    bool accepting(uint32_t s) const {
        for (uint64_t pk : *content[s])
            if (in.accepting[uint32_t(pk)]) return true;
        return false;
    }

    void intSucc(uint32_t s, int bit, std::vector<uint32_t>& out) {
        std::vector<uint64_t> nxt;
        for (uint64_t pk : *content[s]) {
            uint64_t p = pk >> 32;
            for (uint32_t q2 : in.intTo[bit][uint32_t(pk)]) nxt.push_back((p << 32) | q2);
        }
        if (nxt.empty()) return;
        sortUnique(nxt);
        out.push_back(intern(std::move(nxt)));
    }

    void callSucc(uint32_t s, int bit, std::vector<uint32_t>& out) {
        std::vector<uint64_t> nxt;
        for (uint64_t pk : *content[s]) {
            uint32_t q = uint32_t(pk);
            for (uint32_t q2 : in.callTo[bit][q]) nxt.push_back((uint64_t(q) << 32) | q2);
        }
        if (nxt.empty()) return;
        sortUnique(nxt);
        out.push_back(intern(std::move(nxt)));
    }

    void retSucc(uint32_t s, uint32_t popped, int bit, std::vector<uint32_t>& out) {
        std::unordered_map<uint32_t, std::vector<uint32_t>> byPusher;
        for (uint64_t pk : *content[s]) byPusher[uint32_t(pk >> 32)].push_back(uint32_t(pk));
        std::vector<uint64_t> nxt;
        for (uint64_t pk : *content[popped]) {
            uint64_t p = pk >> 32;
            uint32_t q = uint32_t(pk);
            auto it = byPusher.find(q);
            if (it == byPusher.end()) continue;
            for (uint32_t x : it->second) {
                auto rt = in.retTo[bit].find(Nwa::retKey(x, q));
                if (rt == in.retTo[bit].end()) continue;
                for (uint32_t v2 : rt->second) nxt.push_back((p << 32) | v2);
            }
        }
        if (nxt.empty()) return;
        sortUnique(nxt);
        out.push_back(intern(std::move(nxt)));
    }
};

struct ProductSystem {
    SuccView a, b;
    std::unordered_map<uint64_t, uint32_t> ids;
    std::vector<uint64_t> packOf;

    ProductSystem(const Nwa& ma, const Nwa& mb) : a(ma), b(mb) {}

    uint32_t intern(uint64_t pk) {
        auto [it, fresh] = ids.try_emplace(pk, uint32_t(packOf.size()));
        if (fresh) packOf.push_back(pk);
        return it->second;
    }

    size_t count() const { return packOf.size(); }

    std::vector<uint32_t> initialStates() {
        std::vector<uint32_t> out;
        for (uint32_t qa : a.m->initial)
            for (uint32_t qb : b.m->initial)
                out.push_back(intern((uint64_t(qa) << 32) | qb));
        return out;
    }

    bool accepting(uint32_t s) const {
        uint64_t pk = packOf[s];
        return a.accepting(uint32_t(pk >> 32)) && b.accepting(uint32_t(pk));
    }

    template <class FA, class FB>
    void cross(uint32_t s, FA&& fa, FB&& fb, std::vector<uint32_t>& out) {
        uint64_t pk = packOf[s];
        std::vector<uint32_t> va, vb;
        fa(uint32_t(pk >> 32), va);
        if (va.empty()) return;
        fb(uint32_t(pk), vb);
        for (uint32_t x : va)
            for (uint32_t y : vb) out.push_back(intern((uint64_t(x) << 32) | y));
    }

    void intSucc(uint32_t s, int bit, std::vector<uint32_t>& out) {
        cross(
            s, [&](uint32_t q, std::vector<uint32_t>& v) { a.internal(q, bit, v); },
            [&](uint32_t q, std::vector<uint32_t>& v) { b.internal(q, bit, v); }, out);
    }

    void callSucc(uint32_t s, int bit, std::vector<uint32_t>& out) {
        cross(
            s, [&](uint32_t q, std::vector<uint32_t>& v) { a.call(q, bit, v); },
            [&](uint32_t q, std::vector<uint32_t>& v) { b.call(q, bit, v); }, out);
    }

    void retSucc(uint32_t s, uint32_t popped, int bit, std::vector<uint32_t>& out) {
        uint64_t pp = packOf[popped];
        cross(
            s,
            [&](uint32_t q, std::vector<uint32_t>& v) { a.ret(q, uint32_t(pp >> 32), bit, v); },
            [&](uint32_t q, std::vector<uint32_t>& v) { b.ret(q, uint32_t(pp), bit, v); }, out);
    }
};

}  // namespace

Nwa determinize(const Nwa& m, size_t budget) {
    if (m.implicitSink)
        throw ContractError("determinize: input with an implicit sink is not supported");
    DetSystem sys(m);
    Nwa out = materializeNwa(sys, budget, "determinize");
    out.deterministic = true;
    return out;
}

Nwa flipTotal(const Nwa& m) {
    if (!m.deterministic) throw ContractError("flipTotal requires a deterministic machine");
    Nwa out = m;
    for (auto& f : out.accepting) f = f ? 0 : 1;
    out.sinkAccepting = m.implicitSink ? !m.sinkAccepting : true;
    out.implicitSink = true;
    return out;
}

Nwa product(const Nwa& a, const Nwa& b, size_t budget) {
    ProductSystem sys(a, b);
    Nwa out = materializeNwa(sys, budget, "product");
    out.deterministic = a.deterministic && b.deterministic;
    return out;
}

Nwa complementWithin(const Nwa& a, const Nwa& within, size_t budget) {
    if (a.deterministic) return product(within, flipTotal(a), budget);
    return product(within, flipTotal(determinize(a, budget)), budget);
}

Nwa unionWithin(const Nwa& a, const Nwa& b, const Nwa& within, size_t budget) {
    Nwa ca = complementWithin(a, within, budget);
    Nwa cb = complementWithin(b, within, budget);
    Nwa both = product(ca, cb, budget);
    return complementWithin(both, within, budget);
}

// ---------------------------------------------------------------------------
// Emptiness and shortest witness.
//
// wmLen[(p,q)] = length of the shortest well-matched word from p to q,
// computed as a shortest-derivation fixpoint (Dijkstra order; every
// non-degenerate production strictly increases length, so finalization is
// sound). On top of it, distAcc[q] = shortest word from q to acceptance,
// where pending calls are allowed since acceptance ignores leftover stack.
// Reconstruction walks optimal decompositions, trying symbols in
// a<b<c<d<e<f order; all candidate words have the same (minimal) length, so
// plain string comparison breaks ties.
// ---------------------------------------------------------------------------

namespace {

struct EmptinessSolver {
    const Nwa& m;
    SuccView v;
    uint32_t n;
    std::vector<std::vector<uint32_t>> callersOf;
    std::unordered_map<uint64_t, uint32_t> wmLen;
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> outRows, inRows;
    std::vector<uint32_t> distAcc;
    static constexpr uint32_t INF = std::numeric_limits<uint32_t>::max();

    std::unordered_map<uint64_t, std::string> wmMemo;
    std::unordered_map<uint32_t, std::string> accMemo;

    explicit EmptinessSolver(const Nwa& mm) : m(mm), v(mm), n(v.stateCount()) {
        callersOf.assign(n, {});
        std::vector<uint32_t> succ;
        for (uint32_t q = 0; q < n; ++q)
            for (int bit = 0; bit < 2; ++bit) {
                succ.clear();
                v.call(q, bit, succ);
                for (uint32_t q2 : succ) callersOf[q2].push_back(q);
            }
        for (auto& l : callersOf) sortUnique32(l);
        computeWm();
        computeDistAcc();
    }

    static uint64_t pairKey(uint32_t p, uint32_t q) { return (uint64_t(p) << 32) | q; }

    void computeWm() {
        outRows.assign(n, {});
        inRows.assign(n, {});
        std::unordered_map<uint64_t, uint32_t> best;
        using Entry = std::pair<uint32_t, uint64_t>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        auto relax = [&](uint32_t p, uint32_t q, uint32_t len) {
            uint64_t key = pairKey(p, q);
            if (wmLen.count(key)) return;
            auto [it, fresh] = best.try_emplace(key, len);
            if (!fresh && it->second <= len) return;
            it->second = len;
            heap.push({len, key});
        };
        for (uint32_t q = 0; q < n; ++q) relax(q, q, 0);

        std::vector<uint32_t> succ;
        while (!heap.empty()) {
            auto [len, key] = heap.top();
            heap.pop();
            if (wmLen.count(key)) continue;
            wmLen.emplace(key, len);
            uint32_t p = uint32_t(key >> 32), x = uint32_t(key);
            outRows[p].push_back({x, len});
            inRows[x].push_back({p, len});
            // extend by one internal symbol
            for (int bit = 0; bit < 2; ++bit) {
                succ.clear();
                v.internal(x, bit, succ);
                for (uint32_t x2 : succ) relax(p, x2, len + 1);
            }
            // wrap in a call/return pair: q -a-> p ... x -r(pop q)-> y
            for (uint32_t q : callersOf[p])
                for (int bit = 0; bit < 2; ++bit) {
                    succ.clear();
                    v.ret(x, q, bit, succ);
                    for (uint32_t y : succ) relax(q, y, len + 2);
                }
            // concatenate with finalized neighbours
            for (auto [z, l2] : outRows[x]) relax(p, z, len + l2);
            for (auto [w0, l0] : inRows[p]) relax(w0, x, l0 + len);
        }
    }

    void computeDistAcc() {
        distAcc.assign(n, INF);
        using Entry = std::pair<uint32_t, uint32_t>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        auto relax = [&](uint32_t q, uint32_t d) {
            if (d < distAcc[q]) {
                distAcc[q] = d;
                heap.push({d, q});
            }
        };
        for (uint32_t q = 0; q < n; ++q)
            if (v.accepting(q)) relax(q, 0);
        std::vector<uint8_t> done(n, 0);
        while (!heap.empty()) {
            auto [d, x] = heap.top();
            heap.pop();
            if (done[x]) continue;
            done[x] = 1;
            // a well-matched chunk leading into x
            for (auto [q, len] : inRows[x])
                if (len > 0) relax(q, d + len);
            // a pending call into x
            for (uint32_t q : callersOf[x]) relax(q, d + 1);
        }
    }

    uint32_t shortest() const {
        uint32_t best = INF;
        for (uint32_t q : m.initial) best = std::min(best, distAcc[q]);
        return best;
    }

    uint32_t wmLenOf(uint32_t p, uint32_t q) const {
        auto it = wmLen.find(pairKey(p, q));
        return it == wmLen.end() ? INF : it->second;
    }

    // Lex-min well-matched word of length wmLen[(p,x)] from p to x.
    const std::string& lexWm(uint32_t p, uint32_t x) {
        uint64_t key = pairKey(p, x);
        auto memo = wmMemo.find(key);
        if (memo != wmMemo.end()) return memo->second;
        uint32_t L = wmLenOf(p, x);
        std::string best;
        bool have = false;
        if (L == 0) {
            have = true;
        } else {
            std::vector<uint32_t> succ, rets;
            // calls first: a < b < c < d
            for (int bit = 0; bit < 2 && !have; ++bit) {
                succ.clear();
                v.call(p, bit, succ);
                for (uint32_t q1 : succ) {
                    for (auto [xm, l1] : outRows[q1]) {
                        if (2 + l1 > L) continue;
                        for (int rbit = 0; rbit < 2; ++rbit) {
                            rets.clear();
                            v.ret(xm, p, rbit, rets);
                            for (uint32_t y : rets) {
                                uint32_t lyx = wmLenOf(y, x);
                                if (lyx == INF || 2 + l1 + lyx != L) continue;
                                std::string cand;
                                cand += char('a' + bit);
                                cand += lexWm(q1, xm);
                                cand += char('e' + rbit);
                                cand += lexWm(y, x);
                                if (!have || cand < best) { best = std::move(cand); have = true; }
                            }
                        }
                    }
                }
            }
            for (int bit = 0; bit < 2 && !have; ++bit) {
                succ.clear();
                v.internal(p, bit, succ);
                for (uint32_t x0 : succ) {
                    if (wmLenOf(x0, x) != L - 1) continue;
                    std::string cand;
                    cand += char('c' + bit);
                    cand += lexWm(x0, x);
                    if (!have || cand < best) { best = std::move(cand); have = true; }
                }
            }
        }
        if (!have) throw Error("witness reconstruction lost the trail");
        return wmMemo.emplace(key, std::move(best)).first->second;
    }

    // Lex-min word of length distAcc[q] from q to acceptance.
    const std::string& lexAccept(uint32_t q) {
        auto memo = accMemo.find(q);
        if (memo != accMemo.end()) return memo->second;
        uint32_t D = distAcc[q];
        std::string best;
        bool have = false;
        if (D == 0) {
            have = true;
        } else {
            std::vector<uint32_t> succ, rets;
            for (int bit = 0; bit < 2 && !have; ++bit) {
                succ.clear();
                v.call(q, bit, succ);
                for (uint32_t q1 : succ) {
                    // the call stays pending
                    if (distAcc[q1] != INF && 1 + distAcc[q1] == D) {
                        std::string cand;
                        cand += char('a' + bit);
                        cand += lexAccept(q1);
                        if (!have || cand < best) { best = std::move(cand); have = true; }
                    }
                    // the call is matched by a later return
                    for (auto [xm, l1] : outRows[q1]) {
                        if (2 + l1 > D) continue;
                        for (int rbit = 0; rbit < 2; ++rbit) {
                            rets.clear();
                            v.ret(xm, q, rbit, rets);
                            for (uint32_t y : rets) {
                                if (distAcc[y] == INF || 2 + l1 + distAcc[y] != D) continue;
                                std::string cand;
                                cand += char('a' + bit);
                                cand += lexWm(q1, xm);
                                cand += char('e' + rbit);
                                cand += lexAccept(y);
                                if (!have || cand < best) { best = std::move(cand); have = true; }
                            }
                        }
                    }
                }
            }
            for (int bit = 0; bit < 2 && !have; ++bit) {
                succ.clear();
                v.internal(q, bit, succ);
                for (uint32_t x0 : succ) {
                    if (distAcc[x0] == INF || 1 + distAcc[x0] != D) continue;
                    std::string cand;
                    cand += char('c' + bit);
                    cand += lexAccept(x0);
                    if (!have || cand < best) { best = std::move(cand); have = true; }
                }
            }
        }
        if (!have) throw Error("witness reconstruction lost the trail");
        return accMemo.emplace(q, std::move(best)).first->second;
    }
};

}  // namespace

std::optional<NestedWord> shortestAcceptedWord(const Nwa& m) {
    EmptinessSolver solver(m);
    uint32_t L = solver.shortest();
    if (L == EmptinessSolver::INF) return std::nullopt;
    std::string best;
    bool have = false;
    for (uint32_t q : m.initial) {
        if (solver.distAcc[q] != L) continue;
        const std::string& cand = solver.lexAccept(q);
        if (!have || cand < best) { best = cand; have = true; }
    }
    return wordFromText(best);
}

bool isEmpty(const Nwa& m) {
    EmptinessSolver solver(m);
    return solver.shortest() == EmptinessSolver::INF;
}

InclusionResult isIncluded(const Nwa& a, const Nwa& b, size_t budget) {
    Nwa diff = product(a, flipTotal(b.deterministic ? b : determinize(b, budget)), budget);
    auto w = shortestAcceptedWord(diff);
    InclusionResult r;
    r.holds = !w.has_value();
    r.counterexample = std::move(w);
    return r;
}

Nwa buildWordMachine(const NestedWord& w) {
    Nwa m;
    m.deterministic = true;
    for (size_t i = 0; i <= w.size(); ++i)
        m.addState({}, i == w.size(), i == 0);
    std::vector<uint32_t> stk;
    for (size_t i = 0; i < w.size(); ++i) {
        uint32_t q = uint32_t(i);
        switch (w[i].cls) {
            case SymClass::Call:
                m.addCall(q, w[i].bit, q + 1);
                stk.push_back(q);
                break;
            case SymClass::Internal:
                m.addInternal(q, w[i].bit, q + 1);
                break;
            case SymClass::Return:
                if (stk.empty())
                    throw ContractError("buildWordMachine needs a well-matched word");
                m.addReturn(q, stk.back(), w[i].bit, q + 1);
                stk.pop_back();
                break;
        }
    }
    return m;
}

}  // namespace palsum
