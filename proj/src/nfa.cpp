#include "palsum/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>

#include "palsum/errors.hpp"

namespace palsum {

namespace {

void sortUnique(std::vector<uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct VecHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

Nfa::Nfa(std::vector<FoldedSymbol> sigma) : alphabet(std::move(sigma)) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
}

uint32_t Nfa::addState(std::string name, bool isAccepting, bool isInitial) {
    uint32_t id = numStates++;
    names.push_back(std::move(name));
    accepting.push_back(isAccepting ? 1 : 0);
    trans.emplace_back(alphabet.size());
    if (isInitial)
        initial.push_back(id);
    return id;
}

size_t Nfa::symIndex(const FoldedSymbol& s) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
    if (it == alphabet.end() || *it != s)
        throw ContractError("symbol " + foldedSymbolText(s) + " outside the machine alphabet");
    return size_t(it - alphabet.begin());
}

void Nfa::addEdge(uint32_t from, const FoldedSymbol& s, uint32_t to) {
    std::vector<uint32_t>& row = trans[from][symIndex(s)];
    auto it = std::lower_bound(row.begin(), row.end(), to);
    if (it == row.end() || *it != to)
        row.insert(it, to);
}

size_t Nfa::countEdges() const {
    size_t n = 0;
    for (const auto& rows : trans)
        for (const auto& row : rows)
            n += row.size();
    return n;
}

std::vector<FoldedSymbol> foldedAlphabet(unsigned base) {
    if (base < 2)
        throw ContractError("base must be at least 2");
    std::vector<FoldedSymbol> sigma;
    for (uint8_t d = 0; d < base; ++d) {
        sigma.push_back({FoldedKind::Lead1, d, 0});
        sigma.push_back({FoldedKind::Lead2, d, 0});
        sigma.push_back({FoldedKind::Middle, d, 0});
    }
    for (uint8_t h = 0; h < base; ++h)
        for (uint8_t l = 0; l < base; ++l) {
            sigma.push_back({FoldedKind::FirstPair, h, l});
            sigma.push_back({FoldedKind::Pair, h, l});
        }
    std::sort(sigma.begin(), sigma.end());
    return sigma;
}

bool nfaAccepts(const Nfa& m, const FoldedWord& w) {
    std::vector<uint32_t> cur = m.initial;
    for (const FoldedSymbol& s : w) {
        size_t sym = m.symIndex(s);
        std::vector<uint32_t> next;
        for (uint32_t q : cur)
            next.insert(next.end(), m.trans[q][sym].begin(), m.trans[q][sym].end());
        sortUnique(next);
        cur = std::move(next);
        if (cur.empty())
            return false;
    }
    for (uint32_t q : cur)
        if (m.accepting[q])
            return true;
    return false;
}

bool dfaAccepts(const Dfa& m, const FoldedWord& w) {
    uint32_t q = m.initial;
    for (const FoldedSymbol& s : w) {
        auto it = std::lower_bound(m.alphabet.begin(), m.alphabet.end(), s);
        if (it == m.alphabet.end() || *it != s)
            throw ContractError("symbol " + foldedSymbolText(s) + " outside the machine alphabet");
        q = m.next(q, size_t(it - m.alphabet.begin()));
    }
    return m.accepting[q];
}

Dfa nfaDeterminize(const Nfa& m, uint32_t budget) {
    const size_t nsym = m.alphabet.size();
    Dfa out;
    out.alphabet = m.alphabet;

    std::unordered_map<std::vector<uint32_t>, uint32_t, VecHash> ids;
    std::vector<const std::vector<uint32_t>*> content;
    auto intern = [&](std::vector<uint32_t> subset) {
        auto [it, fresh] = ids.try_emplace(std::move(subset), uint32_t(ids.size()));
        if (fresh) {
            if (ids.size() > budget)
                throw ResourceLimitError("nfaDeterminize", uint32_t(ids.size()), budget);
            content.push_back(&it->first);
        }
        return it->second;
    };

    out.initial = intern(m.initial);
    for (uint32_t q = 0; q < content.size(); ++q) {
        const std::vector<uint32_t>& subset = *content[q];
        for (size_t sym = 0; sym < nsym; ++sym) {
            std::vector<uint32_t> next;
            for (uint32_t p : subset)
                next.insert(next.end(), m.trans[p][sym].begin(), m.trans[p][sym].end());
            sortUnique(next);
            out.table.push_back(intern(std::move(next)));
        }
    }

    out.numStates = uint32_t(content.size());
    out.accepting.assign(out.numStates, 0);
    for (uint32_t q = 0; q < out.numStates; ++q)
        for (uint32_t p : *content[q])
            if (m.accepting[p]) {
                out.accepting[q] = 1;
                break;
            }
    return out;
}

namespace {

// Restrict to states reachable from the initial one, preserving order of
// first discovery.
Dfa dfaReachable(const Dfa& m) {
    const size_t nsym = m.alphabet.size();
    std::vector<uint32_t> remap(m.numStates, UINT32_MAX);
    std::vector<uint32_t> order;
    remap[m.initial] = 0;
    order.push_back(m.initial);
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t sym = 0; sym < nsym; ++sym) {
            uint32_t t = m.next(order[i], sym);
            if (remap[t] == UINT32_MAX) {
                remap[t] = uint32_t(order.size());
                order.push_back(t);
            }
        }
    Dfa out;
    out.alphabet = m.alphabet;
    out.numStates = uint32_t(order.size());
    out.initial = 0;
    out.accepting.resize(out.numStates);
    out.table.resize(size_t(out.numStates) * nsym);
    for (uint32_t q = 0; q < out.numStates; ++q) {
        out.accepting[q] = m.accepting[order[q]];
        for (size_t sym = 0; sym < nsym; ++sym)
            out.table[q * nsym + sym] = remap[m.next(order[q], sym)];
    }
    return out;
}

} // namespace

Dfa dfaMinimize(const Dfa& input) {
    Dfa m = dfaReachable(input);
    const size_t nsym = m.alphabet.size();
    const uint32_t n = m.numStates;

    // inverse transitions, per symbol
    std::vector<std::vector<std::vector<uint32_t>>> inv(nsym,
                                                        std::vector<std::vector<uint32_t>>(n));
    for (uint32_t q = 0; q < n; ++q)
        for (size_t sym = 0; sym < nsym; ++sym)
            inv[sym][m.next(q, sym)].push_back(q);

    std::vector<uint32_t> blockOf(n);
    std::vector<std::vector<uint32_t>> blocks;
    {
        std::vector<uint32_t> acc, rej;
        for (uint32_t q = 0; q < n; ++q)
            (m.accepting[q] ? acc : rej).push_back(q);
        if (!acc.empty())
            blocks.push_back(std::move(acc));
        if (!rej.empty())
            blocks.push_back(std::move(rej));
        for (uint32_t b = 0; b < blocks.size(); ++b)
            for (uint32_t q : blocks[b])
                blockOf[q] = b;
    }

    std::deque<uint32_t> work;
    std::vector<uint8_t> inWork(blocks.size(), 0);
    {
        uint32_t seed = (blocks.size() == 2 && blocks[1].size() < blocks[0].size()) ? 1 : 0;
        work.push_back(seed);
        inWork[seed] = 1;
    }

    std::vector<uint32_t> markedCount; // per touched block
    while (!work.empty()) {
        uint32_t splitter = work.front();
        work.pop_front();
        inWork[splitter] = 0;
        std::vector<uint32_t> splitterStates = blocks[splitter]; // copy: blocks mutate below

        for (size_t sym = 0; sym < nsym; ++sym) {
            // X = preimage of the splitter under sym
            std::vector<uint32_t> touched;
            std::vector<std::vector<uint32_t>> markedIn; // parallel to touched
            std::vector<uint32_t> touchedIdx(blocks.size(), UINT32_MAX);
            for (uint32_t q : splitterStates)
                for (uint32_t p : inv[sym][q]) {
                    uint32_t b = blockOf[p];
                    if (touchedIdx[b] == UINT32_MAX) {
                        touchedIdx[b] = uint32_t(touched.size());
                        touched.push_back(b);
                        markedIn.emplace_back();
                    }
                    markedIn[touchedIdx[b]].push_back(p);
                }
            for (size_t t = 0; t < touched.size(); ++t) {
                uint32_t b = touched[t];
                std::vector<uint32_t>& marked = markedIn[t];
                sortUnique(marked);
                if (marked.size() == blocks[b].size())
                    continue; // whole block in the preimage, no split
                // split b into marked / rest
                std::vector<uint32_t> rest;
                rest.reserve(blocks[b].size() - marked.size());
                for (uint32_t q : blocks[b])
                    if (!std::binary_search(marked.begin(), marked.end(), q))
                        rest.push_back(q);
                uint32_t nb = uint32_t(blocks.size());
                blocks[b] = std::move(marked);
                blocks.push_back(std::move(rest));
                inWork.push_back(0);
                touchedIdx.push_back(UINT32_MAX);
                for (uint32_t q : blocks[nb])
                    blockOf[q] = nb;
                if (inWork[b]) {
                    work.push_back(nb);
                    inWork[nb] = 1;
                } else {
                    uint32_t smaller = blocks[nb].size() < blocks[b].size() ? nb : b;
                    work.push_back(smaller);
                    inWork[smaller] = 1;
                }
            }
        }
    }

    Dfa out;
    out.alphabet = m.alphabet;
    out.numStates = uint32_t(blocks.size());
    out.initial = blockOf[m.initial];
    out.accepting.resize(out.numStates);
    out.table.resize(size_t(out.numStates) * nsym);
    for (uint32_t b = 0; b < out.numStates; ++b) {
        uint32_t rep = blocks[b][0];
        out.accepting[b] = m.accepting[rep];
        for (size_t sym = 0; sym < nsym; ++sym)
            out.table[b * nsym + sym] = blockOf[m.next(rep, sym)];
    }
    return dfaReachable(out); // quotient order is arbitrary; renumber stably
}

uint32_t dfaCountProductive(const Dfa& m) {
    const size_t nsym = m.alphabet.size();
    std::vector<std::vector<uint32_t>> inv(m.numStates);
    for (uint32_t q = 0; q < m.numStates; ++q)
        for (size_t sym = 0; sym < nsym; ++sym)
            inv[m.next(q, sym)].push_back(q);
    std::vector<uint8_t> productive(m.numStates, 0);
    std::deque<uint32_t> queue;
    for (uint32_t q = 0; q < m.numStates; ++q)
        if (m.accepting[q]) {
            productive[q] = 1;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        uint32_t q = queue.front();
        queue.pop_front();
        for (uint32_t p : inv[q])
            if (!productive[p]) {
                productive[p] = 1;
                queue.push_back(p);
            }
    }
    uint32_t count = 0;
    for (uint32_t q = 0; q < m.numStates; ++q)
        count += productive[q];
    return count;
}

Dfa dfaComplement(Dfa m) {
    for (auto& a : m.accepting)
        a = a ? 0 : 1;
    return m;
}

Nfa nfaFromDfa(const Dfa& m) {
    Nfa out(m.alphabet);
    for (uint32_t q = 0; q < m.numStates; ++q)
        out.addState("d" + std::to_string(q), m.accepting[q], q == m.initial);
    for (uint32_t q = 0; q < m.numStates; ++q)
        for (size_t sym = 0; sym < m.alphabet.size(); ++sym)
            out.trans[q][sym].push_back(m.next(q, sym));
    return out;
}

namespace {

void requireSameAlphabet(const Nfa& a, const Nfa& b) {
    if (a.alphabet != b.alphabet)
        throw ContractError("machines carry different alphabets");
}

} // namespace

Nfa nfaUnion(const Nfa& a, const Nfa& b) {
    requireSameAlphabet(a, b);
    Nfa out(a.alphabet);
    out.numStates = a.numStates + b.numStates;
    out.names = a.names;
    out.names.insert(out.names.end(), b.names.begin(), b.names.end());
    out.accepting = a.accepting;
    out.accepting.insert(out.accepting.end(), b.accepting.begin(), b.accepting.end());
    out.trans = a.trans;
    out.trans.reserve(out.numStates);
    for (const auto& rows : b.trans) {
        out.trans.push_back(rows);
        for (auto& row : out.trans.back())
            for (uint32_t& t : row)
                t += a.numStates;
    }
    out.initial = a.initial;
    for (uint32_t q : b.initial)
        out.initial.push_back(q + a.numStates);
    return out;
}

Nfa nfaProduct(const Nfa& a, const Nfa& b) {
    requireSameAlphabet(a, b);
    const size_t nsym = a.alphabet.size();
    Nfa out(a.alphabet);
    std::unordered_map<uint64_t, uint32_t> ids;
    std::vector<uint64_t> content;
    auto intern = [&](uint32_t qa, uint32_t qb) {
        uint64_t key = (uint64_t(qa) << 32) | qb;
        auto [it, fresh] = ids.try_emplace(key, uint32_t(ids.size()));
        if (fresh) {
            content.push_back(key);
            out.addState(a.names[qa] + "*" + b.names[qb],
                         a.accepting[qa] && b.accepting[qb], false);
        }
        return it->second;
    };
    for (uint32_t qa : a.initial)
        for (uint32_t qb : b.initial)
            out.initial.push_back(intern(qa, qb));
    sortUnique(out.initial);
    for (uint32_t q = 0; q < content.size(); ++q) {
        uint32_t qa = uint32_t(content[q] >> 32);
        uint32_t qb = uint32_t(content[q]);
        for (size_t sym = 0; sym < nsym; ++sym)
            for (uint32_t ta : a.trans[qa][sym])
                for (uint32_t tb : b.trans[qb][sym])
                    out.addEdge(q, a.alphabet[sym], intern(ta, tb));
    }
    return out;
}

Nfa nfaReduce(const Nfa& m) {
    const size_t nsym = m.alphabet.size();
    const uint32_t n = m.numStates;

    std::vector<uint32_t> classOf(n);
    for (uint32_t q = 0; q < n; ++q)
        classOf[q] = m.accepting[q] ? 1 : 0;
    uint32_t numClasses = n == 0 ? 0 : 2;

    // Refine by signature until stable.  A signature is the state's own class
    // plus, per symbol, the set of successor classes.
    for (;;) {
        std::map<std::vector<uint32_t>, uint32_t> fresh;
        std::vector<uint32_t> next(n);
        for (uint32_t q = 0; q < n; ++q) {
            std::vector<uint32_t> sig;
            sig.push_back(classOf[q]);
            for (size_t sym = 0; sym < nsym; ++sym) {
                std::vector<uint32_t> succ;
                succ.reserve(m.trans[q][sym].size());
                for (uint32_t t : m.trans[q][sym])
                    succ.push_back(classOf[t]);
                sortUnique(succ);
                sig.push_back(uint32_t(succ.size()));
                sig.insert(sig.end(), succ.begin(), succ.end());
            }
            next[q] = fresh.try_emplace(std::move(sig), uint32_t(fresh.size())).first->second;
        }
        if (uint32_t(fresh.size()) == numClasses) {
            classOf = std::move(next);
            break;
        }
        numClasses = uint32_t(fresh.size());
        classOf = std::move(next);
    }

    Nfa out(m.alphabet);
    std::vector<uint32_t> rep(numClasses, UINT32_MAX);
    for (uint32_t q = 0; q < n; ++q)
        if (rep[classOf[q]] == UINT32_MAX)
            rep[classOf[q]] = q;
    for (uint32_t c = 0; c < numClasses; ++c)
        out.addState(m.names[rep[c]], m.accepting[rep[c]], false);
    for (uint32_t q : m.initial)
        out.initial.push_back(classOf[q]);
    sortUnique(out.initial);
    for (uint32_t c = 0; c < numClasses; ++c)
        for (size_t sym = 0; sym < nsym; ++sym) {
            std::vector<uint32_t> succ;
            for (uint32_t t : m.trans[rep[c]][sym])
                succ.push_back(classOf[t]);
            sortUnique(succ);
            out.trans[c][sym] = std::move(succ);
        }
    return out;
}

NfaInclusionResult nfaIsIncluded(const Nfa& a, const Nfa& b, uint32_t budget) {
    requireSameAlphabet(a, b);
    Dfa detB = nfaDeterminize(b, budget);
    const size_t nsym = a.alphabet.size();

    // Breadth-first search over pairs (state of a, state of det(b)) for a
    // configuration that is accepting in a and rejecting in b.  Expanding in
    // symbol order makes the first hit lexicographically least among the
    // shortest counterexamples.
    struct Node {
        uint32_t qa, qb;
        uint32_t parent;
        uint16_t sym;
    };
    std::vector<Node> nodes;
    std::unordered_map<uint64_t, uint8_t> seen;
    auto key = [&](uint32_t qa, uint32_t qb) { return (uint64_t(qa) << 32) | qb; };

    auto emit = [&](uint32_t idx) {
        FoldedWord w;
        for (uint32_t i = idx; nodes[i].parent != UINT32_MAX; i = nodes[i].parent)
            w.push_back(a.alphabet[nodes[i].sym]);
        std::reverse(w.begin(), w.end());
        return w;
    };

    for (uint32_t qa : a.initial) {
        if (seen.count(key(qa, detB.initial)))
            continue;
        seen[key(qa, detB.initial)] = 1;
        nodes.push_back({qa, detB.initial, UINT32_MAX, 0});
    }
    for (uint32_t i = 0; i < nodes.size(); ++i) {
        if (a.accepting[nodes[i].qa] && !detB.accepting[nodes[i].qb])
            return {false, emit(i)};
        for (size_t sym = 0; sym < nsym; ++sym) {
            uint32_t tb = detB.next(nodes[i].qb, sym);
            for (uint32_t ta : a.trans[nodes[i].qa][sym]) {
                if (seen.count(key(ta, tb)))
                    continue;
                seen[key(ta, tb)] = 1;
                nodes.push_back({ta, tb, i, uint16_t(sym)});
            }
        }
    }
    return {true, std::nullopt};
}

Dfa dfaCanonical(const Dfa& m) {
    return dfaReachable(m);
}

bool dfaIsomorphic(const Dfa& a, const Dfa& b) {
    Dfa ca = dfaCanonical(a);
    Dfa cb = dfaCanonical(b);
    return ca.alphabet == cb.alphabet && ca.numStates == cb.numStates &&
           ca.accepting == cb.accepting && ca.table == cb.table;
}

} // namespace palsum
