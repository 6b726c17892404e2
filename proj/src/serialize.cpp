#include "palsum/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "palsum/errors.hpp"

namespace palsum {

namespace {

char kindLetter(FoldedKind k) {
    switch (k) {
        case FoldedKind::Lead1: return 'u';
        case FoldedKind::Lead2: return 'v';
        case FoldedKind::FirstPair: return 'f';
        case FoldedKind::Pair: return 'p';
        case FoldedKind::Middle: return 'm';
    }
    throw ContractError("bad folded kind");
}

bool pairKind(FoldedKind k) {
    return k == FoldedKind::FirstPair || k == FoldedKind::Pair;
}

std::string lineErr(size_t lineNo, const std::string& what) {
    return "line " + std::to_string(lineNo) + ": " + what;
}

std::vector<std::vector<std::string>> splitLines(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> words;
        std::istringstream ls(line);
        std::string w;
        while (ls >> w) words.push_back(w);
        out.push_back(std::move(words));  // blank lines kept so numbering matches
    }
    return out;
}

uint64_t parseIndex(const std::string& tok, uint64_t limit, size_t lineNo,
                    const char* what) {
    uint64_t v = 0;
    if (tok.empty()) throw ParseError(lineErr(lineNo, std::string("empty ") + what));
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(lineErr(lineNo, std::string("bad ") + what + " '" + tok + "'"));
        v = v * 10 + unsigned(c - '0');
        if (v > limit)
            throw ParseError(lineErr(lineNo, std::string(what) + " out of range: " + tok));
    }
    return v;
}

// ---- native emit ----------------------------------------------------------

void emitCommon(std::ostringstream& out, const std::vector<uint32_t>& initial,
                const std::vector<uint8_t>& accepting,
                const std::vector<std::string>& names, uint32_t numStates) {
    out << "states " << numStates << "\n";
    std::vector<uint32_t> init = initial;
    std::sort(init.begin(), init.end());
    out << "initial";
    for (uint32_t q : init) out << " " << q;
    out << "\n";
    out << "accepting";
    for (uint32_t q = 0; q < numStates; ++q)
        if (accepting[q]) out << " " << q;
    out << "\n";
    for (uint32_t q = 0; q < numStates && q < names.size(); ++q)
        if (!names[q].empty()) out << "name " << q << " " << names[q] << "\n";
}

// ---- ats identifier handling ----------------------------------------------

std::vector<std::string> atsStateNames(const std::vector<std::string>& names,
                                       uint32_t numStates) {
    std::vector<std::string> out(numStates);
    std::set<std::string> used;
    for (uint32_t q = 0; q < numStates; ++q) {
        std::string raw = q < names.size() ? names[q] : std::string();
        std::string id;
        for (char c : raw)
            id += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
        if (id.empty()) id = "st" + std::to_string(q);
        if (std::isdigit(static_cast<unsigned char>(id[0]))) id = "_" + id;
        if (!used.insert(id).second) {
            id += "_" + std::to_string(q);
            used.insert(id);
        }
        out[q] = id;
    }
    return out;
}

void atsBlock(std::ostringstream& out, const char* field,
              const std::vector<std::string>& atoms, bool last = false) {
    out << "\t" << field << " = {";
    for (size_t i = 0; i < atoms.size(); ++i) out << (i ? " " : "") << atoms[i];
    out << "}" << (last ? "" : ",") << "\n";
}

void atsTuples(std::ostringstream& out, const char* field,
               const std::vector<std::string>& tuples, bool last) {
    out << "\t" << field << " = {\n";
    for (const auto& t : tuples) out << "\t\t(" << t << ")\n";
    out << "\t}" << (last ? "" : ",") << "\n";
}

// ---- shared token scanner for the ats grammar ------------------------------

struct AtsScanner {
    std::vector<std::string> toks;
    size_t pos = 0;

    explicit AtsScanner(const std::string& text) {
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) {
                toks.push_back(cur);
                cur.clear();
            }
        };
        for (size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
                flush();
                while (i < text.size() && text[i] != '\n') ++i;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                flush();
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
                cur += c;
            } else if (c == '(' || c == ')' || c == '{' || c == '}' || c == '=' ||
                       c == ',' || c == ';') {
                flush();
                toks.push_back(std::string(1, c));
            } else {
                throw ParseError(std::string("unexpected character '") + c + "' in machine text");
            }
        }
        flush();
    }

    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const {
        if (done()) throw ParseError("unexpected end of machine text");
        return toks[pos];
    }
    std::string next() {
        if (done()) throw ParseError("unexpected end of machine text");
        return toks[pos++];
    }
    void expect(const std::string& t) {
        std::string got = next();
        if (got != t) throw ParseError("expected '" + t + "', got '" + got + "'");
    }
};

struct AtsSection {
    std::vector<std::string> atoms;                  // flat identifiers
    std::vector<std::vector<std::string>> tuples;    // parenthesized groups
};

std::map<std::string, AtsSection> parseAtsBody(AtsScanner& sc) {
    std::map<std::string, AtsSection> sections;
    sc.expect("(");
    while (true) {
        std::string field = sc.next();
        sc.expect("=");
        sc.expect("{");
        AtsSection sec;
        while (sc.peek() != "}") {
            if (sc.peek() == "(") {
                sc.next();
                std::vector<std::string> tuple;
                while (sc.peek() != ")") tuple.push_back(sc.next());
                sc.next();
                sec.tuples.push_back(std::move(tuple));
            } else {
                sec.atoms.push_back(sc.next());
            }
        }
        sc.next();  // }
        if (sections.count(field)) throw ParseError("duplicate section " + field);
        sections.emplace(field, std::move(sec));
        std::string sep = sc.next();
        if (sep == ")") break;
        if (sep != ",") throw ParseError("expected ',' or ')', got '" + sep + "'");
    }
    sc.expect(";");
    return sections;
}

const AtsSection& atsNeed(const std::map<std::string, AtsSection>& sections,
                          const std::string& field) {
    auto it = sections.find(field);
    if (it == sections.end()) throw ParseError("missing section " + field);
    return it->second;
}

uint32_t atsState(const std::map<std::string, uint32_t>& index, const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError("unknown state " + name);
    return it->second;
}

// ---- native parse ----------------------------------------------------------

struct NativeCursor {
    const std::vector<std::vector<std::string>>& lines;
    size_t i = 0;

    explicit NativeCursor(const std::vector<std::vector<std::string>>& l) : lines(l) {}

    const std::vector<std::string>* next() {
        while (i < lines.size()) {
            const auto& l = lines[i++];
            if (!l.empty() && l[0][0] != '#') return &l;
        }
        return nullptr;
    }
    size_t lineNo() const { return i; }
};

struct NativeHeader {
    std::string name;
    bool deterministic = false, implicitSink = false, sinkAccepting = false;
    uint32_t numStates = 0;
    std::vector<uint32_t> initial;
    std::vector<uint8_t> accepting;
    std::vector<std::string> names;
    std::vector<std::string> sectionLine;  // first line after the header block
    size_t sectionLineNo = 0;
};

// Reads the shared preamble (flags/states/initial/accepting/name...) and
// stops at the first section header.
NativeHeader parseNativeHeader(NativeCursor& cur, const std::set<std::string>& sections) {
    NativeHeader h;
    bool sawStates = false;
    while (const auto* l = cur.next()) {
        const auto& w = *l;
        size_t ln = cur.lineNo();
        if (sections.count(w[0])) {
            if (!sawStates) throw ParseError(lineErr(ln, "missing states line"));
            h.sectionLine = w;
            h.sectionLineNo = ln;
            return h;
        }
        if (w[0] == "flags") {
            for (size_t k = 1; k < w.size(); ++k) {
                if (w[k] == "deterministic") h.deterministic = true;
                else if (w[k] == "implicitSink") h.implicitSink = true;
                else if (w[k] == "sinkAccepting") h.sinkAccepting = true;
                else throw ParseError(lineErr(ln, "unknown flag " + w[k]));
            }
        } else if (w[0] == "states") {
            if (w.size() != 2) throw ParseError(lineErr(ln, "states wants one count"));
            h.numStates = uint32_t(parseIndex(w[1], 100000000, ln, "state count"));
            h.accepting.assign(h.numStates, 0);
            h.names.assign(h.numStates, "");
            sawStates = true;
        } else if (w[0] == "initial" || w[0] == "accepting") {
            if (!sawStates) throw ParseError(lineErr(ln, w[0] + " before states"));
            for (size_t k = 1; k < w.size(); ++k) {
                uint32_t q = uint32_t(parseIndex(w[k], h.numStates - 1, ln, "state"));
                if (w[0] == "initial") h.initial.push_back(q);
                else h.accepting[q] = 1;
            }
        } else if (w[0] == "name") {
            if (!sawStates) throw ParseError(lineErr(ln, "name before states"));
            if (w.size() < 3) throw ParseError(lineErr(ln, "name wants index and text"));
            uint32_t q = uint32_t(parseIndex(w[1], h.numStates - 1, ln, "state"));
            std::string nm = w[2];
            for (size_t k = 3; k < w.size(); ++k) nm += " " + w[k];
            h.names[q] = nm;
        } else {
            throw ParseError(lineErr(ln, "unexpected line '" + w[0] + "'"));
        }
    }
    throw ParseError("machine text ends before any transition section");
}

Nwa parseNativeNwa(NativeCursor& cur) {
    NativeHeader h = parseNativeHeader(cur, {"calls", "internals", "returns", "end"});
    Nwa m;
    m.deterministic = h.deterministic;
    m.implicitSink = h.implicitSink;
    m.sinkAccepting = h.sinkAccepting;
    for (uint32_t q = 0; q < h.numStates; ++q) m.addState(h.names[q], h.accepting[q] != 0);
    m.initial = h.initial;
    std::sort(m.initial.begin(), m.initial.end());
    m.initial.erase(std::unique(m.initial.begin(), m.initial.end()), m.initial.end());

    std::string section = h.sectionLine[0];
    if (h.sectionLine.size() != 1)
        throw ParseError(lineErr(h.sectionLineNo, "section header takes no arguments"));
    while (section != "end") {
        const auto* l = cur.next();
        if (!l) throw ParseError("machine text ends without 'end'");
        const auto& w = *l;
        size_t ln = cur.lineNo();
        if (w.size() == 1 &&
            (w[0] == "calls" || w[0] == "internals" || w[0] == "returns" || w[0] == "end")) {
            section = w[0];
            continue;
        }
        size_t want = section == "returns" ? 4 : 3;
        if (w.size() != want)
            throw ParseError(lineErr(ln, section + " line wants " + std::to_string(want) +
                                             " fields"));
        uint32_t q = uint32_t(parseIndex(w[0], h.numStates - 1, ln, "state"));
        size_t li = want - 2;
        if (w[li].size() != 1) throw ParseError(lineErr(ln, "bad symbol " + w[li]));
        char letter = w[li][0];
        uint32_t to = uint32_t(parseIndex(w[want - 1], h.numStates - 1, ln, "state"));
        if (section == "calls") {
            if (letter != 'a' && letter != 'b')
                throw ParseError(lineErr(ln, "call symbol must be a or b"));
            m.addCall(q, letter - 'a', to);
        } else if (section == "internals") {
            if (letter != 'c' && letter != 'd')
                throw ParseError(lineErr(ln, "internal symbol must be c or d"));
            m.addInternal(q, letter - 'c', to);
        } else {
            uint32_t popped = uint32_t(parseIndex(w[1], h.numStates - 1, ln, "state"));
            if (letter != 'e' && letter != 'f')
                throw ParseError(lineErr(ln, "return symbol must be e or f"));
            m.addReturn(q, popped, letter - 'e', to);
        }
    }
    if (m.deterministic && !validateDeterministic(m))
        throw ParseError("deterministic flag does not match the transitions");
    return m;
}

Nfa parseNativeNfa(NativeCursor& cur, const std::vector<std::string>& alphaLine,
                   size_t alphaLineNo) {
    if (alphaLine.empty() || alphaLine[0] != "alphabet")
        throw ParseError(lineErr(alphaLineNo, "nfa text must start with an alphabet line"));
    std::vector<FoldedSymbol> sigma;
    for (size_t k = 1; k < alphaLine.size(); ++k) sigma.push_back(foldedAtomParse(alphaLine[k]));
    size_t given = sigma.size();
    Nfa m(std::move(sigma));
    if (m.alphabet.size() != given)
        throw ParseError(lineErr(alphaLineNo, "duplicate alphabet symbols"));

    NativeHeader h = parseNativeHeader(cur, {"transitions", "end"});
    for (uint32_t q = 0; q < h.numStates; ++q) m.addState(h.names[q], h.accepting[q] != 0, false);
    m.initial = h.initial;
    std::sort(m.initial.begin(), m.initial.end());
    m.initial.erase(std::unique(m.initial.begin(), m.initial.end()), m.initial.end());

    std::string section = h.sectionLine[0];
    while (section != "end") {
        const auto* l = cur.next();
        if (!l) throw ParseError("machine text ends without 'end'");
        const auto& w = *l;
        size_t ln = cur.lineNo();
        if (w.size() == 1 && (w[0] == "transitions" || w[0] == "end")) {
            section = w[0];
            continue;
        }
        if (w.size() != 3) throw ParseError(lineErr(ln, "transition line wants 3 fields"));
        uint32_t q = uint32_t(parseIndex(w[0], h.numStates - 1, ln, "state"));
        FoldedSymbol s = foldedAtomParse(w[1]);
        uint32_t to = uint32_t(parseIndex(w[2], h.numStates - 1, ln, "state"));
        try {
            m.addEdge(q, s, to);
        } catch (const ContractError& e) {
            throw ParseError(lineErr(ln, e.what()));
        }
    }
    return m;
}

// ---- ats parse -------------------------------------------------------------

Nwa parseAtsNwa(AtsScanner& sc) {
    auto sections = parseAtsBody(sc);
    for (const char* f : {"callAlphabet", "internalAlphabet", "returnAlphabet"}) {
        const auto& atoms = atsNeed(sections, f).atoms;
        std::string want0(1, f[0] == 'c' ? 'a' : f[0] == 'i' ? 'c' : 'e');
        std::string want1(1, char(want0[0] + 1));
        if (atoms != std::vector<std::string>{want0, want1})
            throw ParseError(std::string(f) + " must be {" + want0 + " " + want1 + "}");
    }
    Nwa m;
    std::map<std::string, uint32_t> index;
    for (const auto& s : atsNeed(sections, "states").atoms) {
        if (index.count(s)) throw ParseError("duplicate state " + s);
        index[s] = m.addState(s);
    }
    for (const auto& s : atsNeed(sections, "initialStates").atoms)
        m.initial.push_back(atsState(index, s));
    for (const auto& s : atsNeed(sections, "finalStates").atoms)
        m.accepting[atsState(index, s)] = 1;

    auto bitOf = [](const std::string& letter, char lo) -> int {
        if (letter.size() != 1 || (letter[0] != lo && letter[0] != lo + 1))
            throw ParseError("bad transition symbol " + letter);
        return letter[0] - lo;
    };
    for (const auto& t : atsNeed(sections, "callTransitions").tuples) {
        if (t.size() != 3) throw ParseError("call transition wants 3 entries");
        m.addCall(atsState(index, t[0]), bitOf(t[1], 'a'), atsState(index, t[2]));
    }
    for (const auto& t : atsNeed(sections, "internalTransitions").tuples) {
        if (t.size() != 3) throw ParseError("internal transition wants 3 entries");
        m.addInternal(atsState(index, t[0]), bitOf(t[1], 'c'), atsState(index, t[2]));
    }
    for (const auto& t : atsNeed(sections, "returnTransitions").tuples) {
        if (t.size() != 4) throw ParseError("return transition wants 4 entries");
        m.addReturn(atsState(index, t[0]), atsState(index, t[1]), bitOf(t[2], 'e'),
                    atsState(index, t[3]));
    }
    return m;
}

Nfa parseAtsNfa(AtsScanner& sc) {
    auto sections = parseAtsBody(sc);
    std::vector<FoldedSymbol> sigma;
    for (const auto& a : atsNeed(sections, "alphabet").atoms) sigma.push_back(foldedAtomParse(a));
    size_t given = sigma.size();
    Nfa m(std::move(sigma));
    if (m.alphabet.size() != given) throw ParseError("duplicate alphabet symbols");

    std::map<std::string, uint32_t> index;
    for (const auto& s : atsNeed(sections, "states").atoms) {
        if (index.count(s)) throw ParseError("duplicate state " + s);
        index[s] = m.addState(s, false, false);
    }
    for (const auto& s : atsNeed(sections, "initialStates").atoms) {
        uint32_t q = atsState(index, s);
        m.initial.push_back(q);
    }
    std::sort(m.initial.begin(), m.initial.end());
    m.initial.erase(std::unique(m.initial.begin(), m.initial.end()), m.initial.end());
    for (const auto& s : atsNeed(sections, "finalStates").atoms)
        m.accepting[atsState(index, s)] = 1;
    for (const auto& t : atsNeed(sections, "transitions").tuples) {
        if (t.size() != 3) throw ParseError("transition wants 3 entries");
        try {
            m.addEdge(atsState(index, t[0]), foldedAtomParse(t[1]), atsState(index, t[2]));
        } catch (const ContractError& e) {
            throw ParseError(e.what());
        }
    }
    return m;
}

}  // namespace

std::string foldedAtom(const FoldedSymbol& s) {
    if (s.hi > 9 || s.lo > 9) throw ContractError("folded digit too large for an atom");
    std::string out(1, kindLetter(s.kind));
    out += char('0' + s.hi);
    if (pairKind(s.kind)) out += char('0' + s.lo);
    return out;
}

FoldedSymbol foldedAtomParse(const std::string& atom) {
    FoldedKind kind;
    switch (atom.empty() ? '?' : atom[0]) {
        case 'u': kind = FoldedKind::Lead1; break;
        case 'v': kind = FoldedKind::Lead2; break;
        case 'f': kind = FoldedKind::FirstPair; break;
        case 'p': kind = FoldedKind::Pair; break;
        case 'm': kind = FoldedKind::Middle; break;
        default: throw ParseError("bad folded symbol atom '" + atom + "'");
    }
    size_t want = pairKind(kind) ? 3 : 2;
    if (atom.size() != want) throw ParseError("bad folded symbol atom '" + atom + "'");
    for (size_t i = 1; i < atom.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(atom[i])))
            throw ParseError("bad folded symbol atom '" + atom + "'");
    FoldedSymbol s{kind, uint8_t(atom[1] - '0'), 0};
    if (pairKind(kind)) s.lo = uint8_t(atom[2] - '0');
    return s;
}

std::string serializeNwa(const Nwa& m, const std::string& name) {
    std::ostringstream out;
    out << "nwa " << name << "\n";
    if (m.deterministic || m.implicitSink || m.sinkAccepting) {
        out << "flags";
        if (m.deterministic) out << " deterministic";
        if (m.implicitSink) out << " implicitSink";
        if (m.sinkAccepting) out << " sinkAccepting";
        out << "\n";
    }
    emitCommon(out, m.initial, m.accepting, m.names, m.numStates);
    out << "calls\n";
    for (uint32_t q = 0; q < m.numStates; ++q)
        for (int bit = 0; bit < 2; ++bit) {
            std::vector<uint32_t> to = m.callTo[bit][q];
            std::sort(to.begin(), to.end());
            for (uint32_t t : to) out << q << " " << char('a' + bit) << " " << t << "\n";
        }
    out << "internals\n";
    for (uint32_t q = 0; q < m.numStates; ++q)
        for (int bit = 0; bit < 2; ++bit) {
            std::vector<uint32_t> to = m.intTo[bit][q];
            std::sort(to.begin(), to.end());
            for (uint32_t t : to) out << q << " " << char('c' + bit) << " " << t << "\n";
        }
    out << "returns\n";
    std::vector<std::tuple<uint32_t, uint32_t, int, uint32_t>> rets;
    for (int bit = 0; bit < 2; ++bit)
        for (const auto& [key, list] : m.retTo[bit])
            for (uint32_t t : list)
                rets.emplace_back(uint32_t(key >> 32), uint32_t(key), bit, t);
    std::sort(rets.begin(), rets.end());
    for (const auto& [q, popped, bit, t] : rets)
        out << q << " " << popped << " " << char('e' + bit) << " " << t << "\n";
    out << "end\n";
    return out.str();
}

std::string serializeNfa(const Nfa& m, const std::string& name) {
    std::ostringstream out;
    out << "nfa " << name << "\n";
    out << "alphabet";
    for (const auto& s : m.alphabet) out << " " << foldedAtom(s);
    out << "\n";
    emitCommon(out, m.initial, m.accepting, m.names, m.numStates);
    out << "transitions\n";
    for (uint32_t q = 0; q < m.numStates; ++q)
        for (size_t si = 0; si < m.alphabet.size(); ++si)
            for (uint32_t t : m.trans[q][si])
                out << q << " " << foldedAtom(m.alphabet[si]) << " " << t << "\n";
    out << "end\n";
    return out.str();
}

std::string exportAtsNwa(const Nwa& m, const std::string& name) {
    if (m.implicitSink)
        throw ContractError("machines with an implicit sink have no script form");
    std::ostringstream out;
    auto ids = atsStateNames(m.names, m.numStates);
    out << "NestedWordAutomaton " << name << " = (\n";
    atsBlock(out, "callAlphabet", {"a", "b"});
    atsBlock(out, "internalAlphabet", {"c", "d"});
    atsBlock(out, "returnAlphabet", {"e", "f"});
    atsBlock(out, "states", ids);
    std::vector<std::string> init, fin;
    std::vector<uint32_t> initSorted = m.initial;
    std::sort(initSorted.begin(), initSorted.end());
    for (uint32_t q : initSorted) init.push_back(ids[q]);
    for (uint32_t q = 0; q < m.numStates; ++q)
        if (m.accepting[q]) fin.push_back(ids[q]);
    atsBlock(out, "initialStates", init);
    atsBlock(out, "finalStates", fin);

    std::vector<std::string> calls, internals, returns;
    for (uint32_t q = 0; q < m.numStates; ++q)
        for (int bit = 0; bit < 2; ++bit) {
            std::vector<uint32_t> to = m.callTo[bit][q];
            std::sort(to.begin(), to.end());
            for (uint32_t t : to)
                calls.push_back(ids[q] + " " + char('a' + bit) + " " + ids[t]);
            to = m.intTo[bit][q];
            std::sort(to.begin(), to.end());
            for (uint32_t t : to)
                internals.push_back(ids[q] + " " + char('c' + bit) + " " + ids[t]);
        }
    std::vector<std::tuple<uint32_t, uint32_t, int, uint32_t>> rets;
    for (int bit = 0; bit < 2; ++bit)
        for (const auto& [key, list] : m.retTo[bit])
            for (uint32_t t : list)
                rets.emplace_back(uint32_t(key >> 32), uint32_t(key), bit, t);
    std::sort(rets.begin(), rets.end());
    for (const auto& [q, popped, bit, t] : rets)
        returns.push_back(ids[q] + " " + ids[popped] + " " + char('e' + bit) + " " + ids[t]);
    atsTuples(out, "callTransitions", calls, false);
    atsTuples(out, "internalTransitions", internals, false);
    atsTuples(out, "returnTransitions", returns, true);
    out << ");\n";
    return out.str();
}

std::string exportAtsNfa(const Nfa& m, const std::string& name) {
    std::ostringstream out;
    auto ids = atsStateNames(m.names, m.numStates);
    out << "FiniteAutomaton " << name << " = (\n";
    std::vector<std::string> alpha;
    for (const auto& s : m.alphabet) alpha.push_back(foldedAtom(s));
    atsBlock(out, "alphabet", alpha);
    atsBlock(out, "states", ids);
    std::vector<std::string> init, fin;
    for (uint32_t q : m.initial) init.push_back(ids[q]);
    for (uint32_t q = 0; q < m.numStates; ++q)
        if (m.accepting[q]) fin.push_back(ids[q]);
    atsBlock(out, "initialStates", init);
    atsBlock(out, "finalStates", fin);
    std::vector<std::string> edges;
    for (uint32_t q = 0; q < m.numStates; ++q)
        for (size_t si = 0; si < m.alphabet.size(); ++si)
            for (uint32_t t : m.trans[q][si])
                edges.push_back(ids[q] + " " + foldedAtom(m.alphabet[si]) + " " + ids[t]);
    atsTuples(out, "transitions", edges, true);
    out << ");\n";
    return out.str();
}

ParsedMachine parseMachine(const std::string& text) {
    // Find the first word to decide the format.
    std::istringstream probe(text);
    std::string kw;
    if (!(probe >> kw)) throw ParseError("empty machine text");

    ParsedMachine out;
    if (kw == "nwa" || kw == "nfa") {
        auto lines = splitLines(text);
        NativeCursor cur(lines);
        const auto* header = cur.next();
        if (!header) throw ParseError("empty machine text");
        if (header->size() < 2)
            throw ParseError(lineErr(cur.lineNo(), "header line wants a machine name"));
        out.name = (*header)[1];
        if (kw == "nwa") {
            out.nwa = parseNativeNwa(cur);
        } else {
            const auto* alpha = cur.next();
            if (!alpha) throw ParseError("nfa text ends before the alphabet line");
            out.nfa = parseNativeNfa(cur, *alpha, cur.lineNo());
        }
        return out;
    }
    if (kw == "NestedWordAutomaton" || kw == "FiniteAutomaton") {
        AtsScanner sc(text);
        sc.expect(kw);
        out.name = sc.next();
        sc.expect("=");
        if (kw == "NestedWordAutomaton") out.nwa = parseAtsNwa(sc);
        else out.nfa = parseAtsNfa(sc);
        return out;
    }
    throw ParseError("unrecognized machine format (leading word '" + kw + "')");
}

}  // namespace palsum
