#include "palsum.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "palsum/errors.hpp"
#include "palsum/oracle.hpp"
#include "palsum/prover.hpp"
#include "palsum/registry.hpp"
#include "palsum/serialize.hpp"

using namespace palsum;

struct ps_machine {
    BuiltMachine m;
};

namespace {

thread_local std::string g_error;

char* copyString(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
ps_status guarded(F&& f) {
    try {
        f();
        g_error.clear();
        return PS_OK;
    } catch (const ResourceLimitError& e) {
        g_error = e.what();
        return PS_RESOURCE;
    } catch (const ParseError& e) {
        g_error = e.what();
        return PS_PARSE;
    } catch (const ContractError& e) {
        g_error = e.what();
        return PS_CONTRACT;
    } catch (const std::exception& e) {
        g_error = e.what();
        return PS_INTERNAL;
    }
}

Flavor flavorOrThrow(const char* flavor) {
    auto f = flavorFromName(flavor ? flavor : "");
    if (!f) throw ContractError("unknown flavor: " + std::string(flavor ? flavor : ""));
    return *f;
}

unsigned deriveBase(const Nfa& m) {
    unsigned top = 1;
    for (const auto& s : m.alphabet) {
        if (s.hi >= top) top = s.hi + 1u;
        if (s.lo >= top) top = s.lo + 1u;
    }
    return top < 2 ? 2 : top;
}

}  // namespace

extern "C" {

const char* ps_last_error(void) { return g_error.c_str(); }

void ps_string_free(char* s) { std::free(s); }
void ps_u64_free(uint64_t* p) { std::free(p); }

size_t ps_catalog_count(void) { return machineCatalog().size(); }

const char* ps_catalog_name(size_t i) {
    const auto& c = machineCatalog();
    return i < c.size() ? c[i].name.c_str() : nullptr;
}

const char* ps_catalog_summary(size_t i) {
    const auto& c = machineCatalog();
    return i < c.size() ? c[i].summary.c_str() : nullptr;
}

ps_status ps_machine_build(const char* name, uint64_t budget, ps_machine** out) {
    return guarded([&] {
        if (!name || !out) throw ContractError("null argument");
        auto built = buildMachine(name, budget ? size_t(budget) : 1000000);
        *out = new ps_machine{std::move(built)};
    });
}

ps_status ps_machine_parse(const char* text, ps_machine** out) {
    return guarded([&] {
        if (!text || !out) throw ContractError("null argument");
        ParsedMachine parsed = parseMachine(text);
        BuiltMachine b;
        b.info.name = parsed.name;
        b.info.summary = "parsed machine";
        if (parsed.nwa) {
            b.info.tagged = true;
            b.info.base = 2;
            b.nwa = std::move(parsed.nwa);
        } else {
            b.info.tagged = false;
            b.info.base = deriveBase(*parsed.nfa);
            b.nfa = std::move(parsed.nfa);
        }
        *out = new ps_machine{std::move(b)};
    });
}

void ps_machine_free(ps_machine* m) { delete m; }

int ps_machine_is_tagged(const ps_machine* m) { return m && m->m.info.tagged ? 1 : 0; }

unsigned ps_machine_base(const ps_machine* m) { return m ? m->m.info.base : 0; }

uint64_t ps_machine_states(const ps_machine* m) {
    if (!m) return 0;
    return m->m.nwa ? m->m.nwa->numStates : m->m.nfa->numStates;
}

ps_status ps_machine_accepts(const ps_machine* m, uint64_t value, int* verdict) {
    return guarded([&] {
        if (!m || !verdict) throw ContractError("null argument");
        *verdict = machineAcceptsValue(m->m, value);
    });
}

ps_status ps_machine_text(const ps_machine* m, const char* name, int script_form,
                          char** out) {
    return guarded([&] {
        if (!m || !out) throw ContractError("null argument");
        std::string label = name && *name ? name : m->m.info.name;
        std::string text;
        if (m->m.nwa)
            text = script_form ? exportAtsNwa(*m->m.nwa, label) : serializeNwa(*m->m.nwa, label);
        else
            text = script_form ? exportAtsNfa(*m->m.nfa, label) : serializeNfa(*m->m.nfa, label);
        *out = copyString(text);
    });
}

ps_status ps_prove(const char* theorem_id, const char* drop_case,
                   const uint64_t* remove_word, uint64_t budget, int* holds,
                   char** report) {
    return guarded([&] {
        if (!theorem_id || !holds || !report) throw ContractError("null argument");
        WeakenSpec w;
        if (drop_case && *drop_case) w.dropCase = drop_case;
        if (remove_word) w.removeWord = *remove_word;
        ProofReport r = proveByName(theorem_id, w, size_t(budget));
        *holds = r.holds ? 1 : 0;
        *report = copyString(renderReport(r));
    });
}

size_t ps_theorem_count(void) { return theoremIds().size(); }

const char* ps_theorem_id(size_t i) {
    const auto& ids = theoremIds();
    return i < ids.size() ? ids[i].c_str() : nullptr;
}

ps_status ps_oracle_decide(const char* flavor, unsigned base, unsigned max_summands,
                           uint64_t target, int* representable, char** witness) {
    return guarded([&] {
        if (!representable) throw ContractError("null argument");
        SumQuery q;
        q.target = target;
        q.base = base;
        q.maxSummands = max_summands;
        q.flavor = flavorOrThrow(flavor);
        auto w = decide(q);
        *representable = w ? 1 : 0;
        if (witness) {
            *witness = nullptr;
            if (w) {
                std::string text;
                for (size_t i = 0; i < w->summands.size(); ++i) {
                    if (i) text += " + ";
                    text += std::to_string(w->summands[i]);
                }
                if (text.empty()) text = "0";
                *witness = copyString(text);
            }
        }
    });
}

ps_status ps_oracle_min_summands(const char* flavor, unsigned base, unsigned cap,
                                 uint64_t target, int* found, unsigned* count) {
    return guarded([&] {
        if (!found || !count) throw ContractError("null argument");
        auto n = minSummands(target, base, flavorOrThrow(flavor), cap);
        *found = n ? 1 : 0;
        *count = n ? *n : 0;
    });
}

ps_status ps_oracle_exceptions(const char* flavor, unsigned base, unsigned max_summands,
                               uint64_t limit, uint64_t** values, size_t* count) {
    return guarded([&] {
        if (!values || !count) throw ContractError("null argument");
        auto list = exceptions(flavorOrThrow(flavor), base, max_summands, limit);
        *count = list.size();
        *values = nullptr;
        if (!list.empty()) {
            *values = static_cast<uint64_t*>(std::malloc(list.size() * sizeof(uint64_t)));
            std::memcpy(*values, list.data(), list.size() * sizeof(uint64_t));
        }
    });
}

ps_status ps_density(const char* flavor, unsigned base, unsigned max_summands,
                     uint64_t limit, uint64_t* argmin_n, uint64_t* argmin_count) {
    return guarded([&] {
        if (!argmin_n || !argmin_count) throw ContractError("null argument");
        auto d = densityPrefix(flavorOrThrow(flavor), base, max_summands, limit);
        *argmin_n = d.argminN;
        *argmin_count = d.argminCount;
    });
}

}  // extern "C"
