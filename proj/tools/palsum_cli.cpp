#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "palsum.h"

namespace {

int statusExit(ps_status st) {
    switch (st) {
        case PS_OK: return 0;
        case PS_RESOURCE: return 3;
        default: return 2;
    }
}

int fail(ps_status st) {
    std::cerr << "error: " << ps_last_error() << "\n";
    return statusExit(st);
}

bool parseU64(const std::string& s, uint64_t& out) {
    if (s.empty()) return false;
    uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        if (v > (UINT64_MAX - uint64_t(c - '0')) / 10) return false;
        v = v * 10 + uint64_t(c - '0');
    }
    out = v;
    return true;
}

struct Range {
    uint64_t lo = 0, hi = 0;
};

std::optional<Range> parseRange(const std::string& s) {
    Range r;
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        if (!parseU64(s, r.lo)) return std::nullopt;
        r.hi = r.lo;
        return r;
    }
    if (!parseU64(s.substr(0, dots), r.lo) || !parseU64(s.substr(dots + 2), r.hi))
        return std::nullopt;
    if (r.hi < r.lo) return std::nullopt;
    return r;
}

int usage(const std::string& what) {
    std::cerr << "error: " << what << "\n";
    return 2;
}

int writeOut(const char* text, const std::string& outPath) {
    if (outPath.empty()) {
        std::fputs(text, stdout);
        return 0;
    }
    std::ofstream f(outPath, std::ios::binary);
    if (!f) return usage("cannot write " + outPath);
    f << text;
    return 0;
}

int runGenExport(const std::string& machine, const std::string& format,
                 const std::string& outPath, uint64_t budget) {
    ps_machine* m = nullptr;
    ps_status st = ps_machine_build(machine.c_str(), budget, &m);
    if (st != PS_OK) return fail(st);
    char* text = nullptr;
    st = ps_machine_text(m, machine.c_str(), format == "ats" ? 1 : 0, &text);
    ps_machine_free(m);
    if (st != PS_OK) return fail(st);
    int rc = writeOut(text, outPath);
    ps_string_free(text);
    return rc;
}

int runSim(const std::string& machine, const std::string& rangeText, uint64_t budget) {
    auto range = parseRange(rangeText);
    if (!range) return usage("bad integer or range: " + rangeText);
    ps_machine* m = nullptr;
    ps_status st = ps_machine_build(machine.c_str(), budget, &m);
    if (st != PS_OK) return fail(st);
    for (uint64_t n = range->lo;; ++n) {
        int verdict = 0;
        st = ps_machine_accepts(m, n, &verdict);
        if (st != PS_OK) {
            ps_machine_free(m);
            return fail(st);
        }
        const char* word = verdict == 1 ? "accept" : verdict == 0 ? "reject" : "unencodable";
        std::printf("%llu %s\n", static_cast<unsigned long long>(n), word);
        if (n == range->hi) break;
    }
    ps_machine_free(m);
    return 0;
}

int runProve(const std::string& theorem, const std::string& control, uint64_t budget) {
    std::string dropCase;
    uint64_t removeWord = 0;
    bool hasRemove = false;
    if (!control.empty()) {
        if (control.rfind("remove:", 0) == 0) {
            if (!parseU64(control.substr(7), removeWord))
                return usage("bad removal value in " + control);
            hasRemove = true;
        } else if (control.rfind("drop:", 0) == 0) {
            dropCase = control.substr(5);
        } else {
            dropCase = control;
        }
    }
    int holds = 0;
    char* report = nullptr;
    ps_status st = ps_prove(theorem.c_str(), dropCase.empty() ? nullptr : dropCase.c_str(),
                            hasRemove ? &removeWord : nullptr, budget, &holds, &report);
    if (st != PS_OK) return fail(st);
    std::fputs(report, stdout);
    ps_string_free(report);
    return holds ? 0 : 1;
}

int runOracle(const std::string& flavor, unsigned base, unsigned maxSummands,
              const std::string& tail) {
    if (tail.rfind("exceptions:", 0) == 0) {
        uint64_t limit = 0;
        if (!parseU64(tail.substr(11), limit)) return usage("bad limit in " + tail);
        uint64_t* values = nullptr;
        size_t count = 0;
        ps_status st =
            ps_oracle_exceptions(flavor.c_str(), base, maxSummands, limit, &values, &count);
        if (st != PS_OK) return fail(st);
        for (size_t i = 0; i < count; ++i)
            std::printf("%llu\n", static_cast<unsigned long long>(values[i]));
        ps_u64_free(values);
        return 0;
    }
    if (tail.rfind("min:", 0) == 0) {
        uint64_t target = 0;
        if (!parseU64(tail.substr(4), target)) return usage("bad target in " + tail);
        int found = 0;
        unsigned count = 0;
        ps_status st =
            ps_oracle_min_summands(flavor.c_str(), base, maxSummands, target, &found, &count);
        if (st != PS_OK) return fail(st);
        if (found) std::printf("%u\n", count);
        else std::puts("none");
        return found ? 0 : 1;
    }
    auto range = parseRange(tail);
    if (!range) return usage("bad oracle query: " + tail);
    if (range->lo == range->hi && tail.find("..") == std::string::npos) {
        int representable = 0;
        char* witness = nullptr;
        ps_status st = ps_oracle_decide(flavor.c_str(), base, maxSummands, range->lo,
                                        &representable, &witness);
        if (st != PS_OK) return fail(st);
        if (representable) {
            std::printf("%llu = %s\n", static_cast<unsigned long long>(range->lo), witness);
            ps_string_free(witness);
            return 0;
        }
        std::puts("not representable");
        return 1;
    }
    bool anyMissing = false;
    for (uint64_t n = range->lo;; ++n) {
        int representable = 0;
        ps_status st =
            ps_oracle_decide(flavor.c_str(), base, maxSummands, n, &representable, nullptr);
        if (st != PS_OK) return fail(st);
        std::printf("%llu %s\n", static_cast<unsigned long long>(n),
                    representable ? "representable" : "not representable");
        if (!representable) anyMissing = true;
        if (n == range->hi) break;
    }
    return anyMissing ? 1 : 0;
}

int runDensity(const std::string& flavor, unsigned maxSummands, uint64_t limit) {
    uint64_t argminN = 0, argminCount = 0;
    ps_status st = ps_density(flavor.c_str(), 2, maxSummands, limit, &argminN, &argminCount);
    if (st != PS_OK) return fail(st);
    std::printf("%llu/%llu\n", static_cast<unsigned long long>(argminCount),
                static_cast<unsigned long long>(argminN));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"palindrome-sum machines, proofs and oracles"};
    app.require_subcommand(1);

    std::string machine, rangeText, theorem, control, flavor, tail, outPath, format;
    unsigned base = 2, maxSummands = 0;
    uint64_t budget = 0, limit = 0;

    auto* gen = app.add_subcommand("gen", "write a machine in the native format");
    gen->add_option("machine", machine)->required();
    gen->add_option("--out", outPath);
    gen->add_option("--budget", budget);

    auto* sim = app.add_subcommand("sim", "run a machine on an integer or range");
    sim->add_option("machine", machine)->required();
    sim->add_option("values", rangeText)->required();
    sim->add_option("--budget", budget);

    auto* prove = app.add_subcommand("prove", "reproduce a theorem end to end");
    prove->add_option("theorem", theorem)->required();
    prove->add_option("--budget", budget);
    prove->add_option("--negative-control", control,
                      "drop:<case>, remove:<value>, or a bare case name");

    auto* oracle = app.add_subcommand("oracle", "brute-force representability");
    oracle->add_option("flavor", flavor)->required();
    oracle->add_option("base", base)->required();
    oracle->add_option("maxSummands", maxSummands)->required();
    oracle->add_option("query", tail, "target, lo..hi, exceptions:<limit>, or min:<target>")
        ->required();

    auto* density = app.add_subcommand("density", "minimum prefix density of the sums");
    density->add_option("flavor", flavor)->required();
    density->add_option("maxSummands", maxSummands)->required();
    density->add_option("limit", limit)->required();

    auto* exp = app.add_subcommand("export", "write a machine in a chosen format");
    exp->add_option("machine", machine)->required();
    exp->add_option("--format", format)->required()->check(CLI::IsMember({"ats", "native"}));
    exp->add_option("--out", outPath);
    exp->add_option("--budget", budget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    int rc = 2;
    if (gen->parsed()) rc = runGenExport(machine, "native", outPath, budget);
    else if (sim->parsed()) rc = runSim(machine, rangeText, budget);
    else if (prove->parsed()) rc = runProve(theorem, control, budget);
    else if (oracle->parsed()) rc = runOracle(flavor, base, maxSummands, tail);
    else if (density->parsed()) rc = runDensity(flavor, maxSummands, limit);
    else if (exp->parsed()) rc = runGenExport(machine, format, outPath, budget);
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::fprintf(stderr, "[time] %.3fs\n", elapsed);
    return rc;
}
