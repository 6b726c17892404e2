#pragma once

#include <optional>
#include <string>
#include <vector>

#include "palsum/nfa.hpp"
#include "palsum/nwa.hpp"

namespace palsum {

// The named machines the command line can generate, simulate and export.
// Tagged machines read integers through the bit encoding (calls low half,
// returns high half); folded machines read base-k digit folds.
struct MachineInfo {
    std::string name;
    std::string summary;
    bool tagged = false;  // true: nested-word machine, false: folded NFA
    unsigned base = 2;
};

const std::vector<MachineInfo>& machineCatalog();
const MachineInfo* machineInfo(const std::string& name);  // nullptr when unknown

struct BuiltMachine {
    MachineInfo info;
    std::optional<Nwa> nwa;
    std::optional<Nfa> nfa;
};

// Builds the named machine from scratch.  ContractError on unknown names;
// the big compositions honor `budget` like their underlying operations.
BuiltMachine buildMachine(const std::string& name, size_t budget = 1000000);

// Acceptance of one integer under the machine's own encoding: 1 accept,
// 0 reject, -1 when the value has no encoding of the machine's kind
// (zero for tagged machines, fewer than three digits for folded ones).
int machineAcceptsValue(const BuiltMachine& m, uint64_t value);

}  // namespace palsum
