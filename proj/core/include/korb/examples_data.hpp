#pragma once

#include <optional>
#include <string>
#include <vector>

#include "korb/korbit.hpp"
#include "korb/kset.hpp"
#include "korb/perm_group.hpp"

namespace korb {

// Bundled reference orbits and 2-sets, stored in the k-set text format
// with a frozen checksum validated at load. The n-orbit entries also
// carry the group their rows define.
struct NamedExample {
    std::string id;
    std::string description;
    KSet set;
    std::optional<PermGroup> group;  // rows-as-permutations group for n-orbits
};

std::vector<std::string> example_ids();
// Throws on unknown id, checksum mismatch, or validation failure (the
// message carries row/column positions where applicable).
NamedExample reconstruct_example(const std::string& id);

}  // namespace korb
