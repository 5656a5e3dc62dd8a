#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "korb/perm_group.hpp"

namespace korb {

struct CatalogEntry {
    std::string name;
    PermGroup group;
    int degree = 0;
    std::uint64_t order = 0;       // recomputed, never trusted from input
    bool transitive = false;
    Primitivity primitivity = Primitivity::kIntransitive;
};

struct GroupCatalog {
    std::vector<CatalogEntry> entries;

    std::size_t transitive_count() const;
    const CatalogEntry* find(const std::string& name) const;
    // Text index of entries in .grp-manifest style.
    std::string manifest() const;
};

// Named classics (symmetric, alternating, cyclic, dihedral, direct and
// wreath-style products, regular representations, the pair action of S_5,
// bundled example groups) plus seeded random two-generator groups, closed
// under `cap` and deduplicated by element set. Metadata recomputed.
GroupCatalog build_catalog(int max_degree, int random_samples = 40,
                           std::uint64_t seed = 1, std::uint64_t cap = kDefaultCap);

// The automorphism group of the Petersen graph: S_5 acting on 2-subsets.
PermGroup petersen_group();

}  // namespace korb
