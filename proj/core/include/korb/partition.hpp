#pragma once

#include "korb/korbit.hpp"
#include "korb/kset.hpp"
#include "korb/perm_group.hpp"

namespace korb {

// A family of k-sets over a carrier. With `is_partition` the classes are
// pairwise disjoint; otherwise they may overlap (a covering). In both
// modes the classes union to the carrier. Coverings and partitions share
// this one type; operations that need a partition check the flag.
struct PartitionK {
    KSet carrier;
    std::vector<KSet> classes;  // sorted by smallest tuple
    bool is_partition = false;

    std::int64_t class_count() const { return static_cast<std::int64_t>(classes.size()); }
    // Recomputes the flag and checks the union covers the carrier.
    void normalize();
    bool operator==(const PartitionK&) const = default;
};

PartitionK make_partition(KSet carrier, std::vector<KSet> classes);

// L_k = GY = {gY : g in G}, deduplicated; flagged partition iff the
// distinct images are pairwise disjoint. The carrier is the union.
PartitionK left_coset_cover(const PermGroup& g, const KSet& y);

// R_k = AX = {A a : a in X}: classes are the left-action orbits of A on
// X. Always a partition.
PartitionK right_coset_partition(const PermGroup& a, const KSet& x);

// Lattice operators on families over one carrier.
PartitionK meet(const PartitionK& p, const PartitionK& q);
PartitionK join(const PartitionK& p, const PartitionK& q);
bool refines(const PartitionK& p, const PartitionK& q);

}  // namespace korb
