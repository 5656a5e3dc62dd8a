#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "korb/perm.hpp"

namespace korb {

inline constexpr std::uint64_t kDefaultCap = 2'000'000;

enum class Primitivity {
    kPrimitive,
    kTrivialPrimitive,  // transitive cyclic group of prime order
    kImprimitive,
    kIntransitive,
};

struct PrimitivityReport {
    Primitivity verdict = Primitivity::kIntransitive;
    // A minimal nontrivial block system when imprimitive (sorted blocks).
    std::vector<std::vector<int>> blocks;
};

// A permutation group given by generators. Element lists and derived data
// are materialized lazily; the cache is shared across copies and filled
// at most once, so concurrent readers see a consistent value.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Permutation> generators);
    // For groups whose order was established externally (e.g. by a
    // stabilizer-orbit count in the automorphism search).
    PermGroup(int degree, std::vector<Permutation> generators,
              std::uint64_t known_order);
    static PermGroup trivial(int degree);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    // Breadth-first closure of the generators. Sorted. Throws
    // group_too_large when more than `cap` elements are reached.
    const std::vector<Permutation>& elements(std::uint64_t cap = kDefaultCap) const;
    std::uint64_t order(std::uint64_t cap = kDefaultCap) const;
    bool known_order() const;
    bool contains(const Permutation& g, std::uint64_t cap = kDefaultCap) const;
    bool is_subgroup_of(const PermGroup& super, std::uint64_t cap = kDefaultCap) const;
    bool same_group(const PermGroup& other, std::uint64_t cap = kDefaultCap) const;

    // Orbits of points under the generator closure; classes sorted, list
    // sorted by smallest element. Never needs the full element list.
    std::vector<std::vector<int>> point_orbits() const;
    bool is_transitive() const;

    // Block-system classification via the classical pair-closure method.
    PrimitivityReport primitivity() const;
    // Smallest block containing {a, b} (for transitive groups).
    std::vector<int> minimal_block(int a, int b) const;
    // All minimal nontrivial block systems (one per distinct minimal block
    // through point 0), sorted; empty when primitive or intransitive.
    std::vector<std::vector<std::vector<int>>> minimal_block_systems() const;

    // First regular element in sorted element order, if any.
    std::optional<Permutation> find_regular_element(std::uint64_t cap = kDefaultCap) const;

    // Orbit of one point under this group (generator closure), sorted.
    std::vector<int> orbit_of_point(int v) const;

private:
    struct Cache;
    int degree_ = 0;
    std::vector<Permutation> gens_;
    std::shared_ptr<Cache> cache_;
};

PermGroup conjugate_group(const PermGroup& g, const Permutation& by);

// {g in G : g(set) = set}, from materialized elements.
std::vector<Permutation> setwise_stabilizer(const PermGroup& g,
                                            const std::vector<int>& set,
                                            std::uint64_t cap = kDefaultCap);

// Smallest normal subgroup of G containing g.
PermGroup normal_closure(const PermGroup& g_group, const Permutation& g,
                         std::uint64_t cap = kDefaultCap);

// Subgroup generated by the given permutations inside a materialized
// ambient group (plain closure; ambient only fixes the degree).
PermGroup subgroup_closure(int degree, const std::vector<Permutation>& gens,
                           std::uint64_t cap = kDefaultCap);

// Deterministic bounded subgroup enumeration: cyclic subgroups, point
// stabilizers, and two-element closures up to `pair_budget` pairs.
// Deduplicated by element set; proper subgroups only.
std::vector<PermGroup> bounded_subgroups(const PermGroup& g,
                                         std::uint64_t pair_budget = 4096,
                                         std::uint64_t cap = kDefaultCap);

// The image of g on unordered pairs of [0,n): point index of {a,b} is its
// rank in lexicographic order. Degree of the result is n(n-1)/2.
Permutation induced_on_pairs(const Permutation& g);
PermGroup induced_on_pairs(const PermGroup& g);

}  // namespace korb
