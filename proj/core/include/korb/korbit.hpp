#pragma once

#include "korb/kset.hpp"
#include "korb/perm_group.hpp"

namespace korb {

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

// A k-set together with the group whose left action is transitive on it.
struct KOrbit {
    KSet set;
    PermGroup group;

    // Checks transitivity of the recorded group on the set, the Lagrange
    // size condition, and homogeneity of every small multiprojection.
    bool validate(std::string* why = nullptr,
                  std::uint64_t cap = kDefaultCap) const;
};

// Breadth-first closure of a tuple under the generators; never needs the
// full element list.
KOrbit orbit_of_tuple(const PermGroup& g, const Tuple& start);

// All k-orbits on the non-diagonal part of V^k, ordered by their smallest
// tuple. Orbit sizes sum to n(n-1)...(n-k+1). Throws budget_exceeded when
// the falling factorial outgrows `budget`.
std::vector<KOrbit> orbits_k(const PermGroup& g, int k,
                             std::uint64_t budget = kDefaultTupleBudget);

// The n-orbit of the identity tuple <1..n>; rows correspond to elements.
KOrbit full_orbit(const PermGroup& g, std::uint64_t cap = kDefaultCap);

// All distinct tuple supports of x, each sorted, the list sorted.
std::vector<std::vector<int>> support_system(const KSet& x);

}  // namespace korb
