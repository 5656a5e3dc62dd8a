#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "korb/aut.hpp"
#include "korb/kset.hpp"
#include "korb/perm_group.hpp"

namespace korb {

inline constexpr int kRefineDegreeBudget = 256;
inline constexpr int kExactDegreeBudget = 64;

// Simple undirected graph; edges stored 0-based with a < b.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
    // File format: line 1 "n m"; then m lines "u v" (1-based). Duplicate
    // and self-loop lines are rejected with line-precise messages.
    static Graph parse_text(const std::string& text,
                            const std::string& name = "<string>");
    static Graph read_file(const std::string& path);
    std::string to_text() const;

    bool adjacent(int u, int v) const;
    std::vector<int> degrees() const;
    // Both orientations of every edge as an arity-2 set.
    KSet edge_pairs() const;
    Graph relabeled(const Permutation& g) const;
};

// ---- the regular 2-set predicate ----

struct RegularityCertificate {
    bool regular = true;
    // failed condition: 1 = inhomogeneous multiprojection, 2 = projections
    // sharing a point differ
    int condition = 0;
    int point = -1;  // 1-based in messages
    std::string detail;
};

// Conditions: every 1- and 2-multiprojection homogeneous, and the two
// 1-projections either equal or disjoint (point orbits of one group).
RegularityCertificate is_regular_2set(const KSet& x);

// ---- the refinement ----

// A partition of V^(2) into colored 2-sets plus vertex colors. Colors are
// stable under every automorphism of the input (soundness invariant).
struct RefinementState {
    int n = 0;
    std::vector<int> cls;  // n*n ids; diagonal entries are vertex colors
    int class_count = 0;
    int iteration = 0;
    bool stable = false;
    std::vector<int> individualized;
    // composition direction used by the cycle-split step per iteration:
    // the intransitive alternation (left, right, right, left, left, ...)
    std::vector<char> schedule;  // 'L' or 'R'

    int pair_class(int u, int v) const { return cls[u * n + v]; }
    int vertex_class(int v) const { return cls[v * n + v]; }
    std::vector<std::vector<int>> vertex_classes() const;
    std::vector<std::int64_t> pair_class_sizes() const;  // off-diagonal classes
    bool respects(const Permutation& g) const;
};

// Edge/non-edge coloring split by multiplicity signatures until every
// class passes is_regular_2set.
RefinementState initial_partition(const Graph& g);
RefinementState initial_partition(const KSet& x2);  // arbitrary 2-set

// One monotone refinement pass: (a) regularity splitting, (b) composition
// counts, (c) the cycle-structure split on thin balanced classes. Never
// merges; any automorphism of the input preserves the new classes.
RefinementState refine_once(const RefinementState& s);
RefinementState refine_to_stable(RefinementState s, int max_iterations = -1);

// ---- exact orbit separation and isomorphism ----

struct OrbitPartition {
    std::vector<std::vector<int>> vertex_orbits;  // exact Aut orbits, sorted
    std::vector<std::int64_t> pair_orbit_sizes;
    PermGroup aut;
    std::uint64_t aut_order = 0;
    bool refinement_exact = false;  // stable refinement matched the orbits
    bool verified = true;           // false = "refinement-stable, unverified"
    RefinementState stable_state;
    std::string to_json() const;
};

// Refinement first; the answer is made exact by an individualization
// backtracking with leaf verification (the refinement accelerates, the
// search is the authority).
OrbitPartition orbit_partition(const Graph& g,
                               int exact_budget = kExactDegreeBudget);

struct IsoResult {
    enum class Verdict { kIsomorphic, kNonIsomorphic, kUndecided };
    Verdict verdict = Verdict::kUndecided;
    std::optional<Permutation> bijection;  // verified edge-exact
    std::string invariant;                 // distinguishing invariant on "no"
    std::string to_json() const;
};

IsoResult isomorphic(const Graph& a, const Graph& b,
                     int exact_budget = kExactDegreeBudget);

}  // namespace korb
