#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "korb/korbit.hpp"
#include "korb/kset.hpp"
#include "korb/partition.hpp"
#include "korb/perm_group.hpp"

namespace korb {

inline constexpr int kDefaultAutDegreeBudget = 16;
inline constexpr int kDefaultKMax = 4;

// Total coloring of V x V (diagonal = vertex colors). The refinement and
// the backtracking search both work on this substrate; any structure of
// arity <= 2 maps onto it exactly, higher arities use it for pruning.
class ColoredPairStructure {
public:
    ColoredPairStructure() = default;
    explicit ColoredPairStructure(int n);

    static ColoredPairStructure from_kset(const KSet& x);
    // Pair colors = class ids of an arbitrary family of k-sets (e.g. the
    // k-orbits of a group); arity-2 classes color pairs directly, other
    // arities contribute position-pair count signatures.
    static ColoredPairStructure from_classes(int n, const std::vector<KSet>& classes);

    int degree() const { return n_; }
    int color(int u, int v) const { return colors_[u * n_ + v]; }
    int vertex_color(int v) const { return colors_[v * n_ + v]; }
    int color_count() const { return color_count_; }

    // Iterated arity-2 color refinement to a stable coloring:
    // color'(u,v) = (color(u,v), multiset over w of pairs
    // (color(u,w), color(w,v))). Invariant under every automorphism.
    void refine();
    // Individualize vertex v (give it a fresh color) and re-refine.
    void individualize(int v);

    bool respects(const Permutation& g) const;  // g preserves all colors

    std::vector<std::uint64_t> color_histogram() const;

private:
    void canonicalize_colors();
    int n_ = 0;
    int color_count_ = 0;
    std::vector<int> colors_;  // n*n, row-major
};

// ---- exact automorphism search ----

// Result of a backtracking search: generators plus the exact order
// obtained from the stabilizer-orbit counts (no materialization needed).
struct AutResult {
    PermGroup group;
    std::uint64_t order = 0;
    std::uint64_t nodes = 0;  // search tree nodes, for reporting
};

// The full setwise symmetry group {g in S_n : gX = X}. Exact: candidates
// come from the refined coloring, every leaf is verified against X.
// Throws budget_exceeded when n exceeds `degree_budget`.
AutResult aut_of_kset(const KSet& x, int degree_budget = kDefaultAutDegreeBudget);

// The largest subgroup of S_n fixing every class setwise; leaf checks
// verify every class.
AutResult aut_of_classes(int n, const std::vector<KSet>& classes,
                         int degree_budget = kDefaultAutDegreeBudget);

// Some permutation h with h(from) = to as sets of tuples (S_n-isomorphism
// of k-sets), or nullopt.
std::optional<Permutation> find_kset_isomorphism(const KSet& from, const KSet& to,
                                                 int degree_budget = kDefaultAutDegreeBudget);

// ---- k-closure ----

enum class ClosureMode { kAbsolute, kRelative };

struct KClosure {
    PermGroup group;           // aut(Orb_k(G))
    std::uint64_t order = 0;
    ClosureMode mode = ClosureMode::kAbsolute;
};

// aut(Orb_k(G)): the maximal group preserving every k-orbit of G setwise.
// Absolute mode searches S_n; relative mode (forced with `relative_to`)
// filters a materialized supergroup.
KClosure k_closure(const PermGroup& g, int k,
                   std::uint64_t tuple_budget = kDefaultTupleBudget,
                   int degree_budget = kDefaultAutDegreeBudget,
                   const PermGroup* relative_to = nullptr);

struct KClosureReport {
    std::uint64_t group_order = 0;
    int degree = 0;
    int k_max = 0;
    std::vector<std::uint64_t> closure_orders;  // index 0 -> k=1
    std::optional<int> least_k_defined;         // least k with closure == G
    bool k_closed = false;  // k-defined at least_k and not (k-1)-defined
    std::vector<std::string> witness_generators;  // closure gens at least_k
    ClosureMode mode = ClosureMode::kAbsolute;
    std::string to_json() const;
};

KClosureReport classify_k_defined(const PermGroup& g, int k_max = kDefaultKMax,
                                  std::uint64_t tuple_budget = kDefaultTupleBudget,
                                  int degree_budget = kDefaultAutDegreeBudget);

// Element-set intersection regenerated as a group.
PermGroup group_intersection(const PermGroup& g, const PermGroup& h,
                             std::uint64_t cap = kDefaultCap);

// ---- normality via coset partitions ----

struct NormalityWitness {
    // One entry per k-orbit of G: does AX equal X A (right coset partition
    // vs left coset cover) on that orbit?
    std::vector<bool> equal_per_orbit;
    bool all_equal = false;
    // Meaningful verdict at k = n: all_equal iff A is normal in G.
    bool verdict_normal = false;
};

NormalityWitness normality_witness(const PermGroup& a, const PermGroup& g, int k,
                                   std::uint64_t tuple_budget = kDefaultTupleBudget,
                                   std::uint64_t cap = kDefaultCap);

}  // namespace korb
