#pragma once

#include <optional>
#include <string>
#include <vector>

#include "korb/aut.hpp"
#include "korb/korbit.hpp"
#include "korb/kset.hpp"
#include "korb/perm_group.hpp"

namespace korb {

// ---- base-structure decomposition of cycle orbits ----

enum class BaseKind { kRCycle, kMultituple, kSlk, kRCycleProjection };

std::string to_string(BaseKind k);

struct BaseComponent {
    BaseKind kind = BaseKind::kMultituple;
    // Coordinate positions in the parent k-set; for rcycles the positions
    // are recorded in cycle-aligned order.
    Subspace positions;
    // Multiprojection of the orbit onto those positions, row-aligned with
    // the parent rows.
    KSet factor;
    int cycle_length = 1;  // l of the underlying cycle(s); 1 for multituples
    std::optional<Permutation> cycle;  // defining cycle for rcycle kinds
};

struct CycleOrbitDecomposition {
    std::vector<BaseComponent> components;
    // Alternative grouping where m >= 2 equal-length rcycle factors are
    // re-paired into S_l^m factors on disjoint supports.
    std::vector<BaseComponent> s_form;
    std::vector<Tuple> rows;  // g^j(alpha), j = 0.., row order of all factors
};

// Decomposes C = gr(g) . alpha into concatenation factors. Throws when C
// is not the <g>-orbit of alpha. Reassembling the factors row-wise over
// the recorded positions reproduces C exactly.
CycleOrbitDecomposition decompose_cycle_orbit(const KSet& c, const Permutation& g,
                                              const Tuple& alpha);

// ---- rcycles and the local property ----

struct RCycle {
    Permutation cycle;  // a single p-cycle of S_n
    KSet set;           // { cycle^j . alpha : j in [0,p) }, subset of X
};

// All (p,k)-rcycles inside x: orbits {c^j t} of a single p-cycle c with
// supp(t) inside supp(c). Deterministic order, deduplicated by tuple set.
std::vector<RCycle> find_rcycles(const KSet& x, int p);

struct LocalWitness {
    RCycle rcycle;
    std::optional<Permutation> witness;  // g in Aut(X) with g|supp(c) = c
    bool confirmed = false;
};

// For each (p,k)-rcycle of x, looks for an automorphism of x whose
// restriction to the rcycle's support realizes its cycle. Negative
// findings are data, not errors.
std::vector<LocalWitness> local_property_check(const KSet& x, int p,
                                               std::uint64_t cap = kDefaultCap,
                                               int degree_budget = kDefaultAutDegreeBudget);

// ---- automorphic subspaces and coherence ----

// Subsets U whose setwise stabilizer in G is transitive on U, i.e. the
// 1-orbits of subgroups of G. Sorted by (size, content).
std::vector<std::vector<int>> automorphic_supports(const PermGroup& g,
                                                   std::uint64_t cap = kDefaultCap);
bool is_automorphic_support(const PermGroup& g, const std::vector<int>& u,
                            std::uint64_t cap = kDefaultCap);

enum class Coherence { kCoherent, kIncoherent, kNeitherScope };

std::string to_string(Coherence c);

struct CoherenceReport {
    Coherence verdict = Coherence::kNeitherScope;
    bool elementary = false;
    // The classes of the support merge (sorted point sets).
    std::vector<std::vector<int>> support_classes;
    // Maximal common-support suborbits, one per tuple support (k-blocks).
    std::vector<KSet> blocks;
    // Scan bound actually used; the sub-rorbit universe is restricted to
    // cyclic subgroups and point stabilizers of Aut(X).
    std::uint64_t scanned_subgroups = 0;
    bool scan_bounded = true;
    std::string to_json(const std::string& group_name, const PermGroup& g) const;
};

// Classifies the k-rorbit of G on the automorphic support `u`. Throws
// when u is not automorphic (the projection would not be a rorbit).
// scan_elementary=false skips the sub-rorbit scan (verdict only).
CoherenceReport coherence_classify(const PermGroup& g, const std::vector<int>& u,
                                   std::uint64_t cap = kDefaultCap,
                                   int degree_budget = kDefaultAutDegreeBudget,
                                   bool scan_elementary = true);

struct NotDividesRecord {
    std::vector<int> support;
    int k = 0;
    bool elementary_coherent = false;
    bool k_divides_n = false;  // expected false whenever elementary coherent
};

// Scans every automorphic support 1 < |U| < n, classifies its rorbit and
// records the divisibility check for the elementary coherent ones.
std::vector<NotDividesRecord> check_not_divides(const PermGroup& g,
                                                std::uint64_t cap = kDefaultCap);

// ---- polycirculant machinery ----

struct PolycircWitness {
    std::optional<Permutation> witness;
    std::string method;  // "construction" or "exhaustive"
    int prime = 0;       // cycle length of a construction witness
    bool counterexample_candidate = false;
    std::string note;
    std::string to_json(const std::string& group_name, const PermGroup& g) const;
};

// Attempts the constructive route (partition of V into automorphic
// p-subspaces, one p-cycle per part, product checked against the 2-orbit
// coloring), greatest prime divisor of n first; falls back to an
// exhaustive scan of the 2-closure. A miss is a first-class
// counterexample-candidate record, never a silent absence.
PolycircWitness polycirculant_witness(const PermGroup& g,
                                      std::uint64_t cap = kDefaultCap,
                                      int degree_budget = kDefaultAutDegreeBudget);

// True iff g maps every class onto itself (membership test for the group
// the classes define, e.g. a k-closure).
bool preserves_classes(const Permutation& g, const std::vector<KSet>& classes);

// Bounded random search for a transitive subgroup with a block system of
// q-element blocks (witness for the greatest-prime-blocks lemma).
struct QBlockWitness {
    std::optional<PermGroup> subgroup;
    std::vector<std::vector<int>> blocks;
    std::uint64_t samples_used = 0;
    bool trivial_prime_case = false;  // degree prime: cyclic regular witness
};
QBlockWitness find_incoherent_q_blocks(const PermGroup& g, int q,
                                       std::uint64_t samples, std::uint64_t seed,
                                       std::uint64_t cap = kDefaultCap);

}  // namespace korb
