#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "korb/perm.hpp"

namespace korb {

// A k-tuple is a sequence of 0-based points; tuples with repeated values
// ("weak" tuples) only arise from concatenation and are flagged at the
// set level.
using Tuple = std::vector<int>;

// Ordered list of coordinate indices into an ambient tuple (0-based
// internally, 1-based at I/O boundaries).
struct Subspace {
    std::vector<int> idx;

    Subspace() = default;
    explicit Subspace(std::vector<int> indices);
    int size() const { return static_cast<int>(idx.size()); }
    // Support: the index set, sorted.
    std::vector<int> support() const;
    bool operator==(const Subspace&) const = default;
};

// Image of a subspace under g with indices re-sorted ascending; the
// permutation that sorted them goes to *sorting if requested.
Subspace act_subspace(const Permutation& g, const Subspace& i,
                      std::vector<int>* sorting = nullptr);

// A finite set of k-tuples over [0, n), kept sorted and duplicate-free;
// multiset mode carries a parallel positive count per tuple.
class KSet {
public:
    KSet() = default;
    // Plain set: duplicates collapse (an error unless multiset it told to
    // count them). In multiset mode duplicates accumulate counts.
    static KSet from_tuples(int k, int n, std::vector<Tuple> tuples,
                            bool multiset = false, bool weak = false);
    static KSet from_counted(int k, int n, std::vector<Tuple> tuples,
                             std::vector<std::int64_t> counts, bool weak = false);
    static KSet empty(int k, int n, bool multiset = false);

    int arity() const { return k_; }
    int degree() const { return n_; }
    bool is_multiset() const { return multiset_; }
    // Weak sets may contain tuples with repeated coordinate values.
    bool is_weak() const { return weak_; }

    // Number of distinct tuples / total with multiplicities.
    std::int64_t size() const { return static_cast<std::int64_t>(tuples_.size()); }
    std::int64_t total_size() const;

    const std::vector<Tuple>& tuples() const { return tuples_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    const Tuple& tuple(std::int64_t i) const { return tuples_[i]; }
    std::int64_t count(std::int64_t i) const { return counts_[i]; }
    std::int64_t count_of(const Tuple& t) const;  // 0 when absent

    bool contains(const Tuple& t) const;
    // Expanded rows in canonical order (each tuple repeated by count).
    std::vector<Tuple> expanded() const;

    KSet as_set() const;       // drop multiplicities
    KSet as_multiset() const;  // counts of 1

    bool operator==(const KSet&) const = default;
    bool same_tuples(const KSet& o) const { return tuples_ == o.tuples_; }

    // Text format: line 1 "k n [multiset]"; one tuple per line of 1-based
    // points, "*count" suffix in multiset mode. Emitted and parsed
    // bit-exactly for canonical sets.
    std::string to_text() const;
    static KSet parse_text(const std::string& text,
                           const std::string& name = "<string>");

private:
    int k_ = 0;
    int n_ = 0;
    bool multiset_ = false;
    bool weak_ = false;
    std::vector<Tuple> tuples_;
    std::vector<std::int64_t> counts_;
};

// ---- tuple-level operations ----

Tuple project_tuple(const Tuple& t, const Subspace& i);
Tuple act_left(const Permutation& g, const Tuple& t);
Tuple concat_tuples(const Tuple& a, const Tuple& b);
// Set of distinct values of a tuple, sorted.
std::vector<int> tuple_support(const Tuple& t);

// ---- set-level operations ----

// Projection deduplicates; multiprojection keeps counts so that
// |multiproject(X, I)| == |X| with multiplicities.
KSet project(const KSet& x, const Subspace& i);
KSet multiproject(const KSet& x, const Subspace& i);

// Tuple-wise concatenation. `pairing` maps expanded row index of y to
// expanded row index of z (a bijection); sizes must match in multiset
// mode. Output tuples may repeat coordinates and are flagged weak.
KSet concat(const KSet& y, const KSet& z, const std::vector<std::int64_t>& pairing);
// Aligned concatenation: row i with row i.
KSet concat(const KSet& y, const KSet& z);

KSet act_left(const Permutation& g, const KSet& x);

// Right action cannot be disengaged from the ambient n-set: re-projects
// `ambient` onto the sorted image g(I).
KSet act_right(const KSet& ambient, const Subspace& i, const Permutation& g,
               Subspace* image_subspace = nullptr);

// True iff all tuples of multiproject(x, i) share one multiplicity.
// The common multiplicity goes to *multiplicity when non-null.
bool homogeneity_check(const KSet& x, const Subspace& i,
                       std::int64_t* multiplicity = nullptr);

// Partition an arity-2 multiset whose two 1-multiprojections agree into
// directed cycles <u1 u2>,<u2 u3>,...,<ur u1>. Greedy and deterministic:
// each cycle starts at the smallest unused pair and always continues with
// the smallest unused successor. Throws on unbalanced input.
std::vector<std::vector<Tuple>> pair_multiset_cycles(const KSet& m2);

}  // namespace korb
