#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "korb/common.hpp"

namespace korb {

// Multiset of cycle lengths (fixed points included).
struct CycleType {
    std::map<int, int> count;  // length -> multiplicity
    int degree = 0;

    bool operator==(const CycleType&) const = default;
    std::string to_string() const;
};

// A permutation of [0, n). Images are 0-based internally; parsing and
// printing use 1-based points in disjoint cycle notation throughout.
// Immutable after construction.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);
    // Accepts "(1 2 3)(4 5)" with 1-based space-separated points; "()" or
    // an empty string is the identity.
    static Permutation parse_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int v) const { return img_[v]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;

    // Nontrivial cycles, each rotated to start at its smallest point,
    // sorted by that point.
    std::vector<std::vector<int>> cycles() const;
    CycleType cycle_type() const;
    int order() const;
    std::string to_cycle_string() const;  // 1-based; identity prints "()"

    // Common cycle length if the permutation is fixed-point-free with all
    // cycles of one length > 1 (and is not the identity); nullopt otherwise.
    std::optional<int> regular_cycle_length() const;

    // Dense code for fast set membership; requires degree <= 16.
    std::uint64_t pack() const;

    auto operator<=>(const Permutation& o) const { return img_ <=> o.img_; }
    bool operator==(const Permutation& o) const { return img_ == o.img_; }

private:
    std::vector<int> img_;
};

// Product applying h first: result(v) = g(h(v)). Orientation pinned by
// a unit test against the two-row multiplication identity.
Permutation compose(const Permutation& g, const Permutation& h);

// g a g^{-1}
Permutation conjugate(const Permutation& a, const Permutation& g);

// True iff g is a non-identity permutation whose cycles all share one
// length > 1 (it moves every point). The shared length goes to *length.
bool is_regular_element(const Permutation& g, int* length = nullptr);

}  // namespace korb
