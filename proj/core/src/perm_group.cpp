#include "korb/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace korb {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// BFS closure of `gens` seeded with `seed`; throws group_too_large past cap.
std::vector<Permutation> close_elements(int degree,
                                        const std::vector<Permutation>& gens,
                                        const std::vector<Permutation>& seed,
                                        std::uint64_t cap) {
    std::vector<Permutation> result;
    if (degree <= 16) {
        std::unordered_set<std::uint64_t> seen;
        std::deque<Permutation> queue;
        auto add = [&](const Permutation& p) {
            if (seen.insert(p.pack()).second) {
                if (seen.size() > cap) throw group_too_large(seen.size(), cap);
                result.push_back(p);
                queue.push_back(p);
            }
        };
        add(Permutation::identity(degree));
        for (const auto& s : seed) add(s);
        while (!queue.empty()) {
            Permutation p = std::move(queue.front());
            queue.pop_front();
            for (const auto& g : gens) add(compose(g, p));
        }
    } else {
        std::set<std::vector<int>> seen;
        std::deque<Permutation> queue;
        auto add = [&](const Permutation& p) {
            if (seen.insert(p.images()).second) {
                if (seen.size() > cap) throw group_too_large(seen.size(), cap);
                result.push_back(p);
                queue.push_back(p);
            }
        };
        add(Permutation::identity(degree));
        for (const auto& s : seed) add(s);
        while (!queue.empty()) {
            Permutation p = std::move(queue.front());
            queue.pop_front();
            for (const auto& g : gens) add(compose(g, p));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace

struct PermGroup::Cache {
    std::mutex mu;
    std::optional<std::vector<Permutation>> elements;
    std::optional<std::uint64_t> order;           // may be known without elements
    std::uint64_t failed_cap = 0;                 // largest cap that overflowed
    std::uint64_t failed_partial = 0;
    std::optional<std::vector<std::vector<int>>> point_orbits;
};

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.degree() != degree)
            throw error("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " + std::to_string(degree));
        if (!g.is_identity()) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::uint64_t known_order)
    : PermGroup(degree, std::move(generators)) {
    cache_->order = known_order;
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

const std::vector<Permutation>& PermGroup::elements(std::uint64_t cap) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->elements) return *cache_->elements;
    if (cache_->failed_cap >= cap)
        throw group_too_large(cache_->failed_partial, cap);
    try {
        cache_->elements = close_elements(degree_, gens_, {}, cap);
    } catch (const group_too_large& e) {
        cache_->failed_cap = std::max(cache_->failed_cap, cap);
        cache_->failed_partial = e.partial_count;
        throw;
    }
    cache_->order = cache_->elements->size();
    return *cache_->elements;
}

std::uint64_t PermGroup::order(std::uint64_t cap) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->order) return *cache_->order;
    }
    return elements(cap).size();
}

bool PermGroup::known_order() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->order.has_value();
}

bool PermGroup::contains(const Permutation& g, std::uint64_t cap) const {
    if (g.degree() != degree_) return false;
    const auto& elems = elements(cap);
    return std::binary_search(elems.begin(), elems.end(), g);
}

bool PermGroup::is_subgroup_of(const PermGroup& super, std::uint64_t cap) const {
    if (degree_ != super.degree()) return false;
    for (const auto& g : gens_)
        if (!super.contains(g, cap)) return false;
    return true;
}

bool PermGroup::same_group(const PermGroup& other, std::uint64_t cap) const {
    return is_subgroup_of(other, cap) && other.is_subgroup_of(*this, cap);
}

std::vector<std::vector<int>> PermGroup::point_orbits() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->point_orbits) return *cache_->point_orbits;
    }
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& g : gens_)
        for (int v = 0; v < degree_; ++v) {
            int a = find(v), b = find(g(v));
            if (a != b) parent[a] = b;
        }
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < degree_; ++v) classes[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, cls] : classes) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end());
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->point_orbits) cache_->point_orbits = out;
    return *cache_->point_orbits;
}

bool PermGroup::is_transitive() const {
    return degree_ > 0 && point_orbits().size() == 1;
}

std::vector<int> PermGroup::orbit_of_point(int v) const {
    std::vector<char> seen(degree_, 0);
    std::vector<int> orbit{v};
    seen[v] = 1;
    for (size_t i = 0; i < orbit.size(); ++i)
        for (const auto& g : gens_) {
            int u = g(orbit[i]);
            if (!seen[u]) {
                seen[u] = 1;
                orbit.push_back(u);
            }
        }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

// Pair closure: the finest G-congruence identifying a and b. Classes only
// merge, so iterating "the image of a class lies in one class" to a fixed
// point is exact.
std::vector<int> PermGroup::minimal_block(int a, int b) const {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int u, int v) {
        u = find(u);
        v = find(v);
        if (u == v) return false;
        parent[u] = v;
        return true;
    };
    unite(a, b);
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<int, std::vector<int>> classes;
        for (int v = 0; v < degree_; ++v) classes[find(v)].push_back(v);
        for (const auto& [root, members] : classes) {
            if (members.size() < 2) continue;
            for (const auto& g : gens_)
                for (size_t i = 1; i < members.size(); ++i)
                    if (unite(g(members[0]), g(members[i]))) changed = true;
        }
    }
    std::vector<int> block;
    int root = find(a);
    for (int v = 0; v < degree_; ++v)
        if (find(v) == root) block.push_back(v);
    return block;
}

std::vector<std::vector<std::vector<int>>> PermGroup::minimal_block_systems() const {
    std::vector<std::vector<std::vector<int>>> systems;
    if (!is_transitive() || degree_ < 2) return systems;
    std::set<std::vector<int>> minimal_blocks;
    size_t best = static_cast<size_t>(degree_);
    for (int b = 1; b < degree_; ++b) {
        auto block = minimal_block(0, b);
        if (block.size() == static_cast<size_t>(degree_)) continue;
        if (block.size() < best) {
            best = block.size();
            minimal_blocks.clear();
        }
        if (block.size() == best) minimal_blocks.insert(block);
    }
    for (const auto& block : minimal_blocks) {
        // Translates of a block partition the point set.
        std::set<std::vector<int>> parts{block};
        std::deque<std::vector<int>> queue{block};
        while (!queue.empty()) {
            auto cur = queue.front();
            queue.pop_front();
            for (const auto& g : gens_) {
                std::vector<int> img;
                img.reserve(cur.size());
                for (int v : cur) img.push_back(g(v));
                std::sort(img.begin(), img.end());
                if (parts.insert(img).second) queue.push_back(img);
            }
        }
        systems.emplace_back(parts.begin(), parts.end());
    }
    return systems;
}

PrimitivityReport PermGroup::primitivity() const {
    PrimitivityReport report;
    if (!is_transitive()) {
        report.verdict = Primitivity::kIntransitive;
        return report;
    }
    auto systems = minimal_block_systems();
    if (!systems.empty()) {
        report.verdict = Primitivity::kImprimitive;
        report.blocks = systems.front();
        return report;
    }
    // A transitive cyclic group of prime order is singled out as trivial.
    if (is_prime(degree_) && order() == static_cast<std::uint64_t>(degree_))
        report.verdict = Primitivity::kTrivialPrimitive;
    else
        report.verdict = Primitivity::kPrimitive;
    return report;
}

std::optional<Permutation> PermGroup::find_regular_element(std::uint64_t cap) const {
    for (const auto& g : elements(cap))
        if (is_regular_element(g)) return g;
    return std::nullopt;
}

PermGroup conjugate_group(const PermGroup& g, const Permutation& by) {
    if (by.degree() != g.degree())
        throw error("conjugate_group: degree mismatch");
    std::vector<Permutation> gens;
    gens.reserve(g.generators().size());
    for (const auto& a : g.generators()) gens.push_back(conjugate(a, by));
    if (g.known_order())
        return PermGroup(g.degree(), std::move(gens), g.order());
    return PermGroup(g.degree(), std::move(gens));
}

std::vector<Permutation> setwise_stabilizer(const PermGroup& g,
                                            const std::vector<int>& set,
                                            std::uint64_t cap) {
    std::vector<char> in_set(g.degree(), 0);
    for (int v : set) in_set[v] = 1;
    std::vector<Permutation> stab;
    for (const auto& p : g.elements(cap)) {
        bool ok = true;
        for (int v : set)
            if (!in_set[p(v)]) {
                ok = false;
                break;
            }
        if (ok) stab.push_back(p);
    }
    return stab;
}

PermGroup normal_closure(const PermGroup& g_group, const Permutation& g,
                         std::uint64_t cap) {
    // Close {g} under conjugation by the group's generators, then take the
    // generated subgroup.
    std::set<Permutation> closure_gens{g};
    std::deque<Permutation> queue{g};
    while (!queue.empty()) {
        Permutation cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& h : g_group.generators()) {
            Permutation c = conjugate(cur, h);
            if (closure_gens.insert(c).second) queue.push_back(c);
            Permutation c2 = conjugate(cur, h.inverse());
            if (closure_gens.insert(c2).second) queue.push_back(c2);
        }
        if (closure_gens.size() > cap) throw group_too_large(closure_gens.size(), cap);
    }
    return PermGroup(g_group.degree(),
                     std::vector<Permutation>(closure_gens.begin(), closure_gens.end()));
}

PermGroup subgroup_closure(int degree, const std::vector<Permutation>& gens,
                           std::uint64_t cap) {
    PermGroup sub(degree, gens);
    sub.elements(cap);
    return sub;
}

std::vector<PermGroup> bounded_subgroups(const PermGroup& g,
                                         std::uint64_t pair_budget,
                                         std::uint64_t cap) {
    const auto& elems = g.elements(cap);
    std::vector<PermGroup> out;
    std::set<std::vector<Permutation>> seen;  // keyed by sorted element set
    auto consider = [&](const PermGroup& sub) {
        if (sub.order(cap) >= g.order(cap)) return;
        if (seen.insert(sub.elements(cap)).second) out.push_back(sub);
    };
    consider(PermGroup::trivial(g.degree()));
    for (const auto& e : elems)
        if (!e.is_identity()) consider(subgroup_closure(g.degree(), {e}, cap));
    for (int v = 0; v < g.degree(); ++v) {
        std::vector<Permutation> stab;
        for (const auto& e : elems)
            if (e(v) == v) stab.push_back(e);
        consider(PermGroup(g.degree(), stab));
    }
    std::uint64_t used = 0;
    for (size_t i = 0; i < elems.size() && used < pair_budget; ++i)
        for (size_t j = i + 1; j < elems.size() && used < pair_budget; ++j) {
            ++used;
            try {
                consider(subgroup_closure(g.degree(), {elems[i], elems[j]}, cap));
            } catch (const group_too_large&) {
            }
        }
    return out;
}

Permutation induced_on_pairs(const Permutation& g) {
    const int n = g.degree();
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            index[a][b] = index[b][a] = static_cast<int>(pairs.size());
            pairs.emplace_back(a, b);
        }
    std::vector<int> img(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i)
        img[i] = index[g(pairs[i].first)][g(pairs[i].second)];
    return Permutation(std::move(img));
}

PermGroup induced_on_pairs(const PermGroup& g) {
    std::vector<Permutation> gens;
    gens.reserve(g.generators().size());
    for (const auto& p : g.generators()) gens.push_back(induced_on_pairs(p));
    const int n = g.degree();
    return PermGroup(n * (n - 1) / 2, std::move(gens));
}

}  // namespace korb
