#include "korb/aut.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace korb {

namespace {
using ordered_json = nlohmann::ordered_json;
constexpr std::uint64_t kSearchNodeCap = 50'000'000;
}  // namespace

ColoredPairStructure::ColoredPairStructure(int n)
    : n_(n), color_count_(1), colors_(static_cast<size_t>(n) * n, 0) {}

void ColoredPairStructure::canonicalize_colors() {
    // already canonical: colors assigned from sorted signatures
}

ColoredPairStructure ColoredPairStructure::from_kset(const KSet& x) {
    return from_classes(x.degree(), {x});
}

ColoredPairStructure ColoredPairStructure::from_classes(
    int n, const std::vector<KSet>& classes) {
    // Signature of (u,v): per class and ordered position pair (i,j), the
    // (multiplicity-weighted) number of tuples with t_i=u, t_j=v; diagonal
    // signatures count per-position occurrencies. A leading flag keeps
    // diagonal and off-diagonal colors apart.
    std::map<std::pair<int, int>, std::map<std::vector<int>, std::int64_t>> sig;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            sig[{u, v}];  // materialize empty signatures
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        const KSet& c = classes[ci];
        const int k = c.arity();
        for (std::int64_t r = 0; r < c.size(); ++r) {
            const Tuple& t = c.tuple(r);
            const std::int64_t w = c.count(r);
            for (int i = 0; i < k; ++i) {
                sig[{t[i], t[i]}][{static_cast<int>(ci), i, -1}] += w;
                for (int j = 0; j < k; ++j)
                    if (i != j) sig[{t[i], t[j]}][{static_cast<int>(ci), i, j}] += w;
            }
        }
    }
    using Key = std::pair<int, std::vector<std::pair<std::vector<int>, std::int64_t>>>;
    std::vector<Key> keys(static_cast<size_t>(n) * n);
    std::map<Key, int> ids;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<std::vector<int>, std::int64_t>> flat(
                sig[{u, v}].begin(), sig[{u, v}].end());
            keys[u * n + v] = {u == v ? 0 : 1, std::move(flat)};
            ids.try_emplace(keys[u * n + v], 0);
        }
    // ids ordered by signature so the numbering is label-invariant
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    ColoredPairStructure cps(n);
    for (size_t i = 0; i < keys.size(); ++i) cps.colors_[i] = ids[keys[i]];
    cps.color_count_ = next;
    cps.refine();
    return cps;
}

void ColoredPairStructure::refine() {
    if (n_ == 0) return;
    for (;;) {
        std::map<std::vector<std::int64_t>, int> ids;
        std::vector<std::vector<std::int64_t>> sigs(static_cast<size_t>(n_) * n_);
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v) {
                std::vector<std::int64_t> s;
                s.reserve(n_ + 1);
                s.push_back(color(u, v));
                std::vector<std::int64_t> ws;
                ws.reserve(n_);
                for (int w = 0; w < n_; ++w)
                    ws.push_back(static_cast<std::int64_t>(color(u, w)) *
                                     (color_count_ + 1) +
                                 color(w, v));
                std::sort(ws.begin(), ws.end());
                s.insert(s.end(), ws.begin(), ws.end());
                sigs[u * n_ + v] = std::move(s);
            }
        for (const auto& s : sigs) ids.try_emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        std::vector<int> fresh(static_cast<size_t>(n_) * n_);
        for (size_t i = 0; i < fresh.size(); ++i) fresh[i] = ids[sigs[i]];
        if (next == color_count_ && fresh == colors_) break;
        bool stable = (next == color_count_);
        colors_ = std::move(fresh);
        color_count_ = next;
        if (stable) break;
    }
}

void ColoredPairStructure::individualize(int v) {
    colors_[v * n_ + v] = color_count_++;
    refine();
}

bool ColoredPairStructure::respects(const Permutation& g) const {
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (color(u, v) != color(g(u), g(v))) return false;
    return true;
}

std::vector<std::uint64_t> ColoredPairStructure::color_histogram() const {
    std::vector<std::uint64_t> h(color_count_, 0);
    for (int c : colors_) ++h[c];
    return h;
}

namespace {

// Ordered-partition backtracking over S_n guided by refined pair colors.
// `leaf` is the exact check; colors only prune.
class AutSearch {
public:
    AutSearch(const ColoredPairStructure& cps,
              std::function<bool(const Permutation&)> leaf)
        : cps_(cps), leaf_(std::move(leaf)), n_(cps.degree()) {
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        // assign rare colors first
        auto hist = cps_.color_histogram();
        std::stable_sort(base_.begin(), base_.end(), [&](int a, int b) {
            return std::pair(hist[cps_.vertex_color(a)], cps_.vertex_color(a)) <
                   std::pair(hist[cps_.vertex_color(b)], cps_.vertex_color(b));
        });
    }

    AutResult run() {
        std::vector<Permutation> gens;
        std::uint64_t order = 1;
        for (int level = 0; level < n_; ++level) {
            const int b = base_[level];
            std::vector<Permutation> level_gens;
            for (const auto& g : gens) {
                bool fixes = true;
                for (int j = 0; j < level; ++j)
                    if (g(base_[j]) != base_[j]) {
                        fixes = false;
                        break;
                    }
                if (fixes) level_gens.push_back(g);
            }
            std::vector<char> orbit(n_, 0);
            auto grow_orbit = [&] {
                std::vector<int> stack;
                for (int v = 0; v < n_; ++v)
                    if (orbit[v]) stack.push_back(v);
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (const auto& g : level_gens) {
                        if (!orbit[g(v)]) {
                            orbit[g(v)] = 1;
                            stack.push_back(g(v));
                        }
                        int pre = g.inverse()(v);
                        if (!orbit[pre]) {
                            orbit[pre] = 1;
                            stack.push_back(pre);
                        }
                    }
                }
            };
            orbit[b] = 1;
            grow_orbit();
            for (int c = 0; c < n_; ++c) {
                if (orbit[c] || cps_.vertex_color(c) != cps_.vertex_color(b)) continue;
                auto g = search_with(level, c);
                if (g) {
                    gens.push_back(*g);
                    level_gens.push_back(*g);
                    orbit[c] = 1;
                    grow_orbit();
                }
            }
            std::uint64_t orbit_size = 0;
            for (char f : orbit) orbit_size += f;
            order *= orbit_size;
        }
        AutResult res;
        res.group = PermGroup(n_, gens, order);
        res.order = order;
        res.nodes = nodes_;
        return res;
    }

private:
    bool consistent(const std::vector<int>& img, const std::vector<int>& assigned,
                    int u, int x) const {
        if (cps_.vertex_color(u) != cps_.vertex_color(x)) return false;
        for (int w : assigned) {
            if (cps_.color(u, w) != cps_.color(x, img[w])) return false;
            if (cps_.color(w, u) != cps_.color(img[w], x)) return false;
        }
        return true;
    }

    // Search an automorphism fixing base_[0..level-1] pointwise and
    // mapping base_[level] to c.
    std::optional<Permutation> search_with(int level, int c) {
        std::vector<int> img(n_, -1);
        std::vector<char> used(n_, 0);
        std::vector<int> assigned;
        for (int j = 0; j < level; ++j) {
            int b = base_[j];
            if (!consistent(img, assigned, b, b)) return std::nullopt;
            img[b] = b;
            used[b] = 1;
            assigned.push_back(b);
        }
        int b = base_[level];
        if (used[c] || !consistent(img, assigned, b, c)) return std::nullopt;
        img[b] = c;
        used[c] = 1;
        assigned.push_back(b);
        return dfs(level + 1, img, used, assigned);
    }

    std::optional<Permutation> dfs(int depth, std::vector<int>& img,
                                   std::vector<char>& used,
                                   std::vector<int>& assigned) {
        if (++nodes_ > kSearchNodeCap)
            throw budget_exceeded("automorphism search", kSearchNodeCap);
        if (depth == n_) {
            Permutation g(img);
            if (leaf_(g)) return g;
            return std::nullopt;
        }
        int u = base_[depth];
        for (int x = 0; x < n_; ++x) {
            if (used[x] || !consistent(img, assigned, u, x)) continue;
            img[u] = x;
            used[x] = 1;
            assigned.push_back(u);
            auto found = dfs(depth + 1, img, used, assigned);
            if (found) return found;
            assigned.pop_back();
            used[x] = 0;
            img[u] = -1;
        }
        return std::nullopt;
    }

    const ColoredPairStructure& cps_;
    std::function<bool(const Permutation&)> leaf_;
    int n_;
    std::vector<int> base_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

AutResult aut_of_kset(const KSet& x, int degree_budget) {
    if (x.degree() > degree_budget)
        throw budget_exceeded("aut_of_kset degree", degree_budget);
    auto cps = ColoredPairStructure::from_kset(x);
    auto leaf = [&x](const Permutation& g) {
        for (std::int64_t r = 0; r < x.size(); ++r)
            if (x.count_of(act_left(g, x.tuple(r))) != x.count(r)) return false;
        return true;
    };
    return AutSearch(cps, leaf).run();
}

AutResult aut_of_classes(int n, const std::vector<KSet>& classes,
                         int degree_budget) {
    if (n > degree_budget)
        throw budget_exceeded("aut_of_classes degree", degree_budget);
    auto cps = ColoredPairStructure::from_classes(n, classes);
    auto leaf = [&classes](const Permutation& g) {
        for (const auto& x : classes)
            for (std::int64_t r = 0; r < x.size(); ++r)
                if (x.count_of(act_left(g, x.tuple(r))) != x.count(r)) return false;
        return true;
    };
    return AutSearch(cps, leaf).run();
}

std::optional<Permutation> find_kset_isomorphism(const KSet& from, const KSet& to,
                                                 int degree_budget) {
    if (from.degree() != to.degree() || from.arity() != to.arity() ||
        from.size() != to.size() || from.total_size() != to.total_size())
        return std::nullopt;
    const int n = from.degree();
    if (n > degree_budget)
        throw budget_exceeded("find_kset_isomorphism degree", degree_budget);
    auto ca = ColoredPairStructure::from_kset(from);
    auto cb = ColoredPairStructure::from_kset(to);
    if (ca.color_count() != cb.color_count() ||
        ca.color_histogram() != cb.color_histogram())
        return std::nullopt;

    // Plain backtracking: candidate images must carry the same canonical
    // color; the leaf check is exact.
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    std::vector<int> assigned;
    std::uint64_t nodes = 0;
    std::function<std::optional<Permutation>(int)> dfs =
        [&](int u) -> std::optional<Permutation> {
        if (++nodes > kSearchNodeCap)
            throw budget_exceeded("isomorphism search", kSearchNodeCap);
        if (u == n) {
            Permutation g(img);
            for (std::int64_t r = 0; r < from.size(); ++r)
                if (to.count_of(act_left(g, from.tuple(r))) != from.count(r))
                    return std::nullopt;
            return g;
        }
        for (int x = 0; x < n; ++x) {
            if (used[x] || ca.vertex_color(u) != cb.vertex_color(x)) continue;
            bool ok = true;
            for (int w : assigned)
                if (ca.color(u, w) != cb.color(x, img[w]) ||
                    ca.color(w, u) != cb.color(img[w], x)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            img[u] = x;
            used[x] = 1;
            assigned.push_back(u);
            auto found = dfs(u + 1);
            if (found) return found;
            assigned.pop_back();
            used[x] = 0;
            img[u] = -1;
        }
        return std::nullopt;
    };
    return dfs(0);
}

KClosure k_closure(const PermGroup& g, int k, std::uint64_t tuple_budget,
                   int degree_budget, const PermGroup* relative_to) {
    auto orbits = orbits_k(g, k, tuple_budget);
    std::vector<KSet> classes;
    classes.reserve(orbits.size());
    for (auto& o : orbits) classes.push_back(o.set);
    KClosure out;
    if (relative_to) {
        std::vector<Permutation> members;
        for (const auto& e : relative_to->elements()) {
            bool ok = true;
            for (const auto& x : classes) {
                for (std::int64_t r = 0; ok && r < x.size(); ++r)
                    if (!x.contains(act_left(e, x.tuple(r)))) ok = false;
                if (!ok) break;
            }
            if (ok) members.push_back(e);
        }
        out.group = PermGroup(g.degree(), members,
                              static_cast<std::uint64_t>(members.size()));
        out.order = members.size();
        out.mode = ClosureMode::kRelative;
        return out;
    }
    AutResult res = aut_of_classes(g.degree(), classes, degree_budget);
    out.group = res.group;
    out.order = res.order;
    out.mode = ClosureMode::kAbsolute;
    return out;
}

std::string KClosureReport::to_json() const {
    ordered_json j;
    j["schema"] = 1;
    j["degree"] = degree;
    j["group_order"] = group_order;
    j["k_max"] = k_max;
    ordered_json orders = ordered_json::object();
    for (size_t i = 0; i < closure_orders.size(); ++i)
        orders["k" + std::to_string(i + 1)] = closure_orders[i];
    j["closure_orders"] = orders;
    if (least_k_defined)
        j["least_k_defined"] = *least_k_defined;
    else
        j["least_k_defined"] = nullptr;
    j["k_closed"] = k_closed;
    j["mode"] = mode == ClosureMode::kAbsolute ? "absolute" : "relative";
    j["witness_generators"] = witness_generators;
    return j.dump();
}

KClosureReport classify_k_defined(const PermGroup& g, int k_max,
                                  std::uint64_t tuple_budget, int degree_budget) {
    KClosureReport report;
    report.degree = g.degree();
    report.group_order = g.order();
    report.k_max = std::min(k_max, g.degree());
    for (int k = 1; k <= report.k_max; ++k) {
        KClosure c = k_closure(g, k, tuple_budget, degree_budget);
        report.closure_orders.push_back(c.order);
        report.mode = c.mode;
        if (!report.least_k_defined && c.order == report.group_order) {
            report.least_k_defined = k;
            for (const auto& p : c.group.generators())
                report.witness_generators.push_back(p.to_cycle_string());
        }
    }
    if (report.least_k_defined) {
        int k = *report.least_k_defined;
        report.k_closed =
            (k == 1) || report.closure_orders[k - 2] != report.group_order;
    }
    return report;
}

PermGroup group_intersection(const PermGroup& g, const PermGroup& h,
                             std::uint64_t cap) {
    if (g.degree() != h.degree())
        throw error("group_intersection: degree mismatch");
    const auto& eg = g.elements(cap);
    const auto& eh = h.elements(cap);
    std::vector<Permutation> inter;
    std::set_intersection(eg.begin(), eg.end(), eh.begin(), eh.end(),
                          std::back_inserter(inter));
    return PermGroup(g.degree(), inter, static_cast<std::uint64_t>(inter.size()));
}

NormalityWitness normality_witness(const PermGroup& a, const PermGroup& g, int k,
                                   std::uint64_t tuple_budget, std::uint64_t cap) {
    if (!a.is_subgroup_of(g, cap))
        throw error("normality_witness: A is not a subgroup of G");
    std::vector<KOrbit> orbits;
    if (k == g.degree())
        orbits = {full_orbit(g, cap)};
    else
        orbits = orbits_k(g, k, tuple_budget);
    NormalityWitness w;
    w.all_equal = true;
    for (const auto& orbit : orbits) {
        PartitionK right = right_coset_partition(a, orbit.set);
        KOrbit y = orbit_of_tuple(a, orbit.set.tuple(0));
        PartitionK left = left_coset_cover(g, y.set);
        bool equal = left.classes == right.classes;
        w.equal_per_orbit.push_back(equal);
        if (!equal) w.all_equal = false;
    }
    w.verdict_normal = (k == g.degree()) && w.all_equal;
    return w;
}

}  // namespace korb
