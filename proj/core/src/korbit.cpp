#include "korb/korbit.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace korb {

bool KOrbit::validate(std::string* why, std::uint64_t cap) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (set.size() == 0) return fail("empty orbit");
    KOrbit reorbit = orbit_of_tuple(group, set.tuple(0));
    if (!reorbit.set.same_tuples(set))
        return fail("recorded group is not transitive on the set");
    std::uint64_t ord = group.order(cap);
    if (ord % static_cast<std::uint64_t>(set.size()) != 0)
        return fail("orbit size does not divide group order");
    // Proposition: every multiprojection of an orbit is homogeneous.
    const int k = set.arity();
    for (int a = 0; a < k; ++a) {
        if (!homogeneity_check(set, Subspace({a})))
            return fail("1-multiprojection not homogeneous");
        for (int b = 0; b < k; ++b)
            if (a != b && !homogeneity_check(set, Subspace({a, b})))
                return fail("2-multiprojection not homogeneous");
    }
    return true;
}

KOrbit orbit_of_tuple(const PermGroup& g, const Tuple& start) {
    if (static_cast<int>(start.size()) > g.degree())
        throw error("orbit_of_tuple: arity exceeds degree");
    for (int v : start)
        if (v < 0 || v >= g.degree()) throw error("orbit_of_tuple: point out of range");
    std::set<Tuple> seen{start};
    std::deque<Tuple> queue{start};
    while (!queue.empty()) {
        Tuple t = std::move(queue.front());
        queue.pop_front();
        for (const auto& gen : g.generators()) {
            Tuple u = act_left(gen, t);
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    KOrbit orb;
    orb.set = KSet::from_tuples(static_cast<int>(start.size()), g.degree(),
                                std::vector<Tuple>(seen.begin(), seen.end()));
    orb.group = g;
    return orb;
}

std::vector<KOrbit> orbits_k(const PermGroup& g, int k, std::uint64_t budget) {
    const int n = g.degree();
    if (k < 1 || k > n) throw error("orbits_k: need 1 <= k <= degree");
    std::uint64_t falling = 1;
    for (int i = 0; i < k; ++i) {
        falling *= static_cast<std::uint64_t>(n - i);
        if (falling > budget) throw budget_exceeded("orbits_k", budget);
    }

    std::vector<KOrbit> orbits;
    std::set<Tuple> assigned;
    // enumerate V^(k) in lexicographic order
    Tuple t(k);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == k) {
            if (!assigned.count(t)) {
                KOrbit orb = orbit_of_tuple(g, t);
                for (const auto& u : orb.set.tuples()) assigned.insert(u);
                orbits.push_back(std::move(orb));
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            t[depth] = v;
            rec(depth + 1);
            used[v] = 0;
        }
    };
    rec(0);
    return orbits;
}

KOrbit full_orbit(const PermGroup& g, std::uint64_t cap) {
    const int n = g.degree();
    std::vector<Tuple> rows;
    for (const auto& e : g.elements(cap)) rows.push_back(e.images());
    KOrbit orb;
    orb.set = KSet::from_tuples(n, n, std::move(rows));
    orb.group = g;
    return orb;
}

std::vector<std::vector<int>> support_system(const KSet& x) {
    std::set<std::vector<int>> supports;
    for (const auto& t : x.tuples()) supports.insert(tuple_support(t));
    return {supports.begin(), supports.end()};
}

}  // namespace korb
