#include "korb/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace korb {

namespace {
using ordered_json = nlohmann::ordered_json;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> prime_divisors_desc(int n) {
    std::vector<int> primes;
    for (int d = 2; d <= n; ++d)
        if (n % d == 0 && is_prime(d)) primes.push_back(d);
    std::reverse(primes.begin(), primes.end());
    return primes;
}

// union-find merge of overlapping supports
std::vector<std::vector<int>> merge_supports(const std::vector<std::vector<int>>& supports,
                                             int n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& s : supports)
        for (size_t i = 1; i < s.size(); ++i) {
            int a = find(s[0]), b = find(s[i]);
            if (a != b) parent[a] = b;
        }
    std::map<int, std::set<int>> classes;
    for (const auto& s : supports)
        for (int v : s) classes[find(v)].insert(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, cls] : classes) out.emplace_back(cls.begin(), cls.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string to_string(BaseKind k) {
    switch (k) {
        case BaseKind::kRCycle: return "rcycle";
        case BaseKind::kMultituple: return "multituple";
        case BaseKind::kSlk: return "S_l^k";
        case BaseKind::kRCycleProjection: return "rcycle_projection";
    }
    return "?";
}

std::string to_string(Coherence c) {
    switch (c) {
        case Coherence::kCoherent: return "coherent";
        case Coherence::kIncoherent: return "incoherent";
        case Coherence::kNeitherScope: return "neither-scope";
    }
    return "?";
}

CycleOrbitDecomposition decompose_cycle_orbit(const KSet& c, const Permutation& g,
                                              const Tuple& alpha) {
    // rows g^j(alpha) until the orbit closes
    std::vector<Tuple> rows{alpha};
    for (Tuple t = act_left(g, alpha); t != alpha; t = act_left(g, t))
        rows.push_back(t);
    {
        std::vector<Tuple> sorted = rows;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != c.tuples())
            throw error("decompose_cycle_orbit: set is not the <g>-orbit of alpha");
    }
    const int k = c.arity();
    // cycle id and length of each point under g
    std::vector<int> cycle_id(g.degree(), -1), cycle_len(g.degree(), 1);
    auto cycles = g.cycles();
    for (size_t i = 0; i < cycles.size(); ++i)
        for (int v : cycles[i]) {
            cycle_id[v] = static_cast<int>(i);
            cycle_len[v] = static_cast<int>(cycles[i].size());
        }

    CycleOrbitDecomposition out;
    out.rows = rows;
    auto factor_on = [&](const std::vector<int>& positions) {
        std::vector<Tuple> frows;
        frows.reserve(rows.size());
        for (const auto& r : rows) {
            Tuple f;
            f.reserve(positions.size());
            for (int p : positions) f.push_back(r[p]);
            frows.push_back(std::move(f));
        }
        return KSet::from_tuples(static_cast<int>(positions.size()), c.degree(),
                                 std::move(frows), true);
    };

    std::vector<int> fixed_positions;
    std::map<int, std::vector<int>> by_cycle;  // cycle id -> positions
    for (int p = 0; p < k; ++p) {
        if (cycle_id[alpha[p]] < 0)
            fixed_positions.push_back(p);
        else
            by_cycle[cycle_id[alpha[p]]].push_back(p);
    }
    if (!fixed_positions.empty()) {
        BaseComponent comp;
        comp.kind = BaseKind::kMultituple;
        comp.positions = Subspace(fixed_positions);
        comp.factor = factor_on(fixed_positions);
        comp.cycle_length = 1;
        out.components.push_back(std::move(comp));
    }
    // single columns of distinct cycles grouped by length into S_l^m
    std::map<int, std::vector<int>> single_by_len;  // cycle length -> positions
    for (auto& [cid, positions] : by_cycle) {
        const int l = static_cast<int>(cycles[cid].size());
        if (static_cast<int>(positions.size()) == 1) {
            single_by_len[l].push_back(positions[0]);
            continue;
        }
        BaseComponent comp;
        comp.cycle_length = l;
        std::vector<int> cyc_perm_img(g.degree());
        std::iota(cyc_perm_img.begin(), cyc_perm_img.end(), 0);
        for (size_t i = 0; i < cycles[cid].size(); ++i)
            cyc_perm_img[cycles[cid][i]] = cycles[cid][(i + 1) % cycles[cid].size()];
        comp.cycle = Permutation(cyc_perm_img);
        if (static_cast<int>(positions.size()) == l) {
            comp.kind = BaseKind::kRCycle;
            // align positions with the cycle: start at the position holding
            // the smallest value, then follow successors
            std::map<int, int> pos_of_value;
            for (int p : positions) pos_of_value[alpha[p]] = p;
            int v = pos_of_value.begin()->first;
            std::vector<int> aligned;
            for (int i = 0; i < l; ++i) {
                aligned.push_back(pos_of_value.at(v));
                v = (*comp.cycle)(v);
            }
            comp.positions = Subspace(aligned);
            comp.factor = factor_on(aligned);
        } else {
            comp.kind = BaseKind::kRCycleProjection;
            comp.positions = Subspace(positions);
            comp.factor = factor_on(positions);
        }
        out.components.push_back(std::move(comp));
    }
    for (auto& [l, positions] : single_by_len) {
        BaseComponent comp;
        comp.kind = BaseKind::kSlk;
        comp.cycle_length = l;
        comp.positions = Subspace(positions);
        comp.factor = factor_on(positions);
        out.components.push_back(std::move(comp));
    }

    // S-form: where three or more full rcycles share a length, keep the
    // first and re-pair the rest column-wise into l S_l^(m-1) factors
    // (the displayed reassembly convention)
    out.s_form = out.components;
    std::map<int, std::vector<size_t>> rcycles_by_len;
    for (size_t i = 0; i < out.components.size(); ++i)
        if (out.components[i].kind == BaseKind::kRCycle)
            rcycles_by_len[out.components[i].cycle_length].push_back(i);
    for (auto& [l, idxs] : rcycles_by_len) {
        if (idxs.size() < 3) continue;
        std::vector<size_t> merged(idxs.begin() + 1, idxs.end());
        std::vector<BaseComponent> replacement;
        for (int j = 0; j < l; ++j) {
            std::vector<int> positions;
            for (size_t i : merged)
                positions.push_back(out.components[i].positions.idx[j]);
            BaseComponent comp;
            comp.kind = BaseKind::kSlk;
            comp.cycle_length = l;
            comp.positions = Subspace(positions);
            comp.factor = factor_on(positions);
            replacement.push_back(std::move(comp));
        }
        std::vector<BaseComponent> kept;
        for (size_t i = 0; i < out.s_form.size(); ++i) {
            bool drop = false;
            for (size_t r : merged)
                if (out.s_form[i].positions == out.components[r].positions &&
                    out.s_form[i].kind == BaseKind::kRCycle)
                    drop = true;
            if (!drop) kept.push_back(out.s_form[i]);
        }
        for (auto& comp : replacement) kept.push_back(std::move(comp));
        out.s_form = std::move(kept);
    }
    return out;
}

std::vector<RCycle> find_rcycles(const KSet& x, int p) {
    if (!is_prime(p)) throw error("find_rcycles: p must be prime");
    const int k = x.arity();
    const int n = x.degree();
    std::map<std::vector<Tuple>, RCycle> found;

    auto try_cycle = [&](const std::vector<int>& cyc) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (size_t i = 0; i < cyc.size(); ++i)
            img[cyc[i]] = cyc[(i + 1) % cyc.size()];
        Permutation c(img);
        std::vector<char> in_supp(n, 0);
        for (int v : cyc) in_supp[v] = 1;
        for (const auto& t : x.tuples()) {
            bool inside = true;
            for (int v : t)
                if (!in_supp[v]) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
            std::vector<Tuple> orbit{t};
            bool ok = true;
            for (Tuple u = act_left(c, t); u != t; u = act_left(c, u)) {
                if (!x.contains(u) || static_cast<int>(orbit.size()) > p) {
                    ok = false;
                    break;
                }
                orbit.push_back(u);
            }
            if (!ok || static_cast<int>(orbit.size()) != p) continue;
            std::sort(orbit.begin(), orbit.end());
            auto it = found.find(orbit);
            if (it == found.end() || c < it->second.cycle) {
                RCycle rc;
                rc.cycle = c;
                rc.set = KSet::from_tuples(k, n, orbit);
                found[orbit] = std::move(rc);
            }
        }
    };

    if (k > p) return {};
    if (k == p) {
        // the candidate cycle is the successor cycle of each tuple
        for (const auto& t : x.tuples()) try_cycle(t);
    } else {
        // enumerate all p-cycles of S_n (cyclic orders of p-subsets)
        std::vector<int> subset(p);
        std::function<void(int, int)> rec_subset = [&](int start, int depth) {
            if (depth == p) {
                // cyclic orders with subset[0] fixed first
                std::vector<int> rest(subset.begin() + 1, subset.end());
                std::sort(rest.begin(), rest.end());
                do {
                    std::vector<int> cyc{subset[0]};
                    cyc.insert(cyc.end(), rest.begin(), rest.end());
                    try_cycle(cyc);
                } while (std::next_permutation(rest.begin(), rest.end()));
                return;
            }
            for (int v = start; v < n; ++v) {
                subset[depth] = v;
                rec_subset(v + 1, depth + 1);
            }
        };
        rec_subset(0, 0);
    }
    std::vector<RCycle> out;
    for (auto& [key, rc] : found) out.push_back(std::move(rc));
    return out;
}

std::vector<LocalWitness> local_property_check(const KSet& x, int p,
                                               std::uint64_t cap,
                                               int degree_budget) {
    auto aut = aut_of_kset(x, degree_budget);
    const auto& elems = aut.group.elements(cap);
    std::vector<LocalWitness> out;
    for (auto& rc : find_rcycles(x, p)) {
        LocalWitness w;
        w.rcycle = rc;
        auto cyc_pts = rc.cycle.cycles().at(0);
        for (const auto& e : elems) {
            bool match = true;
            for (int v : cyc_pts)
                if (e(v) != rc.cycle(v)) {
                    match = false;
                    break;
                }
            if (match) {
                w.witness = e;
                w.confirmed = true;
                break;
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

bool is_automorphic_support(const PermGroup& g, const std::vector<int>& u,
                            std::uint64_t cap) {
    if (u.empty()) return false;
    auto stab = setwise_stabilizer(g, u, cap);
    PermGroup s(g.degree(), stab);
    auto orbit = s.orbit_of_point(u[0]);
    std::vector<int> sorted_u = u;
    std::sort(sorted_u.begin(), sorted_u.end());
    return orbit == sorted_u;
}

std::vector<std::vector<int>> automorphic_supports(const PermGroup& g,
                                                   std::uint64_t cap) {
    const int n = g.degree();
    if (n > 20) throw budget_exceeded("automorphic_supports degree", 20);
    const auto& elems = g.elements(cap);
    // bitmask images per element for fast setwise-stabilizer scans
    std::vector<std::vector<std::uint32_t>> bit(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) {
        bit[i].resize(n);
        for (int v = 0; v < n; ++v) bit[i][v] = 1u << elems[i](v);
    }
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> u;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) u.push_back(v);
        // setwise stabilizer, as indices
        std::vector<int> reach;  // orbit of u[0] under the stabilizer
        std::vector<char> in_orbit(n, 0);
        in_orbit[u[0]] = 1;
        bool grew = true;
        std::vector<size_t> stab_idx;
        for (size_t i = 0; i < elems.size(); ++i) {
            std::uint32_t img = 0;
            for (int v : u) img |= bit[i][v];
            if (img == mask) stab_idx.push_back(i);
        }
        while (grew) {
            grew = false;
            for (size_t i : stab_idx)
                for (int v = 0; v < n; ++v)
                    if (in_orbit[v] && !in_orbit[elems[i](v)]) {
                        in_orbit[elems[i](v)] = 1;
                        grew = true;
                    }
        }
        bool transitive = true;
        for (int v : u)
            if (!in_orbit[v]) {
                transitive = false;
                break;
            }
        // orbit must not leave u either; stabilizer preserves u so it cannot
        if (transitive) out.push_back(u);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::pair(a.size(), a) < std::pair(b.size(), b);
    });
    return out;
}

namespace {

// One sub-rorbit probe: orbit of `start` under `a` inside x, counted as a
// coherent/incoherent finding only when proper with >= 2 supports.
enum class SubFinding { kNone, kCoherent, kIncoherent };

SubFinding classify_subrorbit(const PermGroup& a, const Tuple& start,
                              const KSet& x) {
    // rorbit condition: the support of `start` is automorphic for a
    std::vector<int> sup = tuple_support(start);
    PermGroup stab(a.degree(), setwise_stabilizer(a, sup));
    if (stab.orbit_of_point(sup[0]) != sup) return SubFinding::kNone;
    KOrbit y = orbit_of_tuple(a, start);
    if (y.set.size() >= x.size() || y.set.size() < 2) return SubFinding::kNone;
    auto supports = support_system(y.set);
    if (supports.size() < 2) return SubFinding::kNone;  // a block, not a finding
    auto classes = merge_supports(supports, x.degree());
    return classes.size() == 1 ? SubFinding::kCoherent : SubFinding::kIncoherent;
}

}  // namespace

CoherenceReport coherence_classify(const PermGroup& g, const std::vector<int>& u,
                                   std::uint64_t cap, int degree_budget,
                                   bool scan_elementary) {
    if (!is_automorphic_support(g, u, cap))
        throw error("coherence_classify: input is not a rorbit (support not automorphic)");
    CoherenceReport report;
    std::vector<int> sorted_u = u;
    std::sort(sorted_u.begin(), sorted_u.end());
    KOrbit x = orbit_of_tuple(g, sorted_u);
    auto supports = support_system(x.set);
    report.support_classes = merge_supports(supports, g.degree());
    if (static_cast<int>(u.size()) >= g.degree() || supports.size() < 2) {
        report.verdict = Coherence::kNeitherScope;
    } else {
        report.verdict = report.support_classes.size() == 1 ? Coherence::kCoherent
                                                            : Coherence::kIncoherent;
    }
    // blocks: maximal common-support suborbits
    for (const auto& sup : supports) {
        std::vector<Tuple> rows;
        for (const auto& t : x.set.tuples())
            if (tuple_support(t) == sup) rows.push_back(t);
        report.blocks.push_back(
            KSet::from_tuples(x.set.arity(), x.set.degree(), std::move(rows)));
    }
    if (!scan_elementary) {
        report.elementary = false;
        report.scan_bounded = true;
        return report;
    }
    // bounded sub-rorbit scan: cyclic subgroups and point stabilizers of
    // Aut(X) (of G when the search is out of budget)
    PermGroup scan_group = g;
    try {
        auto aut = aut_of_kset(x.set, degree_budget);
        if (aut.order <= cap) scan_group = aut.group;
    } catch (const budget_exceeded&) {
    }
    report.elementary = true;
    for (const auto& a : bounded_subgroups(scan_group, 1024, cap)) {
        if (a.order(cap) <= 1) continue;
        ++report.scanned_subgroups;
        for (const auto& t : x.set.tuples()) {
            SubFinding f = classify_subrorbit(a, t, x.set);
            if (f != SubFinding::kNone) {
                report.elementary = false;
                return report;
            }
        }
    }
    return report;
}

std::string CoherenceReport::to_json(const std::string& group_name,
                                     const PermGroup& g) const {
    ordered_json j;
    j["schema"] = 1;
    j["group"] = group_name;
    j["degree"] = g.degree();
    j["order"] = g.order();
    j["verdict"] = korb::to_string(verdict);
    j["elementary"] = elementary;
    ordered_json classes = ordered_json::array();
    for (const auto& c : support_classes) {
        ordered_json cls = ordered_json::array();
        for (int v : c) cls.push_back(v + 1);
        classes.push_back(cls);
    }
    j["support_classes"] = classes;
    j["block_count"] = blocks.size();
    j["scanned_subgroups"] = scanned_subgroups;
    j["scan_bounded"] = scan_bounded;
    return j.dump();
}

std::vector<NotDividesRecord> check_not_divides(const PermGroup& g,
                                                std::uint64_t cap) {
    if (!g.is_transitive()) throw error("check_not_divides: transitive group required");
    std::vector<NotDividesRecord> out;
    for (const auto& u : automorphic_supports(g, cap)) {
        if (u.size() < 2 || static_cast<int>(u.size()) >= g.degree()) continue;
        CoherenceReport r = coherence_classify(g, u, cap);
        NotDividesRecord rec;
        rec.support = u;
        rec.k = static_cast<int>(u.size());
        rec.elementary_coherent =
            r.verdict == Coherence::kCoherent && r.elementary;
        rec.k_divides_n = (g.degree() % rec.k == 0);
        if (rec.elementary_coherent) out.push_back(std::move(rec));
    }
    return out;
}

bool preserves_classes(const Permutation& g, const std::vector<KSet>& classes) {
    for (const auto& x : classes)
        for (std::int64_t r = 0; r < x.size(); ++r)
            if (!x.contains(act_left(g, x.tuple(r)))) return false;
    return true;
}

namespace {

// All p-cycles c with supp(c) = u whose rcycle lies inside the rorbit of
// G on u (candidates for one factor of a constructed regular element).
std::vector<Permutation> part_cycles(const PermGroup& g, const std::vector<int>& u) {
    const int p = static_cast<int>(u.size());
    KOrbit x = orbit_of_tuple(g, u);
    std::set<Permutation> cycles;
    for (const auto& t : x.set.tuples()) {
        if (tuple_support(t) != u) continue;
        std::vector<int> img(g.degree());
        std::iota(img.begin(), img.end(), 0);
        for (int i = 0; i < p; ++i) img[t[i]] = t[(i + 1) % p];
        Permutation c(img);
        bool ok = true;
        Tuple cur = t;
        for (int step = 1; step < p && ok; ++step) {
            cur = act_left(c, cur);
            if (!x.set.contains(cur)) ok = false;
        }
        if (ok) cycles.insert(c);
    }
    return {cycles.begin(), cycles.end()};
}

}  // namespace

PolycircWitness polycirculant_witness(const PermGroup& g, std::uint64_t cap,
                                      int degree_budget) {
    if (!g.is_transitive())
        throw error("polycirculant_witness: transitive group required");
    const int n = g.degree();
    PolycircWitness out;

    std::vector<KSet> two_orbit_classes;
    for (auto& o : orbits_k(g, std::min(2, n))) two_orbit_classes.push_back(o.set);
    auto member = [&](const Permutation& cand) {
        return preserves_classes(cand, two_orbit_classes);
    };

    // construction: partition V into automorphic p-subspaces, pick one
    // p-cycle per part, check the product against the 2-orbit coloring
    if (n >= 2) {
        std::vector<std::vector<int>> supports;
        try {
            supports = automorphic_supports(g, cap);
        } catch (const error&) {
            supports.clear();
        }
        for (int p : prime_divisors_desc(n)) {
            std::vector<std::vector<int>> parts;
            for (const auto& u : supports)
                if (static_cast<int>(u.size()) == p) parts.push_back(u);
            if (parts.empty()) continue;
            std::map<std::vector<int>, std::vector<Permutation>> cycles_of;
            for (const auto& u : parts) cycles_of[u] = part_cycles(g, u);

            // exact-cover backtracking over parts, then cycle choices
            std::uint64_t nodes = 0;
            const std::uint64_t node_budget = 200'000;
            std::vector<std::vector<int>> chosen;
            std::function<bool(std::uint32_t)> cover = [&](std::uint32_t covered) -> bool {
                if (++nodes > node_budget) return false;
                if (covered == (n >= 32 ? ~0u : (1u << n) - 1)) {
                    // assemble: product of one cycle per chosen part
                    std::vector<size_t> pick(chosen.size(), 0);
                    std::function<bool(size_t, Permutation)> assemble =
                        [&](size_t i, Permutation acc) -> bool {
                        if (++nodes > node_budget) return false;
                        if (i == chosen.size()) {
                            if (member(acc)) {
                                out.witness = acc;
                                out.method = "construction";
                                out.prime = p;
                                return true;
                            }
                            return false;
                        }
                        for (const auto& c : cycles_of[chosen[i]])
                            if (assemble(i + 1, compose(acc, c))) return true;
                        return false;
                    };
                    return assemble(0, Permutation::identity(n));
                }
                int first_free = 0;
                while (covered & (1u << first_free)) ++first_free;
                for (const auto& u : parts) {
                    if (std::find(u.begin(), u.end(), first_free) == u.end()) continue;
                    std::uint32_t mask = 0;
                    for (int v : u) mask |= 1u << v;
                    if (mask & covered) continue;
                    if (cycles_of[u].empty()) continue;
                    chosen.push_back(u);
                    if (cover(covered | mask)) return true;
                    chosen.pop_back();
                }
                return false;
            };
            if (n < 32 && cover(0)) return out;
        }
    }

    // exhaustive fallback over the 2-closure
    out.method = "exhaustive";
    try {
        for (const auto& e : g.elements(cap))
            if (is_regular_element(e)) {
                out.witness = e;
                return out;
            }
    } catch (const group_too_large&) {
    }
    // cheap canonical candidates are members only of very large closures
    {
        std::vector<int> img(n);
        for (int v = 0; v < n; ++v) img[v] = (v + 1) % n;
        Permutation full_cycle(img);
        if (n >= 2 && member(full_cycle)) {
            out.witness = full_cycle;
            return out;
        }
    }
    try {
        KClosure closure = k_closure(g, std::min(2, n), kDefaultTupleBudget,
                                     degree_budget);
        for (const auto& e : closure.group.elements(cap))
            if (is_regular_element(e)) {
                out.witness = e;
                return out;
            }
        out.counterexample_candidate = true;
        out.note = "no regular element in the materialized 2-closure";
    } catch (const error& e) {
        out.counterexample_candidate = true;
        out.note = std::string("2-closure scan incomplete: ") + e.what();
    }
    return out;
}

std::string PolycircWitness::to_json(const std::string& group_name,
                                     const PermGroup& g) const {
    ordered_json j;
    j["schema"] = 1;
    j["group"] = group_name;
    j["degree"] = g.degree();
    j["order"] = g.order();
    if (witness) {
        j["witness"] = witness->to_cycle_string();
        int len = 0;
        is_regular_element(*witness, &len);
        j["cycle_length"] = len;
    } else {
        j["witness"] = nullptr;
    }
    j["method"] = method;
    if (prime) j["prime"] = prime;
    j["counterexample_candidate"] = counterexample_candidate;
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

QBlockWitness find_incoherent_q_blocks(const PermGroup& g, int q,
                                       std::uint64_t samples, std::uint64_t seed,
                                       std::uint64_t cap) {
    QBlockWitness out;
    const int n = g.degree();
    if (n == q) {
        // prime degree: a full cycle generates a regular cyclic subgroup,
        // the trivial imprimitive case
        for (const auto& e : g.elements(cap))
            if (e.order() == q && e.cycles().size() == 1 &&
                static_cast<int>(e.cycles()[0].size()) == q) {
                out.subgroup = subgroup_closure(n, {e}, cap);
                out.blocks = {std::vector<int>(q)};
                std::iota(out.blocks[0].begin(), out.blocks[0].end(), 0);
                out.trivial_prime_case = true;
                return out;
            }
        return out;
    }
    auto check = [&](const PermGroup& h) -> bool {
        if (!h.is_transitive()) return false;
        for (int b = 1; b < n; ++b) {
            auto block = h.minimal_block(0, b);
            if (static_cast<int>(block.size()) != q) continue;
            // translates form the q-block system; the rorbit on a block of
            // a transitive group has supports equal to the blocks, which
            // partition V: incoherent by construction
            std::set<std::vector<int>> blocks{block};
            for (const auto& e : h.generators()) {
                std::vector<std::vector<int>> add;
                for (const auto& bl : blocks) {
                    std::vector<int> img;
                    for (int v : bl) img.push_back(e(v));
                    std::sort(img.begin(), img.end());
                    add.push_back(img);
                }
                blocks.insert(add.begin(), add.end());
            }
            out.subgroup = h;
            out.blocks.assign(blocks.begin(), blocks.end());
            return true;
        }
        return false;
    };
    if (check(g)) return out;
    const auto& elems = g.elements(cap);
    SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        ++out.samples_used;
        const auto& a = elems[rng.below(elems.size())];
        const auto& b = elems[rng.below(elems.size())];
        try {
            PermGroup h = subgroup_closure(n, {a, b}, cap);
            if (h.order(cap) < g.order(cap) && check(h)) return out;
        } catch (const group_too_large&) {
        }
    }
    return out;
}

}  // namespace korb
