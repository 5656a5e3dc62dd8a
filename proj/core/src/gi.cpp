#include "korb/gi.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace korb {

namespace {
using ordered_json = nlohmann::ordered_json;
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    for (auto& [a, b] : edges) {
        if (a == b) throw error("self-loop " + std::to_string(a + 1));
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n) throw error("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw error("duplicate edge");
    g.edges = std::move(edges);
    return g;
}

Graph Graph::parse_text(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 1 || m < 0)
                throw parse_error(name, lineno, "expected 'n m' header");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            throw parse_error(name, lineno, "expected 'u v' edge line");
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error(name, lineno, "edge endpoint out of range 1.." +
                                                std::to_string(n));
        if (u == v) throw parse_error(name, lineno, "self-loop rejected");
        int a = std::min(u, v) - 1, b = std::max(u, v) - 1;
        if (!seen.insert({a, b}).second)
            throw parse_error(name, lineno, "duplicate edge rejected");
        edges.push_back({a, b});
    }
    if (n < 0) throw parse_error(name, lineno ? lineno : 1, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(name, lineno, "edge count " + std::to_string(edges.size()) +
                                            " does not match header m=" +
                                            std::to_string(m));
    return from_edges(n, std::move(edges));
}

Graph Graph::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open graph file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

std::string Graph::to_text() const {
    std::ostringstream os;
    os << n << " " << edges.size() << "\n";
    for (auto [a, b] : edges) os << a + 1 << " " << b + 1 << "\n";
    return os.str();
}

bool Graph::adjacent(int u, int v) const {
    auto e = std::minmax(u, v);
    return std::binary_search(edges.begin(), edges.end(),
                              std::pair<int, int>(e.first, e.second));
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

KSet Graph::edge_pairs() const {
    std::vector<Tuple> tuples;
    tuples.reserve(edges.size() * 2);
    for (auto [a, b] : edges) {
        tuples.push_back({a, b});
        tuples.push_back({b, a});
    }
    return KSet::from_tuples(2, n, std::move(tuples));
}

Graph Graph::relabeled(const Permutation& g) const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) out.push_back({g(a), g(b)});
    return Graph::from_edges(n, std::move(out));
}

RegularityCertificate is_regular_2set(const KSet& x) {
    RegularityCertificate cert;
    if (x.arity() != 2) throw error("is_regular_2set: arity-2 set required");
    for (int coord = 0; coord < 2; ++coord) {
        KSet m = multiproject(x, Subspace({coord}));
        if (m.size() == 0) continue;
        std::int64_t common = m.count(0);
        for (std::int64_t r = 1; r < m.size(); ++r)
            if (m.count(r) != common) {
                cert.regular = false;
                cert.condition = 1;
                cert.point = m.tuple(r)[0];
                cert.detail = "1-multiprojection on coordinate " +
                              std::to_string(coord + 1) + " has multiplicities " +
                              std::to_string(common) + " and " +
                              std::to_string(m.count(r)) + " (point " +
                              std::to_string(m.tuple(r)[0] + 1) + ")";
                return cert;
            }
    }
    // the 2-multiprojection of a plain set is trivially homogeneous; for
    // multisets check it
    if (x.is_multiset()) {
        std::int64_t common = x.size() ? x.count(0) : 0;
        for (std::int64_t r = 1; r < x.size(); ++r)
            if (x.count(r) != common) {
                cert.regular = false;
                cert.condition = 1;
                cert.detail = "2-multiprojection inhomogeneous";
                return cert;
            }
    }
    // 1-projections sharing a point must coincide
    KSet p1 = project(x, Subspace({0}));
    KSet p2 = project(x, Subspace({1}));
    if (!p1.same_tuples(p2)) {
        for (const auto& t : p1.tuples())
            if (p2.contains(t)) {
                cert.regular = false;
                cert.condition = 2;
                cert.point = t[0];
                cert.detail = "1-projections share point " + std::to_string(t[0] + 1) +
                              " but differ";
                return cert;
            }
    }
    return cert;
}

// ---- refinement ----

namespace {

// renumber an arbitrary signature map into dense class ids (signature
// order, so ids are label-invariant)
void assign_classes(RefinementState& s,
                    std::vector<std::vector<std::int64_t>>& sigs) {
    std::map<std::vector<std::int64_t>, int> ids;
    for (auto& sig : sigs) ids.try_emplace(sig, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (size_t i = 0; i < sigs.size(); ++i) s.cls[i] = ids[sigs[i]];
    s.class_count = next;
}

// split every class by within-class point multiplicities until stable
void regularity_split(RefinementState& s) {
    const int n = s.n;
    for (;;) {
        int before = s.class_count;
        // m1[c][u], m2[c][v] occurrence counts per class
        std::map<std::pair<int, int>, std::int64_t> m1, m2;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                int c = s.pair_class(u, v);
                ++m1[{c, u}];
                ++m2[{c, v}];
            }
        std::vector<std::vector<std::int64_t>> sigs(static_cast<size_t>(n) * n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                auto& sig = sigs[u * n + v];
                int c = s.pair_class(u, v);
                sig.push_back(u == v ? 0 : 1);
                sig.push_back(c);
                if (u != v) {
                    sig.push_back(m1[{c, u}]);
                    sig.push_back(m2[{c, v}]);
                } else {
                    // vertex signature: multiset of incident pair classes
                    std::vector<std::int64_t> inc;
                    for (int w = 0; w < n; ++w)
                        if (w != u)
                            inc.push_back(
                                static_cast<std::int64_t>(s.pair_class(u, w)) *
                                    (s.class_count + 1) +
                                s.pair_class(w, u));
                    std::sort(inc.begin(), inc.end());
                    sig.insert(sig.end(), inc.begin(), inc.end());
                }
            }
        assign_classes(s, sigs);
        if (s.class_count == before) break;
    }
}

}  // namespace

std::vector<std::vector<int>> RefinementState::vertex_classes() const {
    std::map<int, std::vector<int>> by_cls;
    for (int v = 0; v < n; ++v) by_cls[vertex_class(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [c, vs] : by_cls) out.push_back(vs);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> RefinementState::pair_class_sizes() const {
    std::map<int, std::int64_t> sizes;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) ++sizes[pair_class(u, v)];
    std::vector<std::int64_t> out;
    for (auto& [c, s] : sizes) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

bool RefinementState::respects(const Permutation& g) const {
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (pair_class(u, v) != pair_class(g(u), g(v))) return false;
    return true;
}

RefinementState initial_partition(const KSet& x2) {
    if (x2.arity() != 2) throw error("initial_partition: arity-2 set required");
    const int n = x2.degree();
    if (n > kRefineDegreeBudget)
        throw budget_exceeded("refinement degree", kRefineDegreeBudget);
    RefinementState s;
    s.n = n;
    s.cls.assign(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v)
                s.cls[u * n + v] = 0;
            else
                s.cls[u * n + v] = x2.contains({u, v}) ? 1 : 2;
        }
    s.class_count = 3;
    regularity_split(s);
    return s;
}

RefinementState initial_partition(const Graph& g) {
    return initial_partition(g.edge_pairs());
}

RefinementState refine_once(const RefinementState& prev) {
    RefinementState s = prev;
    s.iteration = prev.iteration + 1;
    const int n = s.n;
    // (a) regularity splitting
    regularity_split(s);

    // (b) composition-count splitting over all ordered class pairs:
    // sig(u,w) gathers |{v : (u,v) in A, (v,w) in B}| per (A,B)
    {
        std::vector<std::vector<std::int64_t>> sigs(static_cast<size_t>(n) * n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                sigs[u * n + v].push_back(u == v ? 0 : 1);
                sigs[u * n + v].push_back(s.pair_class(u, v));
            }
        const std::int64_t cc = s.class_count + 1;
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w) {
                std::vector<std::int64_t> counts;
                counts.reserve(n);
                for (int v = 0; v < n; ++v) {
                    if (v == u || v == w) continue;
                    counts.push_back(static_cast<std::int64_t>(s.pair_class(u, v)) * cc +
                                     s.pair_class(v, w));
                }
                std::sort(counts.begin(), counts.end());
                auto& sig = sigs[u * n + w];
                sig.insert(sig.end(), counts.begin(), counts.end());
            }
        assign_classes(s, sigs);
    }

    // (c) cycle-structure split: thin balanced compositions decompose
    // uniquely into cycles; the cycle length through a point is invariant.
    // The composition order alternates (left, right, right, left, ...).
    {
        // alternation pattern L R R L L R R ... from the first iteration
        char dir = ((s.iteration / 2) % 2 == 0) ? 'L' : 'R';
        s.schedule.push_back(dir);

        // class -> out/in adjacency
        std::map<int, std::vector<std::pair<int, int>>> members;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) members[s.pair_class(u, v)].push_back({u, v});
        std::vector<std::vector<std::int64_t>> sigs(static_cast<size_t>(n) * n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                sigs[u * n + v].push_back(u == v ? 0 : 1);
                sigs[u * n + v].push_back(s.pair_class(u, v));
            }
        for (auto& [c, pairs] : members) {
            // thin: every point has at most one out- and one in-edge
            std::vector<int> succ(n, -1), pred(n, -1);
            bool thin = true;
            for (auto [u, v] : pairs) {
                if (succ[u] != -1 || pred[v] != -1) {
                    thin = false;
                    break;
                }
                succ[u] = v;
                pred[v] = u;
            }
            if (!thin) continue;
            // balanced: supports of the two projections equal
            bool balanced = true;
            for (int v = 0; v < n; ++v)
                if ((succ[v] == -1) != (pred[v] == -1)) {
                    balanced = false;
                    break;
                }
            if (!balanced) continue;
            // unique cycle decomposition of the partial permutation; walk
            // direction per schedule (lengths agree either way)
            std::vector<int> cycle_len(n, 0);
            std::vector<char> seen(n, 0);
            for (int v = 0; v < n; ++v) {
                if (seen[v] || succ[v] == -1) continue;
                std::vector<int> cyc;
                int u = v;
                while (!seen[u]) {
                    seen[u] = 1;
                    cyc.push_back(u);
                    u = dir == 'L' ? succ[u] : pred[u];
                }
                for (int w : cyc) cycle_len[w] = static_cast<int>(cyc.size());
            }
            for (auto [u, v] : pairs) sigs[u * n + v].push_back(cycle_len[u]);
        }
        assign_classes(s, sigs);
    }

    s.stable = (s.class_count == prev.class_count && s.cls == prev.cls);
    return s;
}

RefinementState refine_to_stable(RefinementState s, int max_iterations) {
    if (max_iterations < 0) max_iterations = s.n * s.n + 2;
    for (int i = 0; i < max_iterations; ++i) {
        RefinementState next = refine_once(s);
        if (next.stable) return next;
        s = std::move(next);
    }
    s.stable = false;
    return s;
}

// ---- exact orbits via the aut search ----

OrbitPartition orbit_partition(const Graph& g, int exact_budget) {
    OrbitPartition out;
    RefinementState stable = refine_to_stable(initial_partition(g));
    out.stable_state = stable;
    if (g.n > exact_budget) {
        // refinement-only mode: report the stable classes, unverified
        out.verified = false;
        out.refinement_exact = false;
        out.vertex_orbits = stable.vertex_classes();
        out.pair_orbit_sizes = stable.pair_class_sizes();
        out.aut = PermGroup::trivial(g.n);
        return out;
    }
    KSet edges = g.edge_pairs();
    AutResult aut = aut_of_classes(g.n, {edges}, exact_budget);
    out.aut = aut.group;
    out.aut_order = aut.order;
    // exact vertex orbits
    out.vertex_orbits = aut.group.point_orbits();
    // exact pair orbits by union-find under the generators
    const int n = g.n;
    std::vector<int> parent(static_cast<size_t>(n) * n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& gen : aut.group.generators())
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                int a = find(u * n + v), b = find(gen(u) * n + gen(v));
                if (a != b) parent[a] = b;
            }
    std::map<int, std::int64_t> sizes;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) ++sizes[find(u * n + v)];
    for (auto& [root, sz] : sizes) out.pair_orbit_sizes.push_back(sz);
    std::sort(out.pair_orbit_sizes.begin(), out.pair_orbit_sizes.end());

    out.refinement_exact = (stable.vertex_classes() == out.vertex_orbits &&
                            stable.pair_class_sizes() == out.pair_orbit_sizes);
    // the true orbit partition always refines the stable classes; equality
    // of sizes plus invariance makes the comparison exact
    out.verified = true;
    return out;
}

std::string OrbitPartition::to_json() const {
    ordered_json j;
    j["schema"] = 1;
    ordered_json vparts = ordered_json::array();
    for (const auto& cls : vertex_orbits) {
        ordered_json c = ordered_json::array();
        for (int v : cls) c.push_back(v + 1);
        vparts.push_back(c);
    }
    j["vertex_partition"] = vparts;
    j["pair_class_sizes"] = pair_orbit_sizes;
    j["aut_order"] = aut_order;
    j["refinement_exact"] = refinement_exact;
    j["verified"] = verified;
    if (!verified) j["status"] = "refinement-stable, unverified";
    return j.dump();
}

IsoResult isomorphic(const Graph& a, const Graph& b, int exact_budget) {
    IsoResult res;
    if (a.n != b.n) {
        res.verdict = IsoResult::Verdict::kNonIsomorphic;
        res.invariant = "vertex counts differ";
        return res;
    }
    if (a.edges.size() != b.edges.size()) {
        res.verdict = IsoResult::Verdict::kNonIsomorphic;
        res.invariant = "edge counts differ";
        return res;
    }
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) {
        res.verdict = IsoResult::Verdict::kNonIsomorphic;
        res.invariant = "degree sequences differ";
        return res;
    }
    if (a.n > exact_budget) {
        res.verdict = IsoResult::Verdict::kUndecided;
        res.invariant = "degree budget " + std::to_string(exact_budget) + " exceeded";
        return res;
    }
    // stable refinement of the disjoint union with no side tagging: side
    // histograms must match for an isomorphism to exist
    {
        std::vector<std::pair<int, int>> union_edges = a.edges;
        for (auto [u, v] : b.edges) union_edges.push_back({u + a.n, v + a.n});
        Graph uni = Graph::from_edges(a.n + b.n, std::move(union_edges));
        RefinementState st = refine_to_stable(initial_partition(uni));
        std::map<int, std::int64_t> ha, hb;
        for (int v = 0; v < a.n; ++v) ++ha[st.vertex_class(v)];
        for (int v = 0; v < b.n; ++v) ++hb[st.vertex_class(a.n + v)];
        if (ha != hb) {
            res.verdict = IsoResult::Verdict::kNonIsomorphic;
            res.invariant = "stable refinement class histograms differ";
            return res;
        }
    }
    auto found = find_kset_isomorphism(a.edge_pairs(), b.edge_pairs(),
                                       exact_budget);
    if (!found) {
        res.verdict = IsoResult::Verdict::kNonIsomorphic;
        res.invariant = "no color-preserving bijection (complete search)";
        return res;
    }
    // verify edge-exactly before returning
    Graph mapped = a.relabeled(*found);
    if (!(mapped.edges == b.edges))
        throw error("internal: isomorphism witness failed verification");
    res.verdict = IsoResult::Verdict::kIsomorphic;
    res.bijection = *found;
    return res;
}

std::string IsoResult::to_json() const {
    ordered_json j;
    j["schema"] = 1;
    switch (verdict) {
        case Verdict::kIsomorphic: j["decision"] = "isomorphic"; break;
        case Verdict::kNonIsomorphic: j["decision"] = "non-isomorphic"; break;
        case Verdict::kUndecided: j["decision"] = "undecided"; break;
    }
    if (bijection) {
        ordered_json img = ordered_json::array();
        for (int v : bijection->images()) img.push_back(v + 1);
        j["bijection"] = img;
    }
    if (!invariant.empty()) j["invariant"] = invariant;
    return j.dump();
}

}  // namespace korb
