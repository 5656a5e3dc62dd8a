#include "korb/kset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace korb {

Subspace::Subspace(std::vector<int> indices) : idx(std::move(indices)) {
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw error("subspace indices must be distinct");
}

std::vector<int> Subspace::support() const {
    std::vector<int> s = idx;
    std::sort(s.begin(), s.end());
    return s;
}

Subspace act_subspace(const Permutation& g, const Subspace& i,
                      std::vector<int>* sorting) {
    std::vector<int> mapped;
    mapped.reserve(i.idx.size());
    for (int v : i.idx) mapped.push_back(g(v));
    std::vector<int> order(mapped.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return mapped[a] < mapped[b]; });
    std::vector<int> sorted;
    sorted.reserve(mapped.size());
    for (int pos : order) sorted.push_back(mapped[pos]);
    if (sorting) *sorting = order;
    return Subspace(std::move(sorted));
}

namespace {

void check_tuple(const Tuple& t, int k, int n, bool weak) {
    if (static_cast<int>(t.size()) != k)
        throw error("tuple arity " + std::to_string(t.size()) +
                    " does not match k=" + std::to_string(k));
    std::vector<char> seen(n, 0);
    for (int v : t) {
        if (v < 0 || v >= n)
            throw error("tuple point " + std::to_string(v + 1) +
                        " out of range 1.." + std::to_string(n));
        if (seen[v] && !weak)
            throw error("tuple has repeated coordinate " + std::to_string(v + 1) +
                        " (non-diagonal part only)");
        seen[v] = 1;
    }
}

}  // namespace

KSet KSet::from_tuples(int k, int n, std::vector<Tuple> tuples, bool multiset,
                       bool weak) {
    KSet x;
    x.k_ = k;
    x.n_ = n;
    x.multiset_ = multiset;
    x.weak_ = weak;
    for (const auto& t : tuples) check_tuple(t, k, n, weak);
    std::sort(tuples.begin(), tuples.end());
    for (size_t i = 0; i < tuples.size(); ++i) {
        if (!x.tuples_.empty() && x.tuples_.back() == tuples[i]) {
            if (!multiset)
                throw error("duplicate tuple in plain k-set");
            ++x.counts_.back();
        } else {
            x.tuples_.push_back(tuples[i]);
            x.counts_.push_back(1);
        }
    }
    return x;
}

KSet KSet::from_counted(int k, int n, std::vector<Tuple> tuples,
                        std::vector<std::int64_t> counts, bool weak) {
    if (tuples.size() != counts.size())
        throw error("from_counted: tuple/count size mismatch");
    std::vector<std::int64_t> order(tuples.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::int64_t a, std::int64_t b) { return tuples[a] < tuples[b]; });
    KSet x;
    x.k_ = k;
    x.n_ = n;
    x.multiset_ = true;
    x.weak_ = weak;
    for (std::int64_t i : order) {
        check_tuple(tuples[i], k, n, weak);
        if (counts[i] <= 0) throw error("from_counted: counts must be positive");
        if (!x.tuples_.empty() && x.tuples_.back() == tuples[i])
            x.counts_.back() += counts[i];
        else {
            x.tuples_.push_back(tuples[i]);
            x.counts_.push_back(counts[i]);
        }
    }
    return x;
}

KSet KSet::empty(int k, int n, bool multiset) {
    KSet x;
    x.k_ = k;
    x.n_ = n;
    x.multiset_ = multiset;
    return x;
}

std::int64_t KSet::total_size() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

std::int64_t KSet::count_of(const Tuple& t) const {
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
    if (it == tuples_.end() || *it != t) return 0;
    return counts_[it - tuples_.begin()];
}

bool KSet::contains(const Tuple& t) const { return count_of(t) > 0; }

std::vector<Tuple> KSet::expanded() const {
    std::vector<Tuple> rows;
    rows.reserve(total_size());
    for (size_t i = 0; i < tuples_.size(); ++i)
        for (std::int64_t c = 0; c < counts_[i]; ++c) rows.push_back(tuples_[i]);
    return rows;
}

KSet KSet::as_set() const {
    KSet x = *this;
    x.multiset_ = false;
    std::fill(x.counts_.begin(), x.counts_.end(), 1);
    return x;
}

KSet KSet::as_multiset() const {
    KSet x = *this;
    x.multiset_ = true;
    return x;
}

std::string KSet::to_text() const {
    std::ostringstream os;
    os << k_ << " " << n_;
    if (multiset_) os << " multiset";
    os << "\n";
    for (size_t i = 0; i < tuples_.size(); ++i) {
        for (int j = 0; j < k_; ++j) {
            if (j) os << " ";
            os << tuples_[i][j] + 1;
        }
        if (multiset_ && counts_[i] != 1) os << " *" << counts_[i];
        os << "\n";
    }
    return os.str();
}

KSet KSet::parse_text(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int k = -1, n = -1;
    bool multiset = false;
    std::vector<Tuple> tuples;
    std::vector<std::int64_t> counts;
    bool weak = false;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (k < 0) {
            if (!(ls >> k >> n) || k < 0 || n < 1)
                throw parse_error(name, lineno, "expected 'k n [multiset]' header");
            std::string word;
            if (ls >> word) {
                if (word != "multiset")
                    throw parse_error(name, lineno, "unknown header flag '" + word + "'");
                multiset = true;
            }
            continue;
        }
        Tuple t;
        std::string tok;
        std::int64_t cnt = 1;
        while (ls >> tok) {
            if (tok[0] == '*') {
                if (!multiset)
                    throw parse_error(name, lineno, "count suffix outside multiset mode");
                try {
                    cnt = std::stoll(tok.substr(1));
                } catch (...) {
                    throw parse_error(name, lineno, "bad count '" + tok + "'");
                }
                break;
            }
            int v;
            try {
                v = std::stoi(tok);
            } catch (...) {
                throw parse_error(name, lineno, "bad point '" + tok + "'");
            }
            if (v < 1 || v > n)
                throw parse_error(name, lineno,
                                  "point " + tok + " out of range 1.." + std::to_string(n));
            t.push_back(v - 1);
        }
        if (static_cast<int>(t.size()) != k)
            throw parse_error(name, lineno, "expected " + std::to_string(k) +
                                                " points, got " + std::to_string(t.size()));
        auto sup = tuple_support(t);
        if (static_cast<int>(sup.size()) != k) weak = true;
        tuples.push_back(std::move(t));
        counts.push_back(cnt);
    }
    if (k < 0) throw parse_error(name, lineno ? lineno : 1, "missing 'k n' header");
    if (multiset) {
        KSet x = from_counted(k, n, std::move(tuples), std::move(counts), weak);
        return x;
    }
    return from_tuples(k, n, std::move(tuples), false, weak);
}

Tuple project_tuple(const Tuple& t, const Subspace& i) {
    Tuple out;
    out.reserve(i.idx.size());
    for (int pos : i.idx) {
        if (pos < 0 || pos >= static_cast<int>(t.size()))
            throw error("projection index " + std::to_string(pos + 1) +
                        " out of range for arity " + std::to_string(t.size()));
        out.push_back(t[pos]);
    }
    return out;
}

Tuple act_left(const Permutation& g, const Tuple& t) {
    Tuple out;
    out.reserve(t.size());
    for (int v : t) out.push_back(g(v));
    return out;
}

Tuple concat_tuples(const Tuple& a, const Tuple& b) {
    Tuple out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<int> tuple_support(const Tuple& t) {
    std::vector<int> s = t;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

KSet project(const KSet& x, const Subspace& i) {
    std::vector<Tuple> tuples;
    tuples.reserve(x.size());
    bool weak = false;
    for (const auto& t : x.tuples()) {
        Tuple p = project_tuple(t, i);
        if (tuple_support(p).size() != p.size()) weak = true;
        tuples.push_back(std::move(p));
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    return KSet::from_tuples(i.size(), x.degree(), std::move(tuples), false, weak);
}

KSet multiproject(const KSet& x, const Subspace& i) {
    std::vector<Tuple> tuples;
    std::vector<std::int64_t> counts;
    bool weak = false;
    for (std::int64_t r = 0; r < x.size(); ++r) {
        Tuple p = project_tuple(x.tuple(r), i);
        if (tuple_support(p).size() != p.size()) weak = true;
        tuples.push_back(std::move(p));
        counts.push_back(x.count(r));
    }
    return KSet::from_counted(i.size(), x.degree(), std::move(tuples),
                              std::move(counts), weak);
}

KSet concat(const KSet& y, const KSet& z, const std::vector<std::int64_t>& pairing) {
    auto ry = y.expanded();
    auto rz = z.expanded();
    if (ry.size() != rz.size())
        throw error("concat: size mismatch (" + std::to_string(ry.size()) + " vs " +
                    std::to_string(rz.size()) + ")");
    if (pairing.size() != ry.size())
        throw error("concat: pairing size mismatch");
    std::vector<char> used(rz.size(), 0);
    std::vector<Tuple> rows;
    rows.reserve(ry.size());
    for (size_t i = 0; i < ry.size(); ++i) {
        std::int64_t j = pairing[i];
        if (j < 0 || j >= static_cast<std::int64_t>(rz.size()) || used[j])
            throw error("concat: pairing is not a bijection");
        used[j] = 1;
        rows.push_back(concat_tuples(ry[i], rz[j]));
    }
    bool weak = false;
    for (const auto& r : rows)
        if (tuple_support(r).size() != r.size()) weak = true;
    bool multi = y.is_multiset() || z.is_multiset();
    if (y.degree() != z.degree()) throw error("concat: degree mismatch");
    if (multi)
        return KSet::from_tuples(y.arity() + z.arity(), y.degree(), std::move(rows),
                                 true, weak);
    return KSet::from_tuples(y.arity() + z.arity(), y.degree(), std::move(rows),
                             false, weak);
}

KSet concat(const KSet& y, const KSet& z) {
    std::vector<std::int64_t> id(y.total_size());
    std::iota(id.begin(), id.end(), 0);
    return concat(y, z, id);
}

KSet act_left(const Permutation& g, const KSet& x) {
    if (g.degree() != x.degree()) throw error("act_left: degree mismatch");
    std::vector<Tuple> tuples;
    std::vector<std::int64_t> counts;
    tuples.reserve(x.size());
    for (std::int64_t r = 0; r < x.size(); ++r) {
        tuples.push_back(act_left(g, x.tuple(r)));
        counts.push_back(x.count(r));
    }
    if (x.is_multiset())
        return KSet::from_counted(x.arity(), x.degree(), std::move(tuples),
                                  std::move(counts), x.is_weak());
    return KSet::from_tuples(x.arity(), x.degree(), std::move(tuples), false,
                             x.is_weak());
}

KSet act_right(const KSet& ambient, const Subspace& i, const Permutation& g,
               Subspace* image_subspace) {
    if (ambient.size() == 0)
        throw error("act_right: ambient n-set required");
    if (g.degree() != static_cast<int>(ambient.arity()))
        throw error("act_right: permutation degree must match ambient arity");
    Subspace gi = act_subspace(g, i);
    if (image_subspace) *image_subspace = gi;
    return project(ambient, gi);
}

bool homogeneity_check(const KSet& x, const Subspace& i,
                       std::int64_t* multiplicity) {
    KSet m = multiproject(x, i);
    if (m.size() == 0) {
        if (multiplicity) *multiplicity = 0;
        return true;
    }
    std::int64_t common = m.count(0);
    for (std::int64_t r = 1; r < m.size(); ++r)
        if (m.count(r) != common) return false;
    if (multiplicity) *multiplicity = common;
    return true;
}

std::vector<std::vector<Tuple>> pair_multiset_cycles(const KSet& m2) {
    if (m2.arity() != 2) throw error("pair_multiset_cycles: arity-2 set required");
    KSet p1 = multiproject(m2, Subspace({0}));
    KSet p2 = multiproject(m2, Subspace({1}));
    if (!(p1.tuples() == p2.tuples() && p1.counts() == p2.counts()))
        throw error("unbalanced multiset: the two 1-multiprojections differ");

    // successors[u] = remaining out-edges of u in ascending order of target
    const int n = m2.degree();
    std::vector<std::vector<std::pair<int, std::int64_t>>> succ(n);
    for (std::int64_t r = 0; r < m2.size(); ++r)
        succ[m2.tuple(r)[0]].push_back({m2.tuple(r)[1], m2.count(r)});

    std::vector<std::vector<Tuple>> cycles;
    for (;;) {
        // smallest unused pair
        int start = -1, second = -1;
        for (int u = 0; u < n && start < 0; ++u)
            for (auto& [v, c] : succ[u])
                if (c > 0) {
                    start = u;
                    second = v;
                    break;
                }
        if (start < 0) break;
        std::vector<Tuple> cycle;
        int cur = start;
        int nxt = second;
        for (;;) {
            for (auto& [v, c] : succ[cur])
                if (v == nxt && c > 0) {
                    --c;
                    break;
                }
            cycle.push_back(Tuple{cur, nxt});
            cur = nxt;
            if (cur == start) break;  // close at first return to the start
            nxt = -1;
            for (auto& [v, c] : succ[cur])
                if (c > 0) {
                    nxt = v;
                    break;
                }
            if (nxt < 0)
                throw error("unbalanced multiset: walk stuck at point " +
                            std::to_string(cur + 1));
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

}  // namespace korb
