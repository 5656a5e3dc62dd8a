#include "korb/partition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace korb {

namespace {

KSet set_from(const std::set<Tuple>& tuples, int k, int n, bool weak) {
    return KSet::from_tuples(k, n, std::vector<Tuple>(tuples.begin(), tuples.end()),
                             false, weak);
}

bool classes_sorted(const KSet& a, const KSet& b) { return a.tuples() < b.tuples(); }

}  // namespace

void PartitionK::normalize() {
    std::sort(classes.begin(), classes.end(), classes_sorted);
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::set<Tuple> all;
    std::int64_t total = 0;
    for (const auto& c : classes) {
        for (const auto& t : c.tuples()) all.insert(t);
        total += c.size();
    }
    if (!(all == std::set<Tuple>(carrier.tuples().begin(), carrier.tuples().end())))
        throw error("partition classes do not union to the carrier");
    is_partition = (total == static_cast<std::int64_t>(all.size()));
}

PartitionK make_partition(KSet carrier, std::vector<KSet> classes) {
    PartitionK p;
    p.carrier = std::move(carrier);
    p.classes = std::move(classes);
    p.normalize();
    return p;
}

PartitionK left_coset_cover(const PermGroup& g, const KSet& y) {
    if (y.degree() != g.degree()) throw error("left_coset_cover: degree mismatch");
    std::set<std::vector<Tuple>> images;
    std::deque<KSet> queue;
    images.insert(y.tuples());
    queue.push_back(y.as_set());
    std::vector<KSet> classes{y.as_set()};
    while (!queue.empty()) {
        KSet cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& gen : g.generators()) {
            KSet img = act_left(gen, cur);
            if (images.insert(img.tuples()).second) {
                classes.push_back(img);
                queue.push_back(img);
            }
        }
    }
    std::set<Tuple> all;
    for (const auto& c : classes)
        for (const auto& t : c.tuples()) all.insert(t);
    PartitionK cover;
    cover.carrier = set_from(all, y.arity(), y.degree(), y.is_weak());
    cover.classes = std::move(classes);
    cover.normalize();
    return cover;
}

PartitionK right_coset_partition(const PermGroup& a, const KSet& x) {
    if (x.degree() != a.degree())
        throw error("right_coset_partition: degree mismatch");
    // Orbit equivalence of A restricted to x: always a partition.
    std::set<Tuple> remaining(x.tuples().begin(), x.tuples().end());
    std::vector<KSet> classes;
    while (!remaining.empty()) {
        Tuple start = *remaining.begin();
        std::set<Tuple> orbit{start};
        std::deque<Tuple> queue{start};
        while (!queue.empty()) {
            Tuple t = std::move(queue.front());
            queue.pop_front();
            for (const auto& gen : a.generators()) {
                Tuple u = act_left(gen, t);
                if (orbit.insert(u).second) queue.push_back(u);
            }
        }
        std::set<Tuple> cls;
        for (const auto& t : orbit)
            if (remaining.erase(t)) cls.insert(t);
        classes.push_back(set_from(cls, x.arity(), x.degree(), x.is_weak()));
    }
    PartitionK part;
    part.carrier = x.as_set();
    part.classes = std::move(classes);
    part.normalize();
    return part;
}

PartitionK meet(const PartitionK& p, const PartitionK& q) {
    if (!p.carrier.same_tuples(q.carrier)) throw error("meet: carrier mismatch");
    std::set<std::vector<Tuple>> seen;
    std::vector<KSet> classes;
    for (const auto& a : p.classes)
        for (const auto& b : q.classes) {
            std::set<Tuple> inter;
            for (const auto& t : a.tuples())
                if (b.contains(t)) inter.insert(t);
            if (inter.empty()) continue;
            KSet c = set_from(inter, p.carrier.arity(), p.carrier.degree(),
                              p.carrier.is_weak());
            if (seen.insert(c.tuples()).second) classes.push_back(std::move(c));
        }
    PartitionK out;
    out.carrier = p.carrier;
    out.classes = std::move(classes);
    out.normalize();
    return out;
}

PartitionK join(const PartitionK& p, const PartitionK& q) {
    if (!p.carrier.same_tuples(q.carrier)) throw error("join: carrier mismatch");
    // Transitive closure of class overlap.
    std::vector<const KSet*> all;
    for (const auto& c : p.classes) all.push_back(&c);
    for (const auto& c : q.classes) all.push_back(&c);
    const size_t m = all.size();
    std::vector<int> parent(m);
    for (size_t i = 0; i < m; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::map<Tuple, int> owner;
    for (size_t i = 0; i < m; ++i)
        for (const auto& t : all[i]->tuples()) {
            auto [it, fresh] = owner.try_emplace(t, static_cast<int>(i));
            if (!fresh) {
                int a = find(it->second), b = find(static_cast<int>(i));
                if (a != b) parent[a] = b;
            }
        }
    std::map<int, std::set<Tuple>> merged;
    for (size_t i = 0; i < m; ++i) {
        auto& dst = merged[find(static_cast<int>(i))];
        for (const auto& t : all[i]->tuples()) dst.insert(t);
    }
    std::vector<KSet> classes;
    for (auto& [root, tuples] : merged)
        classes.push_back(set_from(tuples, p.carrier.arity(), p.carrier.degree(),
                                   p.carrier.is_weak()));
    PartitionK out;
    out.carrier = p.carrier;
    out.classes = std::move(classes);
    out.normalize();
    return out;
}

bool refines(const PartitionK& p, const PartitionK& q) {
    if (!p.carrier.same_tuples(q.carrier)) throw error("refines: carrier mismatch");
    for (const auto& a : p.classes) {
        bool inside_some = false;
        for (const auto& b : q.classes) {
            bool subset = true;
            for (const auto& t : a.tuples())
                if (!b.contains(t)) {
                    subset = false;
                    break;
                }
            if (subset) {
                inside_some = true;
                break;
            }
        }
        if (!inside_some) return false;
    }
    return true;
}

}  // namespace korb
