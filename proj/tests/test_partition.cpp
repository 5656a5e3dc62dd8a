#include <doctest.h>

#include <algorithm>
#include <set>

#include "korb/partition.hpp"

using namespace korb;

namespace {

Permutation pc(const std::string& s, int n) { return Permutation::parse_cycles(s, n); }

PermGroup grp(int n, std::initializer_list<const char*> gens) {
    std::vector<Permutation> ps;
    for (const char* g : gens) ps.push_back(pc(g, n));
    return PermGroup(n, ps);
}

KSet ks(int k, int n, std::vector<Tuple> ts) {
    return KSet::from_tuples(k, n, std::move(ts));
}

}  // namespace

TEST_CASE("left coset cover of the S_3 pair orbit") {
    PermGroup s3 = grp(3, {"(1 2)", "(1 2 3)"});
    KSet y = ks(2, 3, {{0, 1}, {1, 0}});
    PartitionK cover = left_coset_cover(s3, y);
    CHECK(cover.class_count() == 3);
    CHECK(cover.is_partition);  // these three classes happen to be disjoint
    std::set<std::vector<Tuple>> classes;
    for (const auto& c : cover.classes) classes.insert(c.tuples());
    CHECK(classes.count({{0, 1}, {1, 0}}) == 1);
    CHECK(classes.count({{0, 2}, {2, 0}}) == 1);
    CHECK(classes.count({{1, 2}, {2, 1}}) == 1);

    // a full orbit covers itself in one class
    KOrbit o = orbit_of_tuple(s3, {0, 1});
    CHECK(left_coset_cover(s3, o.set).class_count() == 1);

    // 1-sets of a two-point subgroup orbit overlap: a genuine covering
    KSet y1 = ks(1, 3, {{0}, {1}});
    PartitionK l1 = left_coset_cover(s3, y1);
    CHECK(l1.class_count() == 3);
    CHECK_FALSE(l1.is_partition);
}

TEST_CASE("the covering of A_4 by 1-orbits of gr((12)(34)) assembles into "
          "three partitions") {
    PermGroup a4 = grp(4, {"(1 2 3)", "(1 2)(3 4)"});
    CHECK(a4.order() == 12);
    KSet y = ks(1, 4, {{0}, {1}});  // 1-orbit of gr((12)(34))
    PartitionK q = left_coset_cover(a4, y);
    CHECK(q.class_count() == 6);
    CHECK_FALSE(q.is_partition);
    // the six 2-element classes pair up into three partitions of V
    std::set<std::set<int>> supports;
    for (const auto& c : q.classes) {
        std::set<int> sup;
        for (const auto& t : c.tuples()) sup.insert(t[0]);
        supports.insert(sup);
    }
    CHECK(supports == std::set<std::set<int>>{{0, 1}, {2, 3}, {0, 2}, {1, 3},
                                              {0, 3}, {1, 2}});
}

TEST_CASE("right coset partition") {
    PermGroup a = grp(3, {"(1 2)"});
    KSet x1 = ks(1, 3, {{0}, {1}, {2}});
    PartitionK r1 = right_coset_partition(a, x1);
    CHECK(r1.is_partition);
    CHECK(r1.class_count() == 2);
    CHECK(r1.classes[0].tuples() == std::vector<Tuple>{{0}, {1}});
    CHECK(r1.classes[1].tuples() == std::vector<Tuple>{{2}});

    // trivial subgroup: singletons
    PartitionK rt = right_coset_partition(PermGroup::trivial(3), x1);
    CHECK(rt.class_count() == 3);

    // inside the full S_3 pair orbit: classes {12,21},{13,23},{31,32}
    PermGroup s3 = grp(3, {"(1 2)", "(1 2 3)"});
    KOrbit x2 = orbit_of_tuple(s3, {0, 1});
    PartitionK r2 = right_coset_partition(a, x2.set);
    CHECK(r2.class_count() == 3);
    for (const auto& c : r2.classes) CHECK(c.size() == 2);
    std::set<std::vector<Tuple>> classes;
    for (const auto& c : r2.classes) classes.insert(c.tuples());
    CHECK(classes.count({{0, 1}, {1, 0}}) == 1);
    CHECK(classes.count({{0, 2}, {1, 2}}) == 1);
    CHECK(classes.count({{2, 0}, {2, 1}}) == 1);
}

TEST_CASE("meet and join lattice laws") {
    PermGroup s3 = grp(3, {"(1 2)", "(1 2 3)"});
    KSet xn = full_orbit(s3).set;
    // left-coset partition by A = gr((12)) and right-coset partition
    PermGroup a = grp(3, {"(1 2)"});
    KSet y = orbit_of_tuple(a, {0, 1, 2}).set;
    PartitionK l = left_coset_cover(s3, y);
    PartitionK r = right_coset_partition(a, xn);
    REQUIRE(l.is_partition);
    REQUIRE(r.is_partition);

    CHECK(meet(l, l).classes == l.classes);
    CHECK(join(l, l).classes == l.classes);
    CHECK(refines(meet(l, r), l));
    CHECK(refines(meet(l, r), r));
    CHECK(refines(l, join(l, r)));
    CHECK(meet(l, r).classes == meet(r, l).classes);

    // the union of the left and right partitions has one 2-element common
    // class and one non-automorphic 4-element class
    PartitionK u = join(l, r);
    std::vector<std::int64_t> sizes;
    for (const auto& c : u.classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::int64_t>{2, 4});

    CHECK_THROWS_AS(meet(l, right_coset_partition(a, ks(1, 3, {{0}, {1}, {2}}))),
                    error);
}

TEST_CASE("projection does not commute with meet") {
    // carrier {<1 5>, <2 6>, <3 6>, <4 5>} with two hand partitions
    KSet xn = ks(2, 6, {{0, 4}, {1, 5}, {2, 5}, {3, 4}});
    PartitionK p = make_partition(xn, {ks(2, 6, {{0, 4}, {1, 5}}),
                                       ks(2, 6, {{2, 5}, {3, 4}})});
    PartitionK q = make_partition(xn, {ks(2, 6, {{0, 4}, {2, 5}}),
                                       ks(2, 6, {{1, 5}, {3, 4}})});
    Subspace second({1});
    auto project_partition = [&](const PartitionK& part) {
        std::vector<KSet> classes;
        for (const auto& c : part.classes) classes.push_back(project(c, second));
        PartitionK out;
        out.carrier = project(xn, second);
        out.classes = std::move(classes);
        out.normalize();
        return out;
    };
    PartitionK lhs = project_partition(meet(p, q));
    PartitionK rhs = meet(project_partition(p), project_partition(q));
    CHECK_FALSE(lhs.classes == rhs.classes);
}

TEST_CASE("subset-sweep of the divisibility theorem on S_3 and D_4") {
    for (auto g : {grp(3, {"(1 2)", "(1 2 3)"}), grp(4, {"(1 2 3 4)", "(1 3)"})}) {
        KOrbit x = orbit_of_tuple(g, {0, 1});
        REQUIRE(x.set.size() <= 12);
        for (std::uint64_t mask = 1; mask < (1ull << x.set.size()); ++mask) {
            std::vector<Tuple> sel;
            for (std::int64_t i = 0; i < x.set.size(); ++i)
                if (mask & (1ull << i)) sel.push_back(x.set.tuple(i));
            KSet y = KSet::from_tuples(2, g.degree(), sel);
            PartitionK cover = left_coset_cover(g, y);
            std::uint64_t prod =
                static_cast<std::uint64_t>(y.size()) * cover.class_count();
            if (g.order() % prod != 0) continue;
            // then Y is an orbit of its setwise stabilizer
            std::vector<Permutation> stab;
            for (const auto& e : g.elements()) {
                bool fixes = true;
                for (const auto& t : y.tuples())
                    if (!y.contains(act_left(e, t))) {
                        fixes = false;
                        break;
                    }
                if (fixes) stab.push_back(e);
            }
            KOrbit yo = orbit_of_tuple(PermGroup(g.degree(), stab), y.tuple(0));
            CHECK(yo.set.same_tuples(y));
        }
    }
}
