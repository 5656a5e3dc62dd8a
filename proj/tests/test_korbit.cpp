#include <doctest.h>

#include <algorithm>
#include <set>

#include "korb/korbit.hpp"

using namespace korb;

namespace {

Permutation pc(const std::string& s, int n) { return Permutation::parse_cycles(s, n); }

PermGroup grp(int n, std::initializer_list<const char*> gens) {
    std::vector<Permutation> ps;
    for (const char* g : gens) ps.push_back(pc(g, n));
    return PermGroup(n, ps);
}

Permutation random_perm(int n, SplitMix64& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng.below(i + 1)]);
    return Permutation(img);
}

}  // namespace

TEST_CASE("orbit of a tuple by generator closure") {
    PermGroup s3 = grp(3, {"(1 2)", "(1 2 3)"});
    KOrbit o = orbit_of_tuple(s3, {0, 1, 2});
    CHECK(o.set.size() == 6);
    CHECK(o.validate());

    KOrbit single = orbit_of_tuple(PermGroup::trivial(4), {0, 2});
    CHECK(single.set.size() == 1);

    PermGroup g = grp(6, {"(1 2)(4 5)"});
    KOrbit pair = orbit_of_tuple(g, {0, 1});
    CHECK(pair.set.tuples() == std::vector<Tuple>{{0, 1}, {1, 0}});
}

TEST_CASE("k-orbit enumeration partitions the non-diagonal tuples") {
    PermGroup s4 = grp(4, {"(1 2)", "(1 2 3 4)"});
    for (int k = 1; k <= 3; ++k) {
        auto orbits = orbits_k(s4, k);
        CHECK(orbits.size() == 1);  // k-transitive
    }

    // Petersen pair action: 2-orbits of sizes 30 and 60
    PermGroup pet = induced_on_pairs(grp(5, {"(1 2)", "(1 2 3 4 5)"}));
    auto orbits = orbits_k(pet, 2);
    std::vector<std::int64_t> sizes;
    std::int64_t total = 0;
    for (const auto& o : orbits) {
        sizes.push_back(o.set.size());
        total += o.set.size();
        CHECK(o.validate());
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::int64_t>{30, 60});
    CHECK(total == 90);

    CHECK_THROWS_AS(orbits_k(pet, 8, 1000), budget_exceeded);
}

TEST_CASE("every enumerated orbit has homogeneous multiprojections") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        PermGroup g(6, {random_perm(6, rng), random_perm(6, rng)});
        for (const auto& o : orbits_k(g, 2))
            for (int c = 0; c < 2; ++c)
                CHECK(homogeneity_check(o.set, Subspace({c})));
    }
}

TEST_CASE("projection commutes with taking orbits") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        PermGroup g(7, {random_perm(7, rng), random_perm(7, rng)});
        Tuple t{0, 3, 5};
        Subspace i({0, 2});
        KOrbit big = orbit_of_tuple(g, t);
        CHECK(project(big.set, i).tuples() ==
              orbit_of_tuple(g, project_tuple(t, i)).set.tuples());
    }
}

TEST_CASE("left action commutes with projection on random orbits") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        PermGroup g(6, {random_perm(6, rng), random_perm(6, rng)});
        Permutation h = random_perm(6, rng);
        KOrbit o = orbit_of_tuple(g, {1, 4, 2});
        Subspace i({1, 2});
        CHECK(act_left(h, project(o.set, i)) == project(act_left(h, o.set), i));
    }
}

TEST_CASE("orbit size divides group order and the left action fixes orbits") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        PermGroup g(6, {random_perm(6, rng), random_perm(6, rng)});
        for (const auto& o : orbits_k(g, 2)) {
            CHECK(g.order() % o.set.size() == 0);
            for (const auto& gen : g.generators())
                CHECK(act_left(gen, o.set).tuples() == o.set.tuples());
        }
    }
}

TEST_CASE("full orbit rows are exactly the elements") {
    PermGroup s3 = grp(3, {"(1 2)", "(1 2 3)"});
    KOrbit full = full_orbit(s3);
    CHECK(full.set.size() == 6);
    CHECK(full.set.arity() == 3);
    CHECK(full.set.contains({0, 1, 2}));
}
