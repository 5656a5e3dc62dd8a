#include <doctest.h>

#include <algorithm>
#include <set>

#include "korb/examples_data.hpp"
#include "korb/structure.hpp"

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

bool reassembles(const CycleOrbitDecomposition& d,
                 const std::vector<BaseComponent>& comps, const KSet& c) {
    // row-wise: factor tuples placed back at their positions reproduce C
    for (size_t r = 0; r < d.rows.size(); ++r) {
        Tuple rebuilt(c.arity(), -1);
        for (const auto& comp : comps) {
            const Tuple& f = comp.factor.expanded().empty() ? Tuple{} : Tuple{};
            (void)f;
            for (int j = 0; j < comp.positions.size(); ++j)
                rebuilt[comp.positions.idx[j]] = d.rows[r][comp.positions.idx[j]];
        }
        if (rebuilt != d.rows[r]) return false;
        if (!c.contains(rebuilt)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("decomposition: two 2-rcycles") {
    KSet c = ks(4, 4, {{0, 1, 2, 3}, {1, 0, 3, 2}});
    auto d = decompose_cycle_orbit(c, pc("(1 2)(3 4)", 4), {0, 1, 2, 3});
    REQUIRE(d.components.size() == 2);
    for (const auto& comp : d.components) {
        CHECK(comp.kind == BaseKind::kRCycle);
        CHECK(comp.cycle_length == 2);
    }
    // factor supports partition the support of C
    std::set<int> all;
    for (const auto& comp : d.components)
        for (int p : comp.positions.idx) CHECK(all.insert(p).second);
    CHECK(all.size() == 4);
    CHECK(reassembles(d, d.components, c));
}

TEST_CASE("decomposition: 2-rcycle plus multituple") {
    KSet c = ks(4, 4, {{0, 1, 2, 3}, {1, 0, 2, 3}});
    auto d = decompose_cycle_orbit(c, pc("(1 2)", 4), {0, 1, 2, 3});
    REQUIRE(d.components.size() == 2);
    std::multiset<BaseKind> kinds;
    for (const auto& comp : d.components) kinds.insert(comp.kind);
    CHECK(kinds == std::multiset<BaseKind>{BaseKind::kRCycle, BaseKind::kMultituple});
    for (const auto& comp : d.components)
        if (comp.kind == BaseKind::kMultituple) {
            CHECK(comp.factor.size() == 1);       // single distinct tuple
            CHECK(comp.factor.total_size() == 2); // repeated per row
        }
}

TEST_CASE("decomposition: rcycle concatenated with an S_2^2 factor") {
    // rows <1 2 3 4>, <2 1 5 6> under g = (12)(35)(46)
    KSet c = ks(4, 6, {{0, 1, 2, 3}, {1, 0, 4, 5}});
    auto d = decompose_cycle_orbit(c, pc("(1 2)(3 5)(4 6)", 6), {0, 1, 2, 3});
    REQUIRE(d.components.size() == 2);
    std::multiset<BaseKind> kinds;
    for (const auto& comp : d.components) kinds.insert(comp.kind);
    CHECK(kinds == std::multiset<BaseKind>{BaseKind::kRCycle, BaseKind::kSlk});
    for (const auto& comp : d.components)
        if (comp.kind == BaseKind::kSlk) {
            CHECK(comp.positions.idx == std::vector<int>{2, 3});
            CHECK(comp.factor.tuples() == std::vector<Tuple>{{2, 3}, {4, 5}});
        }
}

TEST_CASE("decomposition: same-length rcycles reassemble to the S-form") {
    // the 8-column display: <1 2|3|4|5 7|6 8> under (12)(57)(68)
    KSet c = ks(8, 8, {{0, 1, 2, 3, 4, 6, 5, 7}, {1, 0, 2, 3, 6, 4, 7, 5}});
    auto d = decompose_cycle_orbit(c, pc("(1 2)(5 7)(6 8)", 8),
                                   {0, 1, 2, 3, 4, 6, 5, 7});
    // direct factors: rcycle (12), multituple {3,4}, rcycles (57), (68)
    std::multiset<BaseKind> kinds;
    for (const auto& comp : d.components) kinds.insert(comp.kind);
    CHECK(kinds == std::multiset<BaseKind>{BaseKind::kRCycle, BaseKind::kRCycle,
                                           BaseKind::kRCycle,
                                           BaseKind::kMultituple});
    // S-form re-pairs the (57) and (68) rcycles into S_2^2 factors
    int slk = 0;
    for (const auto& comp : d.s_form)
        if (comp.kind == BaseKind::kSlk) {
            ++slk;
            std::vector<Tuple> expect1{{4, 5}, {6, 7}};
            CHECK(comp.factor.tuples() == expect1);
        }
    CHECK(slk == 2);
    CHECK(reassembles(d, d.s_form, c));
}

TEST_CASE("decomposition: partial columns of one long cycle project it") {
    // positions covering 2 of the 4 points of (1 2 4 3): a projection of
    // the 4-rcycle, not a base factor
    PermGroup c(4, {Permutation::parse_cycles("(1 2 4 3)", 4)});
    KOrbit orb = orbit_of_tuple(c, {0, 1});
    auto d = decompose_cycle_orbit(orb.set, Permutation::parse_cycles("(1 2 4 3)", 4),
                                   {0, 1});
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].kind == BaseKind::kRCycleProjection);
    CHECK(d.components[0].cycle_length == 4);
    CHECK(d.components[0].factor.total_size() == 4);
}

TEST_CASE("decomposition rejects foreign sets") {
    KSet c = ks(2, 4, {{0, 1}, {1, 0}, {2, 3}});
    CHECK_THROWS_AS(decompose_cycle_orbit(c, pc("(1 2)", 4), {0, 1}), error);
}

TEST_CASE("rcycles of the S_3 pair orbit") {
    PermGroup s3 = grp(3, {"(1 2)", "(1 2 3)"});
    KSet x2 = orbit_of_tuple(s3, {0, 1}).set;
    auto two = find_rcycles(x2, 2);
    CHECK(two.size() == 3);
    for (const auto& rc : two) {
        CHECK(rc.set.size() == 2);
        // invariance under the defining cycle from the left
        CHECK(act_left(rc.cycle, rc.set).tuples() == rc.set.tuples());
    }
    auto three = find_rcycles(x2, 3);
    CHECK(three.size() == 2);  // {12,23,31} and {21,32,13}
    std::set<std::vector<Tuple>> sets;
    for (const auto& rc : three) sets.insert(rc.set.tuples());
    CHECK(sets.count({{0, 1}, {1, 2}, {2, 0}}) == 1);
    CHECK(sets.count({{0, 2}, {1, 0}, {2, 1}}) == 1);

    CHECK_THROWS_AS(find_rcycles(x2, 4), error);  // p must be prime
}

TEST_CASE("a (p,p)-rcycle is invariant under row and coordinate rotation") {
    PermGroup c5 = grp(5, {"(1 2 3 4 5)"});
    KSet x = orbit_of_tuple(c5, {0, 1, 2, 3, 4}).set;
    auto rcs = find_rcycles(x, 5);
    REQUIRE(!rcs.empty());
    for (const auto& rc : rcs) {
        CHECK(act_left(rc.cycle, rc.set).tuples() == rc.set.tuples());
        // coordinate rotation = projection onto rotated positions
        std::vector<int> rot;
        for (int i = 0; i < 5; ++i) rot.push_back((i + 1) % 5);
        CHECK(project(rc.set, Subspace(rot)).tuples() == rc.set.tuples());
    }
}

TEST_CASE("the 24-pair companion orbit contains a 5-rcycle with no "
          "realizing subautomorphism") {
    NamedExample x2p = reconstruct_example("X2'");
    auto rcycles5 = find_rcycles(x2p.set, 5);
    bool contains_example = false;
    std::vector<Tuple> target{{0, 2}, {1, 3}, {2, 1}, {3, 4}, {4, 0}};
    std::sort(target.begin(), target.end());
    for (const auto& rc : rcycles5)
        if (rc.set.tuples() == target) contains_example = true;
    CHECK(contains_example);
    // 5 does not divide |Aut| = 48, so no witness exists
    for (const auto& w : local_property_check(x2p.set, 5))
        CHECK_FALSE(w.confirmed);
}

TEST_CASE("rcycles of the Petersen adjacency orbit follow the induced "
          "5-cycles") {
    PermGroup pet = induced_on_pairs(grp(5, {"(1 2)", "(1 2 3 4 5)"}));
    const KSet* adj = nullptr;
    auto orbits = orbits_k(pet, 2);
    for (const auto& o : orbits)
        if (o.set.size() == 30) adj = &o.set;
    REQUIRE(adj);
    auto rcs = find_rcycles(*adj, 5);
    CHECK(!rcs.empty());
    // one of them lives on the pentagon support swept by the induced
    // action of (1 2 3 4 5)
    std::vector<int> pentagon{0, 3, 4, 7, 9};
    bool on_pentagon = false;
    for (const auto& rc : rcs) {
        CHECK(act_left(rc.cycle, rc.set).tuples() == rc.set.tuples());
        auto cyc = rc.cycle.cycles();
        REQUIRE(cyc.size() == 1);
        std::vector<int> sup = cyc[0];
        std::sort(sup.begin(), sup.end());
        if (sup == pentagon) on_pentagon = true;
    }
    CHECK(on_pentagon);
    // the pentagon is an automorphic support of the full group
    auto sups = automorphic_supports(pet);
    CHECK(std::find(sups.begin(), sups.end(), pentagon) != sups.end());
}

TEST_CASE("local property check is vacuous on singleton orbits") {
    KSet single = ks(2, 4, {{0, 1}});
    CHECK(local_property_check(single, 2).empty());
    CHECK(local_property_check(single, 3).empty());
}

TEST_CASE("local property holds where the prime divides the aut order") {
    PermGroup s3 = grp(3, {"(1 2)", "(1 2 3)"});
    KSet x2 = orbit_of_tuple(s3, {0, 1}).set;
    for (int p : {2, 3}) {
        auto ws = local_property_check(x2, p);
        CHECK(!ws.empty());
        for (const auto& w : ws) CHECK(w.confirmed);
    }
    NamedExample m = reconstruct_example("X2");
    for (const auto& w : local_property_check(m.set, 2)) CHECK(w.confirmed);
}

TEST_CASE("automorphic supports") {
    PermGroup c4 = grp(4, {"(1 2 3 4)"});
    auto sup = automorphic_supports(c4);
    auto has = [&](std::vector<int> u) {
        return std::find(sup.begin(), sup.end(), u) != sup.end();
    };
    CHECK(has({0, 2}));
    CHECK(has({1, 3}));
    CHECK(has({0, 1, 2, 3}));
    CHECK(has({0}));
    CHECK_FALSE(has({0, 1}));

    // singletons and the full set are always there for transitive groups
    PermGroup s3 = grp(3, {"(1 2)", "(1 2 3)"});
    auto s3sup = automorphic_supports(s3);
    CHECK(std::count_if(s3sup.begin(), s3sup.end(),
                        [](const auto& u) { return u.size() == 1; }) == 3);
    CHECK(std::find(s3sup.begin(), s3sup.end(), std::vector<int>{0, 1, 2}) !=
          s3sup.end());
}

TEST_CASE("coherence classification of the standard examples") {
    // S_3 pair orbit: elementary coherent, 2-rcycles are blocks
    PermGroup s3 = grp(3, {"(1 2)", "(1 2 3)"});
    CoherenceReport r = coherence_classify(s3, {0, 1});
    CHECK(r.verdict == Coherence::kCoherent);
    CHECK(r.elementary);
    bool block_is_rcycle = false;
    for (const auto& b : r.blocks)
        if (b.tuples() == std::vector<Tuple>{{0, 1}, {1, 0}}) block_is_rcycle = true;
    CHECK(block_is_rcycle);

    // regular Klein four group: elementary incoherent pair orbits
    PermGroup v4 = grp(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    CoherenceReport rv = coherence_classify(v4, {0, 1});
    CHECK(rv.verdict == Coherence::kIncoherent);
    CHECK(rv.elementary);
    CHECK(rv.support_classes == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

    // A_5 pair orbit: coherent but not elementary
    PermGroup a5 = grp(5, {"(1 2 3)", "(1 2 3 4 5)"});
    REQUIRE(a5.order() == 60);
    CoherenceReport ra = coherence_classify(a5, {0, 1});
    CHECK(ra.verdict == Coherence::kCoherent);
    CHECK_FALSE(ra.elementary);

    // dihedral pentagon group: elementary coherent
    PermGroup d5 = grp(5, {"(1 2 3 4 5)", "(2 5)(3 4)"});
    CoherenceReport rd = coherence_classify(d5, {0, 1});
    CHECK(rd.verdict == Coherence::kCoherent);
    CHECK(rd.elementary);

    // degree-4 order-8 group: diagonal support incoherent, side coherent
    PermGroup d4 = grp(4, {"(1 2)", "(3 4)", "(1 3)(2 4)"});
    REQUIRE(d4.order() == 8);
    CHECK(coherence_classify(d4, {0, 1}).verdict == Coherence::kIncoherent);

    CHECK_THROWS_AS(coherence_classify(grp(4, {"(1 2 3 4)"}), {0, 1}), error);
}

TEST_CASE("incoherent rorbits nest imprimitivity; elementary coherent "
          "rorbits are primitive") {
    PermGroup v4 = grp(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    KOrbit x = orbit_of_tuple(v4, {0, 1});
    CHECK(aut_of_kset(x.set).group.primitivity().verdict ==
          Primitivity::kImprimitive);

    PermGroup s3 = grp(3, {"(1 2)", "(1 2 3)"});
    KOrbit y = orbit_of_tuple(s3, {0, 1});
    CHECK(aut_of_kset(y.set).group.primitivity().verdict ==
          Primitivity::kPrimitive);
}

TEST_CASE("elementary coherent arity never divides the degree on small "
          "transitive groups") {
    for (auto g : {grp(3, {"(1 2)", "(1 2 3)"}),
                   grp(5, {"(1 2 3 4 5)", "(2 5)(3 4)"}),
                   grp(6, {"(1 2 3 4 5 6)"}),
                   grp(4, {"(1 2 3 4)", "(1 3)"})}) {
        for (const auto& rec : check_not_divides(g)) CHECK_FALSE(rec.k_divides_n);
    }
}

TEST_CASE("counterexample: the triangle rorbit of the edge action of A_4 "
          "is elementary coherent with k dividing n") {
    // A_4 on the six edges of K_4: the ordered-triangle 3-rorbit has the
    // four triangles as supports (pairwise sharing an edge, so coherent),
    // and no subgroup of the edge action has a 3-point orbit other than a
    // triangle stabilizer fixing its own support. So the rorbit is
    // elementary coherent while k = 3 divides n = 6. The sweep must
    // surface this rather than assume the divisibility claim.
    PermGroup a4edges = grp(6, {"(1 5)(4 6)", "(1 6 3)(2 5 4)"});
    REQUIRE(a4edges.order() == 12);
    REQUIRE(a4edges.is_transitive());
    auto records = check_not_divides(a4edges);
    bool found = false;
    for (const auto& rec : records)
        if (rec.k == 3 && rec.k_divides_n) found = true;
    CHECK(found);
}

TEST_CASE("counterexample: an elementary coherent 4-rorbit of D_6 has an "
          "imprimitive automorphism group") {
    // The support {1,2,4,5} (two antipodal pairs) is a 1-orbit of the
    // Klein four-group generated by the half-turn and an edge reflection.
    // No subgroup of D_6 has any other 4-point orbit, so the 4-rorbit is
    // elementary coherent; Aut = D_6 keeps the antipodal blocks.
    PermGroup d6 = grp(6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"});
    CoherenceReport r = coherence_classify(d6, {0, 1, 3, 4});
    CHECK(r.verdict == Coherence::kCoherent);
    CHECK(r.elementary);
    KOrbit x = orbit_of_tuple(d6, {0, 1, 3, 4});
    CHECK(aut_of_kset(x.set).group.primitivity().verdict ==
          Primitivity::kImprimitive);
}

TEST_CASE("polycirculant witnesses") {
    // regular C_6: the construction assembles a product of prime cycles
    PermGroup c6 = grp(6, {"(1 2 3 4 5 6)"});
    PolycircWitness w = polycirculant_witness(c6);
    REQUIRE(w.witness.has_value());
    CHECK(w.method == "construction");
    CHECK(is_regular_element(*w.witness));

    // degree-6 S_3 x C_2: the decomposable involution pattern exists
    PermGroup g6 = grp(6, {"(1 2)(4 5)", "(1 2 3)(4 5 6)", "(1 4)(2 5)(3 6)"});
    REQUIRE(g6.order() == 12);
    PolycircWitness w6 = polycirculant_witness(g6);
    REQUIRE(w6.witness.has_value());
    CHECK(is_regular_element(*w6.witness));
    CHECK(preserves_classes(*w6.witness, [&] {
        std::vector<KSet> cls;
        for (auto& o : orbits_k(g6, 2)) cls.push_back(o.set);
        return cls;
    }()));

    // Petersen: construction must route through p = 5
    PermGroup pet = induced_on_pairs(grp(5, {"(1 2)", "(1 2 3 4 5)"}));
    PolycircWitness wp = polycirculant_witness(pet);
    REQUIRE(wp.witness.has_value());
    int len = 0;
    CHECK(is_regular_element(*wp.witness, &len));
    CHECK(len == 5);
    if (wp.method == "construction") CHECK(wp.prime == 5);

    CHECK_THROWS_AS(polycirculant_witness(grp(4, {"(1 2)"})), error);
}

TEST_CASE("bounded search for transitive subgroups with q-blocks") {
    // Petersen: q = 5, the order-20 subgroup has two 5-blocks
    PermGroup pet = induced_on_pairs(grp(5, {"(1 2)", "(1 2 3 4 5)"}));
    QBlockWitness w = find_incoherent_q_blocks(pet, 5, 4000, 7);
    REQUIRE(w.subgroup.has_value());
    CHECK(w.blocks.size() == 2);
    CHECK(w.blocks[0].size() == 5);

    // prime degree: the trivial imprimitive cyclic witness
    PermGroup s5 = grp(5, {"(1 2)", "(1 2 3 4 5)"});
    QBlockWitness w5 = find_incoherent_q_blocks(s5, 5, 100, 7);
    REQUIRE(w5.subgroup.has_value());
    CHECK(w5.trivial_prime_case);
}
