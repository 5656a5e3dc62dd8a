#include <doctest.h>

#include <algorithm>
#include <set>

#include "korb/aut.hpp"
#include "korb/catalog.hpp"
#include "korb/examples_data.hpp"

using namespace korb;

TEST_CASE("bundled examples reconstruct and validate") {
    auto ids = example_ids();
    CHECK(std::find(ids.begin(), ids.end(), "S3(6)") != ids.end());

    NamedExample s36 = reconstruct_example("S3(6)");
    CHECK(s36.set.size() == 6);
    CHECK(s36.set.arity() == 6);
    REQUIRE(s36.group.has_value());
    CHECK(s36.group->order() == 6);
    CHECK(s36.group->is_transitive());

    NamedExample c6c2 = reconstruct_example("C6xC2");
    REQUIRE(c6c2.group.has_value());
    CHECK(c6c2.group->order() == 12);
    CHECK(c6c2.group->is_transitive());

    NamedExample d5 = reconstruct_example("S5xS2");
    REQUIRE(d5.group.has_value());
    CHECK(d5.group->order() == 10);

    NamedExample md20 = reconstruct_example("S5md20");
    REQUIRE(md20.group.has_value());
    CHECK(md20.group->order() == 20);
    CHECK(md20.group->is_transitive());

    NamedExample md12 = reconstruct_example("S5md12");
    REQUIRE(md12.group.has_value());
    CHECK(md12.group->order() == 12);
    CHECK_FALSE(md12.group->is_transitive());

    NamedExample x2p = reconstruct_example("X2'");
    CHECK(x2p.set.size() == 24);
    CHECK(aut_of_kset(x2p.set).order == 48);

    CHECK_THROWS_AS(reconstruct_example("nope"), error);
}

TEST_CASE("the matching set and its companion orbit") {
    NamedExample x2 = reconstruct_example("X2");
    AutResult aut = aut_of_kset(x2.set);
    CHECK(aut.order == 48);
    auto orbits = orbits_k(aut.group, 2);
    std::vector<std::int64_t> sizes;
    for (const auto& o : orbits) sizes.push_back(o.set.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::int64_t>{6, 24});
    // the 24-pair orbit is exactly the bundled listing
    NamedExample x2p = reconstruct_example("X2'");
    bool found = false;
    for (const auto& o : orbits)
        if (o.set.size() == 24 && o.set.same_tuples(x2p.set)) found = true;
    CHECK(found);
}

TEST_CASE("catalog construction recomputes metadata") {
    GroupCatalog small = build_catalog(2, 2, 1);
    CHECK(small.entries.size() == 2);  // the trivial group and S_2 = C_2
    std::set<std::uint64_t> orders;
    for (const auto& e : small.entries) orders.insert(e.order);
    CHECK(orders == std::set<std::uint64_t>{1, 2});

    GroupCatalog five = build_catalog(5, 6, 1);
    CHECK(five.find("F20"));
    CHECK(five.find("F20")->order == 20);
    CHECK(five.find("S3xS2_5"));
    CHECK(five.find("S3xS2_5")->order == 12);
    CHECK_FALSE(five.find("S3xS2_5")->transitive);
    CHECK(five.find("example_S5md20") == nullptr);  // duplicate of F20

    GroupCatalog ten = build_catalog(10, 4, 1);
    const CatalogEntry* pet = ten.find("petersen");
    REQUIRE(pet);
    CHECK(pet->order == 120);
    CHECK(pet->degree == 10);
    CHECK(pet->transitive);
    CHECK(pet->primitivity == Primitivity::kPrimitive);

    // deterministic for a fixed seed
    GroupCatalog again = build_catalog(5, 6, 1);
    REQUIRE(again.entries.size() == five.entries.size());
    for (size_t i = 0; i < again.entries.size(); ++i)
        CHECK(again.entries[i].name == five.entries[i].name);

    CHECK(ten.manifest().find("petersen.grp") != std::string::npos);
}

TEST_CASE("catalog reaches one hundred distinct transitive groups") {
    GroupCatalog cat = build_catalog(10, 120, 1);
    CHECK(cat.transitive_count() >= 100);
}
