#include "korb/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "korb/aut.hpp"
#include "korb/examples_data.hpp"

namespace korb {

namespace {

Permutation cycle_perm(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    for (int v = 0; v < degree; ++v) img[v] = v;
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
    return Permutation(img);
}

Permutation full_cycle(int n) {
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i;
    return cycle_perm(n, {pts});
}

Permutation reflection(int n) {
    // the dihedral flip fixing point 0
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = v == 0 ? 0 : n - v;
    return Permutation(img);
}

PermGroup symmetric(int n) {
    if (n == 1) return PermGroup::trivial(1);
    std::vector<Permutation> gens{cycle_perm(n, {{0, 1}})};
    if (n > 2) gens.push_back(full_cycle(n));
    return PermGroup(n, gens);
}

PermGroup alternating(int n) {
    std::vector<Permutation> gens;
    for (int i = 2; i < n; ++i) gens.push_back(cycle_perm(n, {{0, 1, i}}));
    return PermGroup(n, gens);
}

Permutation random_perm(int n, SplitMix64& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(img[i], img[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return Permutation(img);
}

// a random element of prime order (uniform pairs almost always close to
// A_n or S_n; prime-order generators reach much more of the lattice)
Permutation random_prime_order(int n, SplitMix64& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Permutation p = random_perm(n, rng);
        int ord = p.order();
        if (ord == 1) continue;
        std::vector<int> primes;
        for (int q = 2; q <= ord; ++q) {
            bool prime = true;
            for (int d = 2; d * d <= q; ++d)
                if (q % d == 0) prime = false;
            if (prime && ord % q == 0) primes.push_back(q);
        }
        int q = primes[rng.below(primes.size())];
        Permutation power = Permutation::identity(n);
        for (int i = 0; i < ord / q; ++i) power = compose(power, p);
        if (!power.is_identity()) return power;
    }
    return random_perm(n, rng);
}

}  // namespace

std::size_t GroupCatalog::transitive_count() const {
    std::size_t c = 0;
    for (const auto& e : entries) c += e.transitive;
    return c;
}

const CatalogEntry* GroupCatalog::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

std::string GroupCatalog::manifest() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.name << ".grp degree=" << e.degree << " order=" << e.order
           << " transitive=" << (e.transitive ? 1 : 0);
        switch (e.primitivity) {
            case Primitivity::kPrimitive: os << " primitive"; break;
            case Primitivity::kTrivialPrimitive: os << " trivial-primitive"; break;
            case Primitivity::kImprimitive: os << " imprimitive"; break;
            case Primitivity::kIntransitive: os << " intransitive"; break;
        }
        os << "\n";
    }
    return os.str();
}

PermGroup petersen_group() { return induced_on_pairs(symmetric(5)); }

GroupCatalog build_catalog(int max_degree, int random_samples,
                           std::uint64_t seed, std::uint64_t cap) {
    GroupCatalog cat;
    // dedup by (degree, order, element-set fingerprint); keeping full
    // element sets here would pin hundreds of MB for the larger groups
    std::set<std::tuple<int, std::uint64_t, std::uint64_t>> seen;

    auto add = [&](const std::string& name, const PermGroup& g,
                   std::uint64_t entry_cap = 0) {
        if (g.degree() > max_degree) return;
        if (entry_cap == 0) entry_cap = cap;
        try {
            const auto& elems = g.elements(entry_cap);
            std::uint64_t h = 14695981039346656037ull;
            for (const auto& e : elems)
                for (int v : e.images()) {
                    h ^= static_cast<std::uint64_t>(v) + 1;
                    h *= 1099511628211ull;
                }
            if (!seen.insert({g.degree(), g.order(), h}).second) return;
            CatalogEntry e;
            e.name = name;
            e.group = g;
            e.degree = g.degree();
            e.order = g.order(entry_cap);
            e.transitive = g.is_transitive();
            e.primitivity = g.primitivity().verdict;
            cat.entries.push_back(std::move(e));
        } catch (const group_too_large&) {
            // skipped with a log entry in the manifest consumer
        }
    };

    add("trivial2", PermGroup::trivial(2));
    for (int n = 2; n <= max_degree; ++n) {
        const std::string d = std::to_string(n);
        add("C" + d, PermGroup(n, {full_cycle(n)}));
        if (n >= 3) add("D" + d, PermGroup(n, {full_cycle(n), reflection(n)}));
        if (n <= 8) add("S" + d, symmetric(n));
        if (n >= 4 && n <= 8) add("A" + d, alternating(n));
    }
    // direct products in product action (transitive on a*b points)
    for (int a = 2; a <= max_degree; ++a)
        for (int b = a; a * b <= max_degree; ++b) {
            const int n = a * b;
            std::vector<int> row(a * b), col(a * b);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) {
                    row[i * b + j] = ((i + 1) % a) * b + j;
                    col[i * b + j] = i * b + (j + 1) % b;
                }
            add("C" + std::to_string(a) + "xC" + std::to_string(b) + "_grid",
                PermGroup(n, {Permutation(row), Permutation(col)}));
        }
    // intransitive direct products on a + b points
    for (int a = 2; a <= max_degree; ++a)
        for (int b = a; a + b <= max_degree; ++b) {
            const int n = a + b;
            std::vector<Permutation> gens;
            {
                std::vector<int> pts(a);
                for (int i = 0; i < a; ++i) pts[i] = i;
                gens.push_back(cycle_perm(n, {pts}));
            }
            {
                std::vector<int> pts(b);
                for (int i = 0; i < b; ++i) pts[i] = a + i;
                gens.push_back(cycle_perm(n, {pts}));
            }
            add("C" + std::to_string(a) + "+C" + std::to_string(b),
                PermGroup(n, gens));
        }
    // wreath-style imprimitive groups: blocks of size p, C_p in blocks,
    // cyclic or symmetric on top
    for (int p = 2; p <= 5; ++p)
        for (int blocks = 2; p * blocks <= max_degree; ++blocks) {
            const int n = p * blocks;
            std::vector<int> first_block(p);
            for (int i = 0; i < p; ++i) first_block[i] = i;
            std::vector<std::vector<int>> top(p);
            for (int i = 0; i < p; ++i) {
                top[i].resize(blocks);
                for (int j = 0; j < blocks; ++j) top[i][j] = j * p + i;
            }
            std::vector<Permutation> gens{cycle_perm(n, {first_block}),
                                          cycle_perm(n, top)};
            add("C" + std::to_string(p) + "wr" + std::to_string(blocks),
                PermGroup(n, gens));
            if (p >= 3) {
                gens.push_back(cycle_perm(n, {{0, 1}}));
                add("S" + std::to_string(p) + "wr" + std::to_string(blocks),
                    PermGroup(n, gens));
            }
        }
    // regular representations and specific small groups
    add("V4_regular", PermGroup(4, {cycle_perm(4, {{0, 1}, {2, 3}}),
                                    cycle_perm(4, {{0, 2}, {1, 3}})}));
    add("D4_ld", PermGroup(4, {cycle_perm(4, {{0, 1}}), cycle_perm(4, {{2, 3}}),
                               cycle_perm(4, {{0, 2}, {1, 3}})}));
    add("F20", PermGroup(5, {full_cycle(5), cycle_perm(5, {{0, 1, 3, 2}})}));
    add("S3xS2_5", PermGroup(5, {cycle_perm(5, {{0, 1, 2}, {3, 4}}),
                                 cycle_perm(5, {{1, 2}})}));
    if (max_degree >= 5) {
        for (const auto& id : example_ids()) {
            NamedExample ex = reconstruct_example(id);
            if (ex.group) add("example_" + id, *ex.group);
        }
    }
    if (max_degree >= 6) {
        add("S3xC2_6", PermGroup(6, {cycle_perm(6, {{0, 1}, {3, 4}}),
                                     cycle_perm(6, {{0, 1, 2}, {3, 4, 5}}),
                                     cycle_perm(6, {{0, 3}, {1, 4}, {2, 5}})}));
        NamedExample x2 = reconstruct_example("X2");
        add("matching6", aut_of_kset(x2.set).group);
    }
    if (max_degree >= 10) add("petersen", petersen_group());

    // seeded random two-generator groups per degree; giant closures
    // (usually A_n or S_n at degree >= 9) are skipped to keep the catalog
    // at desk scale. Half the samples use prime-order generators, which
    // land far more often on proper subgroups.
    SplitMix64 rng(seed);
    for (int n = 2; n <= max_degree; ++n)
        for (int s = 0; s < random_samples; ++s) {
            bool mixed = (n <= 8) && (s % 2 == 0);
            Permutation a = mixed ? random_perm(n, rng) : random_prime_order(n, rng);
            Permutation b = random_prime_order(n, rng);
            add("rand_d" + std::to_string(n) + "_" + std::to_string(s),
                PermGroup(n, {a, b}), 100'000);
        }
    return cat;
}

}  // namespace korb
