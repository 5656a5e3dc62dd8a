// korb: k-orbit toolkit command line
//
// Subcommands: orbits, closure, classify, coherence, polycirc, gi, lemmas,
// example. Exit codes: 0 success/pass, 1 fail-with-witness or
// non-isomorphic under --expect-iso, 2 usage/parse error, 3 budget
// exceeded.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "korb/aut.hpp"
#include "korb/catalog.hpp"
#include "korb/examples_data.hpp"
#include "korb/gi.hpp"
#include "korb/group_io.hpp"
#include "korb/korbit.hpp"
#include "korb/lemmas.hpp"
#include "korb/structure.hpp"

using namespace korb;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t budget = kDefaultCap;
    std::uint64_t seed = 1;
    int jobs = 1;
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const budget_exceeded*>(&e)) return 3;
    if (dynamic_cast<const group_too_large*>(&e)) return 3;
    return 2;
}

void add_common(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget", g.budget, "Element/tuple budget override");
    cmd->add_option("--seed", g.seed, "Seed for randomized sweeps");
}

ordered_json orbit_json(const KOrbit& o) {
    ordered_json j;
    j["size"] = o.set.size();
    ordered_json tuples = ordered_json::array();
    if (o.set.size() <= 1000) {
        for (const auto& t : o.set.tuples()) {
            ordered_json tt = ordered_json::array();
            for (int v : t) tt.push_back(v + 1);
            tuples.push_back(tt);
        }
        j["tuples"] = tuples;
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-orbit toolkit: orbits, closures, symmetry structure, "
                 "regular-element search, graph refinement"};
    app.require_subcommand(1);
    GlobalOpts g;
    if (const char* env = std::getenv("KORB_BUDGET")) {
        try {
            g.budget = std::stoull(env);
        } catch (...) {
        }
    }

    // orbits
    auto* orbits_cmd = app.add_subcommand("orbits", "Enumerate k-orbits of a group");
    std::string group_path;
    int k = 2;
    orbits_cmd->add_option("--group", group_path, "Group file (.grp)")->required();
    orbits_cmd->add_option("-k,--k", k, "Tuple arity");
    add_common(orbits_cmd, g);

    // closure
    auto* closure_cmd = app.add_subcommand("closure", "k-closure aut(Orb_k(G))");
    std::string closure_group;
    int closure_k = 2;
    closure_cmd->add_option("--group", closure_group, "Group file")->required();
    closure_cmd->add_option("-k,--k", closure_k, "Arity");
    add_common(closure_cmd, g);

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "k-defined / k-closed classification");
    std::string classify_group;
    int kmax = kDefaultKMax;
    classify_cmd->add_option("--group", classify_group, "Group file")->required();
    classify_cmd->add_option("--kmax", kmax, "Largest k to test");
    add_common(classify_cmd, g);

    // coherence
    auto* coh_cmd = app.add_subcommand("coherence", "Coherence reports over "
                                                    "automorphic supports");
    std::string coh_group;
    coh_cmd->add_option("--group", coh_group, "Group file")->required();
    add_common(coh_cmd, g);

    // polycirc
    auto* poly_cmd = app.add_subcommand("polycirc", "Regular-element search");
    std::string poly_group;
    poly_cmd->add_option("--group", poly_group, "Group file")->required();
    add_common(poly_cmd, g);

    // gi
    auto* gi_cmd = app.add_subcommand("gi", "Graph orbit separation / isomorphism");
    std::vector<std::string> graph_paths;
    bool expect_iso = false;
    gi_cmd->add_option("--graph", graph_paths, "Graph file (repeat for a pair)")
        ->required()
        ->expected(1, 2);
    gi_cmd->add_flag("--expect-iso", expect_iso,
                     "Exit 1 when the pair is not isomorphic");
    add_common(gi_cmd, g);

    // lemmas
    auto* lem_cmd = app.add_subcommand("lemmas", "Run claim suites on the catalog");
    std::string suite = "all";
    int max_degree = 8;
    int samples = 40;
    lem_cmd->add_option("--suite", suite, "Claim id or 'all'");
    lem_cmd->add_option("--max-degree", max_degree, "Catalog degree bound");
    lem_cmd->add_option("--samples", samples, "Random groups per degree");
    lem_cmd->add_option("--jobs", g.jobs, "Parallel jobs");
    add_common(lem_cmd, g);

    // example
    auto* ex_cmd = app.add_subcommand("example", "Print a bundled reference set");
    std::string example_id;
    bool list_examples = false;
    ex_cmd->add_option("--id", example_id, "Example id");
    ex_cmd->add_flag("--list", list_examples, "List available ids");
    add_common(ex_cmd, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*orbits_cmd) {
            PermGroup grp = read_group_file(group_path);
            auto orbits = orbits_k(grp, k, g.budget);
            if (g.format == "json") {
                ordered_json j;
                j["schema"] = 1;
                j["degree"] = grp.degree();
                j["k"] = k;
                ordered_json arr = ordered_json::array();
                for (const auto& o : orbits) arr.push_back(orbit_json(o));
                j["orbits"] = arr;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << orbits.size() << " " << k << "-orbit(s) on degree "
                          << grp.degree() << "\n";
                for (const auto& o : orbits) {
                    std::cout << "size " << o.set.size() << ":";
                    if (o.set.size() <= 60)
                        for (const auto& t : o.set.tuples()) {
                            std::cout << " <";
                            for (size_t i = 0; i < t.size(); ++i)
                                std::cout << (i ? " " : "") << t[i] + 1;
                            std::cout << ">";
                        }
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (*closure_cmd) {
            PermGroup grp = read_group_file(closure_group);
            KClosure c = k_closure(grp, closure_k, g.budget);
            if (g.format == "json") {
                ordered_json j;
                j["schema"] = 1;
                j["k"] = closure_k;
                j["group_order"] = grp.order(g.budget);
                j["closure_order"] = c.order;
                ordered_json gens = ordered_json::array();
                for (const auto& p : c.group.generators())
                    gens.push_back(p.to_cycle_string());
                j["generators"] = gens;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "closure order " << c.order << " (group order "
                          << grp.order(g.budget) << ")\n";
                for (const auto& p : c.group.generators())
                    std::cout << p.to_cycle_string() << "\n";
            }
            return 0;
        }
        if (*classify_cmd) {
            PermGroup grp = read_group_file(classify_group);
            KClosureReport r = classify_k_defined(grp, kmax, g.budget);
            if (g.format == "json") {
                std::cout << r.to_json() << "\n";
            } else {
                std::cout << "order " << r.group_order << " degree " << r.degree
                          << "\n";
                for (size_t i = 0; i < r.closure_orders.size(); ++i)
                    std::cout << "k=" << i + 1 << " closure order "
                              << r.closure_orders[i] << "\n";
                if (r.least_k_defined)
                    std::cout << "least k-defined: " << *r.least_k_defined
                              << (r.k_closed ? " (k-closed)" : "") << "\n";
                else
                    std::cout << "not k-defined up to kmax\n";
            }
            return 0;
        }
        if (*coh_cmd) {
            PermGroup grp = read_group_file(coh_group);
            bool any = false;
            for (const auto& u : automorphic_supports(grp, g.budget)) {
                if (u.size() < 2 || static_cast<int>(u.size()) >= grp.degree())
                    continue;
                CoherenceReport r = coherence_classify(grp, u, g.budget);
                any = true;
                if (g.format == "json") {
                    std::cout << r.to_json(coh_group, grp) << "\n";
                } else {
                    std::cout << "support {";
                    for (size_t i = 0; i < u.size(); ++i)
                        std::cout << (i ? " " : "") << u[i] + 1;
                    std::cout << "}: " << to_string(r.verdict)
                              << (r.elementary ? " (elementary)" : "") << "\n";
                }
            }
            if (!any) std::cout << (g.format == "json" ? "" : "no proper automorphic supports\n");
            return 0;
        }
        if (*poly_cmd) {
            PermGroup grp = read_group_file(poly_group);
            PolycircWitness w = polycirculant_witness(grp, g.budget);
            if (g.format == "json")
                std::cout << w.to_json(poly_group, grp) << "\n";
            else if (w.witness) {
                int len = 0;
                is_regular_element(*w.witness, &len);
                std::cout << "witness " << w.witness->to_cycle_string()
                          << " cycle length " << len << " via " << w.method
                          << "\n";
            } else
                std::cout << "counterexample candidate: " << w.note << "\n";
            return w.witness ? 0 : 1;
        }
        if (*gi_cmd) {
            if (graph_paths.size() == 1) {
                Graph graph = Graph::read_file(graph_paths[0]);
                OrbitPartition op = orbit_partition(graph);
                if (g.format == "json")
                    std::cout << op.to_json() << "\n";
                else {
                    std::cout << "vertex orbits:";
                    for (const auto& cls : op.vertex_orbits) {
                        std::cout << " {";
                        for (size_t i = 0; i < cls.size(); ++i)
                            std::cout << (i ? " " : "") << cls[i] + 1;
                        std::cout << "}";
                    }
                    std::cout << "\naut order " << op.aut_order << "\n";
                }
                return 0;
            }
            Graph a = Graph::read_file(graph_paths[0]);
            Graph b = Graph::read_file(graph_paths[1]);
            IsoResult r = isomorphic(a, b);
            if (g.format == "json")
                std::cout << r.to_json() << "\n";
            else if (r.verdict == IsoResult::Verdict::kIsomorphic)
                std::cout << "isomorphic: " << r.bijection->to_cycle_string()
                          << "\n";
            else if (r.verdict == IsoResult::Verdict::kNonIsomorphic)
                std::cout << "non-isomorphic: " << r.invariant << "\n";
            else
                std::cout << "undecided: " << r.invariant << "\n";
            if (r.verdict == IsoResult::Verdict::kUndecided) return 3;
            if (expect_iso && r.verdict != IsoResult::Verdict::kIsomorphic)
                return 1;
            return 0;
        }
        if (*lem_cmd) {
            GroupCatalog cat = build_catalog(max_degree, samples, g.seed, g.budget);
            std::vector<std::string> ids;
            if (suite == "all")
                ids = all_claim_ids();
            else
                ids.push_back(suite);
            SuiteOptions opt;
            opt.seed = g.seed;
            opt.jobs = g.jobs;
            opt.cap = g.budget;
            auto checks = run_suite(cat, ids, opt);
            if (g.format == "json")
                std::cout << suite_json_lines(checks);
            else
                std::cout << suite_summary(checks);
            return suite_all_pass(checks) ? 0 : 1;
        }
        if (*ex_cmd) {
            if (list_examples) {
                for (const auto& id : example_ids()) std::cout << id << "\n";
                return 0;
            }
            if (example_id.empty()) {
                std::cerr << "example: --id or --list required\n";
                return 2;
            }
            NamedExample ex = reconstruct_example(example_id);
            if (g.format == "json") {
                ordered_json j;
                j["schema"] = 1;
                j["id"] = ex.id;
                j["description"] = ex.description;
                j["k"] = ex.set.arity();
                j["degree"] = ex.set.degree();
                j["size"] = ex.set.size();
                if (ex.group) j["group_order"] = ex.group->order();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "# " << ex.description << "\n" << ex.set.to_text();
            }
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}
