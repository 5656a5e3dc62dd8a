#include "korb/examples_data.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "korb/common.hpp"

namespace korb {

namespace {

struct RawExample {
    const char* id;
    const char* description;
    bool rows_form_group;  // n-orbit whose rows define permutations
    std::uint64_t checksum;
    const char* text;
};

// k-set text format, bit-exact; checksums frozen at transcription time.
const RawExample kExamples[] = {
    {"S3(6)", "regular permutation representation of S_3: 6-orbit", true,
     0xaa30b22a75fc309bull,
     "6 6\n"
     "1 2 3 4 5 6\n"
     "2 1 5 6 3 4\n"
     "3 4 1 2 6 5\n"
     "4 3 6 5 1 2\n"
     "5 6 2 1 4 3\n"
     "6 5 4 3 2 1\n"},
    {"C6xC2", "order-12 degree-6 representation of C_6 x C_2: 6-orbit", true,
     0x870a5398f3f324dfull,
     "6 6\n"
     "1 6 2 5 3 4\n"
     "6 1 5 2 4 3\n"
     "2 1 3 6 4 5\n"
     "1 2 6 3 5 4\n"
     "3 2 4 1 5 6\n"
     "2 3 1 4 6 5\n"
     "4 5 3 6 2 1\n"
     "5 4 6 3 1 2\n"
     "3 4 2 5 1 6\n"
     "4 3 5 2 6 1\n"
     "5 6 4 1 3 2\n"
     "6 5 1 4 2 3\n"},
    {"S5xS2", "order-10 degree-5 5-orbit with repeated-support 2-rorbits", true,
     0xfa9931678c03f8ebull,
     "5 5\n"
     "1 2 5 3 4\n"
     "1 5 2 4 3\n"
     "2 3 1 4 5\n"
     "2 1 3 5 4\n"
     "3 4 2 5 1\n"
     "3 2 4 1 5\n"
     "4 5 3 1 2\n"
     "4 3 5 2 1\n"
     "5 1 4 2 3\n"
     "5 4 1 3 2\n"},
    {"S5md20", "order-20 transitive stabilizer of S_5: 5-orbit", true,
     0xfe524789f8a7aea7ull,
     "5 5\n"
     "1 2 3 4 5\n"
     "2 3 4 5 1\n"
     "3 4 5 1 2\n"
     "4 5 1 2 3\n"
     "5 1 2 3 4\n"
     "5 4 3 2 1\n"
     "4 3 2 1 5\n"
     "3 2 1 5 4\n"
     "2 1 5 4 3\n"
     "1 5 4 3 2\n"
     "1 3 5 2 4\n"
     "3 5 2 4 1\n"
     "5 2 4 1 3\n"
     "2 4 1 3 5\n"
     "4 1 3 5 2\n"
     "4 2 5 3 1\n"
     "2 5 3 1 4\n"
     "5 3 1 4 2\n"
     "3 1 4 2 5\n"
     "1 4 2 5 3\n"},
    {"S5md12", "order-12 intransitive stabilizer of S_5: 5-orbit", true,
     0x3cacf3c767fea9e7ull,
     "5 5\n"
     "1 2 3 4 5\n"
     "2 3 1 4 5\n"
     "3 1 2 4 5\n"
     "1 2 3 5 4\n"
     "2 3 1 5 4\n"
     "3 1 2 5 4\n"
     "1 3 2 4 5\n"
     "2 1 3 4 5\n"
     "3 2 1 4 5\n"
     "1 3 2 5 4\n"
     "2 1 3 5 4\n"
     "3 2 1 5 4\n"},
    {"X2", "perfect-matching 2-set on 6 points, |Aut| = 48", false,
     0x8266001d9373b197ull,
     "2 6\n"
     "1 4\n"
     "2 5\n"
     "3 6\n"
     "4 1\n"
     "5 2\n"
     "6 3\n"},
    {"X2'", "the 24-pair companion 2-orbit of Aut(X2)", false,
     0xab40a3490bd943fbull,
     "2 6\n"
     "1 2\n"
     "1 3\n"
     "1 5\n"
     "1 6\n"
     "2 1\n"
     "2 4\n"
     "2 3\n"
     "2 6\n"
     "3 2\n"
     "3 5\n"
     "3 1\n"
     "3 4\n"
     "4 2\n"
     "4 5\n"
     "4 3\n"
     "4 6\n"
     "5 1\n"
     "5 4\n"
     "5 3\n"
     "5 6\n"
     "6 2\n"
     "6 5\n"
     "6 1\n"
     "6 4\n"},
};

// Rows of an n-orbit read as permutations relative to the first row:
// g_i(first[j]) = row_i[j].
std::vector<Permutation> rows_as_permutations(const KSet& x) {
    const int n = x.degree();
    if (x.arity() != n) throw error("rows_as_permutations: arity must equal degree");
    const Tuple& first = x.tuple(0);
    std::vector<Permutation> out;
    for (std::int64_t r = 0; r < x.size(); ++r) {
        std::vector<int> img(n);
        for (int j = 0; j < n; ++j) img[first[j]] = x.tuple(r)[j];
        out.emplace_back(std::move(img));
    }
    return out;
}

}  // namespace

std::vector<std::string> example_ids() {
    std::vector<std::string> ids;
    for (const auto& e : kExamples) ids.push_back(e.id);
    return ids;
}

NamedExample reconstruct_example(const std::string& id) {
    const RawExample* raw = nullptr;
    for (const auto& e : kExamples)
        if (id == e.id) raw = &e;
    if (!raw) throw error("unknown example id '" + id + "'");
    if (fnv1a(raw->text) != raw->checksum)
        throw error("example '" + id + "': transcription checksum mismatch");
    NamedExample ex;
    ex.id = raw->id;
    ex.description = raw->description;
    ex.set = KSet::parse_text(raw->text, "example:" + id);
    if (raw->rows_form_group) {
        // The rows must close into a group of exactly row-count elements.
        auto perms = rows_as_permutations(ex.set);
        PermGroup g(ex.set.degree(), perms);
        if (g.order() != static_cast<std::uint64_t>(ex.set.size())) {
            // locate a row whose permutation product leaves the set
            for (std::int64_t r = 0; r < ex.set.size(); ++r) {
                Permutation p = perms[r];
                for (std::int64_t s = 0; s < ex.set.size(); ++s) {
                    Tuple image = act_left(perms[s], ex.set.tuple(r));
                    if (!ex.set.contains(image))
                        throw error("example '" + id + "': row " +
                                    std::to_string(r + 1) +
                                    " times row " + std::to_string(s + 1) +
                                    " leaves the displayed set");
                }
            }
            throw error("example '" + id + "': rows do not close into a group");
        }
        KOrbit orb{ex.set, g};
        std::string why;
        if (!orb.validate(&why))
            throw error("example '" + id + "': orbit validation failed: " + why);
        ex.group = g;
    } else {
        // plain k-set: verify homogeneity of its 1-multiprojections holds
        // where expected is left to callers; only well-formedness here
        if (ex.set.size() == 0) throw error("example '" + id + "': empty set");
    }
    return ex;
}

}  // namespace korb
