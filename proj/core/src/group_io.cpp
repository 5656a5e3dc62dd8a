#include "korb/group_io.hpp"

#include <fstream>
#include <sstream>

namespace korb {

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.pop_back();
    size_t start = s.find_first_not_of(" \t");
    return start == std::string::npos ? std::string() : s.substr(start);
}

}  // namespace

PermGroup read_group(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    int degree = -1;
    std::vector<Permutation> gens;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        if (degree < 0) {
            std::istringstream ls(s);
            std::string word;
            ls >> word;
            if (word != "degree")
                throw parse_error(name, lineno, "expected 'degree n', got '" + s + "'");
            if (!(ls >> degree) || degree < 1)
                throw parse_error(name, lineno, "bad degree in '" + s + "'");
            std::string rest;
            if (ls >> rest)
                throw parse_error(name, lineno, "trailing content '" + rest + "'");
            continue;
        }
        try {
            gens.push_back(Permutation::parse_cycles(s, degree));
        } catch (const error& e) {
            throw parse_error(name, lineno, e.what());
        }
    }
    if (degree < 0) throw parse_error(name, lineno ? lineno : 1, "missing 'degree n' line");
    return PermGroup(degree, std::move(gens));
}

PermGroup read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open group file '" + path + "'");
    return read_group(in, path);
}

PermGroup parse_group(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    return read_group(in, name);
}

std::string write_group(const PermGroup& g) {
    std::ostringstream os;
    os << "degree " << g.degree() << "\n";
    for (const auto& p : g.generators()) os << p.to_cycle_string() << "\n";
    return os.str();
}

void write_group_file(const PermGroup& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot write group file '" + path + "'");
    out << write_group(g);
}

}  // namespace korb
