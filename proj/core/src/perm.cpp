#include "korb/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace korb {

std::string CycleType::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = count.rbegin(); it != count.rend(); ++it) {
        if (!first) os << " ";
        first = false;
        os << it->first;
        if (it->second > 1) os << "^" << it->second;
    }
    return os.str();
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(n, 0);
    for (int v : img_) {
        if (v < 0 || v >= n || seen[v])
            throw error("permutation images are not a bijection on [0," +
                        std::to_string(n) + ")");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw error("bad cycle notation near '" + text.substr(i) + "'");
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i >= text.size()) throw error("unterminated cycle in '" + text + "'");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (text[i] == ',') {  // tolerate comma separators
                ++i;
                continue;
            }
            if (!isdigit(static_cast<unsigned char>(text[i])))
                throw error("bad cycle notation near '" + text.substr(i) + "'");
            int v = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v < 1 || v > degree)
                throw error("point " + std::to_string(v) + " out of range 1.." +
                            std::to_string(degree));
            cyc.push_back(v - 1);
        }
        for (size_t j = 0; j + 1 < cyc.size(); ++j) {
            if (img[cyc[j]] != cyc[j])
                throw error("point " + std::to_string(cyc[j] + 1) +
                            " repeated across cycles");
            img[cyc[j]] = cyc[j + 1];
        }
        if (cyc.size() >= 2) {
            if (img[cyc.back()] != cyc.back())
                throw error("point " + std::to_string(cyc.back() + 1) +
                            " repeated across cycles");
            img[cyc.back()] = cyc.front();
        }
        skip_ws();
    }
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int v = 0; v < degree(); ++v)
        if (img_[v] != v) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(degree());
    for (int v = 0; v < degree(); ++v) inv[img_[v]] = v;
    return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree(), 0);
    for (int v = 0; v < degree(); ++v) {
        if (seen[v] || img_[v] == v) continue;
        std::vector<int> cyc;
        int u = v;
        while (!seen[u]) {
            seen[u] = 1;
            cyc.push_back(u);
            u = img_[u];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

CycleType Permutation::cycle_type() const {
    CycleType t;
    t.degree = degree();
    int moved = 0;
    for (const auto& c : cycles()) {
        t.count[static_cast<int>(c.size())]++;
        moved += static_cast<int>(c.size());
    }
    if (degree() - moved > 0) t.count[1] = degree() - moved;
    return t;
}

int Permutation::order() const {
    long long ord = 1;
    for (const auto& c : cycles()) ord = std::lcm(ord, (long long)c.size());
    return static_cast<int>(ord);
}

std::string Permutation::to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << "(";
        for (size_t j = 0; j < c.size(); ++j) {
            if (j) os << " ";
            os << c[j] + 1;
        }
        os << ")";
    }
    return os.str();
}

std::optional<int> Permutation::regular_cycle_length() const {
    int len = 0;
    if (is_regular_element(*this, &len)) return len;
    return std::nullopt;
}

std::uint64_t Permutation::pack() const {
    if (degree() > 16) throw error("pack() requires degree <= 16");
    std::uint64_t code = 0;
    for (int v = 0; v < degree(); ++v)
        code |= static_cast<std::uint64_t>(img_[v]) << (4 * v);
    return code;
}

Permutation compose(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree())
        throw error("compose: degree mismatch (" + std::to_string(g.degree()) +
                    " vs " + std::to_string(h.degree()) + ")");
    std::vector<int> img(g.degree());
    for (int v = 0; v < g.degree(); ++v) img[v] = g(h(v));
    return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
    return compose(compose(g, a), g.inverse());
}

bool is_regular_element(const Permutation& g, int* length) {
    const int n = g.degree();
    if (n == 0 || g.is_identity()) return false;
    int common = -1;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        int len = 0;
        int u = v;
        while (!seen[u]) {
            seen[u] = 1;
            ++len;
            u = g(u);
        }
        if (len == 1) return false;  // fixed point
        if (common == -1)
            common = len;
        else if (common != len)
            return false;
    }
    if (length) *length = common;
    return true;
}

}  // namespace korb
