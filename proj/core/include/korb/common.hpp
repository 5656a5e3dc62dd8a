#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace korb {

// Base class for everything this library throws.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested enumeration outgrew its element cap. Carries how far it got.
class group_too_large : public error {
public:
    group_too_large(std::uint64_t partial, std::uint64_t cap)
        : error("group too large: " + std::to_string(partial) +
                " elements reached with cap " + std::to_string(cap)),
          partial_count(partial), cap(cap) {}
    std::uint64_t partial_count;
    std::uint64_t cap;
};

// A search or enumeration budget was exceeded.
class budget_exceeded : public error {
public:
    budget_exceeded(const std::string& what, std::uint64_t budget)
        : error("budget exceeded in " + what + " (budget " +
                std::to_string(budget) + ")"),
          budget(budget) {}
    std::uint64_t budget;
};

// Malformed input file. Line numbers are 1-based.
class parse_error : public error {
public:
    parse_error(const std::string& where, int line, const std::string& msg)
        : error(where + ":" + std::to_string(line) + ": " + msg),
          line(line) {}
    int line;
};

// FNV-1a, used to checksum bundled data files.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// xorshift-style deterministic RNG; all sampling in the library goes
// through this so a seed fixes every randomized sweep.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97f4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

}  // namespace korb
