// Shared basics: error types, deterministic RNG helpers, small rational.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace burn {

// Malformed input text (graph/schedule/forest files). Message names the line.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact solver was asked for more than its configured budget.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid input for an operation (e.g. non-tree passed to the
// tree algorithm).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

using Rng = std::mt19937_64;

// Uniform integer in [0, n) from the raw engine stream. Rejection sampling,
// so results are identical on every platform (std::uniform_int_distribution
// is implementation-defined).
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline std::int64_t rand_range(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Exact ratio for reporting guarantee bounds (3, 2, k/(k-1), ...).
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace burn
