#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pursuit {

inline constexpr const char* kToolVersion = "0.1.0";

/// Raised when constructed data fails a structural invariant
/// (non-associative table, bad permutation, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by file/spec parsers; carries a human-readable location.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Construction would exceed a configured size cap.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A strategy precondition does not hold; message lists the failing premises.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A policy emitted a non-edge move or an out-of-set relabel. These are
/// collected as findings, never swallowed.
struct SoundnessViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IllegalMoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact solver state space exceeds the configured cap.
struct StateCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// FNV-1a, used for provenance hashes embedded in reports.
inline std::uint64_t fnv1a(const std::string& data, std::uint64_t seed = 1469598103934665603ULL) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex_hash(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace pursuit
