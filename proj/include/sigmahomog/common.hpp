#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigmah {

// Base for all solver/validation failures. CLI maps these to exit code 3,
// ConfigError to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& w) : Error("ConfigError", w) {}
};

class NonFinite : public Error {
public:
    explicit NonFinite(const std::string& w) : Error("NonFinite", w) {}
};

class GridMismatch : public Error {
public:
    explicit GridMismatch(const std::string& w) : Error("GridMismatch", w) {}
};

class NoConvergence : public Error {
public:
    NoConvergence(const std::string& w, double residual)
        : Error("NoConvergence", w), residual(residual) {}
    double residual;
};

// Neumaier-compensated sum: error bound ~2*eps*sum|x|, independent of order.
class KahanAcc {
public:
    void add(double x) noexcept {
        double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const noexcept { return s_ + c_; }

private:
    double s_ = 0.0, c_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
    KahanAcc acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

inline bool all_finite(std::span<const double> xs) noexcept {
    for (double x : xs)
        if (!std::isfinite(x)) return false;
    return true;
}

// Counter-based 64-bit generator (splitmix64 of seed^counter); stateless,
// reproducible across platforms and thread counts.
inline std::uint64_t rng_u64(std::uint64_t seed, std::uint64_t counter) noexcept {
    std::uint64_t z = (seed ^ (counter * 0x9E3779B97F4A7C15ull)) + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform in [0,1).
inline double rng_unit(std::uint64_t seed, std::uint64_t counter) noexcept {
    return static_cast<double>(rng_u64(seed, counter) >> 11) * 0x1.0p-53;
}

// Uniform in [-1,1).
inline double rng_sym(std::uint64_t seed, std::uint64_t counter) noexcept {
    return 2.0 * rng_unit(seed, counter) - 1.0;
}

// FNV-1a over bytes; used for manifest hashes.
inline std::uint64_t fnv1a(std::span<const char> bytes,
                           std::uint64_t h = 0xCBF29CE484222325ull) noexcept {
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s,
                           std::uint64_t h = 0xCBF29CE484222325ull) noexcept {
    return fnv1a(std::span<const char>(s.data(), s.size()), h);
}

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace sigmah
