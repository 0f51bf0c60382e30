#pragma once

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw, SC'11).
// Every output block is a pure function of (key, counter), so streams can be
// split by counter range and reproduced on any platform.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace relbell::random {

class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter block(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const auto [hi0, lo0] = mulhilo(kMul0, ctr[0]);
            const auto [hi1, lo1] = mulhilo(kMul1, ctr[2]);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

    static constexpr Key key_from_seed(std::uint64_t seed) {
        return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static constexpr std::pair<std::uint32_t, std::uint32_t> mulhilo(std::uint32_t a, std::uint32_t b) {
        const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
        return {static_cast<std::uint32_t>(p >> 32), static_cast<std::uint32_t>(p)};
    }
};

/// Uniform doubles and normals addressed by (seed, stream, index, draw).
/// Draw `d` of item `index` on `stream` always yields the same value.
class CounterStream {
public:
    constexpr CounterStream(std::uint64_t seed, std::uint32_t stream)
        : key_(Philox4x32::key_from_seed(seed)), stream_(stream) {}

    /// Two uniforms in (0, 1) with 53-bit resolution.
    std::array<double, 2> uniforms(std::uint64_t index, std::uint32_t draw) const {
        const auto out = Philox4x32::block(
            {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), draw, stream_}, key_);
        return {to_unit(out[0], out[1]), to_unit(out[2], out[3])};
    }

    /// Two independent standard normals (Box-Muller).
    std::array<double, 2> normals(std::uint64_t index, std::uint32_t draw) const {
        const auto [u1, u2] = uniforms(index, draw);
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    static constexpr double to_unit(std::uint32_t hi, std::uint32_t lo) {
        const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    Philox4x32::Key key_;
    std::uint32_t stream_;
};

}  // namespace relbell::random
