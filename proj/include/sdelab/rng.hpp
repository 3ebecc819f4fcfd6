#pragma once

#include <cstdint>
#include <string_view>

namespace sdelab {

// Counter-based splittable random stream (splitmix64 core).
//
// A stream is identified by a 64-bit key derived from the root seed and a
// path of (label, index) pairs. Identical (seed, path) gives a bit-identical
// output sequence; distinct paths give statistically independent streams.
// Streams are cheap value types; derive one per task, never share a stream
// between concurrent consumers.
class RngStream {
public:
    explicit RngStream(std::uint64_t root_seed);

    // Derive a sub-stream. Derivation depends on the order of child() calls,
    // not on how much output the parent has produced.
    RngStream child(std::string_view label, std::uint64_t index = 0) const;

    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit resolution.
    double next_unit();

    // Standard normal via the polar (Marsaglia) method.
    double next_gauss();

    std::uint64_t key() const { return key_; }

private:
    RngStream() = default;

    std::uint64_t key_ = 0;
    std::uint64_t ctr_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace sdelab
