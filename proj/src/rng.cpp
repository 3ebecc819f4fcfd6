#include "sdelab/rng.hpp"

#include <cmath>

namespace sdelab {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

RngStream::RngStream(std::uint64_t root_seed) : key_(mix64(root_seed ^ kGolden)) {}

RngStream RngStream::child(std::string_view label, std::uint64_t index) const {
    RngStream s;
    std::uint64_t k = mix64(key_ ^ fnv1a(label));
    s.key_ = mix64(k + kGolden * (index + 1));
    return s;
}

std::uint64_t RngStream::next_u64() {
    ctr_ += kGolden;
    return mix64(key_ + ctr_);
}

double RngStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gauss() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_unit() - 1.0;
        v = 2.0 * next_unit() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

} // namespace sdelab
