#pragma once
// Counter-based RNG (Philox2x64-10). Streams are cheap: a stream is fully
// determined by its 64-bit key, so independent substreams for (seed, purpose,
// index) never share state and can be created in any order.

#include <cstdint>
#include <cstring>
#include <cmath>
#include <string_view>

namespace xferlab::rng {

// FNV-1a over an arbitrary byte mix; used only to derive stream keys.
inline uint64_t mix_u64(uint64_t h, uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t mix_str(uint64_t h, std::string_view s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Key for the substream identified by (master seed, purpose tag, a, b).
inline uint64_t stream_key(uint64_t seed, std::string_view tag, uint64_t a = 0, uint64_t b = 0) {
    uint64_t h = 0xcbf29ce484222325ull;
    h = mix_u64(h, seed);
    h = mix_str(h, tag);
    h = mix_u64(h, a);
    h = mix_u64(h, b);
    // final avalanche (splitmix64) so nearby (a,b) give unrelated keys
    h += 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
}

class Philox {
public:
    explicit Philox(uint64_t key) : key_(key) {}

    uint64_t next_u64() {
        if (have_second_) {
            have_second_ = false;
            return second_;
        }
        uint64_t x0 = ctr_lo_, x1 = ctr_hi_;
        if (++ctr_lo_ == 0) ++ctr_hi_;
        uint64_t k = key_;
        for (int round = 0; round < 10; ++round) {
            uint64_t hi, lo;
            mulhilo(kMult, x0, hi, lo);
            x0 = hi ^ k ^ x1;
            x1 = lo;
            k += kWeyl;
        }
        second_ = x1;
        have_second_ = true;
        return x0;
    }

    // uniform in [0,1), 53-bit mantissa
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in (0,1], safe as a log() argument
    double next_double_pos() { return double((next_u64() >> 11) + 1) * 0x1.0p-53; }

    // standard normal via Box-Muller; pairs are cached
    double next_gaussian() {
        if (have_gauss_) {
            have_gauss_ = false;
            return gauss_;
        }
        double u1 = next_double_pos();
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        gauss_ = r * std::sin(a);
        have_gauss_ = true;
        return r * std::cos(a);
    }

    // fair sign, consumes one block
    int next_sign() { return (next_u64() & 1u) ? 1 : -1; }

    // uniform integer in [0, n), rejection-free bias below 2^-64 is ignored
    uint64_t next_below(uint64_t n) {
        return uint64_t((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    static constexpr uint64_t kMult = 0xd2b74407b1ce6e93ull;
    static constexpr uint64_t kWeyl = 0x9e3779b97f4a7c15ull;

    static void mulhilo(uint64_t a, uint64_t b, uint64_t& hi, uint64_t& lo) {
        unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
        hi = uint64_t(p >> 64);
        lo = uint64_t(p);
    }

    uint64_t key_;
    uint64_t ctr_lo_ = 0, ctr_hi_ = 0;
    uint64_t second_ = 0;
    bool have_second_ = false;
    double gauss_ = 0.0;
    bool have_gauss_ = false;
};

inline Philox substream(uint64_t seed, std::string_view tag, uint64_t a = 0, uint64_t b = 0) {
    return Philox(stream_key(seed, tag, a, b));
}

} // namespace xferlab::rng
