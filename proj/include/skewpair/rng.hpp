#ifndef SKEWPAIR_RNG_HPP
#define SKEWPAIR_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <span>

// Counter-based random numbers (Philox4x32-10). Each simulated path owns a
// (seed, stream_id) pair; draws within the path advance only the counter, so
// any path can be regenerated independently of scheduling order.

namespace skewpair {

struct Philox4x32 {
    static constexpr uint32_t kMul0 = 0xD2511F53u;
    static constexpr uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr, std::array<uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const uint64_t p0 = static_cast<uint64_t>(kMul0) * ctr[0];
            const uint64_t p1 = static_cast<uint64_t>(kMul1) * ctr[2];
            const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
            const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }
};

/// Identifies one reproducible stream of draws: same (seed, stream_id, channel)
/// always yields the same sequence. `channel` separates independent noises
/// attached to the same path (0 = driving noise, 1 = planar Q noise).
struct NoiseStream {
    uint64_t seed = 0;
    uint64_t stream_id = 0;
    uint32_t channel = 0;
};

/// Uniform/normal draws from one NoiseStream. Normals come from the polar
/// (Marsaglia) method, consuming a deterministic sequence of uniforms.
class PathRng {
  public:
    explicit PathRng(const NoiseStream& s)
        : key_{static_cast<uint32_t>(s.seed), static_cast<uint32_t>(s.seed >> 32)},
          stream_lo_(static_cast<uint32_t>(s.stream_id)),
          stream_hi_(static_cast<uint32_t>(s.stream_id >> 32) ^ (s.channel << 24)) {}

    /// Uniform on (0,1] (never 0, safe under log).
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Uniform on [0,1).
    double uniform_co() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    uint64_t next_u64() {
        if (fill_ == 0) {
            const std::array<uint32_t, 4> ctr{static_cast<uint32_t>(index_),
                                              static_cast<uint32_t>(index_ >> 32), stream_lo_,
                                              stream_hi_};
            buf_ = Philox4x32::block(ctr, key_);
            ++index_;
            fill_ = 2;
        }
        --fill_;
        const int base = (fill_ == 1) ? 0 : 2;
        return (static_cast<uint64_t>(buf_[base + 1]) << 32) | buf_[base];
    }

  private:
    std::array<uint32_t, 2> key_;
    uint32_t stream_lo_, stream_hi_;
    uint64_t index_ = 0;
    std::array<uint32_t, 4> buf_{};
    unsigned fill_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Source of N(0,1) draws; lets tests drive simulators with scripted noise.
class NormalSource {
  public:
    virtual ~NormalSource() = default;
    virtual double operator()() = 0;
};

class RngNormalSource final : public NormalSource {
  public:
    explicit RngNormalSource(const NoiseStream& s) : rng_(s) {}
    double operator()() override { return rng_.normal(); }
    PathRng& rng() { return rng_; }

  private:
    PathRng rng_;
};

/// Replays a fixed span of draws (cycling); used in tests for degenerate or
/// mirrored noise.
class SpanNormalSource final : public NormalSource {
  public:
    explicit SpanNormalSource(std::span<const double> values) : values_(values) {}
    double operator()() override {
        if (values_.empty()) return 0.0;
        const double v = values_[pos_ % values_.size()];
        ++pos_;
        return v;
    }

  private:
    std::span<const double> values_;
    std::size_t pos_ = 0;
};

}  // namespace skewpair

#endif
