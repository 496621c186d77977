#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace nf {

// Philox4x32-10 counter-based generator. Streams are cheap: a (seed, stream)
// pair selects a statistically independent sequence, which is what lets
// replica ensembles run in parallel and still reproduce bit-for-bit.
class Rng {
 public:
  Rng() : Rng(0, 0) {}
  Rng(std::uint64_t seed, std::uint64_t stream) {
    key_ = {static_cast<std::uint32_t>(seed),
            static_cast<std::uint32_t>(seed >> 32)};
    ctr_ = {0u, 0u, static_cast<std::uint32_t>(stream),
            static_cast<std::uint32_t>(stream >> 32)};
  }

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return lo | (hi << 32);
  }

  // uniform on (0,1), 53-bit resolution, never exactly 0 or 1
  double u01() { return double(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

  double exponential(double rate) { return -std::log(u01()) / rate; }

  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = u01();
    double u2 = u01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 6.283185307179586476925 * u2;
    cached_ = r * std::sin(th);
    have_cached_ = true;
    return r * std::cos(th);
  }

  // one raw 4x32 block for the given counter, without touching stream state
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
      if (r) {
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
      }
      round_once(ctr, key);
    }
    return ctr;
  }

 private:
  static void round_once(std::array<std::uint32_t, 4>& c,
                         const std::array<std::uint32_t, 2>& k) {
    std::uint64_t p0 = std::uint64_t(0xD2511F53u) * c[0];
    std::uint64_t p1 = std::uint64_t(0xCD9E8D57u) * c[2];
    std::array<std::uint32_t, 4> n;
    n[0] = static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0];
    n[1] = static_cast<std::uint32_t>(p1);
    n[2] = static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1];
    n[3] = static_cast<std::uint32_t>(p0);
    c = n;
  }

  void refill() {
    buf_ = block(ctr_, key_);
    pos_ = 0;
    if (++ctr_[0] == 0) ++ctr_[1];
  }

  std::array<std::uint32_t, 4> ctr_{};
  std::array<std::uint32_t, 2> key_{};
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace nf
