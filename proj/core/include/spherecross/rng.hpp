#pragma once

#include <array>
#include <cstdint>

namespace spherecross {

/// Philox4x32-10 keyed counter-based generator (Salmon et al., SC'11).
/// One invocation maps a 128-bit counter and 64-bit key to 128 output bits.
/// Known-answer vectors from the Random123 distribution are pinned in the
/// unit tests and listed in the README.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

/// A reproducible random stream: the draw sequence is a pure function of
/// (seed, stream_id, counter).  Distinct stream_ids give statistically
/// independent streams, so parallel workers can partition work by stream
/// without coordination.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id = 0, std::uint64_t counter = 0)
      : seed_(seed), stream_(stream_id), counter_(counter) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }
  std::uint64_t counter() const { return counter_; }

  /// Next 64 uniform bits.
  std::uint64_t next_u64() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const auto block = philox4x32(
        {static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32),
         static_cast<std::uint32_t>(counter_), static_cast<std::uint32_t>(counter_ >> 32)},
        {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
    ++counter_;
    spare_ = (static_cast<std::uint64_t>(block[3]) << 32) | block[2];
    have_spare_ = true;
    return (static_cast<std::uint64_t>(block[1]) << 32) | block[0];
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // 53-bit construction; n is tiny (measure component counts) so the
    // truncation bias is far below anything observable.
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(n));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_;
  std::uint64_t spare_ = 0;
  bool have_spare_ = false;
};

}  // namespace spherecross
