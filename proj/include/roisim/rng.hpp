#pragma once

#include <cstdint>

namespace roisim {

/// Deterministic 64-bit generator (SplitMix64). Used instead of the <random>
/// engines because the draw sequence must be identical across platforms and
/// compilers, and because experiments need cheap independent substreams keyed
/// by (master seed, stream index).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) noexcept : state_(seed) {}

  /// Independent stream for (master seed, stream id). Streams with different
  /// ids are decorrelated through the SplitMix64 finalizer, so per-trial and
  /// per-strategy streams can be derived without coordination.
  static RngStream substream(std::uint64_t master_seed,
                             std::uint64_t stream_id) noexcept;

  std::uint64_t next_u64() noexcept;

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() noexcept;

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) noexcept;

  /// Uniform integer in [0, n). Requires n > 0.
  std::uint64_t uniform_int(std::uint64_t n) noexcept;

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// Seed value for trial `stream_id` under `master_seed` (what
/// RngStream::substream builds its stream from).
std::uint64_t substream_seed(std::uint64_t master_seed,
                             std::uint64_t stream_id) noexcept;

inline std::uint64_t splitmix_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t RngStream::next_u64() noexcept {
  state_ += 0x9E3779B97F4A7C15ull;
  return splitmix_mix(state_);
}

inline double RngStream::next_double() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

inline double RngStream::uniform(double lo, double hi) noexcept {
  return lo + (hi - lo) * next_double();
}

inline std::uint64_t RngStream::uniform_int(std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

inline std::uint64_t substream_seed(std::uint64_t master_seed,
                                    std::uint64_t stream_id) noexcept {
  return splitmix_mix(master_seed + 0x9E3779B97F4A7C15ull) ^
         splitmix_mix((stream_id + 1) * 0xD1B54A32D192ED03ull);
}

inline RngStream RngStream::substream(std::uint64_t master_seed,
                                      std::uint64_t stream_id) noexcept {
  return RngStream(substream_seed(master_seed, stream_id));
}

}  // namespace roisim
