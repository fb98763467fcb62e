#pragma once

#include <array>
#include <cstdint>

namespace birs {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Stateless:
// the output is a pure function of (key, counter), so any worker can
// regenerate any draw without coordination.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;

  explicit Philox4x32(std::uint64_t key) noexcept
      : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)} {}

  Counter operator()(Counter ctr) const noexcept;

 private:
  std::array<std::uint32_t, 2> key_;
};

// SplitMix64 finalizer; used to derive independent stream keys from a seed.
std::uint64_t mix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// Standard normal pair for (seed, stream, index). Deterministic, schedule free.
std::array<double, 2> normal_pair(const Philox4x32& gen, std::uint64_t stream,
                                  std::uint64_t index) noexcept;

}  // namespace birs
