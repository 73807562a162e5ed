#pragma once

#include <cstdint>
#include <limits>

#include "tbc/types.hpp"

namespace tbc {

__extension__ using uint128 = unsigned __int128;

// Counter-based generator: the k-th output of stream (seed, index) is a pure
// function of (seed, index, k). Sample i of any estimator draws from stream i,
// which keeps results identical whatever the worker count.
class SampleRng {
 public:
  using result_type = std::uint64_t;

  SampleRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return mix(key_ + kGolden * ++counter_); }

  // Uniform in [0, bound); bound > 0. Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) noexcept {
    uint128 m = static_cast<uint128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<uint128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform in [0, bound) for arbitrary-precision bound > 0.
  PathCount below(const PathCount& bound);

  // Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline PathCount SampleRng::below(const PathCount& bound) {
  if (mpz_fits_ulong_p(bound.get_mpz_t())) {
    return PathCount(below(static_cast<std::uint64_t>(bound.get_ui())));
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  PathCount x;
  do {
    x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      x <<= 64;
      const std::uint64_t r = (*this)();
      x += PathCount(static_cast<unsigned long>(r >> 32)) * 4294967296UL;
      x += static_cast<unsigned long>(r & 0xffffffffULL);
    }
    const std::size_t excess = words * 64 - bits;
    if (excess > 0) x >>= static_cast<mp_bitcnt_t>(excess);
  } while (x >= bound);
  return x;
}

}  // namespace tbc
