#ifndef DGOLD_TRANSFORMS_HPP
#define DGOLD_TRANSFORMS_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace dgold {

// In-place radix-2 FFT, size must be a power of two.  Forward uses kernel
// e(-jt/N); invert applies the conjugate kernel and the 1/N factor.
void fft(std::vector<std::complex<double>>& a, bool invert);

// Arithmetic mod p = 2^64 - 2^32 + 1 (NTT-friendly, 2-adicity 32).
namespace goldilocks {

inline constexpr std::uint64_t kMod = 0xFFFFFFFF00000001ULL;

std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t base, std::uint64_t exp);

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r < a) r += 0xFFFFFFFFULL;  // 2^64 ≡ 2^32 - 1
  if (r >= kMod) r -= kMod;
  return r;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a - b;
  if (a < b) r -= 0xFFFFFFFFULL;
  return r;
}

void ntt(std::vector<std::uint64_t>& a, bool invert);

}  // namespace goldilocks

// Exact s-fold additive convolution of a nonnegative integer sequence:
// returns the first out_len coefficients of a(x)^s.  All true coefficients
// must stay below the modulus; under this project's moment caps they are
// bounded by 2^40.
std::vector<std::uint64_t> convolve_power(const std::vector<std::uint64_t>& a, int s,
                                          std::size_t out_len);

}  // namespace dgold

#endif  // DGOLD_TRANSFORMS_HPP
