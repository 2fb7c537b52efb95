#include "dgold/transforms.hpp"

#include <bit>
#include <cmath>
#include <utility>

#include "dgold/errors.hpp"

namespace dgold {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

void bit_reverse_permute_complex(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

}  // namespace

void fft(std::vector<std::complex<double>>& a, bool invert) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw validation_error("fft size must be a power of two");
  bit_reverse_permute_complex(a);
  std::vector<std::complex<double>> roots;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = kTwoPi / static_cast<double>(len) * (invert ? 1.0 : -1.0);
    roots.resize(len / 2);
    for (std::size_t j = 0; j < len / 2; ++j)
      roots[j] = std::polar(1.0, ang * static_cast<double>(j));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * roots[j];
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
  if (invert) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

namespace goldilocks {

namespace {

// x = hi·2^64 + lo with hi = h1·2^32 + h0; 2^64 ≡ 2^32 - 1 and 2^96 ≡ -1,
// so x ≡ lo + h0·(2^32 - 1) - h1.  h0·(2^32 - 1) < kMod, no extra reduction.
inline std::uint64_t reduce128(unsigned __int128 x) {
  std::uint64_t lo = static_cast<std::uint64_t>(x);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 64);
  std::uint64_t h0 = hi & 0xFFFFFFFFULL;
  std::uint64_t h1 = hi >> 32;
  std::uint64_t r = sub(lo % kMod, h1);
  return add(r, h0 * 0xFFFFFFFFULL);
}

constexpr std::uint64_t kGenerator = 7;  // primitive root mod kMod

}  // namespace

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return reduce128(static_cast<unsigned __int128>(a) * b);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

void ntt(std::vector<std::uint64_t>& a, bool invert) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw validation_error("ntt size must be a power of two");
  if (n > (std::size_t(1) << 32)) throw cap_error("ntt size exceeds 2-adicity of modulus");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = pow(kGenerator, (kMod - 1) / len);
    if (invert) w = pow(w, kMod - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t wj = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::uint64_t u = a[i + j];
        std::uint64_t v = mul(a[i + j + len / 2], wj);
        a[i + j] = add(u, v);
        a[i + j + len / 2] = sub(u, v);
        wj = mul(wj, w);
      }
    }
  }
  if (invert) {
    std::uint64_t inv_n = pow(n % kMod, kMod - 2);
    for (auto& x : a) x = mul(x, inv_n);
  }
}

}  // namespace goldilocks

std::vector<std::uint64_t> convolve_power(const std::vector<std::uint64_t>& a, int s,
                                          std::size_t out_len) {
  if (s < 1) throw validation_error("convolution power must be at least 1");
  if (s == 1) {
    std::vector<std::uint64_t> r(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(out_len, a.size())));
    r.resize(out_len, 0);
    return r;
  }
  std::size_t n = std::bit_ceil(out_len);
  std::vector<std::uint64_t> f(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) f[i] = a[i] % goldilocks::kMod;
  goldilocks::ntt(f, false);
  for (auto& x : f) x = goldilocks::pow(x, static_cast<std::uint64_t>(s));
  goldilocks::ntt(f, true);
  f.resize(out_len);
  return f;
}

}  // namespace dgold
