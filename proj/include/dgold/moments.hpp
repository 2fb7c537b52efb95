#ifndef DGOLD_MOMENTS_HPP
#define DGOLD_MOMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dgold/digitset.hpp"

namespace dgold {

using uint128 = unsigned __int128;

std::string to_string_u128(uint128 v);

// r_s(m) = number of s-tuples of members summing to m, stored sparsely.
class SumSpectrum {
public:
  SumSpectrum(int s, std::vector<std::pair<std::uint64_t, std::uint64_t>> counts);

  int s() const { return s_; }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& counts() const { return counts_; }
  std::uint64_t count_at(std::uint64_t m) const;
  uint128 total_mass() const;  // = |D|^(sk)

private:
  int s_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts_;  // sorted by m
};

// Exact s-fold sumset spectrum of the restricted set, by integer NTT
// convolution of its indicator.  Requires s k log2(b) <= 40 so the value
// range (and every count) stays well inside exact territory.
SumSpectrum sum_spectrum(const RestrictedSet& set, int s);

// Even moment of the generating function: the integral over the circle of
// |f|^(2s) equals sum_m r_s(m)^2 by orthogonality — the number of solutions
// of sum_i (x_i - y_i) = 0 with all variables in the set.  Exact integer.
uint128 moment(const RestrictedSet& set, int s);

struct MomentBound {
  uint128 moment;
  double bound;  // (max_n u(n, b, D', s))^k on the gcd-reduced digits D'
  bool holds;
};

MomentBound moment_bound(const RestrictedSet& set, int s);

}  // namespace dgold

#endif  // DGOLD_MOMENTS_HPP
