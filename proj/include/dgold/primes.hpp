#ifndef DGOLD_PRIMES_HPP
#define DGOLD_PRIMES_HPP

#include <cstdint>
#include <vector>

#include "dgold/digitset.hpp"

namespace dgold {

inline constexpr std::uint64_t kPrimeTableCap = 1'000'000'000;

// Primes p with P < p < X and their natural-log weights.  Immutable after
// construction; membership is O(1) via a bit table over odd values.
class PrimeTable {
public:
  // P = floor(X^(6 delta0)); requires 0 < delta0 < 1/6.
  static PrimeTable build(std::uint64_t x, double delta0);
  static PrimeTable with_cutoff(std::uint64_t x, std::uint64_t p_cutoff);
  // Reconstructs a table from membership bits over odd values (bit i marks
  // 2i+1); used by the sieve cache.  Whether 2 belongs follows from P < 2.
  static PrimeTable from_odd_bits(std::uint64_t x, std::uint64_t p_cutoff,
                                  std::vector<std::uint64_t> odd_bits);

  std::uint64_t x() const { return x_; }
  std::uint64_t cutoff() const { return cutoff_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  bool has_two() const { return cutoff_ < 2 && x_ > 2; }
  const std::vector<std::uint64_t>& odd_bits() const { return odd_bits_; }

  bool contains(std::uint64_t p) const {
    if (p == 2) return has_two();
    if (p <= cutoff_ || p >= x_ || (p & 1) == 0) return false;
    std::uint64_t i = p >> 1;
    return (odd_bits_[i >> 6] >> (i & 63)) & 1;
  }

  // sum of log p over the table (= S(0)).
  double log_weight_sum() const { return log_sum_; }

private:
  PrimeTable() = default;
  void finalize_from_bits();

  std::uint64_t x_ = 0;
  std::uint64_t cutoff_ = 0;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint64_t> odd_bits_;  // bit i: 2i+1 is in the table
  double log_sum_ = 0.0;
};

// One even value's representation data: ordered prime pairs p1 + p2 = n with
// both primes in the table, weighted by log p1 log p2.
struct GoldbachRecord {
  std::uint64_t n = 0;
  double r_weighted = 0.0;
  std::uint64_t rep_count = 0;
  bool is_exception = false;
};

GoldbachRecord weighted_rep(const PrimeTable& table, std::uint64_t n);

struct ScanResult {
  std::vector<GoldbachRecord> exceptions;  // ascending n, rep_count == 0
  std::uint64_t even_scanned = 0;          // even members with 4 <= n < X
  std::uint64_t skipped_small = 0;         // even members 0 and 2
};

// Flags every even member (4 <= n < X) with no two-prime representation in
// the table.  Members 0 and 2 are outside the two-prime range and are only
// tallied.  Existence testing probes small primes first, so the expected
// cost per n is a handful of membership checks.
ScanResult exception_scan(const RestrictedSet& set, const PrimeTable& table, int threads = 1);

}  // namespace dgold

#endif  // DGOLD_PRIMES_HPP
