#ifndef DGOLD_DIGITSET_HPP
#define DGOLD_DIGITSET_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dgold/errors.hpp"

namespace dgold {

// Base b together with the set D of allowed digits, sorted ascending.
class DigitSystem {
public:
  DigitSystem(int base, std::vector<int> digits);

  int base() const { return base_; }
  const std::vector<int>& digits() const { return digits_; }
  int digit_count() const { return static_cast<int>(digits_.size()); }
  // gcd of all digits; zeros do not contribute.
  int digit_gcd() const { return gcd_; }
  bool allows(int digit) const {
    return digit >= 0 && digit < base_ && allowed_[static_cast<std::size_t>(digit)];
  }

private:
  int base_;
  std::vector<int> digits_;
  std::vector<char> allowed_;
  int gcd_;
};

struct GcdReduction {
  int g;               // common digit factor, 1 if already reduced
  DigitSystem system;  // digits divided by g (same base), or the input when g == 1
};

// Divides every digit by the common factor.  Valid for moment counting,
// where scaling all digit variables bijects solution sets; it changes the
// set itself, so membership and multiple counting never apply it.
GcdReduction gcd_reduce(const DigitSystem& system);

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// All integers whose k base-b digits (leading zeros included) lie in D.
class RestrictedSet {
public:
  RestrictedSet(DigitSystem system, int k);

  const DigitSystem& system() const { return system_; }
  int k() const { return k_; }
  std::uint64_t x() const { return x_; }                      // b^k
  std::uint64_t cardinality() const { return cardinality_; }  // |D|^k

  bool contains(std::uint64_t n) const;
  bool contains(std::int64_t n) const {
    return n >= 0 && contains(static_cast<std::uint64_t>(n));
  }

  std::vector<std::uint64_t> enumerate(std::uint64_t cap = kDefaultEnumerationCap) const;

  // Streams members in ascending order without materializing them.
  template <typename Fn>
  void for_each_member(Fn&& fn) const {
    walk_range(0, cardinality_, fn);
  }

  // Visits members whose enumeration index lies in [from, to).
  template <typename Fn>
  void walk_range(std::uint64_t from, std::uint64_t to, Fn&& fn) const {
    if (from >= to) return;
    const auto& digs = system_.digits();
    const int nd = system_.digit_count();
    const int base = system_.base();
    std::vector<int> idx(static_cast<std::size_t>(k_), 0);
    std::vector<std::uint64_t> pw(static_cast<std::size_t>(k_), 1);
    for (int j = 1; j < k_; ++j) pw[static_cast<std::size_t>(j)] = pw[static_cast<std::size_t>(j - 1)] * static_cast<std::uint64_t>(base);
    // decode `from` as a base-|D| counter, most significant digit at position k-1
    std::uint64_t c = from, v = 0;
    for (int j = 0; j < k_; ++j) {
      idx[static_cast<std::size_t>(j)] = static_cast<int>(c % static_cast<std::uint64_t>(nd));
      c /= static_cast<std::uint64_t>(nd);
      v += static_cast<std::uint64_t>(digs[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]) * pw[static_cast<std::size_t>(j)];
    }
    for (std::uint64_t cnt = from; cnt < to; ++cnt) {
      fn(v);
      int pos = 0;
      while (pos < k_) {
        auto p = static_cast<std::size_t>(pos);
        if (idx[p] + 1 < nd) {
          v += static_cast<std::uint64_t>(digs[static_cast<std::size_t>(idx[p]) + 1] - digs[static_cast<std::size_t>(idx[p])]) * pw[p];
          ++idx[p];
          break;
        }
        v -= static_cast<std::uint64_t>(digs[static_cast<std::size_t>(nd) - 1] - digs[0]) * pw[p];
        idx[p] = 0;
        ++pos;
      }
    }
  }

private:
  DigitSystem system_;
  int k_;
  std::uint64_t x_;
  std::uint64_t cardinality_;
};

// #{n in the set : m | n} via a most-significant-first digit automaton over
// residues mod m; falls back to walking multiples of m when that is cheaper.
std::uint64_t count_multiples(const RestrictedSet& set, std::uint64_t m);

// Member counts per residue class mod m (index c holds #{n : n ≡ c}).
std::vector<std::uint64_t> residue_histogram(const RestrictedSet& set, std::uint64_t m);

struct SieveBoundCheck {
  std::uint64_t count;
  double bound;  // 2 b |D|^k / m^(log|D|/log b)
  bool holds;
};

// The multiple-count bound is meaningful for 1 <= m < b^k; for larger m the
// count degenerates to testing 0 and the closed form no longer majorizes it.
SieveBoundCheck sieve_bound_check(const RestrictedSet& set, std::uint64_t m);

// Sum over divisors d of r with d > Y of count_multiples(set, d); the
// union-bound overcount of members discarded for sharing a large factor with r.
std::uint64_t divisor_discard_count(const RestrictedSet& set, std::uint64_t r, double y);

}  // namespace dgold

#endif  // DGOLD_DIGITSET_HPP
