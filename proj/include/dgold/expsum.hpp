#ifndef DGOLD_EXPSUM_HPP
#define DGOLD_EXPSUM_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "dgold/digitset.hpp"

namespace dgold {

class PrimeTable;

// frac(m * alpha) in [0, 1), computed exactly from the binary representation
// of alpha, so large integer multipliers lose no phase precision.
double mul_frac(std::uint64_t m, double alpha);

// e(t) = exp(2 pi i t) for t in [0, 1).
std::complex<double> unit_phase(double t);

// e(m * alpha) with exact argument reduction.
std::complex<double> phase_of(std::uint64_t m, double alpha);

// Generating function of the restricted set, evaluated in product form over
// digit places: prod_j sum_d e(d b^j alpha).  O(k |D|).
std::complex<double> eval_f(const RestrictedSet& set, double alpha);

// Weighted prime sum sum_{P<p<X} e(p alpha) log p.
std::complex<double> eval_S(const PrimeTable& table, double alpha);

// Signs eta(n) in {-1,0,+1} keyed by even members of a restricted set.
class SignVector {
public:
  SignVector() = default;
  // validates keys: even, 0 < n < X, member of `set`, distinct
  static SignVector for_set(const RestrictedSet& set,
                            std::vector<std::pair<std::uint64_t, int>> entries);
  // unvalidated; keys must be sorted and distinct
  static SignVector from_sorted(std::vector<std::pair<std::uint64_t, int>> entries);

  int sign_of(std::uint64_t n) const;
  const std::vector<std::pair<std::uint64_t, int>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

private:
  std::vector<std::pair<std::uint64_t, int>> entries_;
};

// Signed sum K(alpha) = sum_n eta(n) e(-n alpha); absent keys contribute 0.
std::complex<double> eval_K(const SignVector& signs, double alpha);

// Digit-column count by orthogonality:
// u(n) = (1/b) sum_{a<b} |sum_d e(d a / b)|^{2s} e(-n a / b), real by
// conjugate symmetry.  Equals the number of 2s-tuples of allowed digits
// whose signed sum is ≡ n (mod b).
double u_column(const DigitSystem& system, int s, int n);

// Exhaustive tuple count over D^{2s}; ground truth for u_column.
std::uint64_t u_oracle(const DigitSystem& system, int s, int n);
std::vector<std::uint64_t> u_oracle_all(const DigitSystem& system, int s);

double u_max(const DigitSystem& system, int s);

// b * max_n u(n) / |D|^{2s}; tends to 1 for digit sets with gcd 1.
double u_max_ratio(const DigitSystem& system, int s);

}  // namespace dgold

#endif  // DGOLD_EXPSUM_HPP
