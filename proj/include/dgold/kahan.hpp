#ifndef DGOLD_KAHAN_HPP
#define DGOLD_KAHAN_HPP

#include <complex>

namespace dgold {

// Kahan compensated accumulator.  Keeps long sums of mixed-magnitude terms
// accurate to a few ulp of the total instead of O(n) ulp.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

struct KahanComplexSum {
  KahanSum re, im;

  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace dgold

#endif  // DGOLD_KAHAN_HPP
