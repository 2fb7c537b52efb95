#include "dgold/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dgold/kahan.hpp"
#include "dgold/primes.hpp"

namespace dgold {

namespace {
constexpr double kTwoPi = 6.28318530717958647692528676655900577;

double pow_int(double x, int e) {
  double r = 1.0;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}
}  // namespace

double mul_frac(std::uint64_t m, double alpha) {
  if (m == 0 || alpha == 0.0) return 0.0;
  const bool neg = alpha < 0;
  int ex;
  double fr = std::frexp(std::abs(alpha), &ex);  // |alpha| = fr * 2^ex, fr in [1/2, 1)
  const auto mant = static_cast<std::uint64_t>(std::ldexp(fr, 53));  // exact
  const int t = 53 - ex;  // |alpha| = mant * 2^-t
  double f;
  if (t <= 0) {
    f = 0.0;  // alpha is an integer
  } else {
    unsigned __int128 prod = static_cast<unsigned __int128>(m) * mant;  // < 2^116
    if (t >= 127) {
      f = std::ldexp(static_cast<double>(prod), -t);
    } else {
      unsigned __int128 rem = prod & ((static_cast<unsigned __int128>(1) << t) - 1);
      f = std::ldexp(static_cast<double>(rem), -t);
    }
    if (f >= 1.0) f = 0.0;  // rem rounded up to 2^t
  }
  if (neg && f != 0.0) f = 1.0 - f;
  return f;
}

std::complex<double> unit_phase(double t) {
  double a = kTwoPi * t;
  return {std::cos(a), std::sin(a)};
}

std::complex<double> phase_of(std::uint64_t m, double alpha) {
  return unit_phase(mul_frac(m, alpha));
}

std::complex<double> eval_f(const RestrictedSet& set, double alpha) {
  const auto b = static_cast<std::uint64_t>(set.system().base());
  std::complex<double> result = 1.0;
  std::uint64_t pw = 1;
  for (int j = 0; j < set.k(); ++j) {
    std::complex<double> factor = 0.0;
    for (int d : set.system().digits())
      factor += phase_of(static_cast<std::uint64_t>(d) * pw, alpha);
    result *= factor;
    if (j + 1 < set.k()) pw *= b;
  }
  return result;
}

std::complex<double> eval_S(const PrimeTable& table, double alpha) {
  KahanComplexSum acc;
  if (table.has_two()) acc.add(phase_of(2, alpha) * std::log(2.0));
  for (std::uint32_t p : table.primes()) {
    if (p == 2) continue;
    acc.add(phase_of(p, alpha) * std::log(static_cast<double>(p)));
  }
  return acc.value();
}

SignVector SignVector::for_set(const RestrictedSet& set,
                               std::vector<std::pair<std::uint64_t, int>> entries) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto [n, sign] = entries[i];
    if (n % 2 != 0) throw validation_error("sign key " + std::to_string(n) + " is odd");
    if (n == 0 || n >= set.x() || !set.contains(n))
      throw validation_error("sign key " + std::to_string(n) + " is not an even member");
    if (sign < -1 || sign > 1) throw validation_error("sign must be in {-1,0,+1}");
    if (i > 0 && entries[i - 1].first == n)
      throw validation_error("duplicate sign key " + std::to_string(n));
  }
  SignVector sv;
  sv.entries_ = std::move(entries);
  return sv;
}

SignVector SignVector::from_sorted(std::vector<std::pair<std::uint64_t, int>> entries) {
  SignVector sv;
  sv.entries_ = std::move(entries);
  return sv;
}

int SignVector::sign_of(std::uint64_t n) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const auto& e, std::uint64_t key) { return e.first < key; });
  if (it == entries_.end() || it->first != n) return 0;
  return it->second;
}

std::complex<double> eval_K(const SignVector& signs, double alpha) {
  KahanComplexSum acc;
  for (const auto& [n, sign] : signs.entries()) {
    if (sign == 0) continue;
    std::complex<double> e = std::conj(phase_of(n, alpha));  // e(-n alpha)
    acc.add(sign > 0 ? e : -e);
  }
  return acc.value();
}

double u_column(const DigitSystem& system, int s, int n) {
  if (s < 1) throw validation_error("s must be at least 1");
  const int b = system.base();
  if (n < 0 || n >= b) throw validation_error("column residue n must satisfy 0 <= n < b");
  std::complex<double> acc = 0.0;
  for (int a = 0; a < b; ++a) {
    std::complex<double> g = 0.0;
    for (int d : system.digits())
      g += unit_phase(static_cast<double>((d * a) % b) / b);
    double mag2s = pow_int(std::norm(g), s);
    acc += mag2s * unit_phase(-static_cast<double>((n * a) % b) / b);
  }
  acc /= static_cast<double>(b);
  const double scale = pow_int(static_cast<double>(system.digit_count()), 2 * s);
  if (std::abs(acc.imag()) >= 1e-8 * scale)
    throw invariant_error("u_column: imaginary part failed to cancel");
  return acc.real();
}

std::vector<std::uint64_t> u_oracle_all(const DigitSystem& system, int s) {
  if (s < 1) throw validation_error("s must be at least 1");
  const int b = system.base();
  const auto& digs = system.digits();
  double tuple_space = pow_int(static_cast<double>(digs.size()), 2 * s);
  if (tuple_space > 1e8) throw cap_error("u_oracle: |D|^(2s) exceeds 10^8");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(b), 0);
  const int slots = 2 * s;
  // odometer over D^{2s}; first s slots add, last s subtract
  std::vector<std::size_t> idx(static_cast<std::size_t>(slots), 0);
  int res = 0;  // running residue of the current tuple
  for (int i = 0; i < slots; ++i) res += (i < s ? digs[0] : -digs[0]);
  auto wrap = [b](int v) { return ((v % b) + b) % b; };
  while (true) {
    ++counts[static_cast<std::size_t>(wrap(res))];
    int pos = 0;
    while (pos < slots) {
      auto p = static_cast<std::size_t>(pos);
      int sgn = pos < s ? 1 : -1;
      if (idx[p] + 1 < digs.size()) {
        res += sgn * (digs[idx[p] + 1] - digs[idx[p]]);
        ++idx[p];
        break;
      }
      res -= sgn * (digs[digs.size() - 1] - digs[0]);
      idx[p] = 0;
      ++pos;
    }
    if (pos == slots) break;
  }
  return counts;
}

std::uint64_t u_oracle(const DigitSystem& system, int s, int n) {
  if (n < 0 || n >= system.base())
    throw validation_error("column residue n must satisfy 0 <= n < b");
  return u_oracle_all(system, s)[static_cast<std::size_t>(n)];
}

double u_max(const DigitSystem& system, int s) {
  double m = 0.0;
  for (int n = 0; n < system.base(); ++n) m = std::max(m, u_column(system, s, n));
  return m;
}

double u_max_ratio(const DigitSystem& system, int s) {
  return static_cast<double>(system.base()) * u_max(system, s) /
         pow_int(static_cast<double>(system.digit_count()), 2 * s);
}

}  // namespace dgold
