#include "dgold/digitset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dgold {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp, const char* what) {
  constexpr std::uint64_t kLimit = std::uint64_t(1) << 62;
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > kLimit / base) throw cap_error(std::string(what) + " exceeds 2^62");
    r *= base;
  }
  return r;
}

}  // namespace

DigitSystem::DigitSystem(int base, std::vector<int> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base_ < 2) throw validation_error("base must be at least 2");
  std::sort(digits_.begin(), digits_.end());
  for (int d : digits_) {
    if (d < 0 || d >= base_)
      throw validation_error("digit " + std::to_string(d) + " out of range for base " +
                             std::to_string(base_));
  }
  if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end())
    throw validation_error("digits must be distinct");
  if (digits_.size() < 2) throw validation_error("need at least two allowed digits");
  allowed_.assign(static_cast<std::size_t>(base_), 0);
  for (int d : digits_) allowed_[static_cast<std::size_t>(d)] = 1;
  gcd_ = 0;
  for (int d : digits_) gcd_ = std::gcd(gcd_, d);
}

GcdReduction gcd_reduce(const DigitSystem& system) {
  int g = system.digit_gcd();
  if (g <= 1) return {1, system};
  std::vector<int> reduced;
  reduced.reserve(system.digits().size());
  for (int d : system.digits()) reduced.push_back(d / g);
  return {g, DigitSystem(system.base(), std::move(reduced))};
}

RestrictedSet::RestrictedSet(DigitSystem system, int k)
    : system_(std::move(system)), k_(k) {
  if (k_ < 1) throw validation_error("digit count k must be at least 1");
  x_ = checked_pow(static_cast<std::uint64_t>(system_.base()), k_, "b^k");
  cardinality_ = 1;
  for (int i = 0; i < k_; ++i) cardinality_ *= static_cast<std::uint64_t>(system_.digit_count());
}

bool RestrictedSet::contains(std::uint64_t n) const {
  if (n >= x_) return false;
  const auto b = static_cast<std::uint64_t>(system_.base());
  for (int i = 0; i < k_; ++i) {
    if (!system_.allows(static_cast<int>(n % b))) return false;
    n /= b;
  }
  return true;
}

std::vector<std::uint64_t> RestrictedSet::enumerate(std::uint64_t cap) const {
  if (cardinality_ > cap)
    throw cap_error("enumeration of |D|^k = " + std::to_string(cardinality_) +
                    " members exceeds cap " + std::to_string(cap));
  std::vector<std::uint64_t> out;
  out.reserve(cardinality_);
  for_each_member([&](std::uint64_t v) { out.push_back(v); });
  return out;
}

namespace {

// Residue automaton, most significant digit first: a prefix with value v
// extends to v*b + d, so the state update is r -> (r*b + d) mod m.  Early
// levels touch few residues, so live states are tracked in a work list.
std::uint64_t dp_zero_residue_count(const RestrictedSet& set, std::uint64_t m,
                                    std::vector<std::uint64_t>* full_histogram) {
  const auto b = static_cast<std::uint64_t>(set.system().base());
  const auto& digs = set.system().digits();
  std::vector<std::uint64_t> dmod(digs.size());
  for (std::size_t i = 0; i < digs.size(); ++i)
    dmod[i] = static_cast<std::uint64_t>(digs[i]) % m;

  std::vector<std::uint64_t> cur(m, 0), nxt(m, 0);
  std::vector<std::uint64_t> act, nact;
  act.reserve(std::min<std::uint64_t>(m, set.cardinality()));
  nact.reserve(act.capacity());
  cur[0] = 1;
  act.push_back(0);
  for (int level = 0; level < set.k(); ++level) {
    nact.clear();
    for (std::uint64_t r : act) {
      std::uint64_t c = cur[r];
      cur[r] = 0;
      std::uint64_t rb = (r * b) % m;
      for (std::uint64_t dm : dmod) {
        std::uint64_t t = rb + dm;
        if (t >= m) t -= m;
        if (nxt[t] == 0) nact.push_back(t);
        nxt[t] += c;
      }
    }
    cur.swap(nxt);
    act.swap(nact);
  }
  std::uint64_t zero = cur[0];
  if (full_histogram) *full_histogram = std::move(cur);
  return zero;
}

}  // namespace

std::uint64_t count_multiples(const RestrictedSet& set, std::uint64_t m) {
  if (m == 0) throw validation_error("modulus m must be positive");
  if (m == 1) return set.cardinality();
  const std::uint64_t x = set.x();
  if (m >= x) return set.contains(std::uint64_t(0)) ? 1 : 0;

  constexpr std::uint64_t kDpStateCap = std::uint64_t(1) << 22;
  const std::uint64_t walk_steps = x / m + 1;
  const std::uint64_t dp_cost = m * static_cast<std::uint64_t>(set.system().digit_count());
  if (walk_steps < dp_cost || m > kDpStateCap) {
    if (m > kDpStateCap && walk_steps > (std::uint64_t(1) << 31))
      throw cap_error("count_multiples: m too large for the residue automaton and too "
                      "many candidate multiples to walk");
    std::uint64_t count = 0;
    for (std::uint64_t n = 0; n < x; n += m) count += set.contains(n) ? 1 : 0;
    return count;
  }
  return dp_zero_residue_count(set, m, nullptr);
}

std::vector<std::uint64_t> residue_histogram(const RestrictedSet& set, std::uint64_t m) {
  if (m == 0) throw validation_error("modulus m must be positive");
  if (m > (std::uint64_t(1) << 22))
    throw cap_error("residue_histogram: modulus exceeds the state cap");
  std::vector<std::uint64_t> hist;
  dp_zero_residue_count(set, m, &hist);
  return hist;
}

SieveBoundCheck sieve_bound_check(const RestrictedSet& set, std::uint64_t m) {
  std::uint64_t count = count_multiples(set, m);
  double exponent = std::log(static_cast<double>(set.system().digit_count())) /
                    std::log(static_cast<double>(set.system().base()));
  double bound = 2.0 * static_cast<double>(set.system().base()) *
                 static_cast<double>(set.cardinality()) /
                 std::pow(static_cast<double>(m), exponent);
  // the exponent is irrational; absorb float rounding before comparing
  bool holds = static_cast<double>(count) <= bound * (1.0 + 0x1p-40);
  return {count, bound, holds};
}

std::uint64_t divisor_discard_count(const RestrictedSet& set, std::uint64_t r, double y) {
  if (r == 0) throw validation_error("r must be positive");
  if (y < 1.0) throw validation_error("Y must be at least 1");
  if (r > 1'000'000'000'000ULL) throw cap_error("divisor_discard_count: r exceeds 10^12");
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d <= r / d; ++d) {
    if (r % d != 0) continue;
    if (static_cast<double>(d) > y) total += count_multiples(set, d);
    std::uint64_t q = r / d;
    if (q != d && static_cast<double>(q) > y) total += count_multiples(set, q);
  }
  return total;
}

}  // namespace dgold
