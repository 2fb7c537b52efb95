#include "dgold/moments.hpp"

#include <algorithm>
#include <cmath>

#include "dgold/expsum.hpp"
#include "dgold/transforms.hpp"

namespace dgold {

std::string to_string_u128(uint128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

SumSpectrum::SumSpectrum(int s, std::vector<std::pair<std::uint64_t, std::uint64_t>> counts)
    : s_(s), counts_(std::move(counts)) {}

std::uint64_t SumSpectrum::count_at(std::uint64_t m) const {
  auto it = std::lower_bound(counts_.begin(), counts_.end(), m,
                             [](const auto& e, std::uint64_t key) { return e.first < key; });
  if (it == counts_.end() || it->first != m) return 0;
  return it->second;
}

uint128 SumSpectrum::total_mass() const {
  uint128 t = 0;
  for (const auto& [m, c] : counts_) t += c;
  return t;
}

namespace {

void check_moment_cap(const RestrictedSet& set, int s) {
  if (s < 1) throw validation_error("moment order s must be at least 1");
  double cost = static_cast<double>(s) * set.k() *
                std::log2(static_cast<double>(set.system().base()));
  if (cost > 40.0 + 1e-9)
    throw cap_error("moment cap exceeded: s * k * log2(b) must stay below 40");
}

}  // namespace

SumSpectrum sum_spectrum(const RestrictedSet& set, int s) {
  check_moment_cap(set, s);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;
  if (s == 1) {
    for (std::uint64_t v : set.enumerate()) counts.emplace_back(v, 1);
    return SumSpectrum(1, std::move(counts));
  }
  const std::uint64_t x = set.x();
  std::vector<std::uint64_t> indicator(x, 0);
  set.for_each_member([&](std::uint64_t v) { indicator[v] = 1; });
  const std::size_t out_len = static_cast<std::size_t>(s) * (x - 1) + 1;
  std::vector<std::uint64_t> conv = convolve_power(indicator, s, out_len);
  for (std::size_t m = 0; m < conv.size(); ++m)
    if (conv[m] != 0) counts.emplace_back(m, conv[m]);
  return SumSpectrum(s, std::move(counts));
}

uint128 moment(const RestrictedSet& set, int s) {
  check_moment_cap(set, s);
  if (s == 1) return set.cardinality();  // members are distinct
  SumSpectrum spec = sum_spectrum(set, s);
  uint128 total = 0;
  for (const auto& [m, c] : spec.counts())
    total += static_cast<uint128>(c) * c;
  return total;
}

MomentBound moment_bound(const RestrictedSet& set, int s) {
  uint128 mom = moment(set, s);
  // the counting bound is taken on the gcd-reduced digits, where it is
  // sharpest; the moment itself is invariant under that digit scaling
  GcdReduction red = gcd_reduce(set.system());
  double per_digit = u_max(red.system, s);
  double bound = std::pow(per_digit, set.k());
  bool holds = static_cast<double>(mom) <= bound * (1.0 + 1e-9);
  return {mom, bound, holds};
}

}  // namespace dgold
