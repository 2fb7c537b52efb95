#include "dgold/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "dgold/kahan.hpp"

namespace dgold {

namespace {

constexpr std::uint64_t kSegmentSize = std::uint64_t(1) << 20;

void validate_x(std::uint64_t x) {
  if (x < 4) throw validation_error("prime table needs X >= 4");
  if (x > kPrimeTableCap) throw cap_error("prime table X exceeds 10^9");
}

}  // namespace

PrimeTable PrimeTable::build(std::uint64_t x, double delta0) {
  validate_x(x);
  if (!(delta0 > 0.0 && delta0 < 1.0 / 6.0))
    throw validation_error("delta0 must lie in (0, 1/6)");
  auto cutoff = static_cast<std::uint64_t>(
      std::floor(std::pow(static_cast<double>(x), 6.0 * delta0)));
  return with_cutoff(x, cutoff);
}

PrimeTable PrimeTable::with_cutoff(std::uint64_t x, std::uint64_t p_cutoff) {
  validate_x(x);
  if (p_cutoff >= x) throw validation_error("cutoff P must be below X");

  PrimeTable t;
  t.x_ = x;
  t.cutoff_ = p_cutoff;
  t.odd_bits_.assign((x / 2 + 63) / 64, 0);

  const std::uint64_t limit = x - 1;  // primes strictly below X
  const auto sqrt_limit = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<char> small(sqrt_limit + 1, 1);
  std::vector<std::uint64_t> base_primes;
  for (std::uint64_t i = 2; i <= sqrt_limit; ++i) {
    if (!small[i]) continue;
    base_primes.push_back(i);
    for (std::uint64_t j = i * i; j <= sqrt_limit; j += i) small[j] = 0;
  }

  std::vector<char> seg(kSegmentSize);
  for (std::uint64_t low = 3; low <= limit; low += kSegmentSize) {
    std::uint64_t high = std::min(low + kSegmentSize - 1, limit);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint64_t p : base_primes) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
    }
    for (std::uint64_t v = low | 1; v <= high; v += 2) {
      if (seg[v - low] && v > p_cutoff) {
        std::uint64_t i = v >> 1;
        t.odd_bits_[i >> 6] |= std::uint64_t(1) << (i & 63);
      }
    }
  }
  t.finalize_from_bits();
  return t;
}

PrimeTable PrimeTable::from_odd_bits(std::uint64_t x, std::uint64_t p_cutoff,
                                     std::vector<std::uint64_t> odd_bits) {
  validate_x(x);
  if (p_cutoff >= x) throw validation_error("cutoff P must be below X");
  if (odd_bits.size() != (x / 2 + 63) / 64)
    throw validation_error("odd-bit sieve has the wrong length for X");
  PrimeTable t;
  t.x_ = x;
  t.cutoff_ = p_cutoff;
  t.odd_bits_ = std::move(odd_bits);
  t.finalize_from_bits();
  return t;
}

void PrimeTable::finalize_from_bits() {
  primes_.clear();
  KahanSum logs;
  if (has_two()) {
    primes_.push_back(2);
    logs.add(std::log(2.0));
  }
  const std::uint64_t n_odd = x_ / 2;
  for (std::uint64_t i = 0; i < n_odd; ++i) {
    if ((odd_bits_[i >> 6] >> (i & 63)) & 1) {
      auto p = static_cast<std::uint32_t>(2 * i + 1);
      primes_.push_back(p);
      logs.add(std::log(static_cast<double>(p)));
    }
  }
  log_sum_ = logs.value();
}

GoldbachRecord weighted_rep(const PrimeTable& table, std::uint64_t n) {
  if (n % 2 != 0) throw validation_error("n must be even");
  if (n == 0 || n >= 2 * table.x())
    throw validation_error("n must satisfy 0 < n < 2X");
  GoldbachRecord rec;
  rec.n = n;
  KahanSum weight;
  for (std::uint32_t p : table.primes()) {
    if (static_cast<std::uint64_t>(p) * 2 > n) break;
    std::uint64_t q = n - p;
    if (!table.contains(q)) continue;
    double lp = std::log(static_cast<double>(p));
    if (q == p) {
      rec.rep_count += 1;
      weight.add(lp * lp);
    } else {
      rec.rep_count += 2;  // ordered pairs (p,q) and (q,p)
      weight.add(2.0 * lp * std::log(static_cast<double>(q)));
    }
  }
  rec.r_weighted = weight.value();
  rec.is_exception = rec.rep_count == 0;
  return rec;
}

namespace {

bool has_two_prime_rep(const PrimeTable& table, std::uint64_t n) {
  for (std::uint32_t p : table.primes()) {
    if (static_cast<std::uint64_t>(p) * 2 > n) break;
    if (table.contains(n - p)) return true;
  }
  return false;
}

}  // namespace

ScanResult exception_scan(const RestrictedSet& set, const PrimeTable& table, int threads) {
  if (set.x() != table.x())
    throw validation_error("restricted set and prime table disagree on X");
  if (threads < 1) throw validation_error("thread count must be positive");

  const std::uint64_t total = set.cardinality();
  const auto n_chunks = static_cast<std::uint64_t>(threads);
  std::vector<ScanResult> partial(n_chunks);

  auto run_chunk = [&](std::uint64_t c) {
    std::uint64_t from = total / n_chunks * c + std::min<std::uint64_t>(c, total % n_chunks);
    std::uint64_t len = total / n_chunks + (c < total % n_chunks ? 1 : 0);
    ScanResult& r = partial[c];
    set.walk_range(from, from + len, [&](std::uint64_t n) {
      if (n % 2 != 0) return;
      if (n < 4) {
        ++r.skipped_small;
        return;
      }
      ++r.even_scanned;
      if (!has_two_prime_rep(table, n))
        r.exceptions.push_back({n, 0.0, 0, true});
    });
  };

  if (n_chunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_chunks);
    for (std::uint64_t c = 0; c < n_chunks; ++c) pool.emplace_back(run_chunk, c);
    for (auto& th : pool) th.join();
  }

  ScanResult out;
  for (auto& p : partial) {
    out.even_scanned += p.even_scanned;
    out.skipped_small += p.skipped_small;
    out.exceptions.insert(out.exceptions.end(), p.exceptions.begin(), p.exceptions.end());
  }
  return out;
}

}  // namespace dgold
