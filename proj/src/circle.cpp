#include "dgold/circle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dgold/kahan.hpp"
#include "dgold/transforms.hpp"

namespace dgold {

namespace {
constexpr double kTwoPi = 6.28318530717958647692528676655900577;
}

ArcPartition ArcPartition::build(std::uint64_t x, double delta0) {
  if (x < 2) throw validation_error("arc partition needs X >= 2");
  if (!(delta0 > 0.0 && delta0 < 1.0 / 6.0))
    throw validation_error("delta0 must lie in (0, 1/6)");
  ArcPartition p;
  p.x_ = x;
  p.delta0_ = delta0;
  p.q_cap_ = static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(x), 6.0 * delta0)));
  p.width_ = std::pow(static_cast<double>(x), 6.0 * delta0 - 1.0);
  if (p.q_cap_ < 1) p.q_cap_ = 1;
  if (p.width_ * static_cast<double>(p.q_cap_) >= 0.5)
    throw validation_error("degenerate arc partition: width * Q >= 1/2");
  for (std::uint64_t q = 1; q <= p.q_cap_; ++q) {
    for (std::uint64_t a = 0; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      double lo = (static_cast<double>(a) - p.width_) / static_cast<double>(q);
      double hi = (static_cast<double>(a) + p.width_) / static_cast<double>(q);
      lo = std::max(lo, 0.0);
      hi = std::min(hi, 1.0);
      if (lo < hi) p.intervals_.emplace_back(lo, hi);
    }
  }
  p.merge_and_check();
  return p;
}

ArcPartition ArcPartition::from_intervals(std::uint64_t x,
                                          std::vector<std::pair<double, double>> intervals) {
  ArcPartition p;
  p.x_ = x;
  for (auto& [lo, hi] : intervals) {
    if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
      throw validation_error("intervals must be ordered subsets of [0, 1]");
  }
  p.intervals_ = std::move(intervals);
  p.merge_and_check();
  return p;
}

void ArcPartition::merge_and_check() {
  std::sort(intervals_.begin(), intervals_.end());
  std::vector<std::pair<double, double>> merged;
  for (auto& iv : intervals_) {
    if (!merged.empty() && iv.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, iv.second);
    else
      merged.push_back(iv);
  }
  intervals_ = std::move(merged);
  measure_ = 0.0;
  for (auto& [lo, hi] : intervals_) measure_ += hi - lo;
  if (measure_ >= 1.0)
    throw validation_error("major arcs cover the whole circle");
}

bool ArcPartition::is_major(double alpha) const {
  alpha -= std::floor(alpha);
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(),
                             std::make_pair(alpha, std::numeric_limits<double>::infinity()));
  if (it != intervals_.begin()) {
    --it;
    if (alpha <= it->second) return true;
  }
  return false;
}

bool ArcPartition::is_major_direct(double alpha) const {
  if (!arc_built())
    throw validation_error("direct arc test requires a Q/width-built partition");
  alpha -= std::floor(alpha);
  for (std::uint64_t q = 1; q <= q_cap_; ++q) {
    double t = static_cast<double>(q) * alpha;
    double dist = std::abs(t - std::round(t));
    if (dist < width_) return true;
  }
  return false;
}

std::shared_ptr<const std::vector<std::uint8_t>> ArcPartition::grid_major_mask(
    std::uint64_t n_grid) const {
  if (n_grid == 0 || (n_grid & (n_grid - 1)) != 0)
    throw validation_error("grid size must be a power of two");
  {
    std::lock_guard<std::mutex> lock(masks_->mutex);
    auto it = masks_->entries.find(n_grid);
    if (it != masks_->entries.end()) return it->second;
  }
  auto mask = std::make_shared<std::vector<std::uint8_t>>(n_grid, 0);
  if (arc_built()) {
    const double wn = width_ * static_cast<double>(n_grid);  // exact scaling by 2^t
    auto in_arc = [&](std::uint64_t j, std::uint64_t q, std::uint64_t a) {
      double dist = std::abs(static_cast<double>(q * j) - static_cast<double>(a) * static_cast<double>(n_grid));
      return dist < wn;
    };
    for (std::uint64_t q = 1; q <= q_cap_; ++q) {
      for (std::uint64_t a = 0; a <= q; ++a) {
        double center = static_cast<double>(a) * static_cast<double>(n_grid) / static_cast<double>(q);
        double radius = wn / static_cast<double>(q);
        auto lo = static_cast<std::int64_t>(std::floor(center - radius)) - 1;
        auto hi = static_cast<std::int64_t>(std::ceil(center + radius)) + 1;
        lo = std::max<std::int64_t>(lo, 0);
        hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(n_grid) - 1);
        for (std::int64_t j = lo; j <= hi; ++j) {
          auto ju = static_cast<std::uint64_t>(j);
          if (!(*mask)[ju] && in_arc(ju, q, a)) (*mask)[ju] = 1;
        }
      }
    }
  } else {
    for (std::uint64_t j = 0; j < n_grid; ++j)
      (*mask)[j] = is_major(static_cast<double>(j) / static_cast<double>(n_grid)) ? 1 : 0;
  }
  std::lock_guard<std::mutex> lock(masks_->mutex);
  auto [it, inserted] = masks_->entries.emplace(n_grid, std::move(mask));
  return it->second;
}

std::uint64_t GridTransform::default_grid_size(std::uint64_t x) {
  return std::bit_ceil(2 * x + 1);
}

GridTransform GridTransform::build(const PrimeTable& table, std::uint64_t n_grid,
                                   std::uint64_t byte_cap) {
  if (n_grid == 0 || (n_grid & (n_grid - 1)) != 0)
    throw validation_error("grid size must be a power of two");
  if (n_grid <= 2 * table.x())
    throw validation_error("grid size must exceed 2X for exact quadrature");
  if (n_grid * sizeof(std::complex<double>) > byte_cap)
    throw cap_error("grid of " + std::to_string(n_grid) + " points exceeds the memory cap");
  GridTransform g;
  g.n_ = n_grid;
  g.x_ = table.x();
  g.s_values_.assign(n_grid, 0.0);
  if (table.has_two()) g.s_values_[2] += std::log(2.0);
  for (std::uint32_t p : table.primes()) {
    if (p == 2) continue;
    g.s_values_[p] += std::log(static_cast<double>(p));
  }
  fft(g.s_values_, false);  // F[j] = sum_t v_t e(-jt/N)
  for (auto& z : g.s_values_) z = std::conj(z);  // S(j/N) = conj(F[j]) for real input
  return g;
}

namespace {

void check_imag_residue(double re, double im, const char* what) {
  if (std::abs(im) >= 1e-9 * std::max(1.0, std::abs(re)))
    throw invariant_error(std::string(what) + ": imaginary residue failed to cancel");
}

}  // namespace

double r_quadrature(const GridTransform& grid, const ArcPartition& partition, std::uint64_t n,
                    Region region) {
  if (n == 0 || n >= 2 * grid.x())
    throw validation_error("n must satisfy 0 < n < 2X");
  const std::uint64_t N = grid.n();
  std::shared_ptr<const std::vector<std::uint8_t>> mask;
  if (region != Region::full) mask = partition.grid_major_mask(N);
  const auto& s = grid.s_values();
  KahanComplexSum acc;
  for (std::uint64_t j = 0; j < N; ++j) {
    if (region == Region::major && !(*mask)[j]) continue;
    if (region == Region::minor && (*mask)[j]) continue;
    std::uint64_t ph = (n * j) & (N - 1);  // n j mod N, exact
    std::complex<double> w = std::polar(1.0, -kTwoPi * static_cast<double>(ph) / static_cast<double>(N));
    acc.add(s[j] * s[j] * w);
  }
  std::complex<double> total = acc.value() / static_cast<double>(N);
  check_imag_residue(total.real(), total.imag(), "r_quadrature");
  return total.real();
}

std::vector<double> r_batch(const GridTransform& grid, const ArcPartition& partition,
                            Region region) {
  const std::uint64_t N = grid.n();
  const auto& s = grid.s_values();
  std::vector<std::complex<double>> t(N);
  std::shared_ptr<const std::vector<std::uint8_t>> mask;
  if (region != Region::full) mask = partition.grid_major_mask(N);
  for (std::uint64_t j = 0; j < N; ++j) {
    bool keep = region == Region::full || ((*mask)[j] != 0) == (region == Region::major);
    t[j] = keep ? s[j] * s[j] : 0.0;
  }
  fft(t, false);  // forward kernel e(-nj/N) matches the quadrature phase
  std::vector<double> out(N);
  const double inv_n = 1.0 / static_cast<double>(N);
  for (std::uint64_t n = 0; n < N; ++n) out[n] = t[n].real() * inv_n;
  return out;
}

MinorAggregate minor_arc_aggregate(const RestrictedSet& set, const GridTransform& grid,
                                   const ArcPartition& partition) {
  if (set.x() != grid.x())
    throw validation_error("restricted set and grid disagree on X");
  std::vector<double> r_minor = r_batch(grid, partition, Region::minor);

  MinorAggregate agg;
  std::vector<std::pair<std::uint64_t, int>> signs;
  KahanSum total;
  set.for_each_member([&](std::uint64_t n) {
    if (n == 0 || n % 2 != 0) return;
    double r = r_minor[n];
    int eta = (r > 0.0) - (r < 0.0);
    signs.emplace_back(n, eta);
    ++agg.sign_histogram[static_cast<std::size_t>(eta + 1)];
    total.add(std::abs(r));
  });
  agg.total = total.value();
  agg.signs = SignVector::from_sorted(std::move(signs));

  const std::uint64_t N = grid.n();
  auto mask = partition.grid_major_mask(N);
  const auto& s = grid.s_values();
  KahanComplexSum rhs;
  for (std::uint64_t j = 0; j < N; ++j) {
    if ((*mask)[j]) continue;
    double alpha = static_cast<double>(j) / static_cast<double>(N);
    rhs.add(s[j] * s[j] * eval_K(agg.signs, alpha));
  }
  std::complex<double> v = rhs.value() / static_cast<double>(N);
  check_imag_residue(v.real(), v.imag(), "minor_arc_aggregate");
  agg.rhs_integral = v.real();

  if (std::abs(agg.total - agg.rhs_integral) > 1e-6 * std::max(1.0, std::abs(agg.total)))
    throw invariant_error("minor-arc aggregate identity failed beyond 1e-6 relative");
  return agg;
}

DominanceReport dominance_report(const RestrictedSet& set, const GridTransform& grid,
                                 const ArcPartition& partition, const PrimeTable& table,
                                 double y) {
  if (set.x() != grid.x() || table.x() != grid.x())
    throw validation_error("set, table and grid disagree on X");
  if (y < 1.0) throw validation_error("Y must be at least 1");

  std::vector<double> r_major = r_batch(grid, partition, Region::major);
  std::vector<double> r_minor = r_batch(grid, partition, Region::minor);
  std::vector<double> r_full = r_batch(grid, partition, Region::full);

  DominanceReport rep;
  const double x = static_cast<double>(grid.x());
  rep.threshold = x / std::sqrt(y) / std::log(x);

  set.for_each_member([&](std::uint64_t n) {
    if (n == 0 || n % 2 != 0) return;
    DominanceRow row;
    row.n = n;
    row.r_major = r_major[n];
    row.r_minor = r_minor[n];
    row.r_full = r_full[n];
    row.r_exact = weighted_rep(table, n).r_weighted;
    row.major_positive = row.r_major > 0.0;
    row.major_dominates = row.r_major > std::abs(row.r_minor);
    row.below_threshold = row.r_major < rep.threshold;
    rep.n_major_positive += row.major_positive;
    rep.n_dominant += row.major_dominates;
    rep.n_below_threshold += row.below_threshold;
    double rel = std::abs(row.r_full - row.r_exact) / std::max(1.0, std::abs(row.r_exact));
    rep.max_rel_full_vs_exact = std::max(rep.max_rel_full_vs_exact, rel);
    rep.rows.push_back(row);
  });

  auto mask = partition.grid_major_mask(grid.n());
  for (std::uint64_t j = 0; j < grid.n(); ++j)
    if (!(*mask)[j])
      rep.sup_minor_abs_s = std::max(rep.sup_minor_abs_s, std::abs(grid.s_values()[j]));
  return rep;
}

}  // namespace dgold
