#ifndef DGOLD_CIRCLE_HPP
#define DGOLD_CIRCLE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "dgold/digitset.hpp"
#include "dgold/expsum.hpp"
#include "dgold/primes.hpp"

namespace dgold {

// Major arcs: alpha with ||q alpha|| < width for some q <= Q, where
// Q = floor(X^(6 delta0)) and width = X^(6 delta0 - 1).  Stored as a merged,
// sorted, disjoint interval list over [0, 1); the complement is minor.
class ArcPartition {
public:
  static ArcPartition build(std::uint64_t x, double delta0);
  // Explicit interval list (merged on construction); Q/width-based queries
  // are unavailable on such partitions.
  static ArcPartition from_intervals(std::uint64_t x,
                                     std::vector<std::pair<double, double>> intervals);

  std::uint64_t x() const { return x_; }
  std::uint64_t q_cap() const { return q_cap_; }
  double width() const { return width_; }
  const std::vector<std::pair<double, double>>& intervals() const { return intervals_; }
  double major_measure() const { return measure_; }
  bool arc_built() const { return q_cap_ > 0; }

  // interval-list membership (binary search)
  bool is_major(double alpha) const;
  // direct min-over-q test; arc-built partitions only
  bool is_major_direct(double alpha) const;

  // Per-grid-point classification for alpha_j = j/N.  For arc-built
  // partitions this evaluates |q j - a N| < width N exactly, which is the
  // ||q alpha|| criterion scaled by the power-of-two N, and is symmetric
  // under j <-> N - j.  Cached per N.
  std::shared_ptr<const std::vector<std::uint8_t>> grid_major_mask(std::uint64_t n_grid) const;

private:
  ArcPartition() = default;
  void merge_and_check();

  std::uint64_t x_ = 0;
  double delta0_ = 0.0;
  std::uint64_t q_cap_ = 0;  // 0 for from_intervals partitions
  double width_ = 0.0;
  std::vector<std::pair<double, double>> intervals_;
  double measure_ = 0.0;

  struct MaskCache {
    std::mutex mutex;
    std::map<std::uint64_t, std::shared_ptr<const std::vector<std::uint8_t>>> entries;
  };
  std::unique_ptr<MaskCache> masks_ = std::make_unique<MaskCache>();
};

inline constexpr std::uint64_t kDefaultGridByteCap = std::uint64_t(1) << 31;

// Power-of-two sampling grid with S(j/N) precomputed by one FFT of the
// weighted prime indicator.  N > 2X makes full-circle quadrature of
// S^2 e(-n alpha) exact for 0 < n < 2X: every integrand frequency lies
// strictly inside (-N, N).
class GridTransform {
public:
  static GridTransform build(const PrimeTable& table, std::uint64_t n_grid,
                             std::uint64_t byte_cap = kDefaultGridByteCap);
  // smallest admissible power of two for this table
  static std::uint64_t default_grid_size(std::uint64_t x);

  std::uint64_t n() const { return n_; }
  std::uint64_t x() const { return x_; }
  const std::vector<std::complex<double>>& s_values() const { return s_values_; }

private:
  GridTransform() = default;
  std::uint64_t n_ = 0;
  std::uint64_t x_ = 0;
  std::vector<std::complex<double>> s_values_;
};

enum class Region { full, major, minor };

// (1/N) sum over grid points in the region of S(j/N)^2 e(-n j/N); the real
// part is returned and the imaginary residue is checked.
double r_quadrature(const GridTransform& grid, const ArcPartition& partition, std::uint64_t n,
                    Region region);

// r(n, region) for every 0 < n < N at once via a single FFT.
std::vector<double> r_batch(const GridTransform& grid, const ArcPartition& partition,
                            Region region);

struct MinorAggregate {
  double total = 0.0;               // sum over even members of |r(n, minor)|
  SignVector signs;                 // eta(n) = sign of r(n, minor)
  std::array<std::uint64_t, 3> sign_histogram = {0, 0, 0};  // counts of -1, 0, +1
  double rhs_integral = 0.0;        // grid integral of S^2 K over the minor region
};

// Evaluates both sides of the minor-arc aggregate identity
// sum |r(n,m)| = int_m S(alpha)^2 K(alpha) d alpha with the recovered signs,
// and checks their agreement to 1e-6 relative.
MinorAggregate minor_arc_aggregate(const RestrictedSet& set, const GridTransform& grid,
                                   const ArcPartition& partition);

struct DominanceRow {
  std::uint64_t n = 0;
  double r_major = 0.0;
  double r_minor = 0.0;
  double r_full = 0.0;
  double r_exact = 0.0;  // exact weighted representation count
  bool major_positive = false;
  bool major_dominates = false;   // r_major > |r_minor|
  bool below_threshold = false;   // r_major < X Y^{-1/2} / log X
};

struct DominanceReport {
  std::vector<DominanceRow> rows;  // even members, ascending
  double threshold = 0.0;
  std::uint64_t n_major_positive = 0;
  std::uint64_t n_dominant = 0;
  std::uint64_t n_below_threshold = 0;
  double max_rel_full_vs_exact = 0.0;
  double sup_minor_abs_s = 0.0;    // sup over minor grid points of |S|
};

DominanceReport dominance_report(const RestrictedSet& set, const GridTransform& grid,
                                 const ArcPartition& partition, const PrimeTable& table,
                                 double y);

}  // namespace dgold

#endif  // DGOLD_CIRCLE_HPP
