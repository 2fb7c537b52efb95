#ifndef DGOLD_CACHE_HPP
#define DGOLD_CACHE_HPP

#include <optional>
#include <string>

#include "dgold/primes.hpp"

namespace dgold {

// Sieve cache file: magic "DGPRIMES1", X and P as 8-byte little-endian,
// bit-packed odd-number sieve (bit i marks 2i+1 as a table prime), then an
// 8-byte FNV-1a checksum of everything before it.

void save_prime_cache(const PrimeTable& table, const std::string& path);

// Returns the cached table when the file exists, passes the checksum and
// matches (X, P); otherwise nullopt (callers rebuild and rewrite).
std::optional<PrimeTable> load_prime_cache(const std::string& path, std::uint64_t x,
                                           std::uint64_t p_cutoff);

// Load-or-build helper used by the CLI.
PrimeTable cached_table(std::uint64_t x, std::uint64_t p_cutoff, const std::string& cache_path);

}  // namespace dgold

#endif  // DGOLD_CACHE_HPP
