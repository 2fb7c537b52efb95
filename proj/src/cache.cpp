#include "dgold/cache.hpp"

#include <cstring>
#include <fstream>
#include <vector>

namespace dgold {

namespace {

constexpr char kMagic[9] = {'D', 'G', 'P', 'R', 'I', 'M', 'E', 'S', '1'};

std::uint64_t fnv1a(const std::vector<char>& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

void put_u64_le(std::vector<char>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_u64_le(const char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  return v;
}

}  // namespace

void save_prime_cache(const PrimeTable& table, const std::string& path) {
  std::vector<char> payload;
  payload.insert(payload.end(), kMagic, kMagic + sizeof(kMagic));
  put_u64_le(payload, table.x());
  put_u64_le(payload, table.cutoff());
  const std::uint64_t n_bits = table.x() / 2;
  const std::uint64_t n_bytes = (n_bits + 7) / 8;
  const auto& words = table.odd_bits();
  for (std::uint64_t i = 0; i < n_bytes; ++i) {
    std::uint64_t w = words[i / 8];
    payload.push_back(static_cast<char>((w >> (8 * (i % 8))) & 0xFF));
  }
  std::uint64_t sum = fnv1a(payload);
  put_u64_le(payload, sum);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw validation_error("cannot open cache file for writing: " + path);
  f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!f) throw validation_error("failed to write cache file: " + path);
}

std::optional<PrimeTable> load_prime_cache(const std::string& path, std::uint64_t x,
                                           std::uint64_t p_cutoff) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::vector<char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  const std::uint64_t n_bits = x / 2;
  const std::uint64_t n_bytes = (n_bits + 7) / 8;
  const std::uint64_t expect = sizeof(kMagic) + 16 + n_bytes + 8;
  if (bytes.size() != expect) return std::nullopt;
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) return std::nullopt;
  std::vector<char> payload(bytes.begin(), bytes.end() - 8);
  if (fnv1a(payload) != get_u64_le(bytes.data() + bytes.size() - 8)) return std::nullopt;
  std::uint64_t file_x = get_u64_le(bytes.data() + sizeof(kMagic));
  std::uint64_t file_p = get_u64_le(bytes.data() + sizeof(kMagic) + 8);
  if (file_x != x || file_p != p_cutoff) return std::nullopt;
  std::vector<std::uint64_t> words((n_bits + 63) / 64, 0);
  const char* bits = bytes.data() + sizeof(kMagic) + 16;
  for (std::uint64_t i = 0; i < n_bytes; ++i)
    words[i / 8] |= static_cast<std::uint64_t>(static_cast<unsigned char>(bits[i])) << (8 * (i % 8));
  return PrimeTable::from_odd_bits(x, p_cutoff, std::move(words));
}

PrimeTable cached_table(std::uint64_t x, std::uint64_t p_cutoff, const std::string& cache_path) {
  if (!cache_path.empty()) {
    if (auto cached = load_prime_cache(cache_path, x, p_cutoff)) return std::move(*cached);
  }
  PrimeTable table = PrimeTable::with_cutoff(x, p_cutoff);
  if (!cache_path.empty()) save_prime_cache(table, cache_path);
  return table;
}

}  // namespace dgold
