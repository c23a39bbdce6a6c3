#include "dml/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>

#include "dml/error.hpp"

namespace dml {

namespace {

constexpr std::uint64_t kCacheMagic = 0x314d4952504c4d44ull;  // "DMLPRIM1" in little-endian byte order

u64 floor_limit(double x) {
  if (!(x >= 0)) return 0;
  return static_cast<u64>(std::floor(x + 1e-9 * std::max(1.0, x)));
}

std::filesystem::path cache_file(const char* dir, u64 limit) {
  return std::filesystem::path(dir) / ("primes_" + std::to_string(limit) + ".bin");
}

std::shared_ptr<const PrimeTable> load_cached(const std::filesystem::path& path, u64 limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return nullptr;
  std::uint64_t header[3] = {};
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (!in || header[0] != kCacheMagic || header[1] != limit) return nullptr;
  std::vector<std::uint32_t> primes(header[2]);
  in.read(reinterpret_cast<char*>(primes.data()),
          static_cast<std::streamsize>(primes.size() * sizeof(std::uint32_t)));
  if (!in) return nullptr;
  if (!primes.empty() && (primes.front() != 2 || primes.back() > limit)) return nullptr;
  return std::make_shared<const PrimeTable>(limit, std::move(primes));
}

void store_cached(const std::filesystem::path& path, const PrimeTable& table) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    const std::uint64_t header[3] = {kCacheMagic, table.limit(), table.primes().size()};
    out.write(reinterpret_cast<const char*>(header), sizeof(header));
    out.write(reinterpret_cast<const char*>(table.primes().data()),
              static_cast<std::streamsize>(table.primes().size() * sizeof(std::uint32_t)));
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

std::vector<std::uint32_t> segmented_sieve(u64 limit, std::size_t segment_bytes) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  if (limit > kSieveCap) throw SieveCapacityError("sieve limit exceeds cap of 1e8");

  const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint32_t> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= root; j += i) small[j] = 0;
  }

  primes.reserve(static_cast<std::size_t>(1.1 * limit / std::log(static_cast<double>(limit)) + 16));
  std::vector<char> segment(segment_bytes);
  for (u64 lo = 2; lo <= limit; lo += segment_bytes) {
    const u64 hi = std::min<u64>(lo + segment_bytes - 1, limit);
    std::fill(segment.begin(), segment.end(), 1);
    for (const std::uint32_t p : base) {
      const u64 pp = static_cast<u64>(p) * p;
      if (pp > hi) break;
      u64 start = std::max<u64>(pp, (lo + p - 1) / p * p);
      for (u64 j = start; j <= hi; j += p) segment[j - lo] = 0;
    }
    for (u64 n = lo; n <= hi; ++n)
      if (segment[n - lo]) primes.push_back(static_cast<std::uint32_t>(n));
  }
  return primes;
}

PrimeTable::PrimeTable(u64 limit) : limit_(limit), primes_(segmented_sieve(limit)) {}

PrimeTable::PrimeTable(u64 limit, std::vector<std::uint32_t> primes)
    : limit_(limit), primes_(std::move(primes)) {}

std::span<const std::uint32_t> PrimeTable::primes_up_to(double x) const {
  const u64 bound = floor_limit(x);
  if (bound > limit_) throw SieveCapacityError("prime range exceeds table limit");
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

std::span<const std::uint32_t> PrimeTable::primes_between(double lo, double hi) const {
  if (!(hi > lo)) return {};
  const u64 upper = floor_limit(hi);
  if (upper > limit_) throw SieveCapacityError("prime range exceeds table limit");
  const u64 lower = floor_limit(lo);
  const auto first = std::upper_bound(primes_.begin(), primes_.end(), lower);
  const auto last = std::upper_bound(primes_.begin(), primes_.end(), upper);
  if (last <= first) return {};
  return {&*first, static_cast<std::size_t>(last - first)};
}

std::shared_ptr<const PrimeTable> shared_primes(u64 limit) {
  if (limit > kSieveCap) throw SieveCapacityError("sieve limit exceeds cap of 1e8");
  static std::mutex mutex;
  static std::shared_ptr<const PrimeTable> current;
  std::lock_guard lock(mutex);
  if (current && current->limit() >= limit) return current;

  // Grow geometrically so repeated small extensions do not resieve.
  u64 target = std::max<u64>(limit, 1 << 16);
  if (current) target = std::min<u64>(kSieveCap, std::max(target, 2 * current->limit()));

  const char* dir = std::getenv("DML_SIEVE_CACHE");
  if (dir != nullptr && *dir != '\0') {
    const auto path = cache_file(dir, target);
    if (auto cached = load_cached(path, target)) {
      current = std::move(cached);
      return current;
    }
    current = std::make_shared<const PrimeTable>(target);
    store_cached(path, *current);
    return current;
  }
  current = std::make_shared<const PrimeTable>(target);
  return current;
}

}  // namespace dml
