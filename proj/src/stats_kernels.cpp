#include "betaexp/stats_kernels.hpp"

#include <algorithm>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace betaexp::kernels {

namespace {

std::uint64_t code_at(const std::uint8_t* d, std::size_t pos, unsigned k) {
  std::uint64_t c = 0;
  for (unsigned i = 0; i < k; ++i) c = (c << 1) | d[pos + i];
  return c;
}

std::uint64_t mask_of(unsigned k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

// Codes of the windows starting in [begin, end).
void window_codes(const std::uint8_t* d, std::size_t begin, std::size_t end, unsigned k, std::uint64_t* out) {
  if (begin >= end) return;
  const std::uint64_t mask = mask_of(k);
  std::uint64_t c = code_at(d, begin, k);
  out[0] = c;
  for (std::size_t s = begin + 1; s < end; ++s) {
    c = ((c << 1) | d[s + k - 1]) & mask;
    out[s - begin] = c;
  }
}

void count_range(const std::uint8_t* d, std::size_t begin, std::size_t end, unsigned k, std::uint64_t* counts) {
  if (begin >= end) return;
  const std::uint64_t mask = mask_of(k);
  std::uint64_t c = code_at(d, begin, k);
  ++counts[c];
  for (std::size_t s = begin + 1; s < end; ++s) {
    c = ((c << 1) | d[s + k - 1]) & mask;
    ++counts[c];
  }
}

void fill_chunk(std::uint64_t seed, std::size_t chunk, std::uint8_t* out, std::size_t len) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(static_cast<std::uint64_t>(chunk) >> 32)};
  std::mt19937_64 gen(seq);
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (i % 64 == 0) bits = gen();
    out[i] = static_cast<std::uint8_t>(bits & 1U);
    bits >>= 1;
  }
}

std::uint64_t count_bits(const std::vector<std::uint64_t>& bitmap) {
  std::uint64_t total = 0;
  for (auto w : bitmap) total += static_cast<std::uint64_t>(__builtin_popcountll(w));
  return total;
}

std::uint64_t count_unique(std::vector<std::uint64_t>& codes) {
  std::sort(codes.begin(), codes.end());
  return static_cast<std::uint64_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_max_threads([[maybe_unused]] int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

namespace serial {

std::vector<std::uint64_t> block_counts(const std::uint8_t* d, std::size_t n, unsigned k) {
  std::vector<std::uint64_t> counts(std::size_t{1} << k, 0);
  if (k == 0 || n < k) return counts;
  count_range(d, 0, n - k + 1, k, counts.data());
  return counts;
}

std::uint64_t distinct_factors(const std::uint8_t* d, std::size_t n, unsigned k) {
  if (n < k) return 0;
  if (k == 0) return 1;
  const std::size_t windows = n - k + 1;
  std::vector<std::uint64_t> codes(windows);
  window_codes(d, 0, windows, k, codes.data());
  if (k <= kDenseBlockCap) {
    std::vector<std::uint64_t> bitmap(((std::size_t{1} << k) + 63) / 64, 0);
    for (auto c : codes) bitmap[c / 64] |= std::uint64_t{1} << (c % 64);
    return count_bits(bitmap);
  }
  return count_unique(codes);
}

std::vector<std::uint8_t> fair_coin_digits(std::uint64_t seed, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (std::size_t c = 0; c * kCoinChunk < n; ++c) {
    fill_chunk(seed, c, out.data() + c * kCoinChunk, std::min(kCoinChunk, n - c * kCoinChunk));
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> block_counts(const std::uint8_t* d, std::size_t n, unsigned k) {
  const std::size_t size = std::size_t{1} << k;
  std::vector<std::uint64_t> counts(size, 0);
  if (k == 0 || n < k) return counts;
  const std::size_t windows = n - k + 1;
  const int threads = max_threads();
  if (threads == 1 || windows < 4096) return serial::block_counts(d, n, k);
  std::vector<std::vector<std::uint64_t>> local(static_cast<std::size_t>(threads), std::vector<std::uint64_t>(size, 0));
#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    const auto nt = static_cast<std::size_t>(omp_get_num_threads());
#else
    const std::size_t t = 0, nt = 1;
#endif
    const std::size_t begin = windows * t / nt, end = windows * (t + 1) / nt;
    count_range(d, begin, end, k, local[t].data());
  }
  for (const auto& l : local) {
    for (std::size_t i = 0; i < size; ++i) counts[i] += l[i];
  }
  return counts;
}

std::uint64_t distinct_factors(const std::uint8_t* d, std::size_t n, unsigned k) {
  if (n < k) return 0;
  if (k == 0) return 1;
  const std::size_t windows = n - k + 1;
  const int threads = max_threads();
  if (threads == 1 || windows < 4096) return serial::distinct_factors(d, n, k);
  std::vector<std::uint64_t> codes(windows);
#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    const auto nt = static_cast<std::size_t>(omp_get_num_threads());
#else
    const std::size_t t = 0, nt = 1;
#endif
    const std::size_t begin = windows * t / nt, end = windows * (t + 1) / nt;
    window_codes(d, begin, end, k, codes.data() + begin);
  }
  if (k > kDenseBlockCap) return count_unique(codes);
  const std::size_t words = ((std::size_t{1} << k) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> local(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    const auto nt = static_cast<std::size_t>(omp_get_num_threads());
#else
    const std::size_t t = 0, nt = 1;
#endif
    auto& bitmap = local[t];
    bitmap.assign(words, 0);
    const std::size_t begin = windows * t / nt, end = windows * (t + 1) / nt;
    for (std::size_t i = begin; i < end; ++i) bitmap[codes[i] / 64] |= std::uint64_t{1} << (codes[i] % 64);
  }
  std::vector<std::uint64_t> merged(words, 0);
  for (const auto& l : local) {
    for (std::size_t i = 0; i < l.size(); ++i) merged[i] |= l[i];
  }
  return count_bits(merged);
}

std::vector<std::uint8_t> fair_coin_digits(std::uint64_t seed, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  const auto chunks = static_cast<long>((n + kCoinChunk - 1) / kCoinChunk);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < chunks; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    fill_chunk(seed, cc, out.data() + cc * kCoinChunk, std::min(kCoinChunk, n - cc * kCoinChunk));
  }
  return out;
}

}  // namespace parallel

}  // namespace betaexp::kernels
