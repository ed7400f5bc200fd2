#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace betaexp::kernels {

/// Largest block length with a dense count table.
inline constexpr unsigned kDenseBlockCap = 20;
/// Digits produced by one generator in fair_coin_digits.
inline constexpr std::size_t kCoinChunk = 65536;

// Serial reference implementations.
namespace serial {

/// Sliding-window counts of every length-k block, indexed by the block read as a
/// binary number (first digit most significant). k <= kDenseBlockCap.
std::vector<std::uint64_t> block_counts(const std::uint8_t* d, std::size_t n, unsigned k);

/// Number of distinct length-k factors, 1 <= k <= 63.
std::uint64_t distinct_factors(const std::uint8_t* d, std::size_t n, unsigned k);

/// Fair coin digits. Chunk c (digits c*kCoinChunk ...) comes from an mt19937_64
/// seeded with seed_seq{seed lo32, seed hi32, c lo32, c hi32}; each draw yields
/// 64 digits, least significant bit first.
std::vector<std::uint8_t> fair_coin_digits(std::uint64_t seed, std::size_t n);

}  // namespace serial

// OpenMP versions; results are identical to the serial ones.
namespace parallel {

std::vector<std::uint64_t> block_counts(const std::uint8_t* d, std::size_t n, unsigned k);
std::uint64_t distinct_factors(const std::uint8_t* d, std::size_t n, unsigned k);
std::vector<std::uint8_t> fair_coin_digits(std::uint64_t seed, std::size_t n);

}  // namespace parallel

/// Threads available to the parallel kernels (1 without OpenMP).
int max_threads();
/// Sets the thread count for later parallel regions (n <= 0 keeps the default).
void set_max_threads(int n);

}  // namespace betaexp::kernels
