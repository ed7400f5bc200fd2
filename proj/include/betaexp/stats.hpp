#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "betaexp/expansion.hpp"

namespace betaexp {

/// counts[n] = number of distinct length-n factors of a prefix (counts[0] = 1).
struct ComplexityProfile {
  std::size_t max_n = 0;
  std::size_t prefix_length = 0;
  std::vector<std::uint64_t> counts;
};

/// Exact factor counts for n = 0..max_n. Throws InvalidArgument if max_n > |w|
/// or max_n > 63.
ComplexityProfile complexity(const Word& w, std::size_t max_n);

struct UniversalityCheck {
  bool universal = false;
  std::size_t level = 0;
  std::uint64_t missing_count = 0;
  std::vector<Word> missing;  // length-lex order, at most kMissingListCap entries
};

inline constexpr std::size_t kMissingListCap = 1024;

/// Whether every word of length <= level occurs in w.
UniversalityCheck is_universal_prefix(const Word& w, std::size_t level);

struct BlockFrequencyTable {
  std::size_t k = 0;
  std::size_t length = 0;              // prefix length n
  std::vector<std::uint64_t> counts;   // indexed by the block as a binary number
  std::uint64_t windows() const noexcept { return length >= k ? length - k + 1 : 0; }
  double frequency(std::size_t block) const;
  Word block(std::size_t index) const;
};

/// Overlapping sliding-window counts. Throws InvalidArgument unless 1 <= k <= |w|
/// and k <= kernels::kDenseBlockCap.
BlockFrequencyTable block_frequencies(const Word& w, std::size_t k);

struct NormalityDeviation {
  double deviation = 0;
  std::size_t k = 0;
  Word block;
};

/// max over k <= max_k and |B| = k of |freq(B) - 2^-k|, with the block attaining it.
/// Throws InvalidArgument if 2^max_k > |w|.
NormalityDeviation normality_deviation(const Word& w, std::size_t max_k);

/// n seeded fair-coin digits (see kernels::serial::fair_coin_digits for the stream).
Word fair_coin_word(std::uint64_t seed, std::size_t n);

struct BernoulliSample {
  Word w;
  /// x lies in [lo, hi] for every continuation of w: lo = val of the first
  /// value_digits digits, hi = lo + beta^-value_digits / (beta - 1).
  FieldValue lo, hi;
  std::size_t value_digits = 0;
};

inline constexpr std::size_t kDefaultValueDigits = 1024;

BernoulliSample sample_bernoulli_expansion(const Beta& beta, std::uint64_t seed, std::size_t n,
                                           std::size_t value_digits = kDefaultValueDigits);

/// An expansion prefix of x taking a fair coin at every branch node. Throws OutOfDomain.
Word random_branch_expansion(const FieldValue& x, std::uint64_t seed, std::size_t n);

}  // namespace betaexp
