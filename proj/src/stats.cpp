#include "betaexp/stats.hpp"

#include <cmath>
#include <random>

#include "betaexp/error.hpp"
#include "betaexp/stats_kernels.hpp"

namespace betaexp {

ComplexityProfile complexity(const Word& w, std::size_t max_n) {
  if (max_n > w.size()) throw Error(Errc::InvalidArgument, "max_n exceeds the word length");
  if (max_n > 63) throw Error(Errc::InvalidArgument, "factor lengths above 63 are not supported");
  ComplexityProfile p;
  p.max_n = max_n;
  p.prefix_length = w.size();
  p.counts.push_back(1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    p.counts.push_back(kernels::parallel::distinct_factors(w.digits().data(), w.size(), static_cast<unsigned>(n)));
  }
  return p;
}

namespace {

Word block_word(std::size_t code, std::size_t k) {
  std::vector<std::uint8_t> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = static_cast<std::uint8_t>((code >> (k - 1 - i)) & 1U);
  return Word(std::move(d));
}

}  // namespace

UniversalityCheck is_universal_prefix(const Word& w, std::size_t level) {
  if (level > kernels::kDenseBlockCap) {
    throw Error(Errc::InvalidArgument, "level above " + std::to_string(kernels::kDenseBlockCap));
  }
  UniversalityCheck r;
  r.level = level;
  for (std::size_t n = 1; n <= level; ++n) {
    const auto counts = kernels::parallel::block_counts(w.digits().data(), w.size(), static_cast<unsigned>(n));
    for (std::size_t c = 0; c < counts.size(); ++c) {
      if (counts[c] != 0) continue;
      ++r.missing_count;
      if (r.missing.size() < kMissingListCap) r.missing.push_back(block_word(c, n));
    }
  }
  r.universal = r.missing_count == 0;
  return r;
}

double BlockFrequencyTable::frequency(std::size_t block) const {
  const auto total = windows();
  return total == 0 ? 0.0 : static_cast<double>(counts[block]) / static_cast<double>(total);
}

Word BlockFrequencyTable::block(std::size_t index) const { return block_word(index, k); }

BlockFrequencyTable block_frequencies(const Word& w, std::size_t k) {
  if (k == 0 || k > w.size()) throw Error(Errc::InvalidArgument, "block length must lie in [1, |w|]");
  if (k > kernels::kDenseBlockCap) {
    throw Error(Errc::InvalidArgument, "block length above " + std::to_string(kernels::kDenseBlockCap));
  }
  BlockFrequencyTable t;
  t.k = k;
  t.length = w.size();
  t.counts = kernels::parallel::block_counts(w.digits().data(), w.size(), static_cast<unsigned>(k));
  return t;
}

NormalityDeviation normality_deviation(const Word& w, std::size_t max_k) {
  if (max_k == 0 || max_k > kernels::kDenseBlockCap || (std::size_t{1} << max_k) > w.size()) {
    throw Error(Errc::InvalidArgument, "max_k must satisfy 1 <= max_k <= log2 |w|");
  }
  NormalityDeviation best;
  best.deviation = -1;
  for (std::size_t k = 1; k <= max_k; ++k) {
    const BlockFrequencyTable t = block_frequencies(w, k);
    const double target = std::ldexp(1.0, -static_cast<int>(k));
    for (std::size_t c = 0; c < t.counts.size(); ++c) {
      const double dev = std::abs(t.frequency(c) - target);
      if (dev > best.deviation) {
        best.deviation = dev;
        best.k = k;
        best.block = t.block(c);
      }
    }
  }
  return best;
}

Word fair_coin_word(std::uint64_t seed, std::size_t n) { return Word(kernels::parallel::fair_coin_digits(seed, n)); }

BernoulliSample sample_bernoulli_expansion(const Beta& beta, std::uint64_t seed, std::size_t n, std::size_t value_digits) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least 1");
  BernoulliSample s;
  s.w = fair_coin_word(seed, n);
  s.value_digits = std::min(n, std::max<std::size_t>(value_digits, 1));
  s.lo = val_beta(s.w.prefix(s.value_digits), beta);
  s.hi = s.lo + stream_truncation_bound(s.value_digits, beta);
  return s;
}

Word random_branch_expansion(const FieldValue& x, std::uint64_t seed, std::size_t n) {
  const FieldValue upper = upper_endpoint(x.base());
  if (decided_sign(x) < 0 || decided_sign(upper - x) < 0) {
    throw Error(Errc::OutOfDomain, "x must lie in [0, 1/(beta-1)]");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x62726eU};
  std::mt19937_64 gen(seq);
  Word out;
  out.reserve(n);
  FieldValue r = x;
  for (std::size_t i = 0; i < n; ++i) {
    FieldValue bx = r.mul_by_beta();
    const bool one = decided_sign(bx - 1) >= 0;
    const bool zero = decided_sign(upper - bx) >= 0;
    const std::uint8_t d = one && zero ? static_cast<std::uint8_t>(gen() >> 63) : (one ? 1 : 0);
    out.push_back(d);
    if (d) bx -= 1;
    r = std::move(bx);
  }
  return out;
}

}  // namespace betaexp
