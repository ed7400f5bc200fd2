#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "betaexp/expansion.hpp"

namespace betaexp {

struct NormalizeResult {
  Word digits;
  /// The greedy expansion of val(w) ends within the returned digits.
  bool finite = false;
  /// Length up to the last nonzero digit when finite.
  std::size_t finite_length = 0;
};

/// First out_len digits of the greedy expansion of val(w). Throws ValueExceedsOne.
NormalizeResult normalize(const Word& w, const Beta& beta, std::size_t out_len);
inline NormalizeResult normalize(const Word& w, const Beta& beta) { return normalize(w, beta, w.size()); }

/// Admissible word v slightly above w, with a = val(v) - val(w) and
/// b = sup{val(s) : s admissible, s starts with v} - val(w).
struct CoverWord {
  Word w;
  Word v;
  FieldValue a;
  FieldValue b;
  std::size_t n = 0;  // |v| - |w|
};

inline constexpr std::size_t kDefaultScanHorizon = 10000;

/// Throws ValueExceedsOne, HorizonExhausted.
CoverWord find_cover_word(const Word& w, const Beta& beta, std::size_t horizon = kDefaultScanHorizon);

struct SpliceResult {
  std::size_t j = 0;    // v occupies greedy digits j+1 .. j+|v|
  Word spliced_prefix;  // first j greedy digits followed by w
  FieldValue y;         // value of the tail after the spliced prefix
  FieldValue y_lo;      // beta^|w| a
  FieldValue y_hi;      // beta^|w| b
  bool in_interval = false;  // y_lo < y < y_hi
};

/// Finds the first occurrence (at or after `start`) of the cover word of w in the
/// greedy expansion of x and replaces it by w, solving
/// val(v) + beta^-|v| T^(j+|v|) x = val(w) + beta^-|w| y for y.
/// Throws OccurrenceNotFound.
SpliceResult anti_normalize_step(const FieldValue& x, const CoverWord& cover, std::size_t start = 0,
                                 std::size_t horizon = kDefaultScanHorizon);
SpliceResult anti_normalize_step(const FieldValue& x, const Word& w, std::size_t start = 0,
                                 std::size_t horizon = kDefaultScanHorizon);

struct UniversalRecord {
  Word target;
  Word embedded;  // target, prefixed by zeros when its value is at least 1
  std::size_t splice_position = 0;
  std::size_t prefix_length_after = 0;
  FieldValue y;
  FieldValue y_lo;
  FieldValue y_hi;
};

enum class UniversalStatus { Complete, BudgetExhausted, OccurrenceNotFound };

struct UniversalResult {
  Word output;
  FieldValue remainder;  // x = val(output) + beta^-|output| remainder
  std::vector<UniversalRecord> report;
  UniversalStatus status = UniversalStatus::Complete;
  std::optional<Word> failed_target;
};

struct UniversalOptions {
  std::size_t horizon = kDefaultScanHorizon;  // scan-ahead per target word
  std::size_t rounds = 1;                     // passes over the dictionary
};

/// Embeds every word of length <= max_word_len into an expansion of x, within
/// max_digits digits. x in (0, 1/(beta-1)).
UniversalResult universal_expansion(const FieldValue& x, std::size_t max_word_len, std::size_t max_digits,
                                    const UniversalOptions& opts = {});

/// Words of the same length and value as w. Algebraic bases only.
/// Throws BackendUnsupported, LengthCapExceeded.
std::vector<Word> enumerate_equivalent_words(const Word& w, const Beta& beta, std::size_t cap = 24);

struct FinitaryResult {
  Word output;
  FieldValue remainder;
  std::vector<UniversalRecord> report;
  UniversalStatus status = UniversalStatus::Complete;
  std::optional<Word> failed_target;
};

/// Substitutes each target word in place of an equivalent admissible word in the
/// greedy expansion of x, keeping occurrences at least max_word_len apart.
/// Throws NotFinitary, BackendUnsupported.
FinitaryResult finitary_universalize(const FieldValue& x, std::size_t max_word_len, std::size_t max_digits);

std::string to_string(UniversalStatus s);

}  // namespace betaexp
