#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "betaexp/numeric.hpp"
#include "betaexp/word.hpp"

namespace betaexp {

/// beta as a field element.
FieldValue beta_of(const Beta& beta);
/// 1/(beta - 1), the right end of the expansion interval.
FieldValue upper_endpoint(const Beta& beta);

struct TStep {
  std::uint8_t digit;
  FieldValue remainder;
};

/// One step of T(x) = beta x mod 1. Requires 0 <= x < 1 (OutOfDomain otherwise).
TStep t_beta(const FieldValue& x);

/// Pull-based digit generator over the remainder orbit of x.
/// After k digits, x = val(emitted) + beta^-k * remainder().
class DigitStream {
 public:
  virtual ~DigitStream() = default;

  std::uint8_t next();
  Word take(std::size_t n);
  std::size_t position() const noexcept { return pos_; }
  FieldValue remainder() const;
  /// beta^-n / (beta - 1): bound on the value of every tail after n digits.
  FieldValue error_bound() const;
  const Beta& beta() const noexcept { return beta_; }

 protected:
  DigitStream(const FieldValue& x, bool lazy);

 private:
  std::uint8_t step_rational();
  std::uint8_t step_field();

  Beta beta_;
  bool lazy_;
  std::size_t pos_ = 0;
  // Rational bases p/q keep the remainder as num/den without normalising.
  bool rational_ = false;
  Integer p_, q_, num_, den_;
  FieldValue r_;
  FieldValue upper_;
};

/// Greedy digits. For x >= 1 the leading run of ones is taken first:
/// l = min{k >= 1 : x - beta^-1 - ... - beta^-k in (0,1)}, then greedy on the rest.
class GreedyStream : public DigitStream {
 public:
  explicit GreedyStream(const FieldValue& x) : DigitStream(x, false) {}
};

/// Lazy digits: 0 whenever the tail can still absorb the remainder.
class LazyStream : public DigitStream {
 public:
  explicit LazyStream(const FieldValue& x) : DigitStream(x, true) {}
};

/// First n greedy digits; x in [0, 1/(beta-1)].
Word greedy_expansion(const FieldValue& x, std::size_t n);
/// First n lazy digits; x in [0, 1/(beta-1)].
Word lazy_expansion(const FieldValue& x, std::size_t n);

enum class QuasiGreedyStatus {
  Periodic,      // exact eventually periodic form known
  Aperiodic,     // certified infinite and not eventually periodic (rational beta)
  Undetermined,  // no cycle or termination within the scanned horizon
};

struct QuasiGreedy {
  Word digits;
  std::optional<EventuallyPeriodicSeq> exact;
  QuasiGreedyStatus status = QuasiGreedyStatus::Undetermined;
  /// Greedy expansion of 1 when it terminates (its length is the k of the periodic fix).
  std::optional<Word> finite_greedy;
};

/// Default number of greedy digits of 1 scanned for a cycle.
inline constexpr std::size_t kQuasiGreedyHorizon = 512;

/// The quasi-greedy expansion (a_i) of 1. Results are memoised per base.
QuasiGreedy quasi_greedy_of_one(const Beta& beta, std::size_t n, std::size_t horizon = kQuasiGreedyHorizon);

/// First n digits of (a_i) (no status, extends the memo as needed).
Word quasi_greedy_prefix(const Beta& beta, std::size_t n);

/// w.0^inf has every shift strictly below (a_i).
bool is_admissible(const Word& w, const Beta& beta);
/// Every shift of s is strictly below (a_i). Throws UndeterminedWithinHorizon when
/// (a_i) has no exact form and no difference shows up within the horizon.
bool is_admissible(const EventuallyPeriodicSeq& s, const Beta& beta, std::size_t horizon = 1 << 14);

/// sum w_k beta^-k, exact.
FieldValue val_beta(const Word& w, const Beta& beta);
/// Exact value of an eventually periodic sequence.
FieldValue val_beta(const EventuallyPeriodicSeq& s, const Beta& beta);

/// beta^-n / (beta - 1).
FieldValue stream_truncation_bound(std::size_t n, const Beta& beta);

/// First out_len digits of the largest admissible continuation of v, chosen digit by
/// digit (1 whenever the word stays admissible). Throws NotAdmissible.
Word max_admissible_extension(const Word& v, const Beta& beta, std::size_t out_len);

/// Value of the supremum of admissible sequences beginning with v: with v = u.a_1..a_k
/// for the longest such suffix, this is val(u) + beta^-|u|.
FieldValue max_extension_value(const Word& v, const Beta& beta);

}  // namespace betaexp
