#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace betaexp {

/// A finite 0-1 word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> digits);

  /// "0110" -> Word. The empty string and "-" both denote the empty word.
  static Word parse(std::string_view text);
  static Word zeros(std::size_t n) { return Word(std::vector<std::uint8_t>(n, 0)); }
  static Word ones(std::size_t n) { return Word(std::vector<std::uint8_t>(n, 1)); }

  std::size_t size() const noexcept { return d_.size(); }
  bool empty() const noexcept { return d_.empty(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return d_[i]; }
  const std::vector<std::uint8_t>& digits() const noexcept { return d_; }

  void push_back(std::uint8_t digit);
  void pop_back() { d_.pop_back(); }
  void append(const Word& w) { d_.insert(d_.end(), w.d_.begin(), w.d_.end()); }
  void clear() noexcept { d_.clear(); }
  /// Replaces digits pos .. pos+|w|-1 by w (the word must be long enough).
  void overwrite(std::size_t pos, const Word& w);
  void reserve(std::size_t n) { d_.reserve(n); }

  Word prefix(std::size_t n) const;
  Word substr(std::size_t pos, std::size_t len = static_cast<std::size_t>(-1)) const;
  Word complement() const;
  Word operator+(const Word& o) const;

  /// Index of the first occurrence of `pattern` at or after `from`, or npos.
  std::size_t find(const Word& pattern, std::size_t from = 0) const;
  bool contains(const Word& pattern) const { return find(pattern) != npos; }

  std::string str() const;

  /// Plain lexicographic order (a proper prefix sorts first).
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint8_t> d_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Compares a.0^inf with b.0^inf. Returns -1, 0 or +1.
int compare_padded(const Word& a, const Word& b);

/// All words of length 1..max_len in length-lexicographic order
/// (0, 1, 00, 01, 10, 11, 000, ...).
std::vector<Word> length_lex_words(std::size_t max_len);

/// Words of exactly length n in lexicographic order.
std::vector<Word> words_of_length(std::size_t n);

/// pre . per^inf, kept in canonical form (shortest period, then shortest preperiod).
class EventuallyPeriodicSeq {
 public:
  EventuallyPeriodicSeq() : per_(Word::zeros(1)) {}
  EventuallyPeriodicSeq(Word preperiod, Word period);

  /// Parses "11(01)" or "(10)"; a bare word "101" means 101(0).
  static EventuallyPeriodicSeq parse(std::string_view text);
  static EventuallyPeriodicSeq from_word(const Word& w) { return {w, Word::zeros(1)}; }

  const Word& preperiod() const noexcept { return pre_; }
  const Word& period() const noexcept { return per_; }

  std::uint8_t digit(std::size_t i) const noexcept;  // 0-based
  Word prefix(std::size_t n) const;
  EventuallyPeriodicSeq shift(std::size_t k) const;
  EventuallyPeriodicSeq complement() const;

  /// Number of distinct shifts: |pre| + |per|.
  std::size_t orbit_size() const noexcept { return pre_.size() + per_.size(); }
  bool is_finite() const noexcept;  // period is 0

  std::string str() const;

  friend bool operator==(const EventuallyPeriodicSeq&, const EventuallyPeriodicSeq&) = default;

 private:
  void canonicalize();
  Word pre_;
  Word per_;
};

/// Exact lexicographic comparison of two eventually periodic sequences.
int compare(const EventuallyPeriodicSeq& a, const EventuallyPeriodicSeq& b);

/// Compares w.0^inf with s, looking at |w| + |pre| + 2|per| digits.
int compare(const Word& w, const EventuallyPeriodicSeq& s);

}  // namespace betaexp
