#include "betaexp/word.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "betaexp/error.hpp"

namespace betaexp {

Word::Word(std::vector<std::uint8_t> digits) : d_(std::move(digits)) {
  for (auto d : d_) {
    if (d > 1) throw Error(Errc::InvalidArgument, "digit outside {0,1}");
  }
}

Word Word::parse(std::string_view text) {
  if (text == "-") return {};
  std::vector<std::uint8_t> d;
  d.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      d.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != '_' && c != ' ') {
      throw Error(Errc::ParseError, "invalid character '" + std::string(1, c) + "' in word");
    }
  }
  Word w;
  w.d_ = std::move(d);
  return w;
}

void Word::push_back(std::uint8_t digit) {
  if (digit > 1) throw Error(Errc::InvalidArgument, "digit outside {0,1}");
  d_.push_back(digit);
}

void Word::overwrite(std::size_t pos, const Word& w) {
  if (pos + w.size() > d_.size()) throw Error(Errc::InvalidArgument, "overwrite past the end of the word");
  std::copy(w.d_.begin(), w.d_.end(), d_.begin() + static_cast<long>(pos));
}

Word Word::prefix(std::size_t n) const { return substr(0, n); }

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word w;
  if (pos >= d_.size()) return w;
  const std::size_t end = len > d_.size() - pos ? d_.size() : pos + len;
  w.d_.assign(d_.begin() + static_cast<long>(pos), d_.begin() + static_cast<long>(end));
  return w;
}

Word Word::complement() const {
  Word w = *this;
  for (auto& d : w.d_) d ^= 1;
  return w;
}

Word Word::operator+(const Word& o) const {
  Word w = *this;
  w.append(o);
  return w;
}

std::size_t Word::find(const Word& pattern, std::size_t from) const {
  if (from > d_.size()) return npos;
  auto it = std::search(d_.begin() + static_cast<long>(from), d_.end(), pattern.d_.begin(), pattern.d_.end());
  return it == d_.end() && !pattern.empty() ? npos : static_cast<std::size_t>(it - d_.begin());
}

std::string Word::str() const {
  std::string s(d_.size(), '0');
  for (std::size_t i = 0; i < d_.size(); ++i) s[i] = static_cast<char>('0' + d_[i]);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL ^ w.size();
  for (auto d : w.digits()) h = (h ^ d) * 1099511628211ULL;
  return h;
}

int compare_padded(const Word& a, const Word& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int x = i < a.size() ? a[i] : 0;
    const int y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

std::vector<Word> words_of_length(std::size_t n) {
  if (n >= 8 * sizeof(std::size_t) - 1) throw Error(Errc::LengthCapExceeded, "word length too large to enumerate");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    std::vector<std::uint8_t> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<std::uint8_t>((code >> (n - 1 - i)) & 1U);
    out.emplace_back(std::move(d));
  }
  return out;
}

std::vector<Word> length_lex_words(std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    auto layer = words_of_length(n);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------

EventuallyPeriodicSeq::EventuallyPeriodicSeq(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw Error(Errc::InvalidArgument, "empty period");
  canonicalize();
}

EventuallyPeriodicSeq EventuallyPeriodicSeq::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) return from_word(Word::parse(text));
  const auto close = text.find(')', open);
  if (close == std::string_view::npos || close + 1 != text.size()) {
    throw Error(Errc::ParseError, "expected 'pre(period)' but got '" + std::string(text) + "'");
  }
  return {Word::parse(text.substr(0, open)), Word::parse(text.substr(open + 1, close - open - 1))};
}

void EventuallyPeriodicSeq::canonicalize() {
  const std::size_t n = per_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = per_[i] == per_[i - p];
    if (ok) {
      per_ = per_.prefix(p);
      break;
    }
  }
  // Absorb the end of the preperiod into the period.
  while (!pre_.empty() && pre_[pre_.size() - 1] == per_[per_.size() - 1]) {
    Word rotated;
    rotated.push_back(per_[per_.size() - 1]);
    rotated.append(per_.prefix(per_.size() - 1));
    per_ = std::move(rotated);
    pre_.pop_back();
  }
}

std::uint8_t EventuallyPeriodicSeq::digit(std::size_t i) const noexcept {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

Word EventuallyPeriodicSeq::prefix(std::size_t n) const {
  std::vector<std::uint8_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = digit(i);
  return Word(std::move(d));
}

EventuallyPeriodicSeq EventuallyPeriodicSeq::shift(std::size_t k) const {
  if (k <= pre_.size()) return {pre_.substr(k), per_};
  const std::size_t r = (k - pre_.size()) % per_.size();
  return {Word(), per_.substr(r) + per_.prefix(r)};
}

EventuallyPeriodicSeq EventuallyPeriodicSeq::complement() const { return {pre_.complement(), per_.complement()}; }

bool EventuallyPeriodicSeq::is_finite() const noexcept { return per_.size() == 1 && per_[0] == 0; }

std::string EventuallyPeriodicSeq::str() const { return pre_.str() + "(" + per_.str() + ")"; }

int compare(const EventuallyPeriodicSeq& a, const EventuallyPeriodicSeq& b) {
  const std::size_t n = std::max(a.preperiod().size(), b.preperiod().size()) +
                        std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < n; ++i) {
    const int x = a.digit(i), y = b.digit(i);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

int compare(const Word& w, const EventuallyPeriodicSeq& s) {
  const std::size_t n = std::max(w.size(), s.preperiod().size()) + 2 * s.period().size();
  for (std::size_t i = 0; i < n; ++i) {
    const int x = i < w.size() ? w[i] : 0;
    const int y = s.digit(i);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

}  // namespace betaexp
