#include <doctest.h>

#include <random>

#include "betaexp/error.hpp"
#include "betaexp/expansion.hpp"
#include "oracles.hpp"

using namespace betaexp;

TEST_CASE("words and eventually periodic sequences") {
  CHECK(Word::parse("01_10").str() == "0110");
  CHECK(Word::parse("-").empty());
  CHECK_THROWS_AS(Word::parse("012"), Error);
  CHECK(Word::parse("0110").complement().str() == "1001");
  CHECK(Word::parse("0010110").find(Word::parse("11")) == 4);
  CHECK(Word::parse("0010110").find(Word::parse("111")) == Word::npos);
  CHECK(compare_padded(Word::parse("1"), Word::parse("100")) == 0);
  CHECK(length_lex_words(2).size() == 6);
  CHECK(length_lex_words(2)[2].str() == "00");

  const auto s = EventuallyPeriodicSeq::parse("1(0101)");
  CHECK(s.str() == "(10)");
  CHECK(EventuallyPeriodicSeq::parse("110").str() == "11(0)");
  CHECK(EventuallyPeriodicSeq::parse("1(011)").str() == "(101)");
  CHECK(EventuallyPeriodicSeq::parse("0(011)").str() == "0(011)");
  CHECK(s.shift(1).str() == "(01)");
  CHECK(EventuallyPeriodicSeq::parse("11(01)").prefix(7).str() == "1101010");
  CHECK(compare(EventuallyPeriodicSeq::parse("(10)"), EventuallyPeriodicSeq::parse("1(01)")) == 0);
  CHECK(compare(EventuallyPeriodicSeq::parse("(10)"), EventuallyPeriodicSeq::parse("(1001)")) == 1);
  CHECK(compare(Word::parse("101010"), EventuallyPeriodicSeq::parse("(10)")) == -1);
}

TEST_CASE("t_beta") {
  const Beta g = oracle::golden();
  const FieldValue b = FieldValue::generator(g);
  TStep s = t_beta(b - 1);
  CHECK(s.digit == 1);
  CHECK(s.remainder.is_structural_zero());
  s = t_beta(FieldValue::zero(g));
  CHECK(s.digit == 0);
  CHECK(s.remainder.is_structural_zero());
  const Beta d = make_beta("1.5");
  s = t_beta(FieldValue::rational(d, Rational(9, 10)));
  CHECK(s.digit == 1);
  CHECK(s.remainder == FieldValue::rational(d, Rational(7, 20)));
  CHECK_THROWS_AS(t_beta(FieldValue::one(g)), Error);
}

TEST_CASE("greedy and lazy expansions") {
  const Beta g = oracle::golden();
  const FieldValue b = FieldValue::generator(g);
  CHECK(greedy_expansion(FieldValue::one(g), 5).str() == "11000");
  CHECK(greedy_expansion(b, 4).str() == "1111");
  CHECK(greedy_expansion(inverse(b), 4).str() == "1000");
  CHECK(lazy_expansion(inverse(b), 7).str() == "0011111");
  CHECK(lazy_expansion(FieldValue::zero(g), 5).str() == "00000");
  CHECK(lazy_expansion(upper_endpoint(g), 5).str() == "11111");
  CHECK_THROWS_AS(greedy_expansion(b + 1, 3), Error);

  GreedyStream st(inverse(b));
  CHECK(st.next() == 1);
  CHECK(st.remainder().is_structural_zero());
  CHECK(st.error_bound() == stream_truncation_bound(1, g));
}

TEST_CASE("greedy for x >= 1 is the largest expansion") {
  std::mt19937_64 gen(5);
  int literal = 0;
  for (const char* spec : {"poly:x^2-x-1", "poly:x^2-3", "1.3", "poly:x^3-x-1"}) {
    const Beta beta = make_beta(spec);
    const FieldValue upper = upper_endpoint(beta);
    for (int i = 0; i < 25; ++i) {
      // x = 1 + u (U - 1) with u uniform in (0, 1)
      const FieldValue x = FieldValue::one(beta) + oracle::random_unit(gen, beta) * (upper - 1);
      const Word g = greedy_expansion(x, 40);
      CHECK(g == oracle::largest_prefix_greedy(x, 40));
      // The leading-ones rule agrees wherever its rescaled remainder is below 1.
      if (const auto l = oracle::literal_greedy(x, 40)) {
        CHECK(g == *l);
        ++literal;
      }
    }
  }
  CHECK(literal > 10);
  const Beta g = oracle::golden();
  CHECK(oracle::literal_greedy(FieldValue::rational(g, Rational(8, 5)), 10) == std::nullopt);
}

TEST_CASE("expansion properties") {
  std::mt19937_64 gen(9);
  for (const char* spec : {"poly:x^2-x-1", "poly:x^2-3", "1.9", "1.52"}) {
    const Beta beta = make_beta(spec);
    const Word a = quasi_greedy_prefix(beta, 200);
    for (int i = 0; i < 20; ++i) {
      const FieldValue x = oracle::random_unit(gen, beta), y = oracle::random_unit(gen, beta);
      const std::size_t n = 30;
      const Word gx = greedy_expansion(x, n), lx = lazy_expansion(x, n);
      const FieldValue dg = x - val_beta(gx, beta), dl = x - val_beta(lx, beta);
      CHECK(decided_sign(dg) >= 0);
      CHECK(decided_sign(stream_truncation_bound(n, beta) - dg) >= 0);
      CHECK(decided_sign(dl) >= 0);
      CHECK(decided_sign(stream_truncation_bound(n, beta) - dl) >= 0);
      CHECK(is_admissible(gx, beta));
      CHECK(oracle::admissible_naive(gx, a));
      CHECK(lx <= gx);
      const int c = decided_sign(y - x);
      if (c > 0) CHECK(gx <= greedy_expansion(y, n));
      if (c < 0) CHECK(greedy_expansion(y, n) <= gx);
      if (c != 0) CHECK(greedy_expansion(x, 120) != greedy_expansion(y, 120));
    }
  }
}

TEST_CASE("quasi-greedy expansion of 1") {
  const Beta g = oracle::golden();
  const QuasiGreedy q = quasi_greedy_of_one(g, 6);
  CHECK(q.digits.prefix(6).str() == "101010");
  REQUIRE(q.exact);
  CHECK(q.exact->str() == "(10)");
  CHECK(q.status == QuasiGreedyStatus::Periodic);
  REQUIRE(q.finite_greedy);
  CHECK(q.finite_greedy->str() == "11");

  // Tribonacci: greedy of 1 is 111, so (a_i) = (110)^inf.
  const QuasiGreedy t = quasi_greedy_of_one(make_beta("poly:x^3-x^2-x-1"), 9);
  CHECK(t.digits.prefix(9).str() == "110110110");
  // sqrt 3 is not a Parry number: no cycle shows up.
  const QuasiGreedy s3 = quasi_greedy_of_one(make_beta("poly:x^2-3"), 10);
  CHECK(s3.digits.prefix(10).str() == "1100101000");
  CHECK(s3.status == QuasiGreedyStatus::Undetermined);
  CHECK(!s3.exact);
  const QuasiGreedy s3long = quasi_greedy_of_one(make_beta("poly:x^2-3"), 30);
  CHECK(s3long.digits.prefix(30) == oracle::largest_prefix_greedy(FieldValue::one(make_beta("poly:x^2-3")), 30));

  const QuasiGreedy d = quasi_greedy_of_one(make_beta("1.9"), 8);
  CHECK(d.digits[0] == 1);
  CHECK(d.status == QuasiGreedyStatus::Aperiodic);
  CHECK(!d.exact);

  // Near the smallest base with a unique expansion of 1 the digits follow
  // the shifted Thue-Morse sequence.
  const KLConstant kl = komornik_loreti(40);
  const Beta klb = make_beta(kl.decimal, std::nullopt, 256);
  CHECK(quasi_greedy_prefix(klb, 32) == thue_morse(33).substr(1));

  for (const char* spec : {"poly:x^2-x-1", "poly:x^2-3", "1.9", "1.52"}) {
    const Beta beta = make_beta(spec);
    const std::size_t n = 200;
    const FieldValue gap = FieldValue::one(beta) - val_beta(quasi_greedy_prefix(beta, n), beta);
    CHECK(decided_sign(gap) >= 0);
    CHECK(decided_sign(stream_truncation_bound(n, beta) - gap) >= 0);
  }
}

TEST_CASE("admissibility") {
  const Beta g = oracle::golden();
  CHECK(!is_admissible(Word::parse("1101"), g));
  // 101010.0^inf sits strictly below (10)^inf; the infinite word (10)^inf does not.
  CHECK(is_admissible(Word::parse("101010"), g));
  CHECK(!is_admissible(EventuallyPeriodicSeq::parse("(10)"), g));
  CHECK(is_admissible(Word::parse("10100"), g));
  CHECK(is_admissible(EventuallyPeriodicSeq::parse("(100)"), g));
  for (const char* spec : {"poly:x^2-x-1", "poly:x^2-3", "1.9"}) {
    const Beta beta = make_beta(spec);
    CHECK(is_admissible(Word::zeros(9), beta));
    const Word a = quasi_greedy_prefix(beta, 64);
    for (std::size_t n = 1; n <= 10; ++n) {
      for (const Word& w : words_of_length(n)) CHECK(is_admissible(w, beta) == oracle::admissible_naive(w, a));
    }
  }
  // A decimal base scans for the first difference.
  const Beta d = make_beta("1.9");
  CHECK(is_admissible(EventuallyPeriodicSeq::parse("(110)"), d));
  CHECK(!is_admissible(EventuallyPeriodicSeq::parse("(1110)"), d));
  CHECK(!is_admissible(EventuallyPeriodicSeq::parse("(1111)"), d));
}

TEST_CASE("values of words") {
  const Beta g = oracle::golden();
  const FieldValue b = FieldValue::generator(g);
  CHECK(val_beta(Word::parse("011"), g) == inverse(b));
  CHECK(val_beta(Word::parse("0000"), g).is_structural_zero());
  CHECK(val_beta(Word::parse("11"), g) == FieldValue::one(g));
  CHECK(val_beta(EventuallyPeriodicSeq::parse("(10)"), g) == FieldValue::one(g));
  CHECK(val_beta(EventuallyPeriodicSeq::parse("0(1)"), g) == FieldValue::one(g));
  CHECK(stream_truncation_bound(0, g) == upper_endpoint(g));
  CHECK(stream_truncation_bound(1, g) == FieldValue::one(g));
  const Beta h = make_beta("1.5");
  CHECK(stream_truncation_bound(2, h) == FieldValue::rational(h, Rational(8, 9)));
  std::mt19937_64 gen(1);
  for (const char* spec : {"poly:x^3-x-1", "1.9"}) {
    const Beta beta = make_beta(spec);
    for (int i = 0; i < 20; ++i) {
      const Word w = oracle::random_word(gen, 25);
      CHECK(compare(val_beta(w, beta), oracle::direct_value(w, beta)) == Sign::Zero);
    }
  }
}
