#include <doctest.h>

#include <random>
#include <set>

#include "betaexp/branching.hpp"
#include "betaexp/error.hpp"
#include "oracles.hpp"

using namespace betaexp;

namespace {

// The set of length-n prefixes of concatenations of blocks from {100, 011}.
std::vector<Word> block_family(std::size_t n) {
  std::vector<Word> out;
  const std::size_t blocks = (n + 2) / 3;
  for (const Word& choice : words_of_length(blocks)) {
    Word w;
    for (std::size_t i = 0; i < blocks; ++i) w.append(Word::parse(choice[i] ? "011" : "100"));
    out.push_back(w.prefix(n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FieldValue half_beta(const Beta& g) { return FieldValue::generator(g) * FieldValue::rational(g, Rational(1, 2)); }

}  // namespace

TEST_CASE("digit options") {
  const Beta g = oracle::golden();
  const FieldValue b = FieldValue::generator(g);
  const DigitOptions z = digit_options(FieldValue::zero(g));
  CHECK((z.zero && !z.one));
  const DigitOptions u = digit_options(upper_endpoint(g));
  CHECK((!u.zero && u.one));
  CHECK(digit_options(inverse(b)).both());
  CHECK(digit_options(FieldValue::one(g)).both());
  CHECK(!digit_options(FieldValue::rational(g, Rational(3, 5))).both());
  CHECK(!digit_options(FieldValue::rational(g, Rational(101, 100))).both());
  CHECK_THROWS_AS(digit_options(b + 1), Error);
}

TEST_CASE("tree agrees with exhaustive search") {
  const Beta g = oracle::golden();
  const FieldValue b = FieldValue::generator(g);
  std::mt19937_64 gen(13);
  std::vector<FieldValue> xs{inverse(b), half_beta(g), FieldValue::one(g), FieldValue::rational(g, Rational(1, 2))};
  for (int i = 0; i < 4; ++i) xs.push_back(oracle::random_unit(gen, g));
  xs.push_back(oracle::random_unit(gen, make_beta("1.5")));
  xs.push_back(oracle::random_unit(gen, make_beta("poly:x^3-x-1")));
  for (const FieldValue& x : xs) {
    const std::size_t n = 10;
    const BranchTree t = expand_tree(x, n);
    const Beta beta = x.base();
    CHECK(t.leaf_words() == oracle::expansion_prefixes(x, n));
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      const auto& node = t.nodes[i];
      const Word path = t.path_to(i);
      CHECK(val_beta(path, beta) + node.remainder.scaled_by_beta_power(-static_cast<long>(node.depth)) == x);
      if (node.depth < n) {
        const DigitOptions o = digit_options(node.remainder);
        CHECK((node.children[0] != BranchNode::kNone) == o.zero);
        CHECK((node.children[1] != BranchNode::kNone) == o.one);
      }
    }
    const auto leaves = t.leaf_words();
    CHECK(leaves.back() == greedy_expansion(x, n));
    CHECK(leaves.front() == lazy_expansion(x, n));
    CHECK(count_expansions(x, n) == Integer(static_cast<unsigned long>(leaves.size())));
  }
}

TEST_CASE("golden ratio counterexample x = beta/2") {
  const Beta g = oracle::golden();
  const FieldValue x = half_beta(g);
  CHECK(expand_tree(x, 6).leaf_words() == block_family(6));
  CHECK(expand_tree(x, 12).leaf_words() == block_family(12));
  for (std::size_t k = 1; k <= 6; ++k) CHECK(count_expansions(x, 3 * k) == Integer(1UL << k));
  for (const Word& w : expand_tree(x, 12).leaf_words()) CHECK(!w.contains(Word::parse("1010")));
  CHECK(is_full_branching(x, 5, 64));

  const auto paths = branching_compactum_prefix(x, 12);
  std::set<Word> gammas;
  for (const auto& p : paths) {
    CHECK(p.gamma.size() == 4);
    gammas.insert(p.gamma);
  }
  CHECK(gammas.size() == 16);
}

TEST_CASE("x = 1/beta for the golden ratio") {
  const Beta g = oracle::golden();
  const FieldValue x = inverse(FieldValue::generator(g));
  const auto leaves = expand_tree(x, 6).leaf_words();
  for (const char* w : {"100000", "011000", "010110", "010101"}) {
    CHECK(std::find(leaves.begin(), leaves.end(), Word::parse(w)) != leaves.end());
  }
  CHECK(!is_full_branching(x, 3, 64));
  CHECK(is_unique_expansion(x, 100).kind == UniquenessVerdict::Kind::Branches);
  CHECK(is_unique_expansion(x, 100).depth == 0);
  Integer prev = 0;
  for (std::size_t n = 1; n <= 14; ++n) {
    const Integer c = count_expansions(x, n);
    CHECK(c >= prev);
    CHECK(c == Integer(static_cast<unsigned long>(oracle::expansion_prefixes(x, n).size())));
    prev = c;
  }
  // Distinct paths have distinct choice sequences.
  const auto paths = branching_compactum_prefix(x, 10);
  std::set<Word> gammas;
  for (const auto& p : paths) gammas.insert(p.gamma);
  CHECK(gammas.size() == paths.size());
}

TEST_CASE("trivial trees") {
  const Beta g = oracle::golden();
  const BranchTree t = expand_tree(FieldValue::zero(g), 7);
  CHECK(t.leaf_words() == std::vector<Word>{Word::zeros(7)});
  CHECK(t.branch_count() == 0);
  const auto paths = branching_compactum_prefix(FieldValue::zero(g), 5);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].gamma.empty());
  CHECK(paths[0].unique_tail);
  CHECK_THROWS_AS(expand_tree(half_beta(g), 40, {false, 1000}), Error);
  const BranchTree dag = expand_tree(half_beta(g), 39, {true, 1000});
  CHECK(dag.merged);
  CHECK(dag.nodes.size() < 200);
}

TEST_CASE("bases below the golden ratio always branch") {
  std::mt19937_64 gen(17);
  for (const char* spec : {"1.4", "1.5"}) {
    const Beta beta = make_beta(spec);
    for (int i = 0; i < 5; ++i) {
      const FieldValue x = oracle::random_unit(gen, beta);
      CHECK(count_expansions(x, 20) >= 2);
      CHECK(count_branch_nodes(x, 30, 3) >= 3);
      CHECK(is_full_branching(x, 3, 200));
      CHECK(is_unique_expansion(x, 200).kind == UniquenessVerdict::Kind::Branches);
    }
  }
}

TEST_CASE("unique expansions") {
  const Beta g = oracle::golden();
  for (const char* s : {"(10)", "(0)", "(1)", "1(0)", "(110)", "0(01)"}) {
    CHECK(!in_U_beta(EventuallyPeriodicSeq::parse(s), g));
  }
  const Beta b18 = make_beta("poly:5x-9");
  // Search short periodic words in U_beta; each exact value must be certified unique.
  int found = 0;
  for (std::size_t p = 1; p <= 8; ++p) {
    for (const Word& per : words_of_length(p)) {
      const EventuallyPeriodicSeq s(Word(), per);
      if (!in_U_beta(s, b18)) continue;
      ++found;
      const FieldValue x = val_beta(s, b18);
      const UniquenessVerdict v = is_unique_expansion(x, 500);
      CHECK(v.kind == UniquenessVerdict::Kind::UniqueCertified);
      CHECK(v.prefix == s.prefix(v.prefix.size()));
    }
  }
  CHECK(found > 0);
  // (w_2 wbar_2)^inf = (11010010)^inf lies in U_beta above the Komornik-Loreti constant.
  CHECK(in_U_beta(EventuallyPeriodicSeq::parse("(11010010)"), make_beta("1.9")));
  CHECK(!in_U_beta(EventuallyPeriodicSeq::parse("(11010010)"), make_beta("1.7")));
  CHECK(!in_U_beta(EventuallyPeriodicSeq::parse("(0)"), make_beta("1.9")));
  const UniquenessVerdict d = is_unique_expansion(FieldValue::rational(make_beta("1.9"), Rational(1, 3)), 300);
  CHECK(d.kind != UniquenessVerdict::Kind::UniqueCertified);
}

TEST_CASE("Thue-Morse") {
  CHECK(thue_morse(8).str() == "01101001");
  CHECK(thue_morse(16).str() == "0110100110010110");
  CHECK(thue_morse(1).str() == "0");
  CHECK(tm_word(0).str() == "1");
  CHECK(tm_word(1).str() == "11");
  CHECK(tm_word(2).str() == "1101");
  CHECK(tm_word(3).str() == "11010011");
  for (std::size_t n = 0; n < 10; ++n) {
    // w_n+1 = w_n followed by the complement of w_n with its final 0 raised to 1.
    Word tail = tm_word(n).complement();
    REQUIRE(tail[tail.size() - 1] == 0);
    tail.pop_back();
    tail.push_back(1);
    CHECK(tm_word(n + 1) == tm_word(n) + tail);
  }
  CHECK(tm_word(2) != tm_word(1) + tm_word(1).complement());
}

TEST_CASE("Komornik-Loreti constant") {
  const KLConstant c = komornik_loreti(10);
  CHECK(c.decimal == "1.787231650");
  CHECK(c.lo < c.hi);
  CHECK(komornik_loreti(20).lo.get_d() == doctest::Approx(oracle::kl_double()).epsilon(1e-12));
  CHECK(komornik_loreti(3).decimal == "1.79");
  CHECK(komornik_loreti(30).decimal.substr(0, 11) == "1.787231650");
  CHECK_THROWS_AS(komornik_loreti(kKLDigitCap + 1), Error);
}

TEST_CASE("dimension estimate counts") {
  for (const char* spec : {"poly:x^2-x-1", "1.8", "1.95", "poly:x^3-x^2-x-1"}) {
    const Beta beta = make_beta(spec);
    for (std::size_t n = 1; n <= 12; ++n) {
      CHECK(estimate_unique_dim(beta, n).count == Integer(static_cast<unsigned long>(oracle::unique_language_count(beta, n))));
    }
  }
  const DimEstimate low = estimate_unique_dim(make_beta("1.7"), 24);
  CHECK(low.estimate < 0.3);
  const DimEstimate e20 = estimate_unique_dim(make_beta("1.95"), 20);
  CHECK(e20.estimate > 0);
  CHECK(e20.estimate < 1);
  CHECK_THROWS_AS(estimate_unique_dim(make_beta("1.95"), 5000), Error);
}
