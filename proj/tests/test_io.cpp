#include <doctest.h>

#include "betaexp/error.hpp"
#include "betaexp/expr.hpp"
#include "betaexp/io.hpp"
#include "oracles.hpp"

using namespace betaexp;

TEST_CASE("expressions in beta") {
  const Beta g = oracle::golden();
  const FieldValue b = FieldValue::generator(g);
  CHECK(evaluate_expression("1/(2*beta)", g) * b * FieldValue::rational(g, 2) == FieldValue::one(g));
  CHECK(evaluate_expression("beta^2 - beta - 1", g).is_structural_zero());
  CHECK(evaluate_expression("b^-1", g) == b - 1);
  CHECK(evaluate_expression("-(1.5 + beta) * 2", g) == FieldValue::rational(g, -3) - b - b);
  CHECK(evaluate_expression(" 3/4 ", g) == FieldValue::rational(g, Rational(3, 4)));
  for (const char* bad : {"", "1+", "(beta", "beta^x", "gamma", "1 2", "beta^1234567"}) {
    try {
      evaluate_expression(bad, g);
      FAIL("accepted '" << bad << "'");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
  try {
    evaluate_expression("1/(beta^2-beta-1)", g);
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
}

TEST_CASE("serialization") {
  const Beta g = oracle::golden();
  const FieldValue x = inverse(FieldValue::generator(g));
  const BranchTree t = expand_tree(x, 4);
  const io::json j = io::to_json(t);
  CHECK(j["nodes"].size() == t.nodes.size());
  CHECK(j["edges"].size() == t.edges.size());
  CHECK(j["leaves"].size() == t.leaves().size());
  CHECK(j["nodes"][0]["branch"] == true);
  const std::string dot = io::to_dot(t);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("doublecircle") != std::string::npos);

  const io::json v = io::to_json(FieldValue::generator(g), 7);
  CHECK(v["decimal"] == "1.6180340");
  CHECK(v["coefficients"][1] == "1");

  const BlockFrequencyTable b = block_frequencies(Word::parse("010101"), 2);
  CHECK(io::to_csv(b) == "block,count,freq\n00,0,0\n01,3,0.6\n10,2,0.4\n11,0,0\n");
  CHECK(io::to_json(b)["windows"] == 5);
  const ComplexityProfile p = complexity(Word::parse("0110"), 2);
  CHECK(io::to_csv(p) == "n,count\n1,2\n2,3\n");
}
