#include <doctest.h>

#include <random>

#include "betaexp/error.hpp"
#include "betaexp/numeric.hpp"
#include "oracles.hpp"

using namespace betaexp;

namespace {

FieldValue random_value(std::mt19937_64& gen, const Beta& beta) {
  std::vector<Rational> c;
  for (int i = 0; i < beta.degree(); ++i) {
    c.emplace_back(static_cast<long>(gen() % 41) - 20, static_cast<long>(gen() % 9) + 1);
  }
  return FieldValue::from_coefficients(beta, c);
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("polynomial parsing and formatting") {
  const ZPoly p = parse_polynomial("x^2-x-1");
  REQUIRE(p.size() == 3);
  CHECK(p[0] == -1);
  CHECK(p[1] == -1);
  CHECK(p[2] == 1);
  CHECK(format_polynomial(p) == "x^2-x-1");
  CHECK(parse_polynomial("3x^3 + 2") == ZPoly{2, 0, 0, 3});
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-7/4") == Rational(-7, 4));
  CHECK(code_of([] { parse_polynomial("x^^2"); }) == Errc::ParseError);
}

TEST_CASE("make_beta") {
  const Beta g = oracle::golden();
  CHECK(g.kind() == BetaKind::Algebraic);
  CHECK(g.approx() == doctest::Approx(1.6180339887).epsilon(1e-10));
  const Beta d = make_beta("dec:1.9");
  CHECK(d.kind() == BetaKind::Decimal);
  CHECK(d.precision_bits() == 128);
  CHECK(*d.rational_value() == Rational(19, 10));
  const Beta s3 = make_beta("poly:x^2-3");
  CHECK(s3.approx() == doctest::Approx(1.7320508076));
  CHECK(make_beta("poly:x^3-x-1").approx() == doctest::Approx(1.3247179572));

  CHECK(code_of([] { make_beta("poly:x^2+1"); }) == Errc::NoRootInInterval);
  CHECK(code_of([] { make_beta("2.5"); }) == Errc::RootOutsideUnitRange);
  CHECK(code_of([] { make_beta("poly:x-3@1,4"); }) == Errc::RootOutsideUnitRange);
  CHECK(code_of([] { make_beta("poly:x^2-x-1", std::pair<Rational, Rational>{2, 3}); }) == Errc::RootOutsideUnitRange);
  CHECK(code_of([] { make_beta("poly:x^2-x-1", std::pair<Rational, Rational>{1, Rational(3, 2)}); }) == Errc::NoRootInInterval);
  CHECK(code_of([] { make_decimal_beta("1.5", 32); }) == Errc::InvalidArgument);
  CHECK(code_of([] { make_beta("1.x"); }) == Errc::ParseError);
}

TEST_CASE("golden ratio arithmetic") {
  const Beta g = oracle::golden();
  const FieldValue b = FieldValue::generator(g);
  const FieldValue bb = b * b;
  REQUIRE(bb.coefficients().size() == 2);
  CHECK(bb.coefficients()[0] == 1);
  CHECK(bb.coefficients()[1] == 1);
  CHECK((b - 1) * b == FieldValue::one(g));
  CHECK(fv_arith(b, b, ArithOp::Mul) == b + 1);
  CHECK(fv_arith(b, b, ArithOp::MulByBeta) == b + 1);
  CHECK(fv_arith(b, b, ArithOp::DivByBeta) == FieldValue::one(g));
  CHECK(inverse(b) == b - 1);
  CHECK(fv_sign(bb - b - 1) == Sign::Zero);
  CHECK(fv_sign(inverse(b) - FieldValue::rational(g, Rational(3, 5))) == Sign::Positive);
  CHECK(code_of([&] { inverse(FieldValue::zero(g)); }) == Errc::DivisionByZero);
}

TEST_CASE("operands from different bases") {
  const Beta g1 = oracle::golden(), g2 = oracle::golden();
  CHECK(code_of([&] { (void)(FieldValue::one(g1) + FieldValue::one(g2)); }) == Errc::MixedBase);
}

TEST_CASE("decimal base") {
  const Beta d = make_beta("1.9");
  const FieldValue q = FieldValue::one(d).div_by_beta();
  const Enclosure e = enclose(q, 128);
  CHECK(e.lo <= Rational(10, 19));
  CHECK(e.hi >= Rational(10, 19));
  CHECK(fv_to_decimal(q, 7) == "0.5263158");

  Rational eps = 1;
  eps /= Rational(Integer(1) << 200);
  const FieldValue ball = FieldValue::ball(d, 0, eps);
  CHECK(fv_sign(ball) == Sign::Undecided);
  CHECK(code_of([&] { decided_sign(ball); }) == Errc::Undecided);
  CHECK(code_of([&] { FieldValue::ball(oracle::golden(), 0, 1); }) == Errc::BackendUnsupported);
}

TEST_CASE("decimal rendering") {
  const Beta g = oracle::golden();
  const FieldValue b = FieldValue::generator(g);
  CHECK(fv_to_decimal(b, 7) == "1.6180340");
  CHECK(fv_to_decimal(FieldValue::one(g), 3) == "1.000");
  CHECK(fv_to_decimal(b - 1, 7) == "0.6180340");
  CHECK(fv_to_decimal(-b, 3) == "-1.618");
  CHECK(rational_to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(fv_floor(b) == 1);
  CHECK(fv_floor(b * b * b) == 4);
  CHECK(to_double(b) == doctest::Approx(1.618033988749895));
}

TEST_CASE("reducible polynomial") {
  // (x^2 - x - 1)(x - 3) still isolates the golden ratio in (1, 2).
  const Beta g = make_beta("poly:x^3-4x^2+2x+3");
  const FieldValue b = FieldValue::generator(g);
  CHECK(g.approx() == doctest::Approx(1.6180339887));
  CHECK(fv_sign(b * b - b - 1) == Sign::Zero);
  CHECK(compare(inverse(b), b - 1) == Sign::Zero);
  CHECK(fv_sign(b * b - 2) == Sign::Positive);
}

TEST_CASE("ring laws hold structurally") {
  std::mt19937_64 gen(7);
  for (const char* spec : {"poly:x^2-x-1", "poly:x^2-3", "poly:x^3-x-1", "poly:x^4-x^3-x^2-x-1@1.5,2"}) {
    const Beta beta = make_beta(spec);
    for (int i = 0; i < 30; ++i) {
      const FieldValue a = random_value(gen, beta), b = random_value(gen, beta), c = random_value(gen, beta);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a.mul_by_beta().div_by_beta() == a);
      CHECK(a.scaled_by_beta_power(3) == a * FieldValue::generator(beta) * FieldValue::generator(beta) *
                                             FieldValue::generator(beta));
      if (!a.is_structural_zero()) CHECK(a * inverse(a) == FieldValue::one(beta));
    }
    // The minimal polynomial vanishes at beta.
    FieldValue acc = FieldValue::zero(beta);
    const ZPoly& p = beta.minpoly();
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * FieldValue::generator(beta) + FieldValue::rational(beta, p[k]);
    CHECK(acc.is_structural_zero());
  }
}

TEST_CASE("sign agrees with decimal rendering and enclosures") {
  std::mt19937_64 gen(11);
  const Beta beta = make_beta("poly:x^3-x-1");
  for (int i = 0; i < 100; ++i) {
    const FieldValue a = random_value(gen, beta);
    const Sign s = fv_sign(a);
    const Enclosure e = enclose(a, 256);
    if (s == Sign::Positive) CHECK(e.hi > 0);
    if (s == Sign::Negative) CHECK(e.lo < 0);
    if (s == Sign::Positive) CHECK(fv_to_decimal(a, 30)[0] != '-');
    if (s == Sign::Negative) CHECK(fv_to_decimal(a, 30)[0] == '-');
    CHECK(e.lo <= e.hi);
  }
}

TEST_CASE("algebraic and decimal backends agree on a rational base") {
  const Beta alg = make_beta("poly:2x-3");
  const Beta dec = make_beta("1.5");
  CHECK(alg.kind() == BetaKind::Algebraic);
  std::mt19937_64 gen(3);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k < 4; ++k) c.emplace_back(static_cast<long>(gen() % 21) - 10, static_cast<long>(gen() % 5) + 1);
    FieldValue a = FieldValue::zero(alg), d = FieldValue::zero(dec);
    for (std::size_t k = c.size(); k-- > 0;) {
      a = a.mul_by_beta() + FieldValue::rational(alg, c[k]);
      d = d.mul_by_beta() + FieldValue::rational(dec, c[k]);
    }
    const Sign sd = fv_sign(d);
    if (sd != Sign::Undecided) CHECK(fv_sign(a) == sd);
  }
}
