#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betaexp {

using Integer = mpz_class;
using Rational = mpq_class;

// Coefficients are stored lowest degree first. A trimmed QPoly has no
// trailing zero coefficients; the zero polynomial is the empty vector.
using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

/// Parses an integer-coefficient polynomial in `x`, e.g. "x^2-x-1",
/// "10x-19", "2*x^3 + x - 7". Throws Error(ParseError).
ZPoly parse_polynomial(std::string_view text);

std::string format_polynomial(const ZPoly& p);

/// Parses "3", "-7/4", "1.25", "1e-3" into an exact rational. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

namespace poly {

QPoly to_q(const ZPoly& p);

/// Integer multiple of p with unit content and positive leading coefficient.
ZPoly primitive(const QPoly& p);

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial

QPoly derivative(const QPoly& p);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Monic greatest common divisor (zero polynomial if both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

/// Returns (g, s) with g = gcd(a, m) monic and s*a == g (mod m).
std::pair<QPoly, QPoly> gcd_with_cofactor(const QPoly& a, const QPoly& m);

Rational eval(const QPoly& p, const Rational& x);
int sign_at(const QPoly& p, const Rational& x);

/// Number of distinct real roots in the half-open interval (a, b].
std::size_t sturm_count(const QPoly& p, const Rational& a, const Rational& b);

}  // namespace poly
}  // namespace betaexp
