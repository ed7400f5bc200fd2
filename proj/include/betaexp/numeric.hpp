#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betaexp/polynomial.hpp"

namespace betaexp {

enum class BetaKind { Algebraic, Decimal };

/// Outcome of a sign query. Undecided only arises for Decimal values that
/// carry a non-zero enclosure radius straddling zero.
enum class Sign { Negative = -1, Zero = 0, Positive = 1, Undecided = 2 };

std::string_view to_string(Sign s) noexcept;

/// Rigorous rational enclosure lo <= value <= hi.
struct Enclosure {
  Rational lo;
  Rational hi;
};

namespace detail {
struct BetaData;
struct ParryCache;  // quasi-greedy expansion of 1, owned by the expansion module
struct ParrySlot {
  std::mutex mu;
  std::shared_ptr<ParryCache> cache;
};
}

/// Default cap (bits) for Decimal working precision. Overridden by the
/// BETAEXP_PRECISION_CAP environment variable.
unsigned default_precision_cap();

/// The base parameter, strictly inside (1, 2).
///
/// Algebraic: a square-free integer polynomial with exactly one root in an
/// isolating rational interval. Decimal: a decimal literal, read as the exact
/// rational it denotes, with a working precision used for rendering and for
/// rounding enclosure radii.
///
/// Both kinds share one exact representation: values live in Q[x]/(p) where p
/// is the minimal polynomial (degree 1 for Decimal). Beta is a cheap handle;
/// copies refer to the same base and compare equal.
class Beta {
 public:
  BetaKind kind() const noexcept;
  int degree() const noexcept;
  const ZPoly& minpoly() const noexcept;
  Enclosure root_interval() const;
  unsigned precision_bits() const noexcept;
  const std::string& description() const noexcept;

  /// Exact value when the base is rational (always the case for Decimal).
  std::optional<Rational> rational_value() const;

  /// Rigorous enclosure of width at most 2^-bits (refined and cached on demand).
  Enclosure enclosure(unsigned bits) const;
  double approx() const noexcept;

  friend bool operator==(const Beta& a, const Beta& b) noexcept { return a.data_ == b.data_; }

  /// Memo slot for per-base derived data (thread-safe through its mutex).
  detail::ParrySlot& parry_slot() const noexcept;

 private:
  friend class FieldValue;
  friend Beta make_algebraic_beta(const ZPoly&, const Rational&, const Rational&, unsigned);
  friend Beta make_decimal_beta(std::string_view, unsigned);
  explicit Beta(std::shared_ptr<const detail::BetaData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::BetaData> data_;
};

/// Throws NoRootInInterval, RootOutsideUnitRange.
Beta make_algebraic_beta(const ZPoly& poly, const Rational& lo = 1, const Rational& hi = 2,
                         unsigned precision_bits = 128);

/// Throws ParseError, RootOutsideUnitRange, InvalidArgument (precision < 64).
Beta make_decimal_beta(std::string_view literal, unsigned precision_bits = 128);

/// Parses "poly:<polynomial>" (optionally "poly:<polynomial>@<lo>,<hi>"),
/// "dec:<literal>" or a bare decimal literal.
Beta make_beta(std::string_view spec, std::optional<std::pair<Rational, Rational>> interval = std::nullopt,
               unsigned precision_bits = 128);

/// An element of Q(beta): c_0 + c_1 beta + ... + c_{d-1} beta^{d-1}, reduced
/// modulo the minimal polynomial. Decimal bases additionally allow a rational
/// radius, turning the value into a ball [center - r, center + r].
class FieldValue {
 public:
  FieldValue() = default;  // detached; only assignable

  static FieldValue rational(const Beta& base, const Rational& q);
  static FieldValue zero(const Beta& base) { return rational(base, 0); }
  static FieldValue one(const Beta& base) { return rational(base, 1); }
  static FieldValue generator(const Beta& base);  // beta itself
  static FieldValue from_coefficients(const Beta& base, std::vector<Rational> coeffs);
  /// Decimal only: the ball center +- radius. Throws BackendUnsupported otherwise.
  static FieldValue ball(const Beta& base, const Rational& center, const Rational& radius);

  bool attached() const noexcept { return base_ != nullptr; }
  Beta base() const;
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  const Rational& radius() const noexcept { return radius_; }
  bool is_exact() const noexcept { return radius_ == 0; }
  bool is_structural_zero() const;
  const detail::BetaData& base_data() const;

  FieldValue& operator+=(const FieldValue& o);
  FieldValue& operator-=(const FieldValue& o);
  FieldValue& operator*=(const FieldValue& o);
  FieldValue& operator+=(long n);
  FieldValue& operator-=(long n);

  FieldValue mul_by_beta() const;
  FieldValue div_by_beta() const;
  /// Multiplies by beta^k (k may be negative).
  FieldValue scaled_by_beta_power(long k) const;

  friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
  friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
  friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
  friend FieldValue operator+(FieldValue a, long n) { return a += n; }
  friend FieldValue operator-(FieldValue a, long n) { return a -= n; }
  FieldValue operator-() const;

  /// Structural equality: same base, same reduced coefficients and radius.
  friend bool operator==(const FieldValue& a, const FieldValue& b);

  std::size_t hash() const noexcept;

 private:
  void check_same_base(const FieldValue& o) const;
  std::shared_ptr<const detail::BetaData> base_;
  std::vector<Rational> coeffs_;
  Rational radius_ = 0;
};

struct FieldValueHash {
  std::size_t operator()(const FieldValue& v) const noexcept { return v.hash(); }
};

enum class ArithOp { Add, Sub, Mul, MulByBeta, DivByBeta };

/// Binary dispatch over ArithOp. For MulByBeta/DivByBeta the second operand is ignored.
FieldValue fv_arith(const FieldValue& a, const FieldValue& b, ArithOp op);

/// Throws DivisionByZero (or Undecided for a Decimal ball containing zero).
FieldValue inverse(const FieldValue& a);
FieldValue divide(const FieldValue& a, const FieldValue& b);

Sign fv_sign(const FieldValue& a);
/// Sign of a - b.
Sign compare(const FieldValue& a, const FieldValue& b);
/// fv_sign but throws Error(Undecided) instead of returning Sign::Undecided.
int decided_sign(const FieldValue& a);

Enclosure enclose(const FieldValue& a, unsigned bits = 64);
double to_double(const FieldValue& a);

/// Decimal rendering with `digits` places after the point. Correctly rounded
/// (half away from zero) for exact values; for a ball, the rounded center.
std::string fv_to_decimal(const FieldValue& a, unsigned digits);

/// Rendering of the ball radius ("0" for exact values).
std::string width_report(const FieldValue& a, unsigned digits = 6);

/// Exact decimal rendering of a rational, correctly rounded.
std::string rational_to_decimal(const Rational& q, unsigned digits);

/// floor(a) for an exact value.
Integer fv_floor(const FieldValue& a);

}  // namespace betaexp
