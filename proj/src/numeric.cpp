#include "betaexp/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "betaexp/error.hpp"

namespace betaexp {

namespace detail {

// beta in [lo/den, hi/den] with (hi - lo) * 2^bits <= den.
struct IntEnclosure {
  Integer lo, hi, den;
  unsigned bits = 0;
};

struct BetaData {
  BetaKind kind = BetaKind::Algebraic;
  ZPoly minpoly;
  std::vector<Rational> monic;     // minpoly / leading coefficient, size d + 1
  std::vector<Rational> inv_beta;  // coefficients of 1/beta, size d
  Rational lo, hi;                 // isolating interval (a sign-changing bracket)
  std::optional<Rational> exact;   // set when beta is rational (degree 1)
  int lo_sign = 0;                 // sign of the minpoly at lo
  unsigned precision_bits = 128;
  std::string description;
  double approx = 0;

  mutable std::mutex enc_mu;
  mutable std::vector<std::shared_ptr<const IntEnclosure>> levels;
  mutable ParrySlot parry;

  int degree() const { return static_cast<int>(minpoly.size()) - 1; }
  std::shared_ptr<const IntEnclosure> level(unsigned bits) const;
};

namespace {

int sign_of_minpoly_at(const ZPoly& p, const Integer& num, const Integer& den) {
  // sign of sum p_i num^i den^(d-i)
  const std::size_t d = p.size() - 1;
  Integer acc = p[d];
  Integer den_pow = 1;
  for (std::size_t k = d; k-- > 0;) {
    den_pow *= den;
    acc = acc * num + p[k] * den_pow;
  }
  return sgn(acc);
}

}  // namespace

std::shared_ptr<const IntEnclosure> BetaData::level(unsigned bits) const {
  unsigned target = 64;
  while (target < bits) target *= 2;
  std::lock_guard<std::mutex> lock(enc_mu);
  for (const auto& l : levels) {
    if (l->bits >= target) return l;
  }
  IntEnclosure e;
  if (levels.empty()) {
    Integer den;
    mpz_lcm(den.get_mpz_t(), lo.get_den_mpz_t(), hi.get_den_mpz_t());
    e.den = den;
    e.lo = lo.get_num() * (den / lo.get_den());
    e.hi = hi.get_num() * (den / hi.get_den());
  } else {
    e = *levels.back();
  }
  if (exact) {
    e.den = exact->get_den();
    e.lo = e.hi = exact->get_num();
  } else {
    // Bisection on the sign-changing bracket.
    while (true) {
      Integer width = e.hi - e.lo;
      Integer scaled = width;
      mpz_mul_2exp(scaled.get_mpz_t(), width.get_mpz_t(), target);
      if (scaled <= e.den) break;
      e.den *= 2;
      e.lo *= 2;
      e.hi *= 2;
      Integer mid = (e.lo + e.hi) / 2;
      int s = sign_of_minpoly_at(minpoly, mid, e.den);
      if (s == 0) {
        e.lo = e.hi = mid;
        break;
      }
      if (s == lo_sign) {
        e.lo = mid;
      } else {
        e.hi = mid;
      }
    }
  }
  e.bits = target;
  auto ptr = std::make_shared<const IntEnclosure>(std::move(e));
  levels.push_back(ptr);
  return ptr;
}

}  // namespace detail

using detail::BetaData;

std::string_view to_string(Sign s) noexcept {
  switch (s) {
    case Sign::Negative: return "-1";
    case Sign::Zero: return "0";
    case Sign::Positive: return "+1";
    case Sign::Undecided: return "Undecided";
  }
  return "?";
}

unsigned default_precision_cap() {
  if (const char* env = std::getenv("BETAEXP_PRECISION_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v >= 64 && v <= (1UL << 20)) return static_cast<unsigned>(v);
  }
  return 4096;
}

// ---------------------------------------------------------------------------
// Beta

BetaKind Beta::kind() const noexcept { return data_->kind; }
int Beta::degree() const noexcept { return data_->degree(); }
const ZPoly& Beta::minpoly() const noexcept { return data_->minpoly; }
Enclosure Beta::root_interval() const { return {data_->lo, data_->hi}; }
unsigned Beta::precision_bits() const noexcept { return data_->precision_bits; }
const std::string& Beta::description() const noexcept { return data_->description; }
std::optional<Rational> Beta::rational_value() const { return data_->exact; }
double Beta::approx() const noexcept { return data_->approx; }
detail::ParrySlot& Beta::parry_slot() const noexcept { return data_->parry; }

Enclosure Beta::enclosure(unsigned bits) const {
  if (data_->exact) return {*data_->exact, *data_->exact};
  auto e = data_->level(bits);
  Rational lo(e->lo, e->den), hi(e->hi, e->den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

namespace {

void finish_beta(BetaData& d) {
  const int deg = d.degree();
  const Rational lead = d.minpoly.back();
  d.monic.clear();
  for (const auto& c : d.minpoly) {
    Rational q(c, lead.get_num());
    q.canonicalize();
    d.monic.push_back(q);
  }
  // 1/beta = -(p_1 + p_2 beta + ... + p_d beta^(d-1)) / p_0
  d.inv_beta.assign(static_cast<std::size_t>(deg), Rational(0));
  if (d.exact) {
    d.inv_beta[0] = 1 / *d.exact;
  } else {
    for (int i = 1; i <= deg; ++i) {
      Rational q(-d.minpoly[static_cast<std::size_t>(i)], d.minpoly[0]);
      q.canonicalize();
      d.inv_beta[static_cast<std::size_t>(i - 1)] = q;
    }
  }
  if (d.exact) {
    d.approx = d.exact->get_d();
  } else {
    // midpoint of a 64-bit enclosure
    auto e = d.level(64);
    Rational mid(e->lo + e->hi, 2 * e->den);
    mid.canonicalize();
    d.approx = mid.get_d();
  }
}

}  // namespace

Beta make_algebraic_beta(const ZPoly& poly, const Rational& lo, const Rational& hi, unsigned precision_bits) {
  if (!(lo < hi)) throw Error(Errc::InvalidArgument, "root interval must satisfy lo < hi");
  if (lo < 1 || hi > 2) {
    throw Error(Errc::RootOutsideUnitRange, "root interval (" + lo.get_str() + ", " + hi.get_str() + ") is not inside (1, 2)");
  }
  if (precision_bits < 64) throw Error(Errc::InvalidArgument, "working precision must be at least 64 bits");
  QPoly q = poly::to_q(poly);
  if (q.empty()) throw Error(Errc::ParseError, "zero polynomial");
  // strip factors of x
  std::size_t shift = 0;
  while (shift < q.size() && q[shift] == 0) ++shift;
  q.erase(q.begin(), q.begin() + static_cast<long>(shift));
  // square-free part
  QPoly g = poly::gcd(q, poly::derivative(q));
  if (g.size() > 1) q = poly::divmod(q, g).first;
  if (q.size() < 2) throw Error(Errc::NoRootInInterval, "polynomial " + format_polynomial(poly) + " has no roots");

  std::size_t roots = poly::sturm_count(q, lo, hi);
  if (poly::sign_at(q, hi) == 0) --roots;
  if (roots == 0) {
    throw Error(Errc::NoRootInInterval, format_polynomial(poly) + " has no root in (" + lo.get_str() + ", " + hi.get_str() + ")");
  }
  if (roots > 1) {
    throw Error(Errc::NoRootInInterval, "(" + lo.get_str() + ", " + hi.get_str() + ") does not isolate a root of " +
                                            format_polynomial(poly) + " (" + std::to_string(roots) + " roots)");
  }

  auto data = std::make_shared<BetaData>();
  data->kind = BetaKind::Algebraic;
  data->precision_bits = precision_bits;
  // Shrink to a bracket whose endpoints are not roots, so the sign changes across it.
  Rational a = lo, b = hi;
  std::optional<Rational> exact;
  while (!exact && (poly::sign_at(q, a) == 0 || poly::sign_at(q, b) == 0)) {
    Rational m = (a + b) / 2;
    if (poly::sign_at(q, m) == 0) {
      exact = m;
    } else if (poly::sturm_count(q, a, m) >= 1) {
      b = m;
    } else {
      a = m;
    }
  }
  if (!exact && q.size() == 2) {
    exact = -q[0] / q[1];
  }
  if (exact) {
    exact->canonicalize();
    data->minpoly = {Integer(-exact->get_num()), Integer(exact->get_den())};
    data->exact = exact;
    data->lo = data->hi = *exact;
  } else {
    data->minpoly = poly::primitive(q);
    data->lo = a;
    data->hi = b;
    data->lo_sign = poly::sign_at(poly::to_q(data->minpoly), a);
  }
  data->description = "poly:" + format_polynomial(poly) + "@" + lo.get_str() + "," + hi.get_str();
  finish_beta(*data);
  return Beta(std::move(data));
}

Beta make_decimal_beta(std::string_view literal, unsigned precision_bits) {
  Rational v = parse_rational(literal);
  if (!(v > 1 && v < 2)) {
    throw Error(Errc::RootOutsideUnitRange, "decimal base " + std::string(literal) + " is not inside (1, 2)");
  }
  if (precision_bits < 64) throw Error(Errc::InvalidArgument, "working precision must be at least 64 bits");
  if (precision_bits > default_precision_cap()) {
    throw Error(Errc::PrecisionCapExceeded, "precision " + std::to_string(precision_bits) + " exceeds the cap");
  }
  auto data = std::make_shared<BetaData>();
  data->kind = BetaKind::Decimal;
  data->precision_bits = precision_bits;
  data->exact = v;
  data->lo = data->hi = v;
  data->minpoly = {Integer(-v.get_num()), Integer(v.get_den())};
  data->description = "dec:" + std::string(literal);
  finish_beta(*data);
  return Beta(std::move(data));
}

Beta make_beta(std::string_view spec, std::optional<std::pair<Rational, Rational>> interval, unsigned precision_bits) {
  auto starts_with = [&](std::string_view p) { return spec.substr(0, p.size()) == p; };
  if (starts_with("poly:")) {
    std::string_view body = spec.substr(5);
    const auto at = body.find('@');
    if (at != std::string_view::npos) {
      std::string_view iv = body.substr(at + 1);
      const auto comma = iv.find(',');
      if (comma == std::string_view::npos) throw Error(Errc::ParseError, "interval must be '<lo>,<hi>'");
      interval = std::make_pair(parse_rational(iv.substr(0, comma)), parse_rational(iv.substr(comma + 1)));
      body = body.substr(0, at);
    }
    ZPoly p = parse_polynomial(body);
    auto [lo, hi] = interval.value_or(std::make_pair(Rational(1), Rational(2)));
    return make_algebraic_beta(p, lo, hi, precision_bits);
  }
  if (starts_with("dec:")) return make_decimal_beta(spec.substr(4), precision_bits);
  return make_decimal_beta(spec, precision_bits);
}

// ---------------------------------------------------------------------------
// FieldValue

namespace {

void reduce(std::vector<Rational>& v, const BetaData& b) {
  const std::size_t d = static_cast<std::size_t>(b.degree());
  if (b.exact) {
    // evaluate at the rational base
    Rational acc = 0;
    for (std::size_t k = v.size(); k-- > 0;) acc = acc * *b.exact + v[k];
    v.assign(1, acc);
    return;
  }
  for (std::size_t k = v.size(); k-- > d;) {
    if (v[k] == 0) continue;
    const Rational t = v[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (b.monic[j] != 0) v[k - d + j] -= t * b.monic[j];
    }
    v[k] = 0;
  }
  v.resize(d, Rational(0));
}

}  // namespace

FieldValue FieldValue::rational(const Beta& base, const Rational& q) {
  FieldValue v;
  v.base_ = base.data_;
  v.coeffs_.assign(static_cast<std::size_t>(base.degree()), Rational(0));
  v.coeffs_[0] = q;
  v.coeffs_[0].canonicalize();
  return v;
}

FieldValue FieldValue::generator(const Beta& base) {
  FieldValue v = rational(base, 0);
  if (base.data_->exact) {
    v.coeffs_[0] = *base.data_->exact;
  } else {
    v.coeffs_[1] = 1;
  }
  return v;
}

FieldValue FieldValue::from_coefficients(const Beta& base, std::vector<Rational> coeffs) {
  FieldValue v;
  v.base_ = base.data_;
  if (coeffs.empty()) coeffs.push_back(0);
  for (auto& c : coeffs) c.canonicalize();
  reduce(coeffs, *base.data_);
  v.coeffs_ = std::move(coeffs);
  return v;
}

FieldValue FieldValue::ball(const Beta& base, const Rational& center, const Rational& radius) {
  if (base.kind() != BetaKind::Decimal) {
    throw Error(Errc::BackendUnsupported, "enclosure balls are only available for Decimal bases");
  }
  if (radius < 0) throw Error(Errc::InvalidArgument, "negative radius");
  FieldValue v = rational(base, center);
  v.radius_ = radius;
  return v;
}

Beta FieldValue::base() const {
  if (!base_) throw Error(Errc::InvalidArgument, "detached FieldValue");
  return Beta(base_);
}

const BetaData& FieldValue::base_data() const {
  if (!base_) throw Error(Errc::InvalidArgument, "detached FieldValue");
  return *base_;
}

bool FieldValue::is_structural_zero() const {
  return radius_ == 0 && std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void FieldValue::check_same_base(const FieldValue& o) const {
  if (!base_ || !o.base_) throw Error(Errc::InvalidArgument, "detached FieldValue");
  if (base_ != o.base_) throw Error(Errc::MixedBase, "operands belong to different bases");
}

FieldValue& FieldValue::operator+=(const FieldValue& o) {
  check_same_base(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  if (o.radius_ != 0) radius_ += o.radius_;
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& o) {
  check_same_base(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  if (o.radius_ != 0) radius_ += o.radius_;
  return *this;
}

FieldValue& FieldValue::operator*=(const FieldValue& o) {
  check_same_base(o);
  const auto& b = *base_;
  if (b.exact) {
    Rational r = 0;
    if (radius_ != 0 || o.radius_ != 0) r = abs(coeffs_[0]) * o.radius_ + abs(o.coeffs_[0]) * radius_ + radius_ * o.radius_;
    coeffs_[0] *= o.coeffs_[0];
    radius_ = r;
    return *this;
  }
  std::vector<Rational> prod(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce(prod, b);
  coeffs_ = std::move(prod);
  return *this;
}

FieldValue& FieldValue::operator+=(long n) {
  if (!base_) throw Error(Errc::InvalidArgument, "detached FieldValue");
  coeffs_[0] += n;
  return *this;
}

FieldValue& FieldValue::operator-=(long n) {
  if (!base_) throw Error(Errc::InvalidArgument, "detached FieldValue");
  coeffs_[0] -= n;
  return *this;
}

FieldValue FieldValue::operator-() const {
  FieldValue v = *this;
  for (auto& c : v.coeffs_) c = -c;
  return v;
}

FieldValue FieldValue::mul_by_beta() const {
  if (!base_) throw Error(Errc::InvalidArgument, "detached FieldValue");
  FieldValue v = *this;
  const auto& b = *base_;
  if (b.exact) {
    v.coeffs_[0] *= *b.exact;
    if (radius_ != 0) v.radius_ *= *b.exact;
    return v;
  }
  const std::size_t d = coeffs_.size();
  const Rational top = coeffs_[d - 1];
  for (std::size_t i = d - 1; i > 0; --i) v.coeffs_[i] = coeffs_[i - 1];
  v.coeffs_[0] = 0;
  if (top != 0) {
    for (std::size_t j = 0; j < d; ++j) {
      if (b.monic[j] != 0) v.coeffs_[j] -= top * b.monic[j];
    }
  }
  return v;
}

FieldValue FieldValue::div_by_beta() const {
  if (!base_) throw Error(Errc::InvalidArgument, "detached FieldValue");
  FieldValue v = *this;
  const auto& b = *base_;
  if (b.exact) {
    v.coeffs_[0] /= *b.exact;
    if (radius_ != 0) v.radius_ /= *b.exact;
    return v;
  }
  const std::size_t d = coeffs_.size();
  const Rational c0 = coeffs_[0];
  for (std::size_t i = 0; i + 1 < d; ++i) v.coeffs_[i] = coeffs_[i + 1];
  v.coeffs_[d - 1] = 0;
  if (c0 != 0) {
    for (std::size_t j = 0; j < d; ++j) {
      if (b.inv_beta[j] != 0) v.coeffs_[j] += c0 * b.inv_beta[j];
    }
  }
  return v;
}

FieldValue FieldValue::scaled_by_beta_power(long k) const {
  FieldValue v = *this;
  for (; k > 0; --k) v = v.mul_by_beta();
  for (; k < 0; ++k) v = v.div_by_beta();
  return v;
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  return a.base_ == b.base_ && a.coeffs_ == b.coeffs_ && a.radius_ == b.radius_;
}

std::size_t FieldValue::hash() const noexcept {
  std::size_t h = std::hash<const void*>{}(base_.get());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& c : coeffs_) {
    mix(mpz_get_ui(c.get_num_mpz_t()));
    mix(static_cast<std::size_t>(mpz_sgn(c.get_num_mpz_t()) + 1));
    mix(mpz_size(c.get_num_mpz_t()));
    mix(mpz_get_ui(c.get_den_mpz_t()));
  }
  return h;
}

FieldValue fv_arith(const FieldValue& a, const FieldValue& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::MulByBeta: return a.mul_by_beta();
    case ArithOp::DivByBeta: return a.div_by_beta();
  }
  throw Error(Errc::InvalidArgument, "unknown arithmetic operation");
}

// ---------------------------------------------------------------------------
// Sign determination

namespace {

// Numerators over the common denominator `den`, trailing zeros dropped.
struct ScaledForm {
  std::vector<Integer> n;
  Integer den;
};

ScaledForm scaled_form(std::span<const Rational> c) {
  ScaledForm f;
  f.den = 1;
  std::size_t top = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) {
      top = i + 1;
      mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), c[i].get_den_mpz_t());
    }
  }
  f.n.reserve(top);
  for (std::size_t i = 0; i < top; ++i) f.n.push_back(c[i].get_num() * (f.den / c[i].get_den()));
  return f;
}

// Returns the interval [lo, hi] of den^m * value, m = n.size() - 1.
void horner_interval(const std::vector<Integer>& n, const detail::IntEnclosure& e, Integer& lo, Integer& hi) {
  const std::size_t m = n.size() - 1;
  lo = hi = n[m];
  Integer den_pow = 1, t1, t2;
  for (std::size_t i = m; i-- > 0;) {
    den_pow *= e.den;
    if (lo >= 0) {
      t1 = lo * e.lo;
      t2 = hi * e.hi;
    } else if (hi <= 0) {
      t1 = lo * e.hi;
      t2 = hi * e.lo;
    } else {
      t1 = lo * e.hi;
      t2 = hi * e.hi;
    }
    Integer add = n[i] * den_pow;
    lo = t1 + add;
    hi = t2 + add;
  }
}

bool vanishes_at_beta(const BetaData& b, std::span<const Rational> c) {
  QPoly a(c.begin(), c.end());
  poly::trim(a);
  QPoly g = poly::gcd(a, poly::to_q(b.minpoly));
  if (g.size() <= 1) return false;
  return poly::sturm_count(g, b.lo, b.hi) >= 1;
}

int exact_sign(const BetaData& b, std::span<const Rational> c) {
  if (b.exact) return sgn(c[0]);
  ScaledForm f = scaled_form(c);
  if (f.n.empty()) return 0;
  if (f.n.size() == 1) return sgn(f.n[0]);
  bool gcd_checked = false;
  Integer lo, hi;
  for (unsigned bits = 64;; bits *= 2) {
    auto e = b.level(bits);
    horner_interval(f.n, *e, lo, hi);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    if (bits >= 256 && !gcd_checked) {
      gcd_checked = true;
      if (vanishes_at_beta(b, c)) return 0;
    }
  }
}

}  // namespace

Sign fv_sign(const FieldValue& a) {
  const auto c = a.coefficients();
  if (a.radius() != 0) {
    // Decimal ball: the center is a rational
    const Rational& center = c[0];
    if (center - a.radius() > 0) return Sign::Positive;
    if (center + a.radius() < 0) return Sign::Negative;
    return Sign::Undecided;
  }
  return static_cast<Sign>(exact_sign(a.base_data(), c));
}

Sign compare(const FieldValue& a, const FieldValue& b) { return fv_sign(a - b); }

int decided_sign(const FieldValue& a) {
  const Sign s = fv_sign(a);
  if (s == Sign::Undecided) throw Error(Errc::Undecided, "sign of an enclosure straddling zero");
  return static_cast<int>(s);
}

FieldValue inverse(const FieldValue& a) {
  const BetaData& b = a.base_data();
  const Beta base = a.base();
  if (b.exact) {
    const Rational& c = a.coefficients()[0];
    if (a.radius() != 0) {
      if (fv_sign(a) == Sign::Undecided) throw Error(Errc::Undecided, "inverse of an enclosure containing zero");
      const Rational m = abs(c);
      return FieldValue::ball(base, 1 / c, a.radius() / (m * (m - a.radius())));
    }
    if (c == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    return FieldValue::rational(base, 1 / c);
  }
  QPoly av(a.coefficients().begin(), a.coefficients().end());
  poly::trim(av);
  if (av.empty()) throw Error(Errc::DivisionByZero, "inverse of zero");
  const QPoly p = poly::to_q(b.minpoly);
  auto [g, s] = poly::gcd_with_cofactor(av, p);
  if (g.size() > 1) {
    // reducible modulus: invert modulo the cofactor that still vanishes at beta
    if (vanishes_at_beta(b, av)) throw Error(Errc::DivisionByZero, "inverse of zero");
    const QPoly q = poly::divmod(p, g).first;
    s = poly::gcd_with_cofactor(av, q).second;
  }
  return FieldValue::from_coefficients(base, std::vector<Rational>(s.begin(), s.end()));
}

FieldValue divide(const FieldValue& a, const FieldValue& b) { return a * inverse(b); }

namespace {

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Integer rational_floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Integer round_half_away(const Rational& t) {
  if (t >= 0) return rational_floor(t + Rational(1, 2));
  return -rational_floor(-t + Rational(1, 2));
}

std::string format_scaled(const Integer& k, unsigned digits) {
  std::string mag = Integer(abs(k)).get_str();
  if (mag.size() <= digits) mag.insert(0, digits + 1 - mag.size(), '0');
  if (digits > 0) mag.insert(mag.size() - digits, ".");
  return (k < 0 ? "-" : "") + mag;
}

Integer pow10(unsigned digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

}  // namespace

Enclosure enclose(const FieldValue& a, unsigned bits) {
  const BetaData& b = a.base_data();
  const auto c = a.coefficients();
  if (b.exact) return {c[0] - a.radius(), c[0] + a.radius()};
  ScaledForm f = scaled_form(c);
  if (f.n.empty()) return {0, 0};
  if (f.n.size() == 1) {
    Rational v(f.n[0], f.den);
    v.canonicalize();
    return {v, v};
  }
  auto e = b.level(bits);
  Integer lo, hi;
  horner_interval(f.n, *e, lo, hi);
  Integer scale = f.den;
  for (std::size_t i = 1; i < f.n.size(); ++i) scale *= e->den;
  Rational rlo(lo, scale), rhi(hi, scale);
  rlo.canonicalize();
  rhi.canonicalize();
  return {rlo, rhi};
}

double to_double(const FieldValue& a) {
  for (unsigned bits = 64;; bits *= 2) {
    Enclosure e = enclose(a, bits);
    Rational mid = (e.lo + e.hi) / 2;
    Rational width = e.hi - e.lo;
    if (width == 0 || width * (Rational(1) << 60) <= abs(mid) || bits >= 8192) return mid.get_d();
  }
}

Integer fv_floor(const FieldValue& a) {
  if (!a.is_exact()) throw Error(Errc::InvalidArgument, "floor of an enclosure");
  const BetaData& b = a.base_data();
  if (b.exact) return rational_floor(a.coefficients()[0]);
  for (unsigned bits = 64;; bits *= 2) {
    Enclosure e = enclose(a, bits);
    const Integer klo = rational_floor(e.lo), khi = rational_floor(e.hi);
    if (klo == khi) return klo;
    if (khi - klo == 1) {
      // value lies in [klo, khi + 1); one exact comparison settles it
      FieldValue d = a;
      d -= FieldValue::rational(a.base(), Rational(khi));
      return decided_sign(d) >= 0 ? khi : klo;
    }
  }
}

std::string rational_to_decimal(const Rational& q, unsigned digits) {
  return format_scaled(round_half_away(q * Rational(pow10(digits))), digits);
}

std::string fv_to_decimal(const FieldValue& a, unsigned digits) {
  const BetaData& b = a.base_data();
  if (b.exact) return rational_to_decimal(a.coefficients()[0], digits);
  FieldValue t = a * FieldValue::rational(a.base(), Rational(pow10(digits)));
  Integer k;
  if (decided_sign(t) >= 0) {
    k = fv_floor(t + FieldValue::rational(a.base(), Rational(1, 2)));
  } else {
    k = -fv_floor(-t + FieldValue::rational(a.base(), Rational(1, 2)));
  }
  return format_scaled(k, digits);
}

std::string width_report(const FieldValue& a, unsigned digits) {
  if (a.is_exact()) return "0";
  const double r = a.radius().get_d();
  if (r > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", static_cast<int>(digits), r);
    return buf;
  }
  const long e = static_cast<long>(mpz_sizeinbase(a.radius().get_den_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(a.radius().get_num_mpz_t(), 2));
  return "2^-" + std::to_string(e - 1);
}

}  // namespace betaexp
