#include "betaexp/expansion.hpp"

#include <algorithm>
#include <map>

#include "betaexp/error.hpp"

namespace betaexp {

namespace detail {

// Memo of the greedy expansion of 1. Holds raw coefficients rather than a
// FieldValue so that it does not keep its own base alive.
struct ParryCache {
  Word greedy;
  bool rational = false;
  Integer p, q, num, den;              // rational bases: remainder num/den
  std::vector<Rational> coeffs;        // algebraic bases: remainder coefficients
  std::map<std::vector<Rational>, std::size_t> seen;
  std::optional<EventuallyPeriodicSeq> exact;
  std::optional<Word> finite_greedy;
  bool done = false;  // exact form found
};

}  // namespace detail

FieldValue beta_of(const Beta& beta) { return FieldValue::generator(beta); }

FieldValue upper_endpoint(const Beta& beta) { return inverse(beta_of(beta) - 1); }

TStep t_beta(const FieldValue& x) {
  if (decided_sign(x) < 0 || decided_sign(x - 1) >= 0) {
    throw Error(Errc::OutOfDomain, "T_beta needs 0 <= x < 1");
  }
  FieldValue bx = x.mul_by_beta();
  const std::uint8_t d = decided_sign(bx - 1) >= 0 ? 1 : 0;
  if (d) bx -= 1;
  return {d, std::move(bx)};
}

// ---------------------------------------------------------------------------

DigitStream::DigitStream(const FieldValue& x, bool lazy) : beta_(x.base()), lazy_(lazy), r_(x) {
  upper_ = upper_endpoint(beta_);
  if (decided_sign(x) < 0 || compare(x, upper_) == Sign::Positive) {
    throw Error(Errc::OutOfDomain, "x must lie in [0, 1/(beta-1)]");
  }
  if (auto b = beta_.rational_value(); b && x.is_exact()) {
    rational_ = true;
    p_ = b->get_num();
    q_ = b->get_den();
    num_ = x.coefficients()[0].get_num();
    den_ = x.coefficients()[0].get_den();
  }
}

std::uint8_t DigitStream::step_rational() {
  // beta r = p num / (q den)
  num_ *= p_;
  den_ *= q_;
  std::uint8_t d;
  if (!lazy_) {
    d = num_ >= den_ ? 1 : 0;
  } else {
    // beta r > 1/(beta-1)  <=>  num (p - q) > q den
    d = num_ * (p_ - q_) > q_ * den_ ? 1 : 0;
  }
  if (d) num_ -= den_;
  return d;
}

std::uint8_t DigitStream::step_field() {
  r_ = r_.mul_by_beta();
  std::uint8_t d;
  if (!lazy_) {
    d = decided_sign(r_ - 1) >= 0 ? 1 : 0;
  } else {
    d = decided_sign(r_ - upper_) > 0 ? 1 : 0;
  }
  if (d) r_ -= 1;
  return d;
}

std::uint8_t DigitStream::next() {
  ++pos_;
  return rational_ ? step_rational() : step_field();
}

Word DigitStream::take(std::size_t n) {
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.push_back(next());
  return w;
}

FieldValue DigitStream::remainder() const {
  if (!rational_) return r_;
  Rational r(num_, den_);
  r.canonicalize();
  return FieldValue::rational(beta_, r);
}

FieldValue DigitStream::error_bound() const { return stream_truncation_bound(pos_, beta_); }

Word greedy_expansion(const FieldValue& x, std::size_t n) { return GreedyStream(x).take(n); }

Word lazy_expansion(const FieldValue& x, std::size_t n) { return LazyStream(x).take(n); }

// ---------------------------------------------------------------------------
// Quasi-greedy expansion of 1

namespace {

using detail::ParryCache;

std::shared_ptr<ParryCache> init_cache(const Beta& beta) {
  auto c = std::make_shared<ParryCache>();
  if (auto b = beta.rational_value()) {
    c->rational = true;
    c->p = b->get_num();
    c->q = b->get_den();
    c->num = 1;
    c->den = 1;
  } else {
    auto one = FieldValue::one(beta);
    c->coeffs.assign(one.coefficients().begin(), one.coefficients().end());
    c->seen.emplace(c->coeffs, 0);
  }
  return c;
}

// Extends the greedy expansion of 1 to n digits unless an exact form is already known.
void extend(ParryCache& c, const Beta& beta, std::size_t n) {
  while (!c.done && c.greedy.size() < n) {
    std::uint8_t d;
    bool zero;
    if (c.rational) {
      c.num *= c.p;
      c.den *= c.q;
      d = c.num >= c.den ? 1 : 0;
      if (d) c.num -= c.den;
      zero = c.num == 0;
    } else {
      FieldValue r = FieldValue::from_coefficients(beta, c.coeffs).mul_by_beta();
      d = decided_sign(r - 1) >= 0 ? 1 : 0;
      if (d) r -= 1;
      c.coeffs.assign(r.coefficients().begin(), r.coefficients().end());
      zero = r.is_structural_zero() || fv_sign(r) == Sign::Zero;
    }
    c.greedy.push_back(d);
    const std::size_t k = c.greedy.size();
    if (zero) {
      // finite greedy expansion a'_1..a'_k: (a_i) = (a'_1, ..., a'_{k-1}, a'_k - 1)^inf
      c.finite_greedy = c.greedy;
      Word per = c.greedy;
      per.pop_back();
      per.push_back(0);
      c.exact = EventuallyPeriodicSeq(Word(), per);
      c.done = true;
    } else if (!c.rational) {
      auto [it, inserted] = c.seen.emplace(c.coeffs, k);
      if (!inserted) {
        const std::size_t i = it->second;
        c.exact = EventuallyPeriodicSeq(c.greedy.prefix(i), c.greedy.substr(i));
        c.done = true;
      }
    }
  }
}

std::shared_ptr<ParryCache> cache_for(const Beta& beta, std::unique_lock<std::mutex>& lock) {
  auto& slot = beta.parry_slot();
  lock = std::unique_lock<std::mutex>(slot.mu);
  if (!slot.cache) slot.cache = init_cache(beta);
  return slot.cache;
}

}  // namespace

QuasiGreedy quasi_greedy_of_one(const Beta& beta, std::size_t n, std::size_t horizon) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least 1");
  std::unique_lock<std::mutex> lock;
  auto c = cache_for(beta, lock);
  extend(*c, beta, std::max(n, horizon));
  QuasiGreedy out;
  if (c->exact) {
    out.exact = c->exact;
    out.status = QuasiGreedyStatus::Periodic;
    out.digits = c->exact->prefix(n);
    out.finite_greedy = c->finite_greedy;
  } else {
    // A non-integer rational p/q never yields a zero or repeated remainder:
    // the remainder after k steps has denominator exactly q^k.
    out.status = c->rational ? QuasiGreedyStatus::Aperiodic : QuasiGreedyStatus::Undetermined;
    out.digits = c->greedy.prefix(n);
  }
  return out;
}

Word quasi_greedy_prefix(const Beta& beta, std::size_t n) {
  std::unique_lock<std::mutex> lock;
  auto c = cache_for(beta, lock);
  extend(*c, beta, n);
  if (c->exact) return c->exact->prefix(n);
  return c->greedy.prefix(n);
}

namespace {

struct ParryView {
  std::optional<EventuallyPeriodicSeq> exact;
  bool rational = false;
};

ParryView parry_view(const Beta& beta) {
  std::unique_lock<std::mutex> lock;
  auto c = cache_for(beta, lock);
  extend(*c, beta, kQuasiGreedyHorizon);
  return {c->exact, c->rational};
}

}  // namespace

bool is_admissible(const Word& w, const Beta& beta) {
  if (w.empty()) return true;
  const Word a = quasi_greedy_prefix(beta, w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;  // a_1 = 1
    for (std::size_t j = 0; k + j < w.size(); ++j) {
      if (w[k + j] != a[j]) {
        if (w[k + j] > a[j]) return false;
        break;
      }
    }
    // agreeing up to the end: the zero tail is below (a_i), which has infinitely many ones
  }
  return true;
}

bool is_admissible(const EventuallyPeriodicSeq& s, const Beta& beta, std::size_t horizon) {
  const ParryView view = parry_view(beta);
  for (std::size_t k = 0; k < s.orbit_size(); ++k) {
    const EventuallyPeriodicSeq t = s.shift(k);
    if (view.exact) {
      if (compare(t, *view.exact) >= 0) return false;
      continue;
    }
    // No exact form: the sequences differ somewhere; scan for it.
    std::size_t limit = std::max<std::size_t>(horizon, 4 * s.orbit_size());
    std::size_t j = 0;
    bool decided = false;
    while (!decided) {
      const Word a = quasi_greedy_prefix(beta, limit);
      for (; j < limit; ++j) {
        const auto x = t.digit(j);
        if (x != a[j]) {
          if (x > a[j]) return false;
          decided = true;
          break;
        }
      }
      if (!decided) {
        if (!view.rational || limit >= (std::size_t{1} << 20)) {
          throw Error(Errc::UndeterminedWithinHorizon,
                      "no difference from (a_i) within " + std::to_string(limit) + " digits");
        }
        limit *= 2;
      }
    }
  }
  return true;
}

FieldValue val_beta(const Word& w, const Beta& beta) {
  if (auto b = beta.rational_value()) {
    // sum w_i (q/p)^i = (sum w_i q^i p^(n-i)) / p^n
    const Integer p = b->get_num(), q = b->get_den();
    Integer s = 0, qpow = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      s *= p;
      qpow *= q;
      if (w[i]) s += qpow;
    }
    Integer pn;
    mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), w.size());
    Rational v(s, pn);
    v.canonicalize();
    return FieldValue::rational(beta, v);
  }
  // Horner in beta, then one division by beta^n
  FieldValue v = FieldValue::zero(beta);
  for (std::size_t i = 0; i < w.size(); ++i) {
    v = v.mul_by_beta();
    if (w[i]) v += 1;
  }
  return v.scaled_by_beta_power(-static_cast<long>(w.size()));
}

FieldValue val_beta(const EventuallyPeriodicSeq& s, const Beta& beta) {
  // val(pre) + beta^-|pre| val(per) / (1 - beta^-|per|)
  const FieldValue per = val_beta(s.period(), beta);
  const FieldValue one = FieldValue::one(beta);
  const FieldValue denom = one - one.scaled_by_beta_power(-static_cast<long>(s.period().size()));
  const FieldValue tail = divide(per, denom);
  return val_beta(s.preperiod(), beta) + tail.scaled_by_beta_power(-static_cast<long>(s.preperiod().size()));
}

FieldValue stream_truncation_bound(std::size_t n, const Beta& beta) {
  return upper_endpoint(beta).scaled_by_beta_power(-static_cast<long>(n));
}

Word max_admissible_extension(const Word& v, const Beta& beta, std::size_t out_len) {
  if (!is_admissible(v, beta)) throw Error(Errc::NotAdmissible, "word " + v.str() + " is not admissible");
  Word out = v.prefix(out_len);
  while (out.size() < out_len) {
    out.push_back(1);
    if (!is_admissible(out, beta)) {
      out.pop_back();
      out.push_back(0);
    }
  }
  return out;
}

FieldValue max_extension_value(const Word& v, const Beta& beta) {
  if (!is_admissible(v, beta)) throw Error(Errc::NotAdmissible, "word " + v.str() + " is not admissible");
  const Word a = quasi_greedy_prefix(beta, v.size());
  std::size_t k = v.size();
  for (; k > 0; --k) {
    bool match = true;
    for (std::size_t j = 0; j < k && match; ++j) match = v[v.size() - k + j] == a[j];
    if (match) break;
  }
  const Word u = v.prefix(v.size() - k);
  return val_beta(u, beta) + FieldValue::one(beta).scaled_by_beta_power(-static_cast<long>(u.size()));
}

}  // namespace betaexp
