#include "betaexp/normalize.hpp"

#include <algorithm>
#include <unordered_map>

#include "betaexp/error.hpp"

namespace betaexp {

NormalizeResult normalize(const Word& w, const Beta& beta, std::size_t out_len) {
  const FieldValue x = val_beta(w, beta);
  if (decided_sign(x - 1) > 0) throw Error(Errc::ValueExceedsOne, "val(" + w.str() + ") > 1");
  GreedyStream s(x);
  NormalizeResult r;
  r.digits = s.take(out_len);
  if (decided_sign(s.remainder()) == 0) {
    r.finite = true;
    for (std::size_t i = r.digits.size(); i > 0; --i) {
      if (r.digits[i - 1]) {
        r.finite_length = i;
        break;
      }
    }
  }
  return r;
}

CoverWord find_cover_word(const Word& w, const Beta& beta, std::size_t horizon) {
  const FieldValue vw = val_beta(w, beta);
  if (decided_sign(vw - 1) >= 0) throw Error(Errc::ValueExceedsOne, "cover word needs val(" + w.str() + ") < 1");
  GreedyStream s(vw);
  const std::size_t k = w.size();
  Word eps = s.take(k);
  for (std::size_t j = 1; j <= horizon; ++j) {
    eps.push_back(s.next());  // eps_{k+j}
    if (eps[k + j - 1] != 0) continue;
    Word cand = eps.prefix(k + j - 1);
    cand.push_back(1);
    if (!is_admissible(cand, beta)) continue;
    CoverWord c;
    c.w = w;
    c.v = std::move(cand);
    c.n = j;
    c.a = val_beta(c.v, beta) - vw;
    c.b = max_extension_value(c.v, beta) - vw;
    return c;
  }
  throw Error(Errc::HorizonExhausted, "no admissible increment of " + w.str() + " within " + std::to_string(horizon) + " digits");
}

SpliceResult anti_normalize_step(const FieldValue& x, const CoverWord& cover, std::size_t start, std::size_t horizon) {
  const Beta beta = x.base();
  const Word& v = cover.v;
  const Word& w = cover.w;
  GreedyStream s(x);
  Word eps;
  const std::size_t limit = start + horizon + v.size();
  while (eps.size() < limit) {
    eps.push_back(s.next());
    if (eps.size() < start + v.size()) continue;
    const std::size_t j = eps.size() - v.size();
    if (!std::equal(v.digits().begin(), v.digits().end(), eps.digits().begin() + static_cast<long>(j))) continue;
    SpliceResult r;
    r.j = j;
    r.spliced_prefix = eps.prefix(j) + w;
    const long lw = static_cast<long>(w.size());
    const FieldValue tail = s.remainder().scaled_by_beta_power(-static_cast<long>(v.size()));
    r.y = (cover.a + tail).scaled_by_beta_power(lw);
    r.y_lo = cover.a.scaled_by_beta_power(lw);
    r.y_hi = cover.b.scaled_by_beta_power(lw);
    r.in_interval = decided_sign(r.y - r.y_lo) > 0 && decided_sign(r.y_hi - r.y) > 0;
    return r;
  }
  throw Error(Errc::OccurrenceNotFound,
              "cover word " + v.str() + " of " + w.str() + " not found within " + std::to_string(horizon) + " digits");
}

SpliceResult anti_normalize_step(const FieldValue& x, const Word& w, std::size_t start, std::size_t horizon) {
  return anti_normalize_step(x, find_cover_word(w, x.base(), horizon), start, horizon);
}

namespace {

// Prefixes zeros until the value drops below 1.
Word embeddable(const Word& t, const Beta& beta) {
  Word e = t;
  while (decided_sign(val_beta(e, beta) - 1) >= 0) e = Word::zeros(1) + e;
  return e;
}

}  // namespace

UniversalResult universal_expansion(const FieldValue& x, std::size_t max_word_len, std::size_t max_digits,
                                    const UniversalOptions& opts) {
  if (max_word_len == 0 || max_digits == 0) throw Error(Errc::InvalidArgument, "L and N must be at least 1");
  const Beta beta = x.base();
  if (decided_sign(x) <= 0 || decided_sign(upper_endpoint(beta) - x) <= 0) {
    throw Error(Errc::OutOfDomain, "x must lie in (0, 1/(beta-1))");
  }
  const std::vector<Word> targets = length_lex_words(max_word_len);
  std::unordered_map<Word, CoverWord, WordHash> covers;
  UniversalResult res;
  res.remainder = x;
  for (std::size_t round = 0; round < std::max<std::size_t>(opts.rounds, 1); ++round) {
    for (const Word& t : targets) {
      const Word e = embeddable(t, beta);
      auto it = covers.find(e);
      if (it == covers.end()) it = covers.emplace(e, find_cover_word(e, beta, opts.horizon)).first;
      const CoverWord& cover = it->second;
      const std::size_t room = max_digits > res.output.size() ? max_digits - res.output.size() : 0;
      if (room < e.size()) {
        res.status = UniversalStatus::BudgetExhausted;
        res.failed_target = t;
        return res;
      }
      SpliceResult step;
      try {
        step = anti_normalize_step(res.remainder, cover, 0, std::min(opts.horizon, room));
      } catch (const Error& err) {
        if (err.code() != Errc::OccurrenceNotFound) throw;
        res.status = room <= opts.horizon ? UniversalStatus::BudgetExhausted : UniversalStatus::OccurrenceNotFound;
        res.failed_target = t;
        return res;
      }
      if (res.output.size() + step.spliced_prefix.size() > max_digits) {
        res.status = UniversalStatus::BudgetExhausted;
        res.failed_target = t;
        return res;
      }
      UniversalRecord rec;
      rec.target = t;
      rec.embedded = e;
      rec.splice_position = res.output.size() + step.j;
      res.output.append(step.spliced_prefix);
      rec.prefix_length_after = res.output.size();
      rec.y = step.y;
      rec.y_lo = step.y_lo;
      rec.y_hi = step.y_hi;
      res.remainder = step.y;
      res.report.push_back(std::move(rec));
    }
  }
  return res;
}

std::vector<Word> enumerate_equivalent_words(const Word& w, const Beta& beta, std::size_t cap) {
  if (beta.kind() != BetaKind::Algebraic) {
    throw Error(Errc::BackendUnsupported, "equivalence classes need an Algebraic base");
  }
  if (w.size() > cap) throw Error(Errc::LengthCapExceeded, "word longer than " + std::to_string(cap));
  const std::size_t n = w.size();
  // Scale by beta^n: values become sums of beta^(n-i).
  auto scaled = [&](const Word& u) {
    FieldValue v = FieldValue::zero(beta);
    for (std::size_t i = 0; i < u.size(); ++i) {
      v = v.mul_by_beta();
      if (u[i]) v += 1;
    }
    return v;
  };
  const FieldValue target = scaled(w);
  // rest[m] = sum_{i=m+1}^{n} beta^(n-i): largest contribution of positions m+1..n
  std::vector<FieldValue> pow(n + 1, FieldValue::one(beta)), rest(n + 1, FieldValue::zero(beta));
  for (std::size_t i = 1; i <= n; ++i) pow[i] = pow[i - 1].mul_by_beta();
  for (std::size_t m = n; m-- > 0;) rest[m] = rest[m + 1] + pow[n - m - 1];

  std::vector<Word> out;
  // DFS on the residual target - partial, which must stay in [0, rest[m]].
  struct Frame {
    Word prefix;
    FieldValue residual;
  };
  std::vector<Frame> frames{{Word(), target}};
  while (!frames.empty()) {
    Frame f = std::move(frames.back());
    frames.pop_back();
    const std::size_t m = f.prefix.size();
    if (m == n) {
      if (decided_sign(f.residual) == 0) out.push_back(f.prefix);
      continue;
    }
    for (int d = 1; d >= 0; --d) {
      FieldValue r = f.residual;
      if (d) r -= pow[n - m - 1];
      if (decided_sign(r) < 0) continue;
      if (compare(r, rest[m + 1]) == Sign::Positive) continue;
      Word p = f.prefix;
      p.push_back(static_cast<std::uint8_t>(d));
      frames.push_back({std::move(p), std::move(r)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FinitaryResult finitary_universalize(const FieldValue& x, std::size_t max_word_len, std::size_t max_digits) {
  const Beta beta = x.base();
  if (beta.kind() != BetaKind::Algebraic) {
    throw Error(Errc::BackendUnsupported, "finitary substitution needs an Algebraic base");
  }
  if (decided_sign(x) <= 0 || decided_sign(upper_endpoint(beta) - x) <= 0) {
    throw Error(Errc::OutOfDomain, "x must lie in (0, 1/(beta-1))");
  }
  GreedyStream s(x);
  Word eps;
  FinitaryResult res;
  std::size_t next_free = 0;  // first position available for the next occurrence
  std::size_t last_end = 0;
  for (const Word& t : length_lex_words(max_word_len)) {
    const Word e = embeddable(t, beta);
    const NormalizeResult nr = normalize(e, beta, e.size());
    if (!nr.finite) {
      throw Error(Errc::NotFinitary, "normalization of " + e.str() + " is not a word of the same length");
    }
    const Word& v = nr.digits;
    std::size_t pos = Word::npos;
    while (pos == Word::npos) {
      pos = eps.find(v, next_free);
      if (pos != Word::npos) break;
      if (eps.size() >= max_digits) {
        res.status = UniversalStatus::BudgetExhausted;
        res.failed_target = t;
        break;
      }
      eps.push_back(s.next());
    }
    if (pos == Word::npos) break;
    eps.overwrite(pos, e);
    UniversalRecord rec;
    rec.target = t;
    rec.embedded = e;
    rec.splice_position = pos;
    rec.prefix_length_after = pos + e.size();
    res.report.push_back(std::move(rec));
    last_end = std::max(last_end, pos + e.size());
    next_free = pos + e.size() + max_word_len;
  }
  // Emit through the last substitution; the rest of the greedy stream is the tail.
  const std::size_t keep = res.status == UniversalStatus::Complete ? last_end : eps.size();
  res.output = eps.prefix(keep);
  GreedyStream tail(x);
  for (std::size_t i = 0; i < keep; ++i) tail.next();
  res.remainder = tail.remainder();
  return res;
}

std::string to_string(UniversalStatus s) {
  switch (s) {
    case UniversalStatus::Complete: return "complete";
    case UniversalStatus::BudgetExhausted: return "budget_exhausted";
    case UniversalStatus::OccurrenceNotFound: return "occurrence_not_found";
  }
  return "unknown";
}

}  // namespace betaexp
