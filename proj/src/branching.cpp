#include "betaexp/branching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "betaexp/error.hpp"

namespace betaexp {

namespace {

// Digit options with 1/(beta-1) precomputed.
DigitOptions options_with(const FieldValue& x, const FieldValue& upper) {
  const FieldValue bx = x.mul_by_beta();
  DigitOptions o;
  o.one = decided_sign(bx - 1) >= 0;
  o.zero = decided_sign(upper - bx) >= 0;
  return o;
}

void check_domain(const FieldValue& x, const FieldValue& upper) {
  if (decided_sign(x) < 0 || decided_sign(upper - x) < 0) {
    throw Error(Errc::OutOfDomain, "x must lie in [0, 1/(beta-1)]");
  }
}

FieldValue child_of(const FieldValue& r, std::uint8_t d) {
  FieldValue c = r.mul_by_beta();
  if (d) c -= 1;
  return c;
}

}  // namespace

DigitOptions digit_options(const FieldValue& x) {
  const FieldValue upper = upper_endpoint(x.base());
  check_domain(x, upper);
  return options_with(x, upper);
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> BranchTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].depth == depth) out.push_back(i);
  }
  return out;
}

Word BranchTree::path_to(std::size_t node) const {
  std::vector<std::uint8_t> d;
  while (node != 0) {
    d.push_back(nodes[node].digit);
    node = nodes[node].parent;
  }
  return Word(std::vector<std::uint8_t>(d.rbegin(), d.rend()));
}

std::vector<Word> BranchTree::leaf_words() const {
  std::vector<Word> out;
  for (auto i : leaves()) out.push_back(path_to(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t BranchTree::branch_count() const {
  std::size_t c = 0;
  for (const auto& n : nodes) c += n.branch && n.depth < depth ? 1 : 0;
  return c;
}

BranchTree expand_tree(const FieldValue& x, std::size_t depth, const TreeOptions& opts) {
  if (depth == 0) throw Error(Errc::InvalidArgument, "depth must be at least 1");
  const FieldValue upper = upper_endpoint(x.base());
  check_domain(x, upper);
  BranchTree t;
  t.x = x;
  t.depth = depth;
  t.merged = opts.dag_merge;
  BranchNode root;
  root.remainder = x;
  t.nodes.push_back(root);
  std::vector<std::size_t> level{0};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::size_t> next;
    std::unordered_map<FieldValue, std::size_t, FieldValueHash> index;
    for (std::size_t id : level) {
      const DigitOptions o = options_with(t.nodes[id].remainder, upper);
      t.nodes[id].branch = o.both();
      for (std::uint8_t digit = 0; digit < 2; ++digit) {
        if (!(digit ? o.one : o.zero)) continue;
        FieldValue r = child_of(t.nodes[id].remainder, digit);
        std::size_t child = BranchNode::kNone;
        if (opts.dag_merge) {
          if (auto it = index.find(r); it != index.end()) child = it->second;
        }
        if (child == BranchNode::kNone) {
          if (t.nodes.size() >= opts.node_budget) {
            throw Error(Errc::NodeBudgetExceeded, "tree exceeds " + std::to_string(opts.node_budget) + " nodes");
          }
          BranchNode n;
          n.depth = d + 1;
          n.parent = id;
          n.digit = digit;
          n.paths = 0;
          if (opts.dag_merge) index.emplace(r, t.nodes.size());
          n.remainder = std::move(r);
          child = t.nodes.size();
          t.nodes.push_back(std::move(n));
          next.push_back(child);
        }
        t.nodes[child].paths += t.nodes[id].paths;
        t.nodes[id].children[digit] = child;
        t.edges.push_back({id, child, digit});
      }
    }
    level = std::move(next);
  }
  for (std::size_t id : level) t.nodes[id].branch = options_with(t.nodes[id].remainder, upper).both();
  return t;
}

Integer count_expansions(const FieldValue& x, std::size_t depth, std::size_t node_budget) {
  const BranchTree t = expand_tree(x, depth, {true, node_budget});
  Integer total = 0;
  for (auto i : t.leaves()) total += t.nodes[i].paths;
  return total;
}

std::size_t count_branch_nodes(const FieldValue& x, std::size_t depth, std::size_t stop_after) {
  const FieldValue upper = upper_endpoint(x.base());
  check_domain(x, upper);
  std::size_t count = 0;
  std::vector<std::pair<FieldValue, std::size_t>> stack{{x, 0}};
  while (!stack.empty() && count < stop_after) {
    auto [r, d] = std::move(stack.back());
    stack.pop_back();
    if (d == depth) continue;
    const DigitOptions o = options_with(r, upper);
    if (o.both()) ++count;
    if (o.zero) stack.emplace_back(child_of(r, 0), d + 1);
    if (o.one) stack.emplace_back(child_of(r, 1), d + 1);
  }
  return count;
}

// ---------------------------------------------------------------------------

std::vector<GammaPath> branching_compactum_prefix(const FieldValue& x, std::size_t depth, std::size_t node_budget) {
  const BranchTree t = expand_tree(x, depth, {false, node_budget});
  const FieldValue upper = upper_endpoint(x.base());
  std::vector<GammaPath> out;
  for (auto leaf : t.leaves()) {
    GammaPath g;
    std::vector<std::size_t> chain;
    for (std::size_t n = leaf; n != 0; n = t.nodes[n].parent) chain.push_back(n);
    std::reverse(chain.begin(), chain.end());
    std::size_t prev = 0;
    for (std::size_t n : chain) {
      const std::uint8_t digit = t.nodes[n].digit;
      g.expansion.push_back(digit);
      if (t.nodes[prev].branch) {
        g.gamma.push_back(digit == 0 ? 1 : 0);
        g.branch_depths.push_back(t.nodes[prev].depth);
      }
      prev = n;
    }
    const FieldValue& r = t.nodes[leaf].remainder;
    g.unique_tail = decided_sign(r) == 0 || compare(r, upper) == Sign::Zero;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const GammaPath& a, const GammaPath& b) { return a.expansion < b.expansion; });
  return out;
}

namespace {

bool full_from(const FieldValue& x, std::size_t d, std::size_t k, std::size_t horizon, const FieldValue& upper) {
  if (k == 0) return true;
  FieldValue r = x;
  std::unordered_set<FieldValue, FieldValueHash> seen;
  for (; d < horizon; ++d) {
    if (decided_sign(r) == 0 || compare(r, upper) == Sign::Zero) return false;
    const DigitOptions o = options_with(r, upper);
    if (o.both()) {
      return full_from(child_of(r, 1), d + 1, k - 1, horizon, upper) &&
             full_from(child_of(r, 0), d + 1, k - 1, horizon, upper);
    }
    if (!seen.insert(r).second) return false;  // forced cycle, never branches
    r = child_of(r, o.one ? 1 : 0);
  }
  return false;
}

}  // namespace

bool is_full_branching(const FieldValue& x, std::size_t gamma_depth, std::size_t digit_horizon) {
  const FieldValue upper = upper_endpoint(x.base());
  check_domain(x, upper);
  return full_from(x, 0, gamma_depth, digit_horizon, upper);
}

std::string to_string(UniquenessVerdict::Kind k) {
  switch (k) {
    case UniquenessVerdict::Kind::UniqueCertified: return "UNIQUE_CERTIFIED";
    case UniquenessVerdict::Kind::Branches: return "BRANCHES";
    case UniquenessVerdict::Kind::Undetermined: return "UNDETERMINED";
  }
  return "UNKNOWN";
}

UniquenessVerdict is_unique_expansion(const FieldValue& x, std::size_t horizon) {
  const Beta beta = x.base();
  const FieldValue upper = upper_endpoint(beta);
  if (decided_sign(x) <= 0 || decided_sign(upper - x) <= 0) {
    throw Error(Errc::OutOfDomain, "x must lie in (0, 1/(beta-1))");
  }
  const bool certify = beta.kind() == BetaKind::Algebraic && x.is_exact();
  std::unordered_map<FieldValue, std::size_t, FieldValueHash> seen;
  UniquenessVerdict v;
  FieldValue r = x;
  for (std::size_t d = 0;; ++d) {
    if (certify) {
      auto [it, inserted] = seen.emplace(r, d);
      if (!inserted) {
        v.kind = UniquenessVerdict::Kind::UniqueCertified;
        v.depth = d;
        v.cycle_start = it->second;
        v.cycle_length = d - it->second;
        v.witness = r;
        return v;
      }
    }
    if (d == horizon) break;
    const DigitOptions o = options_with(r, upper);
    if (o.both()) {
      v.kind = UniquenessVerdict::Kind::Branches;
      v.depth = d;
      v.witness = r;
      return v;
    }
    const std::uint8_t digit = o.one ? 1 : 0;
    v.prefix.push_back(digit);
    r = child_of(r, digit);
  }
  v.kind = UniquenessVerdict::Kind::Undetermined;
  v.depth = horizon;
  v.witness = r;
  return v;
}

namespace {

// Sign of t - a (or t - abar), never 0 when (a_i) has no periodic form.
int compare_with_quasi_greedy(const EventuallyPeriodicSeq& t, const Beta& beta, const QuasiGreedy& q, bool inverted,
                              std::size_t horizon) {
  if (q.exact) return compare(t, inverted ? q.exact->complement() : *q.exact);
  std::size_t limit = std::max<std::size_t>(horizon, 4 * t.orbit_size());
  std::size_t j = 0;
  while (true) {
    const Word a = quasi_greedy_prefix(beta, limit);
    for (; j < limit; ++j) {
      const int x = t.digit(j);
      const int y = inverted ? 1 - a[j] : a[j];
      if (x != y) return x < y ? -1 : 1;
    }
    if (q.status != QuasiGreedyStatus::Aperiodic || limit >= (std::size_t{1} << 20)) {
      throw Error(Errc::QuasiGreedyUnavailable, "(a_i) has no exact form within " + std::to_string(limit) + " digits");
    }
    limit *= 2;
  }
}

}  // namespace

bool in_U_beta(const EventuallyPeriodicSeq& s, const Beta& beta, std::size_t horizon) {
  const QuasiGreedy q = quasi_greedy_of_one(beta, 1);
  for (std::size_t k = 0; k < s.orbit_size(); ++k) {
    const EventuallyPeriodicSeq t = s.shift(k);
    if (compare_with_quasi_greedy(t, beta, q, false, horizon) >= 0) return false;
    if (compare_with_quasi_greedy(t, beta, q, true, horizon) <= 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Word thue_morse(std::size_t n) {
  std::vector<std::uint8_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<std::uint8_t>(std::popcount(static_cast<std::uint64_t>(i)) & 1);
  return Word(std::move(d));
}

Word tm_word(std::size_t n) {
  if (n > 40) throw Error(Errc::LengthCapExceeded, "tm_word level too large");
  return thue_morse((std::size_t{1} << n) + 1).substr(1);
}

namespace {

// Rigorous enclosure of F(c) = sum m_n c^(1-n) - 1 in units of 2^-prec,
// using `terms` terms; c >= 3/2 keeps the tail below 2^-prec.
std::pair<Integer, Integer> kl_function(const Rational& c, std::size_t prec, std::size_t terms, const Word& tm) {
  Integer one;
  mpz_ui_pow_ui(one.get_mpz_t(), 2, prec);
  Integer ylo, yhi;  // 2^prec / c rounded down / up
  const Integer num = one * c.get_den();
  mpz_fdiv_q(ylo.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  mpz_cdiv_q(yhi.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  Integer lo = tm[terms - 1] ? one : Integer(0);
  Integer hi = lo;
  for (std::size_t n = terms - 1; n-- > 0;) {
    Integer t = lo * ylo;
    mpz_fdiv_q_2exp(lo.get_mpz_t(), t.get_mpz_t(), prec);
    t = hi * yhi;
    mpz_cdiv_q_2exp(hi.get_mpz_t(), t.get_mpz_t(), prec);
    if (tm[n]) {
      lo += one;
      hi += one;
    }
  }
  return {lo - one, hi - one + 1};
}

}  // namespace

KLConstant komornik_loreti(std::size_t digits) {
  if (digits == 0) throw Error(Errc::InvalidArgument, "digits must be at least 1");
  if (digits > kKLDigitCap) throw Error(Errc::PrecisionCapExceeded, "at most " + std::to_string(kKLDigitCap) + " digits");
  std::size_t prec = static_cast<std::size_t>(std::ceil(3.33 * static_cast<double>(digits))) + 32;
  Rational lo(3, 2), hi(2);
  for (;;) {
    // (2/3)^(N-1) * 2 <= 2^-prec
    const std::size_t terms = static_cast<std::size_t>(std::ceil((static_cast<double>(prec) + 1) / std::log2(1.5))) + 2;
    const Word tm = thue_morse(terms);
    bool stuck = false;
    for (;;) {
      const std::string a = rational_to_decimal(lo, static_cast<unsigned>(digits - 1));
      const std::string b = rational_to_decimal(hi, static_cast<unsigned>(digits - 1));
      if (a == b) return {a, lo, hi, terms};
      Rational mid = (lo + hi) / 2;
      auto [flo, fhi] = kl_function(mid, prec, terms, tm);
      if (flo > 0) {
        lo = mid;  // F is decreasing
      } else if (fhi < 0) {
        hi = mid;
      } else {
        stuck = true;
        break;
      }
    }
    if (stuck) prec *= 2;
  }
}

DimEstimate estimate_unique_dim(const Beta& beta, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least 1");
  if (n > 4096) throw Error(Errc::LengthCapExceeded, "n above 4096");
  const Word a = quasi_greedy_prefix(beta, n + 1);
  const Word ab = a.complement();
  auto prefix_function = [](const Word& s) {
    std::vector<std::size_t> pi(s.size(), 0);
    for (std::size_t i = 1; i < s.size(); ++i) {
      std::size_t k = pi[i - 1];
      while (k > 0 && s[i] != s[k]) k = pi[k - 1];
      if (s[i] == s[k]) ++k;
      pi[i] = k;
    }
    return pi;
  };
  const auto pa = prefix_function(a), pb = prefix_function(ab);
  // Active comparisons are the suffixes equal to a prefix of the bound: the
  // longest one and its borders. Returns the new longest, or -1 if d breaks a bound.
  auto step = [](const Word& s, const std::vector<std::size_t>& pi, std::size_t p, std::uint8_t d, bool upper) -> long {
    long best = -1;
    bool ok = true;
    for (std::size_t L = p;;) {
      const std::uint8_t bound = s[L];
      if (upper ? d > bound : d < bound) {
        ok = false;
        break;
      }
      if (d == bound && best < 0) best = static_cast<long>(L + 1);
      if (L == 0) break;
      L = pi[L - 1];
    }
    if (!ok) return -1;
    return best < 0 ? 0 : best;
  };
  std::map<std::pair<std::size_t, std::size_t>, Integer> states{{{0, 0}, Integer(1)}};
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::pair<std::size_t, std::size_t>, Integer> next;
    for (const auto& [st, cnt] : states) {
      for (std::uint8_t d = 0; d < 2; ++d) {
        const long p = step(a, pa, st.first, d, true);
        if (p < 0) continue;
        const long q = step(ab, pb, st.second, d, false);
        if (q < 0) continue;
        next[{static_cast<std::size_t>(p), static_cast<std::size_t>(q)}] += cnt;
      }
    }
    states = std::move(next);
  }
  DimEstimate e;
  e.n = n;
  e.count = 0;
  for (const auto& [st, cnt] : states) e.count += cnt;
  const double lc = e.count > 0 ? std::log(e.count.get_d()) : 0.0;
  e.estimate = lc / (static_cast<double>(n) * std::log(beta.approx()));
  return e;
}

}  // namespace betaexp
