#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "betaexp/expansion.hpp"

namespace betaexp {

struct DigitOptions {
  bool zero = false;  // beta x <= 1/(beta-1)
  bool one = false;   // x >= 1/beta
  bool both() const noexcept { return zero && one; }
};

/// Digits that start some expansion of x. Throws OutOfDomain, Undecided.
DigitOptions digit_options(const FieldValue& x);

struct BranchNode {
  std::size_t depth = 0;
  FieldValue remainder;      // x = val(path) + beta^-depth remainder
  bool branch = false;       // both digits viable
  std::size_t parent = 0;    // first parent (root points to itself)
  std::uint8_t digit = 0;    // digit on the edge from `parent`
  Integer paths = 1;         // root-to-node paths (above 1 only with merging)
  std::size_t children[2] = {kNone, kNone};

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
};

struct BranchEdge {
  std::size_t from;
  std::size_t to;
  std::uint8_t digit;
};

struct TreeOptions {
  bool dag_merge = false;  // merge equal remainders at the same depth
  std::size_t node_budget = 1'000'000;
};

/// Every expansion prefix of x up to `depth` digits. Node 0 is the root.
struct BranchTree {
  FieldValue x;
  std::size_t depth = 0;
  bool merged = false;
  std::vector<BranchNode> nodes;
  std::vector<BranchEdge> edges;

  std::vector<std::size_t> leaves() const;  // nodes at full depth
  Word path_to(std::size_t node) const;     // digits along first parents
  /// All depth-n prefixes (tree mode; in DAG mode only first-parent paths).
  std::vector<Word> leaf_words() const;
  std::size_t branch_count() const;
};

/// Throws OutOfDomain, NodeBudgetExceeded.
BranchTree expand_tree(const FieldValue& x, std::size_t depth, const TreeOptions& opts = {});

/// Number of distinct depth-n expansion prefixes (merged DAG, path counts summed).
Integer count_expansions(const FieldValue& x, std::size_t depth, std::size_t node_budget = 1'000'000);

/// Counts branch nodes above depth `depth` by depth-first search, stopping at `stop_after`.
std::size_t count_branch_nodes(const FieldValue& x, std::size_t depth, std::size_t stop_after);

/// One depth-n path with its choice sequence: symbol 1 for the lower branch
/// (digit 0 at the branch point), 0 for the upper one.
struct GammaPath {
  Word expansion;
  Word gamma;
  std::vector<std::size_t> branch_depths;
  /// No further branching below the last branch point within the depth;
  /// the remaining symbols are then taken to be 0.
  bool unique_tail = false;
};

std::vector<GammaPath> branching_compactum_prefix(const FieldValue& x, std::size_t depth,
                                                  std::size_t node_budget = 1'000'000);

/// True iff all 2^gamma_depth choice prefixes are realised by expansions whose
/// branch points lie within the first digit_horizon digits.
bool is_full_branching(const FieldValue& x, std::size_t gamma_depth, std::size_t digit_horizon);

struct UniquenessVerdict {
  enum class Kind { UniqueCertified, Branches, Undetermined };
  Kind kind = Kind::Undetermined;
  std::size_t depth = 0;   // branch depth, or cycle end for UniqueCertified, or horizon
  Word prefix;             // digits followed up to `depth`
  FieldValue witness;      // remainder at the branch node
  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
};

std::string to_string(UniquenessVerdict::Kind k);

/// Follows the forced digits of x. Branches on the first node with two options;
/// UniqueCertified (Algebraic bases only) when the remainder orbit repeats.
UniquenessVerdict is_unique_expansion(const FieldValue& x, std::size_t horizon);

/// abar < sigma^n s < a for all n >= 0. Throws QuasiGreedyUnavailable.
bool in_U_beta(const EventuallyPeriodicSeq& s, const Beta& beta, std::size_t horizon = 1 << 14);

/// First n Thue-Morse digits, m_1 = 0.
Word thue_morse(std::size_t n);
/// w_n = m_2 ... m_{2^n + 1}.
Word tm_word(std::size_t n);

struct KLConstant {
  std::string decimal;  // `digits` significant digits
  Rational lo, hi;      // rigorous enclosure of the root
  std::size_t terms = 0;
};

inline constexpr std::size_t kKLDigitCap = 200;

/// Root in (1,2) of sum m_n x^(1-n) = 1. Throws PrecisionCapExceeded.
KLConstant komornik_loreti(std::size_t digits);

struct DimEstimate {
  double estimate = 0;
  Integer count;     // words of length n obeying abar <= sigma^k w <= a on every prefix
  std::size_t n = 0;
};

/// log(count) / (n log beta): a growth-rate estimate, not a certified dimension.
/// Throws LengthCapExceeded.
DimEstimate estimate_unique_dim(const Beta& beta, std::size_t n);

}  // namespace betaexp
