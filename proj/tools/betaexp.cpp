// betaexp: command-line front end for the beta-expansion library.
//
// Exit codes: 0 success, 1 usage or parse error, 2 domain error,
// 3 undecided / horizon / occurrence not found, 4 budget exhausted.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "betaexp/branching.hpp"
#include "betaexp/error.hpp"
#include "betaexp/expr.hpp"
#include "betaexp/io.hpp"
#include "betaexp/normalize.hpp"
#include "betaexp/polynomial.hpp"
#include "betaexp/stats.hpp"
#include "betaexp/stats_kernels.hpp"

using namespace betaexp;
using io::json;

namespace {

struct Globals {
  std::string beta;
  std::string interval;  // "lo,hi"
  unsigned precision = 128;
  std::string x;
  std::string format;  // text | json | csv; empty picks the command default
  std::string output;
  int jobs = 0;
  unsigned digits = 20;
};

int exit_code(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::InvalidArgument:
      return 1;
    case Errc::Undecided:
    case Errc::UndeterminedWithinHorizon:
    case Errc::HorizonExhausted:
    case Errc::OccurrenceNotFound:
    case Errc::QuasiGreedyUnavailable:
      return 3;
    case Errc::BudgetExhausted:
    case Errc::NodeBudgetExceeded:
      return 4;
    default:
      return 2;
  }
}

Beta load_beta(const Globals& g) {
  if (g.beta.empty()) throw Error(Errc::InvalidArgument, "--beta is required");
  std::optional<std::pair<Rational, Rational>> iv;
  if (!g.interval.empty()) {
    const auto comma = g.interval.find(',');
    if (comma == std::string::npos) throw Error(Errc::ParseError, "--interval expects lo,hi");
    iv.emplace(parse_rational(g.interval.substr(0, comma)), parse_rational(g.interval.substr(comma + 1)));
  }
  return make_beta(g.beta, iv, g.precision);
}

// random:<seed> draws k from mt19937_64 (seed_seq{seed lo32, seed hi32}) and
// returns k / 2^64, redrawing on k = 0.
FieldValue random_x(std::uint64_t seed, const Beta& beta) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 gen(seq);
  std::uint64_t k = 0;
  while (k == 0) k = gen();
  Integer num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof k, 0, 0, &k);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 64);
  return FieldValue::rational(beta, Rational(num, den));
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "invalid seed '" + s + "'");
  }
}

FieldValue load_x(const std::string& spec, const Beta& beta) {
  if (spec.empty()) throw Error(Errc::InvalidArgument, "--x is required");
  auto starts = [&](std::string_view p) { return spec.rfind(p, 0) == 0; };
  FieldValue x;
  if (starts("random:")) {
    x = random_x(parse_seed(spec.substr(7)), beta);
  } else if (starts("val:")) {
    x = val_beta(Word::parse(spec.substr(4)), beta);
  } else if (starts("seq:")) {
    x = val_beta(EventuallyPeriodicSeq::parse(spec.substr(4)), beta);
  } else if (starts("expr:")) {
    x = evaluate_expression(spec.substr(5), beta);
  } else {
    x = FieldValue::rational(beta, parse_rational(spec));
  }
  if (decided_sign(x) < 0 || decided_sign(upper_endpoint(beta) - x) < 0) {
    throw Error(Errc::OutOfDomain, "x = " + fv_to_decimal(x, 12) + " lies outside [0, 1/(beta-1)]");
  }
  return x;
}

Word read_word(const std::string& word, const std::string& input) {
  if (!word.empty()) return Word::parse(word);
  std::string text;
  if (!input.empty() && input != "-") {
    std::ifstream in(input);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::string digits;
  for (char c : text) {
    if (c == '0' || c == '1') {
      digits.push_back(c);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(Errc::ParseError, "input word contains '" + std::string(1, c) + "'");
    }
  }
  return Word::parse(digits);
}

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {}

  std::string format(const std::string& fallback) const { return g_.format.empty() ? fallback : g_.format; }

  void write(const std::string& text) const {
    if (g_.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(g_.output);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + g_.output + "'");
    out << text;
  }

  void write(json j, const std::string& command) const {
    json doc = {{"schema_version", io::kSchemaVersion}, {"command", command}};
    doc.update(j);
    write(doc.dump(2) + "\n");
  }

 private:
  const Globals& g_;
};

std::string join_words(const std::vector<Word>& ws, const char* open, const char* close) {
  std::string s = open;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) s += ',';
    s += ws[i].str();
  }
  return s + close;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact beta-expansion toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key = value file");
  Globals g;
  app.add_option("--beta", g.beta, "Base: poly:<P>[@lo,hi], dec:<literal> or a decimal literal");
  app.add_option("--interval", g.interval, "Isolating interval lo,hi for poly: bases");
  app.add_option("--precision", g.precision, "Enclosure precision in bits")->check(CLI::Range(64U, 1U << 20));
  app.add_option("--x", g.x, "x: rational, val:<word>, seq:<pre(per)>, expr:<expr in beta>, random:<seed>");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--output", g.output, "Write the result to a file");
  app.add_option("--jobs", g.jobs, "OpenMP threads for the statistics kernels");
  app.add_option("--digits", g.digits, "Decimal digits when printing values");
  app.fallthrough();

  const Output out(g);
  std::function<int()> action;

  // expand
  auto* expand = app.add_subcommand("expand", "Greedy, lazy or quasi-greedy digits");
  std::string mode = "greedy";
  std::size_t n = 20;
  expand->add_option("--mode", mode)->check(CLI::IsMember({"greedy", "lazy", "quasi-greedy-one"}));
  expand->add_option("-n", n, "Number of digits");
  expand->callback([&] {
    action = [&] {
      const Beta beta = load_beta(g);
      json j = {{"beta", io::to_json(beta)}, {"mode", mode}, {"n", n}};
      Word w;
      if (mode == "quasi-greedy-one") {
        const QuasiGreedy q = quasi_greedy_of_one(beta, n);
        w = q.digits.prefix(n);
        j["status"] = q.status == QuasiGreedyStatus::Periodic    ? "periodic"
                      : q.status == QuasiGreedyStatus::Aperiodic ? "aperiodic"
                                                                 : "undetermined";
        if (q.exact) j["exact"] = q.exact->str();
        if (q.finite_greedy) j["finite_greedy"] = q.finite_greedy->str();
      } else {
        const FieldValue x = load_x(g.x, beta);
        j["x"] = io::to_json(x, g.digits);
        w = mode == "greedy" ? greedy_expansion(x, n) : lazy_expansion(x, n);
      }
      j["digits"] = w.str();
      if (out.format("text") == "json") {
        out.write(j, "expand");
      } else {
        out.write(w.str() + "\n");
      }
      return 0;
    };
  });

  // normalize
  auto* norm = app.add_subcommand("normalize", "Greedy representative of a word's value");
  std::string word;
  std::size_t out_len = 0;
  bool show_cover = false;
  norm->add_option("--word", word)->required();
  norm->add_option("-n", out_len, "Output length (default |word|)");
  norm->add_flag("--cover", show_cover, "Also report the cover word");
  norm->callback([&] {
    action = [&] {
      const Beta beta = load_beta(g);
      const Word w = Word::parse(word);
      const NormalizeResult r = normalize(w, beta, out_len ? out_len : w.size());
      json j = {{"beta", io::to_json(beta)},
                {"word", w.str()},
                {"digits", r.digits.str()},
                {"finite", r.finite},
                {"finite_length", r.finite_length},
                {"value", io::to_json(val_beta(w, beta), g.digits)}};
      std::string text = r.digits.str() + "\n";
      if (show_cover) {
        const CoverWord c = find_cover_word(w, beta);
        j["cover"] = io::to_json(c, g.digits);
        text += "cover " + c.v.str() + "\n";
      }
      if (out.format("text") == "json") {
        out.write(j, "normalize");
      } else {
        out.write(text);
      }
      return 0;
    };
  });

  // universalize
  auto* uni = app.add_subcommand("universalize", "Embed every word up to length L into an expansion of x");
  std::size_t level = 4, budget = 50000, horizon = kDefaultScanHorizon, rounds = 1;
  bool finitary = false;
  uni->add_option("-L", level, "Word length");
  uni->add_option("-N", budget, "Digit budget");
  uni->add_option("--horizon", horizon, "Scan-ahead per target");
  uni->add_option("--rounds", rounds, "Passes over the dictionary");
  uni->add_flag("--finitary", finitary, "Finite substitution mode (Algebraic bases)");
  uni->callback([&] {
    action = [&] {
      const Beta beta = load_beta(g);
      const FieldValue x = load_x(g.x, beta);
      json j;
      Word output;
      UniversalStatus status;
      if (finitary) {
        const FinitaryResult r = finitary_universalize(x, level, budget);
        j = io::to_json(r, g.digits);
        output = r.output;
        status = r.status;
      } else {
        const UniversalResult r = universal_expansion(x, level, budget, {horizon, rounds});
        j = io::to_json(r, g.digits);
        output = r.output;
        status = r.status;
      }
      const UniversalityCheck census = is_universal_prefix(output, std::min<std::size_t>(level, kernels::kDenseBlockCap));
      j["beta"] = io::to_json(beta);
      j["x"] = io::to_json(x, g.digits);
      j["level"] = level;
      j["census"] = {{"universal", census.universal},
                     {"missing_count", census.missing_count},
                     {"missing", join_words(census.missing, "", "")}};
      if (out.format("text") == "json") {
        out.write(j, "universalize");
      } else {
        out.write(output.str() + "\n");
        for (const auto& r : j["report"]) {
          std::cerr << "embedded " << r["target"].get<std::string>() << " at " << r["position"] << '\n';
        }
        std::cerr << "status " << to_string(status) << ", universal(" << level << ")=" << census.universal << '\n';
      }
      if (status == UniversalStatus::BudgetExhausted) return 4;
      if (status == UniversalStatus::OccurrenceNotFound) return 3;
      return 0;
    };
  });

  // equiv-class
  auto* equiv = app.add_subcommand("equiv-class", "Words of the same length and value");
  std::string eq_word;
  equiv->add_option("--word", eq_word)->required();
  equiv->callback([&] {
    action = [&] {
      const Beta beta = load_beta(g);
      auto ws = enumerate_equivalent_words(Word::parse(eq_word), beta);
      std::sort(ws.rbegin(), ws.rend());  // greedy representative first
      if (out.format("text") == "json") {
        json a = json::array();
        for (const auto& w : ws) a.push_back(w.str());
        out.write({{"beta", io::to_json(beta)}, {"word", eq_word}, {"class", a}}, "equiv-class");
      } else {
        out.write(join_words(ws, "{", "}") + "\n");
      }
      return 0;
    };
  });

  // tree
  auto* tree = app.add_subcommand("tree", "Expansion tree of x");
  std::size_t depth = 8, node_budget = 1'000'000;
  bool dag = false, dot = false;
  tree->add_option("--depth", depth);
  tree->add_option("--budget", node_budget, "Node budget");
  tree->add_flag("--dag", dag, "Merge equal remainders");
  tree->add_flag("--dot", dot, "Graphviz output");
  tree->callback([&] {
    action = [&] {
      const Beta beta = load_beta(g);
      const FieldValue x = load_x(g.x, beta);
      const BranchTree t = expand_tree(x, depth, {dag, node_budget});
      if (dot) {
        out.write(io::to_dot(t));
      } else if (out.format("text") == "json") {
        json j = io::to_json(t, g.digits);
        j["beta"] = io::to_json(beta);
        out.write(j, "tree");
      } else {
        std::string s;
        if (!dag) {
          for (const auto& w : t.leaf_words()) s += w.str() + "\n";
        }
        Integer total = 0;
        for (auto i : t.leaves()) total += t.nodes[i].paths;
        s += "expansions=" + total.get_str() + " branch_nodes=" + std::to_string(t.branch_count()) + "\n";
        out.write(s);
      }
      return 0;
    };
  });

  // unique
  auto* uniq = app.add_subcommand("unique", "Uniqueness of the expansion of x, or membership of a sequence");
  std::size_t uhorizon = 4096;
  std::string seq;
  uniq->add_option("--horizon", uhorizon);
  uniq->add_option("--seq", seq, "Test pre(per) against the lexicographic characterization");
  uniq->callback([&] {
    action = [&] {
      const Beta beta = load_beta(g);
      if (!seq.empty()) {
        const auto s = EventuallyPeriodicSeq::parse(seq);
        const bool in = in_U_beta(s, beta);
        if (out.format("text") == "json") {
          out.write({{"beta", io::to_json(beta)}, {"seq", s.str()}, {"in_U", in}}, "unique");
        } else {
          out.write(std::string("in_U=") + (in ? "true" : "false") + "\n");
        }
        return 0;
      }
      const FieldValue x = load_x(g.x, beta);
      const UniquenessVerdict v = is_unique_expansion(x, uhorizon);
      if (out.format("text") == "json") {
        json j = io::to_json(v, g.digits);
        j["beta"] = io::to_json(beta);
        j["x"] = io::to_json(x, g.digits);
        out.write(j, "unique");
      } else {
        std::string s = to_string(v.kind) + " depth=" + std::to_string(v.depth);
        if (v.kind == UniquenessVerdict::Kind::UniqueCertified) {
          s += " cycle_start=" + std::to_string(v.cycle_start) + " cycle_length=" + std::to_string(v.cycle_length);
        }
        out.write(s + "\n");
      }
      return 0;
    };
  });

  // gamma
  auto* gamma = app.add_subcommand("gamma", "Choice sequences at the branch points of x");
  std::size_t gdepth = 9, full_depth = 0, ghorizon = 256;
  gamma->add_option("--depth", gdepth, "Digit depth");
  gamma->add_option("--full", full_depth, "Also test full branching to this choice depth");
  gamma->add_option("--horizon", ghorizon, "Digit horizon for the full branching test");
  gamma->callback([&] {
    action = [&] {
      const Beta beta = load_beta(g);
      const FieldValue x = load_x(g.x, beta);
      const auto paths = branching_compactum_prefix(x, gdepth);
      std::optional<bool> full;
      if (full_depth) full = is_full_branching(x, full_depth, ghorizon);
      if (out.format("text") == "json") {
        json j = {{"beta", io::to_json(beta)}, {"x", io::to_json(x, g.digits)}, {"depth", gdepth},
                  {"paths", io::to_json(paths)}};
        if (full) j["full_branching"] = {{"depth", full_depth}, {"value", *full}};
        out.write(j, "gamma");
      } else {
        std::string s;
        for (const auto& p : paths) {
          s += p.expansion.str() + " " + (p.gamma.empty() ? "-" : p.gamma.str()) + (p.unique_tail ? " *" : "") + "\n";
        }
        if (full) s += "full_branching(" + std::to_string(full_depth) + ")=" + (*full ? "true" : "false") + "\n";
        out.write(s);
      }
      return 0;
    };
  });

  // kl-constant
  auto* kl = app.add_subcommand("kl-constant", "Smallest base with a unique expansion of 1");
  std::size_t kl_digits = 10;
  kl->add_option("--digits", kl_digits, "Significant digits");
  kl->callback([&] {
    action = [&] {
      const KLConstant c = komornik_loreti(kl_digits);
      if (out.format("text") == "json") {
        out.write({{"digits", kl_digits},
                   {"value", c.decimal},
                   {"lo", c.lo.get_str()},
                   {"hi", c.hi.get_str()},
                   {"terms", c.terms}},
                  "kl-constant");
      } else {
        out.write(c.decimal + "\n");
      }
      return 0;
    };
  });

  // tm-word
  auto* tm = app.add_subcommand("tm-word", "Thue-Morse block w_n");
  std::size_t tm_n = 3;
  tm->add_option("-n", tm_n);
  tm->callback([&] {
    action = [&] {
      const Word w = tm_word(tm_n);
      if (out.format("text") == "json") {
        out.write({{"n", tm_n}, {"word", w.str()}}, "tm-word");
      } else {
        out.write(w.str() + "\n");
      }
      return 0;
    };
  });

  // dim-estimate
  auto* dim = app.add_subcommand("dim-estimate", "Growth-rate estimate for the unique-expansion set");
  std::size_t dim_n = 20;
  dim->add_option("-n", dim_n, "Word length");
  dim->callback([&] {
    action = [&] {
      const Beta beta = load_beta(g);
      const DimEstimate e = estimate_unique_dim(beta, dim_n);
      if (out.format("text") == "json") {
        out.write({{"beta", io::to_json(beta)}, {"n", e.n}, {"count", e.count.get_str()}, {"estimate", e.estimate}},
                  "dim-estimate");
      } else {
        std::ostringstream s;
        s.precision(6);
        s << std::fixed << "estimate=" << e.estimate << " count=" << e.count.get_str() << " n=" << e.n << "\n";
        out.write(s.str());
      }
      return 0;
    };
  });

  // stats
  auto* stats = app.add_subcommand("stats", "Factor complexity, block frequencies and normality of a word");
  std::string st_word, st_input;
  std::size_t blocks = 0, cplx = 0, normality = 0, universal = 0;
  stats->add_option("--word", st_word, "Word (default: read digits from --input or stdin)");
  stats->add_option("--input", st_input, "File with the digits, '-' for stdin");
  stats->add_option("--blocks", blocks, "Block frequency table for this length");
  stats->add_option("--complexity", cplx, "Factor counts p(1..n)");
  stats->add_option("--normality", normality, "Normality deviation up to this block length");
  stats->add_option("--universal", universal, "Check that every word up to this length occurs");
  stats->callback([&] {
    action = [&] {
      kernels::set_max_threads(g.jobs);
      const Word w = read_word(st_word, st_input);
      if (!blocks && !cplx && !normality && !universal) {
        throw Error(Errc::InvalidArgument, "choose --blocks, --complexity, --normality or --universal");
      }
      json j = {{"length", w.size()}};
      std::string text, csv;
      if (blocks) {
        const BlockFrequencyTable t = block_frequencies(w, blocks);
        j["blocks"] = io::to_json(t);
        csv += io::to_csv(t);
        text += io::to_csv(t);
        if ((std::size_t{1} << blocks) <= w.size()) {
          const NormalityDeviation d = normality_deviation(w, blocks);
          j["block_deviation"] = io::to_json(d);
          std::ostringstream s;
          s << "deviation=" << d.deviation << " k=" << d.k << " block=" << d.block.str() << "\n";
          text += s.str();
          if (out.format("csv") == "csv") std::cerr << s.str();
        }
      }
      if (cplx) {
        const ComplexityProfile p = complexity(w, cplx);
        j["complexity"] = io::to_json(p);
        csv += io::to_csv(p);
        for (std::size_t k = 1; k <= cplx; ++k) text += "p(" + std::to_string(k) + ")=" + std::to_string(p.counts[k]) + "\n";
      }
      if (normality) {
        const NormalityDeviation d = normality_deviation(w, normality);
        j["normality"] = io::to_json(d);
        std::ostringstream s;
        s << "deviation=" << d.deviation << " k=" << d.k << " block=" << d.block.str() << "\n";
        text += s.str();
        csv += "max_k,deviation,block\n" + std::to_string(normality) + "," + std::to_string(d.deviation) + "," +
               d.block.str() + "\n";
      }
      if (universal) {
        const UniversalityCheck c = is_universal_prefix(w, universal);
        j["universal"] = {{"level", universal},
                          {"universal", c.universal},
                          {"missing_count", c.missing_count},
                          {"missing", join_words(c.missing, "", "")}};
        const std::string line = "universal(" + std::to_string(universal) + ")=" + (c.universal ? "true" : "false") +
                                 (c.missing.empty() ? "" : " missing=" + join_words(c.missing, "{", "}")) + "\n";
        text += line;
        csv += "level,universal,missing_count\n" + std::to_string(universal) + "," + (c.universal ? "true" : "false") +
               "," + std::to_string(c.missing_count) + "\n";
      }
      const std::string fmt = out.format((blocks || cplx) && !normality && !universal ? "csv" : "text");
      if (fmt == "json") {
        out.write(j, "stats");
      } else {
        out.write(fmt == "csv" ? csv : text);
      }
      return 0;
    };
  });

  // sample
  auto* sample = app.add_subcommand("sample", "Random expansions: fair-coin digits or a random path through the tree");
  std::uint64_t seed = 1;
  std::size_t sample_n = 1000;
  std::string sample_mode = "bernoulli";
  sample->add_option("--seed", seed);
  sample->add_option("-n", sample_n, "Number of digits");
  sample->add_option("--mode", sample_mode)->check(CLI::IsMember({"bernoulli", "branch"}));
  sample->callback([&] {
    action = [&] {
      kernels::set_max_threads(g.jobs);
      const Beta beta = load_beta(g);
      json j = {{"beta", io::to_json(beta)}, {"seed", seed}, {"n", sample_n}, {"mode", sample_mode}};
      Word w;
      if (sample_mode == "bernoulli") {
        const BernoulliSample s = sample_bernoulli_expansion(beta, seed, sample_n);
        w = s.w;
        j["lo"] = io::to_json(s.lo, g.digits);
        j["hi"] = io::to_json(s.hi, g.digits);
        j["value_digits"] = s.value_digits;
      } else {
        const FieldValue x = load_x(g.x, beta);
        w = random_branch_expansion(x, seed, sample_n);
        j["x"] = io::to_json(x, g.digits);
      }
      j["digits"] = w.str();
      if (out.format("text") == "json") {
        out.write(j, "sample");
      } else {
        out.write(w.str() + "\n");
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "betaexp: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "betaexp: " << e.what() << '\n';
    return 1;
  }
}
