#include "betaexp/io.hpp"

#include <cstdio>
#include <sstream>

#include "betaexp/polynomial.hpp"

namespace betaexp::io {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

json words(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

}  // namespace

json to_json(const Beta& beta) {
  return {{"description", beta.description()},
          {"kind", beta.kind() == BetaKind::Algebraic ? "algebraic" : "decimal"},
          {"minpoly", format_polynomial(beta.minpoly())},
          {"approx", beta.approx()}};
}

json to_json(const FieldValue& v, unsigned digits) {
  json coeffs = json::array();
  for (const auto& c : v.coefficients()) coeffs.push_back(c.get_str());
  return {{"decimal", fv_to_decimal(v, digits)},
          {"coefficients", coeffs},
          {"radius", v.radius().get_str()},
          {"width", width_report(v)}};
}

json to_json(const CoverWord& c, unsigned digits) {
  return {{"w", c.w.str()}, {"v", c.v.str()}, {"n", c.n}, {"a", to_json(c.a, digits)}, {"b", to_json(c.b, digits)}};
}

namespace {

json records(const std::vector<UniversalRecord>& report, unsigned digits, bool with_values) {
  json a = json::array();
  for (const auto& r : report) {
    json j = {{"target", r.target.str()},
              {"embedded", r.embedded.str()},
              {"position", r.splice_position},
              {"prefix_length", r.prefix_length_after}};
    if (with_values) {
      j["y"] = to_json(r.y, digits);
      j["y_lo"] = to_json(r.y_lo, digits);
      j["y_hi"] = to_json(r.y_hi, digits);
    }
    a.push_back(std::move(j));
  }
  return a;
}

}  // namespace

json to_json(const UniversalResult& r, unsigned digits) {
  json j = {{"status", to_string(r.status)},
            {"output", r.output.str()},
            {"length", r.output.size()},
            {"remainder", to_json(r.remainder, digits)},
            {"report", records(r.report, digits, true)}};
  if (r.failed_target) j["failed_target"] = r.failed_target->str();
  return j;
}

json to_json(const FinitaryResult& r, unsigned digits) {
  json j = {{"status", to_string(r.status)},
            {"output", r.output.str()},
            {"length", r.output.size()},
            {"remainder", to_json(r.remainder, digits)},
            {"report", records(r.report, digits, false)}};
  if (r.failed_target) j["failed_target"] = r.failed_target->str();
  return j;
}

json to_json(const BranchTree& t, unsigned digits) {
  json nodes = json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    nodes.push_back({{"id", i},
                     {"depth", n.depth},
                     {"branch", n.branch},
                     {"paths", n.paths.get_str()},
                     {"remainder", fv_to_decimal(n.remainder, digits)}});
  }
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"digit", e.digit}});
  Integer total = 0;
  for (auto i : t.leaves()) total += t.nodes[i].paths;
  json j = {{"depth", t.depth},
            {"merged", t.merged},
            {"x", to_json(t.x, digits)},
            {"branch_nodes", t.branch_count()},
            {"expansions", total.get_str()},
            {"nodes", nodes},
            {"edges", edges}};
  if (!t.merged) j["leaves"] = words(t.leaf_words());
  return j;
}

json to_json(const std::vector<GammaPath>& paths) {
  json a = json::array();
  for (const auto& p : paths) {
    a.push_back({{"expansion", p.expansion.str()},
                 {"gamma", p.gamma.str()},
                 {"branch_depths", p.branch_depths},
                 {"unique_tail", p.unique_tail}});
  }
  return a;
}

json to_json(const UniquenessVerdict& v, unsigned digits) {
  json j = {{"verdict", to_string(v.kind)}, {"depth", v.depth}, {"prefix", v.prefix.str()}};
  if (v.witness.attached()) j["witness"] = to_json(v.witness, digits);
  if (v.kind == UniquenessVerdict::Kind::UniqueCertified) {
    j["cycle_start"] = v.cycle_start;
    j["cycle_length"] = v.cycle_length;
  }
  return j;
}

json to_json(const ComplexityProfile& p) {
  return {{"max_n", p.max_n}, {"prefix_length", p.prefix_length}, {"counts", p.counts}};
}

json to_json(const BlockFrequencyTable& t) {
  json blocks = json::array();
  for (std::size_t c = 0; c < t.counts.size(); ++c) {
    blocks.push_back({{"block", t.block(c).str()}, {"count", t.counts[c]}, {"freq", t.frequency(c)}});
  }
  return {{"k", t.k}, {"length", t.length}, {"windows", t.windows()}, {"blocks", blocks}};
}

json to_json(const NormalityDeviation& d) {
  return {{"deviation", d.deviation}, {"k", d.k}, {"block", d.block.str()}};
}

std::string to_dot(const BranchTree& t) {
  std::ostringstream os;
  os << "digraph expansions {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    os << "  n" << i << " [label=\"" << fv_to_decimal(n.remainder, 6) << "\"";
    if (n.branch) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& e : t.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << int(e.digit) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_csv(const BlockFrequencyTable& t) {
  std::ostringstream os;
  os << "block,count,freq\n";
  for (std::size_t c = 0; c < t.counts.size(); ++c) {
    os << t.block(c).str() << ',' << t.counts[c] << ',' << format_double(t.frequency(c)) << '\n';
  }
  return os.str();
}

std::string to_csv(const ComplexityProfile& p) {
  std::ostringstream os;
  os << "n,count\n";
  for (std::size_t n = 1; n < p.counts.size(); ++n) os << n << ',' << p.counts[n] << '\n';
  return os.str();
}

}  // namespace betaexp::io
