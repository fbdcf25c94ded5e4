#include "nilchain/format.hpp"

#include <cctype>
#include <limits>

#include "nilchain/errors.hpp"

namespace nilchain {

namespace {

template <typename Range>
std::string braced(const Range& values) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// Tokenizer shared by both chain grammars.
class LiteralReader {
 public:
  explicit LiteralReader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& what) {
    skip_space();
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError("malformed chain literal: " + what + ", found " + found, pos_);
  }

  long long number() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw ParseError("malformed chain literal: index too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected an index");
    return value;
  }

  // `{a,b,...}`
  std::vector<long long> member() {
    expect('{', "'{'");
    std::vector<long long> values;
    if (accept('}')) return values;
    while (true) {
      values.push_back(number());
      if (accept('}')) return values;
      expect(',', "',' or '}'");
    }
  }

  std::vector<std::vector<long long>> chain() {
    std::vector<std::vector<long long>> members;
    const bool bracketed = accept('[');
    if (bracketed && accept(']')) {
      if (!at_end()) fail("expected end of input");
      return members;
    }
    if (!bracketed && at_end()) return members;
    while (true) {
      members.push_back(member());
      if (!accept('<')) break;
    }
    if (bracketed) expect(']', "'<' or ']'");
    if (!at_end()) fail(bracketed ? "expected end of input" : "expected '<' or end of input");
    return members;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_coeffs(const Root& r) {
  std::string out = "(";
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(r.coeffs[k]);
  }
  return out + ")";
}

std::string format_ideal(const Ideal& n) { return braced(n.indices()); }

std::string format_ideal_expanded(const Ideal& n) {
  std::string out = "[";
  bool first = true;
  for (auto a : n.indices()) {
    if (!first) out += ',';
    out += format_coeffs(n.system().root(a));
    first = false;
  }
  return out + "]";
}

std::string format_parabolic(ParabolicType j) { return braced(j.labels()); }

std::string format_chain(const Chain& c) {
  std::string out = "[";
  for (std::size_t k = 0; k < c.length(); ++k) {
    if (k > 0) out += " < ";
    out += format_ideal(c.members()[k]);
  }
  return out + "]";
}

std::string format_parabolic_chain(const ParabolicChain& d) {
  std::string out = "[";
  for (std::size_t k = 0; k < d.length(); ++k) {
    if (k > 0) out += " < ";
    out += format_parabolic(d.members()[k]);
  }
  return out + "]";
}

std::string format_sum(const SumVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [j, coeff] : v.entries()) {
    if (!out.empty()) out += ' ';
    out += format_parabolic(j) + ':' + (coeff > 0 ? "+" : "") + std::to_string(coeff);
  }
  return out;
}

Chain parse_chain_literal(const RootSystem& rs, std::string_view text) {
  LiteralReader reader(text);
  std::vector<Ideal> members;
  for (const auto& values : reader.chain()) {
    std::vector<RootIndex> indices;
    for (auto v : values) {
      if (v >= static_cast<long long>(rs.size())) {
        throw UsageError("root index " + std::to_string(v) + " out of range for " + rs.name() +
                         " (" + std::to_string(rs.size()) + " positive roots)");
      }
      indices.push_back(static_cast<RootIndex>(v));
    }
    members.push_back(Ideal::from_indices(rs, indices));
  }
  return Chain(rs, std::move(members));
}

ParabolicChain parse_parabolic_chain_literal(std::size_t rank, std::string_view text) {
  LiteralReader reader(text);
  std::vector<ParabolicType> members;
  for (const auto& values : reader.chain()) {
    std::vector<int> labels(values.begin(), values.end());
    members.push_back(ParabolicType::from_labels(labels, rank));
  }
  return ParabolicChain(rank, std::move(members));
}

nlohmann::json ideal_to_json(const Ideal& n) { return n.indices(); }

nlohmann::json chain_to_json(const Chain& c) {
  auto out = nlohmann::json::array();
  for (const auto& m : c.members()) out.push_back(ideal_to_json(m));
  return out;
}

nlohmann::json parabolic_chain_to_json(const ParabolicChain& d) {
  auto out = nlohmann::json::array();
  for (auto j : d.members()) out.push_back(j.labels());
  return out;
}

nlohmann::json sum_to_json(const SumVector& v) {
  auto out = nlohmann::json::array();
  for (const auto& [j, coeff] : v.entries()) out.push_back({j.labels(), coeff});
  return out;
}

Chain chain_from_json(const RootSystem& rs, const nlohmann::json& j) {
  if (!j.is_array()) throw UsageError("chain JSON must be an array of arrays");
  std::vector<Ideal> members;
  for (const auto& m : j) {
    if (!m.is_array()) throw UsageError("chain JSON must be an array of arrays");
    members.push_back(Ideal::from_indices(rs, m.get<std::vector<RootIndex>>()));
  }
  return Chain(rs, std::move(members));
}

SumVector sum_from_json(std::size_t rank, const nlohmann::json& j) {
  SumVector out;
  for (const auto& entry : j) {
    const auto labels = entry.at(0).get<std::vector<int>>();
    out.add(ParabolicType::from_labels(labels, rank), entry.at(1).get<std::int64_t>());
  }
  return out;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json out;
  out["type"] = report.type;
  out["rank"] = report.rank;
  out["scope"] =
      "Sums run over chains of ideals of one fixed Borel subalgebra. Sums over G-conjugacy "
      "classes of CI and CA chains are not computed; CR and CP chains have unique standard "
      "representatives, so their chain-level sums are class-level sums.";

  nlohmann::json complexes = nlohmann::json::object();
  for (const auto& c : report.complexes) {
    complexes[std::string(to_string(c.kind))] = {
        {"chain_counts", {{"total", c.counts.total}, {"by_length", c.counts.by_length}}},
        {"sum", sum_to_json(c.sum)},
    };
  }
  out["complex"] = complexes;
  out["closed_form"] = sum_to_json(report.closed_form);

  nlohmann::json involutions = nlohmann::json::object();
  for (const auto& r : report.involutions) {
    involutions[std::string(to_string(r.pairing))] = {
        {"domain_size", r.domain_size},
        {"failures", r.failures()},
        {"complement_sum", sum_to_json(r.complement_sum)},
        {"orbits_checked", r.orbits_checked},
        {"orbit_partition", r.orbit_partition},
        {"orbit_count", r.orbit_count},
    };
  }
  out["involutions"] = involutions;
  out["cr_cp_bijection"] = {{"cr_chains", report.bijection.cr_chains},
                            {"cp_chains", report.bijection.cp_chains},
                            {"failures", report.bijection.failures}};

  auto intervals = nlohmann::json::array();
  for (const auto& e : report.intervals) {
    intervals.push_back(
        {{"smallest", e.smallest.labels()}, {"chain_sum", e.chain_sum}, {"expected", e.expected}});
  }
  out["boolean_interval"] = intervals;

  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& [name, ok] : report.verdicts) verdicts[name] = ok;
  out["verdicts"] = verdicts;
  out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

}  // namespace nilchain
