#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilchain/chain.hpp"
#include "nilchain/ideal.hpp"
#include "nilchain/pairing.hpp"
#include "nilchain/root_system.hpp"

namespace nilchain {

/// Finitely supported integer combination of parabolic types. This is the
/// value of the universal equivariant function f(G_C) = e_{type(G_C)}; any other
/// f into any abelian group factors through it.
class SumVector {
 public:
  using Map = std::map<ParabolicType, std::int64_t, ParabolicTypeOrder>;

  /// Adds coeff * e_j with overflow checking; zero entries are dropped.
  void add(ParabolicType j, std::int64_t coeff);
  std::int64_t coefficient(ParabolicType j) const;
  const Map& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Sum of f(J) * coefficient(J).
  std::int64_t specialize(const std::function<std::int64_t(ParabolicType)>& f) const;

  SumVector operator-(const SumVector& other) const;
  friend bool operator==(const SumVector&, const SumVector&) = default;

 private:
  Map entries_;
};

struct ChainCounts {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_length;  // index = chain length

  friend bool operator==(const ChainCounts&, const ChainCounts&) = default;
};

struct ComplexSummary {
  ComplexKind kind;
  SumVector sum;
  ChainCounts counts;
};

/// Straightforward reference: materializes every chain and evaluates
/// chain_stabilizer_type on it. Single-threaded; kept for cross-checking.
ComplexSummary summarize_complex_reference(const RootSystem& rs, ComplexKind kind);

/// OpenMP kernel: partitions the chain DFS by first member and keeps the
/// running stabilizer mask along each path. threads <= 0 uses the OpenMP
/// default. Results do not depend on the thread count.
ComplexSummary summarize_complex(const ChainSpace& space, int threads = 0);

SumVector alternating_sum(const RootSystem& rs, ComplexKind kind, int threads = 0);
SumVector alternating_sum_reference(const RootSystem& rs, ComplexKind kind);

/// Sum over all I in S of (-1)^{|S \ I|} e_I.
SumVector closed_form_sum(const RootSystem& rs);

struct IntervalEntry {
  ParabolicType smallest;
  std::int64_t chain_sum = 0;  // signed count of CP chains with this smallest member
  std::int64_t expected = 0;   // (-1)^{|S \ I|}
};

/// Per-I refinement of the closed form: signed CP chain counts grouped by
/// smallest member, for every proper I.
std::vector<IntervalEntry> boolean_interval_table(const RootSystem& rs);
bool boolean_interval_check(const RootSystem& rs);

struct InvolutionReport {
  Pairing pairing = Pairing::NonAbelian;
  std::uint64_t domain_size = 0;
  std::uint64_t errors = 0;               // pairing threw on a domain chain
  std::uint64_t not_involutive = 0;       // (C')' != C
  std::uint64_t length_mismatch = 0;      // |C'| != |C| +- 1
  std::uint64_t stabilizer_mismatch = 0;  // type(G_C') != type(G_C)
  std::uint64_t left_domain = 0;          // C' not in the complement set
  std::uint64_t top_changed = 0;          // non-abelian pairing only
  std::uint64_t normalizer_mismatch = 0;  // non-radical pairing only
  SumVector complement_sum;  // signed stabilizer sum over the domain alone
  bool orbits_checked = false;
  bool orbit_partition = false;
  std::uint64_t orbit_count = 0;

  std::uint64_t failures() const noexcept {
    return errors + not_involutive + length_mismatch + stabilizer_mismatch + left_domain +
           top_changed + normalizer_mismatch;
  }
  bool passed() const noexcept {
    return failures() == 0 && complement_sum.is_zero() && (!orbits_checked || orbit_partition);
  }
};

/// Runs a pairing over every chain of its domain and checks the involution
/// laws. Orbits are collected explicitly when the CI vertex set has at most
/// 128 elements.
InvolutionReport check_pairing(const RootSystem& rs, Pairing pairing, int threads = 0);

struct BijectionReport {
  std::uint64_t cr_chains = 0;
  std::uint64_t cp_chains = 0;
  std::uint64_t failures = 0;
  bool passed() const noexcept { return failures == 0 && cr_chains == cp_chains; }
};

/// Round trips, length and stabilizer preservation and order reversal of the
/// CR <-> CP correspondence over every chain on both sides.
BijectionReport check_cr_cp_bijection(const RootSystem& rs);

struct VerifyOptions {
  int threads = 0;
  std::uint64_t max_chains = 100'000'000;
};

struct VerificationReport {
  std::string type;
  int rank = 0;
  std::vector<ComplexSummary> complexes;  // CI, CA, CR, CP
  SumVector closed_form;
  std::vector<InvolutionReport> involutions;
  BijectionReport bijection;
  std::vector<IntervalEntry> intervals;
  std::vector<std::pair<std::string, bool>> verdicts;
  double elapsed_ms = 0.0;

  const ComplexSummary& complex(ComplexKind kind) const;
  bool verdict(const std::string& name) const;
  bool all_passed() const;
};

/// Full suite for one root system. Throws ChainLimitError before enumerating
/// if any complex exceeds options.max_chains.
VerificationReport verify(const RootSystem& rs, const VerifyOptions& options = {});

}  // namespace nilchain
