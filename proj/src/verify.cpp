#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <unordered_map>

#include "nilchain/checked.hpp"
#include "nilchain/errors.hpp"
#include "nilchain/sum_engine.hpp"

namespace nilchain {

namespace {

struct PairingTally {
  InvolutionReport counts;
  std::vector<std::int64_t> complement_by_mask;
  std::vector<std::pair<IndexSet, IndexSet>> orbits;
};

// Key of a chain: the set of its members' positions in the CI vertex list.
// A strictly increasing chain is determined by its member set.
std::optional<IndexSet> chain_key(const Chain& c,
                                  const std::unordered_map<IndexSet, std::uint32_t, IndexSetHash>& ids) {
  IndexSet key;
  for (const auto& m : c.members()) {
    auto it = ids.find(m.roots());
    if (it == ids.end()) return std::nullopt;
    key.set(it->second);
  }
  return key;
}

void check_one(Pairing pairing, const Chain& c, PairingTally& tally, bool collect,
               const std::unordered_map<IndexSet, std::uint32_t, IndexSetHash>& ids) {
  auto& r = tally.counts;
  ++r.domain_size;
  const ParabolicType stab = chain_stabilizer_type(c);
  checked_add(tally.complement_by_mask[stab.mask()], std::int64_t{c.length() % 2 == 0 ? 1 : -1},
              "complement sum");

  std::optional<Chain> image;
  try {
    image = apply_pairing(pairing, c);
  } catch (const DomainError&) {
    ++r.errors;
    return;
  }
  const Chain& d = *image;

  if (!in_pairing_domain(pairing, d)) ++r.left_domain;
  const std::size_t a = c.length();
  const std::size_t b = d.length();
  if (a + 1 != b && b + 1 != a) ++r.length_mismatch;
  if (chain_stabilizer_type(d) != stab) ++r.stabilizer_mismatch;

  if (pairing == Pairing::NonAbelian) {
    if (d.empty() || d.top() != c.top()) ++r.top_changed;
  } else {
    for (const auto& m : c.members()) {
      const Ideal radical = nilradical_of_parabolic(c.system(), normalizer_type(m));
      if (radical != m) {
        if (normalizer_type(radical) != normalizer_type(m)) ++r.normalizer_mismatch;
        break;
      }
    }
  }

  try {
    if (in_pairing_domain(pairing, d) && apply_pairing(pairing, d) != c) ++r.not_involutive;
  } catch (const DomainError&) {
    ++r.not_involutive;
  }

  if (collect) {
    auto kc = chain_key(c, ids);
    auto kd = chain_key(d, ids);
    if (kc && kd) tally.orbits.emplace_back(std::min(*kc, *kd), std::max(*kc, *kd));
  }
}

}  // namespace

InvolutionReport check_pairing(const RootSystem& rs, Pairing pairing, int threads) {
  const ChainSpace space = make_chain_space(rs, ComplexKind::CI);
  const bool collect = space.size() <= IndexSet::kCapacity;
  std::unordered_map<IndexSet, std::uint32_t, IndexSetHash> ids;
  for (std::uint32_t k = 0; k < space.size(); ++k) ids.emplace(space.ideals[k], k);

  const std::size_t masks = std::size_t{1} << rs.rank();
  PairingTally total{{}, std::vector<std::int64_t>(masks, 0), {}};
  std::exception_ptr failure;
  const long n = static_cast<long>(space.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel num_threads(team)
  {
    PairingTally local{{}, std::vector<std::int64_t>(masks, 0), {}};
    try {
#pragma omp for schedule(dynamic, 1) nowait
      for (long first = 0; first < n; ++first) {
        walk_chains(space, static_cast<std::size_t>(first), static_cast<std::size_t>(first) + 1,
                    [&](std::span<const std::uint32_t> path, std::uint32_t) {
                      const Chain c = chain_from_path(space, path);
                      if (in_pairing_domain(pairing, c)) check_one(pairing, c, local, collect, ids);
                    });
      }
    } catch (...) {
#pragma omp critical(nilchain_failure)
      if (!failure) failure = std::current_exception();
    }
#pragma omp critical(nilchain_merge)
    {
      auto& t = total.counts;
      const auto& l = local.counts;
      t.domain_size += l.domain_size;
      t.errors += l.errors;
      t.not_involutive += l.not_involutive;
      t.length_mismatch += l.length_mismatch;
      t.stabilizer_mismatch += l.stabilizer_mismatch;
      t.left_domain += l.left_domain;
      t.top_changed += l.top_changed;
      t.normalizer_mismatch += l.normalizer_mismatch;
      for (std::size_t m = 0; m < masks; ++m) total.complement_by_mask[m] += local.complement_by_mask[m];
      total.orbits.insert(total.orbits.end(), local.orbits.begin(), local.orbits.end());
    }
  }
  if (failure) std::rethrow_exception(failure);

  InvolutionReport report = total.counts;
  report.pairing = pairing;
  for (std::size_t m = 0; m < masks; ++m) {
    report.complement_sum.add(ParabolicType(static_cast<std::uint32_t>(m)), total.complement_by_mask[m]);
  }

  // Each domain chain contributes its orbit once; a genuine partition into
  // two-element orbits has every orbit listed exactly twice and no chain in
  // two different orbits.
  report.orbits_checked = collect;
  if (collect) {
    auto& orbits = total.orbits;
    std::sort(orbits.begin(), orbits.end());
    bool ok = orbits.size() == report.domain_size && orbits.size() % 2 == 0;
    for (std::size_t k = 0; ok && k < orbits.size(); k += 2) {
      if (orbits[k] != orbits[k + 1] || orbits[k].first == orbits[k].second) ok = false;
      if (k + 2 < orbits.size() && orbits[k + 2] == orbits[k]) ok = false;
    }
    if (ok) {
      std::vector<IndexSet> members;
      for (std::size_t k = 0; k < orbits.size(); k += 2) {
        members.push_back(orbits[k].first);
        members.push_back(orbits[k].second);
      }
      std::sort(members.begin(), members.end());
      ok = std::adjacent_find(members.begin(), members.end()) == members.end();
    }
    report.orbit_partition = ok;
    report.orbit_count = orbits.size() / 2;
  }
  return report;
}

BijectionReport check_cr_cp_bijection(const RootSystem& rs) {
  BijectionReport report;
  for_each_chain(rs, ComplexKind::CR, [&](const Chain& c) {
    ++report.cr_chains;
    try {
      const ParabolicChain d = cr_to_cp(c);
      bool ok = d.length() == c.length() && cp_to_cr(rs, d) == c &&
                chain_stabilizer_type(d) == chain_stabilizer_type(c);
      for (std::size_t k = 0; ok && k < c.length(); ++k) {
        ok = d.members()[k] == normalizer_type(c.members()[c.length() - 1 - k]);
      }
      if (ok && !c.empty()) ok = chain_stabilizer_type(c) == normalizer_type(c.top());
      if (!ok) ++report.failures;
    } catch (const std::exception&) {
      ++report.failures;
    }
  });
  for_each_parabolic_chain(rs, [&](const ParabolicChain& d) {
    ++report.cp_chains;
    try {
      const Chain c = cp_to_cr(rs, d);
      if (!membership(ComplexKind::CR, c) || cr_to_cp(c) != d || c.length() != d.length()) {
        ++report.failures;
      }
    } catch (const std::exception&) {
      ++report.failures;
    }
  });
  return report;
}

const ComplexSummary& VerificationReport::complex(ComplexKind kind) const {
  for (const auto& c : complexes) {
    if (c.kind == kind) return c;
  }
  throw UsageError("report has no entry for " + std::string(to_string(kind)));
}

bool VerificationReport::verdict(const std::string& name) const {
  for (const auto& [key, value] : verdicts) {
    if (key == name) return value;
  }
  throw UsageError("report has no verdict named " + name);
}

bool VerificationReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.second; });
}

VerificationReport verify(const RootSystem& rs, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  if (rs.spec()) {
    report.type = std::string(1, rs.spec()->letter());
    report.rank = rs.spec()->rank();
  } else {
    report.type = rs.name();
    report.rank = static_cast<int>(rs.rank());
  }

  const ComplexKind kinds[] = {ComplexKind::CI, ComplexKind::CA, ComplexKind::CR, ComplexKind::CP};
  std::vector<ChainSpace> spaces;
  for (auto kind : kinds) {
    spaces.push_back(make_chain_space(rs, kind));
    const std::uint64_t count = count_chains(spaces.back());
    if (count > options.max_chains) {
      throw ChainLimitError(std::string(to_string(kind)) + " for " + rs.name() + " has " +
                            std::to_string(count) + " chains, above the limit of " +
                            std::to_string(options.max_chains));
    }
  }
  for (const auto& space : spaces) report.complexes.push_back(summarize_complex(space, options.threads));
  report.closed_form = closed_form_sum(rs);

  report.involutions.push_back(check_pairing(rs, Pairing::NonAbelian, options.threads));
  report.involutions.push_back(check_pairing(rs, Pairing::NonRadical, options.threads));
  report.bijection = check_cr_cp_bijection(rs);
  report.intervals = boolean_interval_table(rs);

  const auto& ci = report.complex(ComplexKind::CI).sum;
  const auto& ca = report.complex(ComplexKind::CA).sum;
  const auto& cr = report.complex(ComplexKind::CR).sum;
  const auto& cp = report.complex(ComplexKind::CP).sum;
  const auto& closed = report.closed_form;

  const bool intervals_ok =
      std::all_of(report.intervals.begin(), report.intervals.end(),
                  [](const IntervalEntry& e) { return e.chain_sum == e.expected; });
  const std::int64_t euler = cp.specialize([](ParabolicType) { return std::int64_t{1}; });
  const auto& nonabelian = report.involutions[0];
  const auto& nonradical = report.involutions[1];

  report.verdicts = {
      {"ci_equals_ca", ci == ca},
      {"ca_equals_cr", ca == cr},
      {"cr_equals_cp", cr == cp},
      {"cp_equals_closed_form", cp == closed},
      {"five_way_identity", ci == ca && ca == cr && cr == cp && cp == closed},
      {"involution_ci_minus_ca", nonabelian.passed()},
      {"involution_ci_minus_cr", nonradical.passed()},
      {"cancellation_witness", (ci - ca) == nonabelian.complement_sum &&
                                   (ci - cr) == nonradical.complement_sum &&
                                   nonabelian.complement_sum.is_zero() &&
                                   nonradical.complement_sum.is_zero()},
      {"cr_cp_bijection", report.bijection.passed()},
      {"boolean_interval", intervals_ok},
      {"euler_characteristic", rs.rank() == 0 ? euler == 1 : euler == 0},
  };

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace nilchain
