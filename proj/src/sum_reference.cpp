#include <algorithm>
#include <map>

#include "nilchain/checked.hpp"
#include "nilchain/errors.hpp"
#include "nilchain/sum_engine.hpp"

namespace nilchain {

void SumVector::add(ParabolicType j, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = entries_.try_emplace(j, 0);
  checked_add(it->second, coeff, "alternating sum");
  if (it->second == 0) entries_.erase(it);
}

std::int64_t SumVector::coefficient(ParabolicType j) const {
  auto it = entries_.find(j);
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t SumVector::specialize(const std::function<std::int64_t(ParabolicType)>& f) const {
  std::int64_t total = 0;
  for (const auto& [j, coeff] : entries_) {
    std::int64_t term;
    if (__builtin_mul_overflow(f(j), coeff, &term)) {
      throw OverflowError("integer overflow in specialization");
    }
    checked_add(total, term, "specialization");
  }
  return total;
}

SumVector SumVector::operator-(const SumVector& other) const {
  SumVector out = *this;
  for (const auto& [j, coeff] : other.entries_) {
    if (coeff == INT64_MIN) throw OverflowError("integer overflow in difference");
    out.add(j, -coeff);
  }
  return out;
}

namespace {

void record(ComplexSummary& summary, std::size_t length, ParabolicType stabilizer) {
  if (summary.counts.by_length.size() <= length) summary.counts.by_length.resize(length + 1, 0);
  checked_add(summary.counts.by_length[length], std::uint64_t{1}, "chain histogram");
  checked_add(summary.counts.total, std::uint64_t{1}, "chain count");
  summary.sum.add(stabilizer, length % 2 == 0 ? 1 : -1);
}

}  // namespace

ComplexSummary summarize_complex_reference(const RootSystem& rs, ComplexKind kind) {
  ComplexSummary summary{kind, {}, {}};
  if (kind == ComplexKind::CP) {
    for_each_parabolic_chain(rs, [&](const ParabolicChain& d) {
      record(summary, d.length(), chain_stabilizer_type(d));
    });
  } else {
    for_each_chain(rs, kind, [&](const Chain& c) {
      record(summary, c.length(), chain_stabilizer_type(c));
    });
  }
  return summary;
}

SumVector alternating_sum_reference(const RootSystem& rs, ComplexKind kind) {
  return summarize_complex_reference(rs, kind).sum;
}

SumVector closed_form_sum(const RootSystem& rs) {
  SumVector out;
  const std::uint32_t full = ParabolicType::full(rs.rank()).mask();
  for (std::uint32_t m = 0;; ++m) {
    const ParabolicType j(m);
    if (j.is_subset_of(ParabolicType(full))) out.add(j, corank(j, rs) % 2 == 0 ? 1 : -1);
    if (m == full) break;
  }
  return out;
}

std::vector<IntervalEntry> boolean_interval_table(const RootSystem& rs) {
  const ParabolicType full = ParabolicType::full(rs.rank());
  std::map<ParabolicType, std::int64_t, ParabolicTypeOrder> by_smallest;
  for_each_parabolic_chain(rs, [&](const ParabolicChain& d) {
    if (d.empty()) return;
    checked_add(by_smallest[d.members().front()], std::int64_t{d.length() % 2 == 0 ? 1 : -1},
                "interval sum");
  });
  std::vector<IntervalEntry> out;
  for (std::uint32_t m = 0; m < full.mask(); ++m) {
    const ParabolicType i(m);
    const auto it = by_smallest.find(i);
    out.push_back({i, it == by_smallest.end() ? 0 : it->second, corank(i, rs) % 2 == 0 ? 1 : -1});
  }
  std::sort(out.begin(), out.end(), [](const IntervalEntry& a, const IntervalEntry& b) {
    return ParabolicTypeOrder{}(a.smallest, b.smallest);
  });
  return out;
}

bool boolean_interval_check(const RootSystem& rs) {
  // The empty chain is the only one with stabilizer S and contributes +1.
  const auto table = boolean_interval_table(rs);
  return std::all_of(table.begin(), table.end(),
                     [](const IntervalEntry& e) { return e.chain_sum == e.expected; });
}

}  // namespace nilchain
