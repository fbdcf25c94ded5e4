#include <omp.h>

#include <exception>
#include <vector>

#include "nilchain/checked.hpp"
#include "nilchain/sum_engine.hpp"

namespace nilchain {

namespace {

struct Accumulator {
  std::vector<std::int64_t> by_mask;
  std::vector<std::uint64_t> by_length;

  Accumulator(std::size_t masks, std::size_t lengths) : by_mask(masks, 0), by_length(lengths, 0) {}

  void record(std::size_t length, std::uint32_t mask) {
    checked_add(by_mask[mask], std::int64_t{length % 2 == 0 ? 1 : -1}, "alternating sum");
    checked_add(by_length[length], std::uint64_t{1}, "chain histogram");
  }

  void merge(const Accumulator& other) {
    for (std::size_t k = 0; k < by_mask.size(); ++k) {
      checked_add(by_mask[k], other.by_mask[k], "alternating sum");
    }
    for (std::size_t k = 0; k < by_length.size(); ++k) {
      checked_add(by_length[k], other.by_length[k], "chain histogram");
    }
  }
};

}  // namespace

ComplexSummary summarize_complex(const ChainSpace& space, int threads) {
  const std::size_t masks = std::size_t{1} << space.system->rank();
  const std::size_t lengths = space.size() + 1;
  Accumulator total(masks, lengths);
  total.record(0, space.full_mask);  // empty chain

  std::exception_ptr failure;
  const long n = static_cast<long>(space.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel num_threads(team)
  {
    Accumulator local(masks, lengths);
    try {
#pragma omp for schedule(dynamic, 1) nowait
      for (long first = 0; first < n; ++first) {
        walk_chains(space, static_cast<std::size_t>(first), static_cast<std::size_t>(first) + 1,
                    [&](std::span<const std::uint32_t> path, std::uint32_t mask) {
                      local.record(path.size(), mask);
                    });
      }
    } catch (...) {
#pragma omp critical(nilchain_failure)
      if (!failure) failure = std::current_exception();
    }
#pragma omp critical(nilchain_merge)
    {
      try {
        total.merge(local);
      } catch (...) {
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  ComplexSummary summary{space.kind, {}, {}};
  for (std::size_t m = 0; m < masks; ++m) {
    summary.sum.add(ParabolicType(static_cast<std::uint32_t>(m)), total.by_mask[m]);
  }
  std::size_t used = lengths;
  while (used > 1 && total.by_length[used - 1] == 0) --used;
  summary.counts.by_length.assign(total.by_length.begin(), total.by_length.begin() + used);
  for (auto c : summary.counts.by_length) checked_add(summary.counts.total, c, "chain count");
  return summary;
}

SumVector alternating_sum(const RootSystem& rs, ComplexKind kind, int threads) {
  return summarize_complex(make_chain_space(rs, kind), threads).sum;
}

}  // namespace nilchain
