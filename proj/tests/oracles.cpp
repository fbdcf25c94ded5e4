#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace oracle {

namespace {

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

bool positive(const Vec& v) {
  bool nonzero = false;
  for (int c : v) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

bool is_ideal(const RootSet& roots, const RootSet& n) {
  for (const auto& b : n) {
    for (const auto& g : roots) {
      auto s = add(b, g);
      if (roots.count(s) && !n.count(s)) return false;
    }
  }
  return true;
}

std::vector<RootSet> vertices(const RootSet& roots, std::size_t rank, Kind kind) {
  std::vector<RootSet> out;
  for (auto& n : ideals_by_deletion(roots)) {
    if (n.empty()) continue;
    if (kind == Kind::CA && !is_abelian(roots, n)) continue;
    if (kind == Kind::CR && nilradical(roots, normalizer(roots, n, rank)) != n) continue;
    out.push_back(std::move(n));
  }
  return out;
}

bool proper_subset(const RootSet& a, const RootSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

RootSet positive_roots(const Cartan& cartan) {
  const std::size_t n = cartan.size();
  std::set<Vec> all;
  std::deque<Vec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Vec b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += b[j] * cartan[i][j];
      Vec r = b;
      r[i] -= pairing;
      if (all.insert(r).second) queue.push_back(r);
    }
  }
  RootSet out;
  for (const auto& v : all) {
    if (positive(v)) out.insert(v);
  }
  return out;
}

std::vector<RootSet> ideals_exhaustive(const RootSet& roots) {
  const std::vector<Vec> list(roots.begin(), roots.end());
  std::vector<RootSet> out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << list.size()); ++subset) {
    RootSet n;
    for (std::size_t k = 0; k < list.size(); ++k) {
      if ((subset >> k) & 1u) n.insert(list[k]);
    }
    if (is_ideal(roots, n)) out.push_back(std::move(n));
  }
  return out;
}

std::vector<RootSet> ideals_by_deletion(const RootSet& roots) {
  std::set<RootSet> seen{roots};
  std::vector<RootSet> stack{roots};
  while (!stack.empty()) {
    RootSet n = stack.back();
    stack.pop_back();
    for (const auto& b : n) {
      bool minimal = true;
      for (const auto& g : roots) {
        if (n.count(sub(b, g))) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      RootSet smaller = n;
      smaller.erase(b);
      if (seen.insert(smaller).second) stack.push_back(std::move(smaller));
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_abelian(const RootSet& roots, const RootSet& n) {
  for (const auto& a : n) {
    for (const auto& b : n) {
      if (roots.count(add(a, b))) return false;
    }
  }
  return true;
}

RootSet derived(const RootSet& roots, const RootSet& n) {
  RootSet out;
  for (const auto& a : n) {
    for (const auto& b : n) {
      auto s = add(a, b);
      if (roots.count(s)) out.insert(s);
    }
  }
  return out;
}

std::uint32_t normalizer(const RootSet& roots, const RootSet& n, std::size_t rank) {
  std::uint32_t best = 0;
  int best_size = -1;
  for (std::uint32_t j = 0; j < (std::uint32_t{1} << rank); ++j) {
    bool ok = true;
    for (const auto& a : roots) {
      bool in_levi = true;
      for (std::size_t i = 0; i < rank; ++i) {
        if (a[i] != 0 && !((j >> i) & 1u)) in_levi = false;
      }
      if (!in_levi) continue;
      for (const auto& b : n) {
        const Vec d = sub(b, a);
        const bool zero = std::all_of(d.begin(), d.end(), [](int c) { return c == 0; });
        Vec neg(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) neg[k] = -d[k];
        if (zero || roots.count(neg) || (roots.count(d) && !n.count(d))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok && __builtin_popcount(j) > best_size) {
      best = j;
      best_size = __builtin_popcount(j);
    }
  }
  return best;
}

RootSet nilradical(const RootSet& roots, std::uint32_t j) {
  RootSet out;
  for (const auto& b : roots) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] != 0 && !((j >> i) & 1u)) {
        out.insert(b);
        break;
      }
    }
  }
  return out;
}

ChainTally complex_tally(const Cartan& cartan, Kind kind) {
  const std::size_t rank = cartan.size();
  const std::uint32_t full = rank == 0 ? 0 : (~std::uint32_t{0} >> (32 - rank));
  if (kind == Kind::CP) {
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t m = 0; m < full; ++m) subsets.push_back(m);
    return chains_by_subsets(subsets.size(), subsets, full, [&](std::size_t a, std::size_t b) {
      return subsets[a] != subsets[b] && (subsets[a] & ~subsets[b]) == 0;
    });
  }
  const RootSet roots = positive_roots(cartan);
  const auto verts = vertices(roots, rank, kind);
  std::vector<std::uint32_t> masks;
  for (const auto& v : verts) masks.push_back(normalizer(roots, v, rank));
  return chains_by_subsets(verts.size(), masks, full,
                           [&](std::size_t a, std::size_t b) { return proper_subset(verts[a], verts[b]); });
}

std::int64_t count_chains_recursive(const Cartan& cartan, Kind kind) {
  const std::size_t rank = cartan.size();
  const RootSet roots = positive_roots(cartan);
  const auto verts = vertices(roots, rank, kind);
  std::vector<std::int64_t> memo(verts.size(), -1);
  // chains whose smallest member is v
  std::function<std::int64_t(std::size_t)> from = [&](std::size_t v) {
    if (memo[v] >= 0) return memo[v];
    std::int64_t total = 1;
    for (std::size_t w = 0; w < verts.size(); ++w) {
      if (proper_subset(verts[v], verts[w])) total += from(w);
    }
    return memo[v] = total;
  };
  std::int64_t total = 1;
  for (std::size_t v = 0; v < verts.size(); ++v) total += from(v);
  return total;
}

}  // namespace oracle
