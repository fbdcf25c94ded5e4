#include "nilchain/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

#include "nilchain/errors.hpp"

namespace nilchain {

ParabolicType ParabolicType::from_labels(std::span<const int> labels, std::size_t rank) {
  std::uint32_t mask = 0;
  for (int l : labels) {
    if (l < 1 || static_cast<std::size_t>(l) > rank) {
      throw UsageError("simple index " + std::to_string(l) + " out of range 1.." +
                       std::to_string(rank));
    }
    mask |= std::uint32_t{1} << (l - 1);
  }
  return ParabolicType(mask);
}

int ParabolicType::size() const noexcept { return std::popcount(mask_); }

std::vector<int> ParabolicType::labels() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (contains(static_cast<std::size_t>(i))) out.push_back(i + 1);
  }
  return out;
}

bool ParabolicTypeOrder::operator()(ParabolicType a, ParabolicType b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.labels() < b.labels();
}

int corank(ParabolicType j, const RootSystem& rs) {
  if (!j.is_subset_of(ParabolicType::full(rs.rank()))) {
    throw UsageError("parabolic type is not a subset of the simple roots of " + rs.name());
  }
  return static_cast<int>(rs.rank()) - j.size();
}

bool is_upper_closed(const RootSystem& rs, const IndexSet& roots) {
  if (!roots.is_subset_of(rs.all_roots())) return false;
  bool closed = true;
  roots.for_each([&](std::size_t a) {
    if (!rs.upper_covers(static_cast<RootIndex>(a)).is_subset_of(roots)) closed = false;
  });
  return closed;
}

Ideal::Ideal(const RootSystem& rs, IndexSet roots) : rs_(&rs), roots_(roots) {
  if (!is_upper_closed(rs, roots)) {
    throw DomainError("root set is not an ideal of the Borel subalgebra of " + rs.name());
  }
}

Ideal Ideal::from_indices(const RootSystem& rs, std::span<const RootIndex> indices) {
  IndexSet set;
  for (RootIndex a : indices) {
    if (a >= rs.size()) {
      throw UsageError("root index " + std::to_string(a) + " out of range for " + rs.name());
    }
    set.set(a);
  }
  return Ideal(rs, set);
}

std::vector<RootIndex> Ideal::indices() const {
  std::vector<RootIndex> out;
  roots_.for_each([&](std::size_t a) { out.push_back(static_cast<RootIndex>(a)); });
  return out;
}

bool IdealOrder::operator()(const IndexSet& a, const IndexSet& b) const {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  // Lexicographic on increasing index lists: the first differing element
  // decides, and the set holding the smaller element there comes first.
  const IndexSet diff = (a - b) | (b - a);
  if (diff.empty()) return false;
  std::size_t first = 0;
  bool found = false;
  diff.for_each([&](std::size_t i) {
    if (!found) {
      first = i;
      found = true;
    }
  });
  return a.test(first);
}

bool IdealOrder::operator()(const Ideal& a, const Ideal& b) const {
  return (*this)(a.roots(), b.roots());
}

namespace {

// Roots are decided from the top of the poset down, so a root's upper covers
// are always decided before it.
void collect_ideals(const RootSystem& rs, int position, IndexSet& current,
                    std::vector<IndexSet>& out) {
  if (position < 0) {
    out.push_back(current);
    return;
  }
  collect_ideals(rs, position - 1, current, out);
  const auto a = static_cast<RootIndex>(position);
  if (rs.upper_covers(a).is_subset_of(current)) {
    current.set(a);
    collect_ideals(rs, position - 1, current, out);
    current.reset(a);
  }
}

}  // namespace

std::vector<Ideal> enumerate_ideals(const RootSystem& rs) {
  std::vector<IndexSet> sets;
  IndexSet current;
  collect_ideals(rs, static_cast<int>(rs.size()) - 1, current, sets);
  std::sort(sets.begin(), sets.end(), IdealOrder{});
  std::vector<Ideal> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(Ideal(rs, s, Ideal::Unchecked{}));
  return out;
}

bool is_abelian(const Ideal& n) {
  const RootSystem& rs = n.system();
  bool abelian = true;
  n.roots().for_each([&](std::size_t a) {
    if (rs.sum_partners(static_cast<RootIndex>(a)).intersects(n.roots())) abelian = false;
  });
  return abelian;
}

Ideal derived_ideal(const Ideal& n) {
  const RootSystem& rs = n.system();
  IndexSet out;
  n.roots().for_each([&](std::size_t a) {
    const IndexSet partners = rs.sum_partners(static_cast<RootIndex>(a)) & n.roots();
    partners.for_each([&](std::size_t b) {
      out.set(*rs.add(static_cast<RootIndex>(a), static_cast<RootIndex>(b)));
    });
  });
  return Ideal(rs, out);
}

Ideal sum_ideals(const Ideal& a, const Ideal& b) {
  if (&a.system() != &b.system()) {
    throw UsageError("cannot add ideals of different root systems");
  }
  return Ideal(a.system(), a.roots() | b.roots());
}

std::uint32_t normalizer_mask(const RootSystem& rs, const IndexSet& roots) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (roots.test(rs.simple_root(i))) continue;
    bool normalizes = true;
    roots.for_each([&](std::size_t b) {
      if (auto down = rs.subtract_simple(static_cast<RootIndex>(b), i); down && !roots.test(*down)) {
        normalizes = false;
      }
    });
    if (normalizes) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

ParabolicType normalizer_type(const Ideal& n) {
  return ParabolicType(normalizer_mask(n.system(), n.roots()));
}

Ideal nilradical_of_parabolic(const RootSystem& rs, ParabolicType j) {
  if (!j.is_subset_of(ParabolicType::full(rs.rank()))) {
    throw UsageError("parabolic type is not a subset of the simple roots of " + rs.name());
  }
  IndexSet out;
  for (std::size_t a = 0; a < rs.size(); ++a) {
    if ((rs.support(static_cast<RootIndex>(a)) & ~j.mask()) != 0) out.set(a);
  }
  assert(is_upper_closed(rs, out));
  return Ideal(rs, out, Ideal::Unchecked{});
}

bool is_radical_member(const Ideal& n) {
  return nilradical_of_parabolic(n.system(), normalizer_type(n)) == n;
}

}  // namespace nilchain
