#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nilchain/index_set.hpp"
#include "nilchain/root_system.hpp"

namespace nilchain {

/// A subset I of the simple roots, naming the standard parabolic P_I that
/// contains the fixed Borel subgroup. Bit i (zero-based) stands for alpha_{i+1}.
class ParabolicType {
 public:
  constexpr ParabolicType() = default;
  constexpr explicit ParabolicType(std::uint32_t mask) : mask_(mask) {}

  /// From one-based simple indices, as printed by the CLI.
  static ParabolicType from_labels(std::span<const int> labels, std::size_t rank);
  static constexpr ParabolicType full(std::size_t rank) {
    return ParabolicType(rank == 0 ? 0u : (~std::uint32_t{0} >> (32 - rank)));
  }

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1u; }
  constexpr bool is_subset_of(ParabolicType o) const noexcept { return (mask_ & ~o.mask_) == 0; }
  int size() const noexcept;
  /// One-based labels in increasing order.
  std::vector<int> labels() const;

  constexpr ParabolicType operator&(ParabolicType o) const noexcept {
    return ParabolicType(mask_ & o.mask_);
  }
  friend constexpr bool operator==(ParabolicType, ParabolicType) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Canonical order on parabolic types: larger sets first, then lexicographic
/// on the sorted labels. For rank 2 this lists S, {1}, {2}, {}.
struct ParabolicTypeOrder {
  bool operator()(ParabolicType a, ParabolicType b) const;
};

/// |S \ J|.
int corank(ParabolicType j, const RootSystem& rs);

/// An ad-nilpotent ideal of the fixed Borel subalgebra, stored as its set of
/// positive roots. The set is upper-closed in the root poset; the empty set is
/// the zero ideal.
class Ideal {
 public:
  /// Throws DomainError unless roots is upper-closed.
  Ideal(const RootSystem& rs, IndexSet roots);

  static Ideal zero(const RootSystem& rs) { return Ideal(rs, IndexSet{}, Unchecked{}); }
  static Ideal full(const RootSystem& rs) { return Ideal(rs, rs.all_roots(), Unchecked{}); }
  /// Throws UsageError for an out-of-range index and DomainError if not closed.
  static Ideal from_indices(const RootSystem& rs, std::span<const RootIndex> indices);

  const RootSystem& system() const noexcept { return *rs_; }
  const IndexSet& roots() const noexcept { return roots_; }
  bool empty() const noexcept { return roots_.empty(); }
  std::size_t size() const noexcept { return roots_.count(); }
  bool contains(RootIndex a) const { return roots_.test(a); }
  bool is_subset_of(const Ideal& o) const { return roots_.is_subset_of(o.roots_); }
  bool is_proper_subset_of(const Ideal& o) const { return roots_.is_proper_subset_of(o.roots_); }
  std::vector<RootIndex> indices() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.rs_ == b.rs_ && a.roots_ == b.roots_;
  }

 private:
  struct Unchecked {};
  Ideal(const RootSystem& rs, IndexSet roots, Unchecked) : rs_(&rs), roots_(roots) {}

  const RootSystem* rs_;
  IndexSet roots_;

  friend std::vector<Ideal> enumerate_ideals(const RootSystem& rs);
  friend Ideal nilradical_of_parabolic(const RootSystem& rs, ParabolicType j);
};

/// Canonical ideal order: by size, then lexicographic on sorted root indices.
struct IdealOrder {
  bool operator()(const Ideal& a, const Ideal& b) const;
  bool operator()(const IndexSet& a, const IndexSet& b) const;
};

bool is_upper_closed(const RootSystem& rs, const IndexSet& roots);

/// Every ideal, from the zero ideal to the full nilradical, in canonical order.
/// Depth-first over roots from the top of the poset down: a root may join only
/// once all of its upper covers are present, so every leaf is an ideal.
std::vector<Ideal> enumerate_ideals(const RootSystem& rs);
// Ideals refer to their system, so it must outlive them.
std::vector<Ideal> enumerate_ideals(const RootSystem&& rs) = delete;

bool is_abelian(const Ideal& n);

/// [n, n] under generic structure constants: all beta+gamma in Phi+ with beta, gamma in n.
Ideal derived_ideal(const Ideal& n);

/// n + m (union of root sets). Throws UsageError for different root systems.
Ideal sum_ideals(const Ideal& a, const Ideal& b);

/// The J with N_G(n) = P_J: alpha_i is in J iff alpha_i is not in n and every
/// beta in n with beta - alpha_i a positive root has beta - alpha_i in n. This is
/// the condition for g_{-alpha_i} to normalize n when all [g_beta, g_gamma] with
/// beta+gamma a root are nonzero.
ParabolicType normalizer_type(const Ideal& n);
std::uint32_t normalizer_mask(const RootSystem& rs, const IndexSet& roots);

/// Roots whose support is not contained in J.
Ideal nilradical_of_parabolic(const RootSystem& rs, ParabolicType j);

/// n equals the nilradical of its own normalizer.
bool is_radical_member(const Ideal& n);

}  // namespace nilchain
