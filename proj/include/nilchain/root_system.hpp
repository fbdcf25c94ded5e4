#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilchain/index_set.hpp"

namespace nilchain {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan type such as A3 or G2. Constructing one validates the rank.
class RootSystemSpec {
 public:
  RootSystemSpec(Family family, int rank);

  /// Parses a family letter (case-insensitive). Throws SpecError with
  /// "unknown family" or "invalid rank" in the message.
  static RootSystemSpec parse(std::string_view family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  char letter() const noexcept { return static_cast<char>(family_); }
  std::string name() const;

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;

 private:
  Family family_;
  int rank_;
};

using RootIndex = std::uint32_t;
using CartanMatrix = std::vector<std::vector<int>>;

struct Root {
  std::vector<int> coeffs;
  int height = 0;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Cartan matrix with entry [i][j] = <alpha_j, alpha_i^vee>. B_n has its short
/// simple root last, C_n its long simple root last, G_2 has alpha_1 short, and
/// D_n/E_n attach the branch node as in Bourbaki.
CartanMatrix cartan_matrix(const RootSystemSpec& spec);

struct RootSystemOptions {
  /// Permit E7, E8 and any system with more than kDefaultRootLimit positive roots.
  bool allow_large = false;
};

inline constexpr std::size_t kDefaultRootLimit = 64;

/// Positive roots of a finite root system together with the lookup tables the
/// rest of the library runs on. Roots are addressed by their position in the
/// canonical order: increasing height, and within a height decreasing
/// lexicographic order of coefficients, so simple root alpha_i sits at index i-1.
/// Immutable after construction.
class RootSystem {
 public:
  /// Builds from a named type, enforcing the default size gate.
  explicit RootSystem(const RootSystemSpec& spec, RootSystemOptions options = {});

  /// Builds from an arbitrary (possibly reducible, possibly empty) Cartan
  /// matrix; no size gate beyond IndexSet capacity.
  static RootSystem from_cartan(const CartanMatrix& cartan, std::string name);

  const std::string& name() const noexcept { return name_; }
  const std::optional<RootSystemSpec>& spec() const noexcept { return spec_; }
  std::size_t rank() const noexcept { return cartan_.size(); }
  std::size_t size() const noexcept { return roots_.size(); }
  const CartanMatrix& cartan() const noexcept { return cartan_; }

  std::span<const Root> roots() const noexcept { return roots_; }
  const Root& root(RootIndex a) const;

  /// Index of root(a)+root(b) when that sum is a positive root.
  std::optional<RootIndex> add(RootIndex a, RootIndex b) const;
  /// Index of root(b)+alpha_i, i zero-based.
  std::optional<RootIndex> add_simple(RootIndex b, std::size_t i) const;
  /// Index of root(b)-alpha_i, i zero-based. Differences with mixed-sign
  /// coefficients are never roots, so no negative root is ever returned.
  std::optional<RootIndex> subtract_simple(RootIndex b, std::size_t i) const;

  std::optional<RootIndex> find(std::span<const int> coeffs) const;
  RootIndex simple_root(std::size_t i) const;
  RootIndex highest_root() const;

  /// Set of simple indices (zero-based bit positions) with nonzero coefficient.
  std::uint32_t support(RootIndex a) const;

  /// Roots reachable from a by one simple step up.
  const IndexSet& upper_covers(RootIndex a) const { return up_covers_.at(a); }
  /// Roots b with root(a)+root(b) a positive root.
  const IndexSet& sum_partners(RootIndex a) const { return partners_.at(a); }
  IndexSet all_roots() const { return IndexSet::first_n(size()); }

  /// Maps roots under a permutation of the simple roots. Throws DomainError if
  /// the permutation is not a Dynkin diagram automorphism.
  std::vector<RootIndex> permute(std::span<const std::size_t> simple_permutation) const;

 private:
  RootSystem(CartanMatrix cartan, std::string name, std::optional<RootSystemSpec> spec);

  void check_index(RootIndex a) const;

  std::optional<RootSystemSpec> spec_;
  std::string name_;
  CartanMatrix cartan_;
  std::vector<Root> roots_;
  std::vector<std::int16_t> add_table_;       // size()*size(), -1 = none
  std::vector<std::int16_t> step_up_table_;   // size()*rank()
  std::vector<std::int16_t> step_down_table_; // size()*rank()
  std::vector<IndexSet> up_covers_;
  std::vector<IndexSet> partners_;
};

}  // namespace nilchain
