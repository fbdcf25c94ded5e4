#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilchain/ideal.hpp"
#include "nilchain/root_system.hpp"

namespace nilchain {

/// CI: chains of Borel ideals inside nil(b). CA: chains of abelian ideals.
/// CR: chains of parabolic nilradicals. CP: chains of proper standard parabolics.
enum class ComplexKind { CI, CA, CR, CP };

std::string_view to_string(ComplexKind kind);
/// Accepts ci/ca/cr/cp in any case.
std::optional<ComplexKind> parse_complex_kind(std::string_view text);

/// Strictly increasing sequence of nonzero ideals. The zero ideal that starts
/// every chain is implicit, so length() is the number of stored members and the
/// empty chain has length 0.
class Chain {
 public:
  explicit Chain(const RootSystem& rs) : rs_(&rs) {}
  /// Throws DomainError on a zero member or non-strict inclusion, UsageError on
  /// members from another root system.
  Chain(const RootSystem& rs, std::vector<Ideal> members);

  const RootSystem& system() const noexcept { return *rs_; }
  std::span<const Ideal> members() const noexcept { return members_; }
  std::size_t length() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const Ideal& top() const;

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.rs_ == b.rs_ && a.members_ == b.members_;
  }

 private:
  const RootSystem* rs_;
  std::vector<Ideal> members_;
};

/// Strictly increasing sequence of proper subsets I_1 < ... < I_k of S. The
/// full group is the implicit top, mirroring the zero ideal on the ideal side.
class ParabolicChain {
 public:
  explicit ParabolicChain(std::size_t rank) : rank_(rank) {}
  /// Throws DomainError unless members are strictly increasing proper subsets of S.
  ParabolicChain(std::size_t rank, std::vector<ParabolicType> members);

  std::size_t rank() const noexcept { return rank_; }
  std::span<const ParabolicType> members() const noexcept { return members_; }
  std::size_t length() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  friend bool operator==(const ParabolicChain&, const ParabolicChain&) = default;

 private:
  std::size_t rank_;
  std::vector<ParabolicType> members_;
};

/// CI: always true. CA: every member abelian. CR: every member radical.
/// Throws UsageError for CP, whose chains are ParabolicChain values.
bool membership(ComplexKind kind, const Chain& c);

/// Intersection of member normalizer types; S for the empty chain.
ParabolicType chain_stabilizer_type(const Chain& c);
/// Smallest member; S for the empty chain.
ParabolicType chain_stabilizer_type(const ParabolicChain& d);

/// Order-reversing, length-preserving correspondences between CR and CP.
/// cr_to_cp throws DomainError if c is not in CR.
ParabolicChain cr_to_cp(const Chain& c);
Chain cp_to_cr(const RootSystem& rs, const ParabolicChain& d);

/// The vertex poset of one complex: its elements in canonical order, each
/// element's normalizer (for CP, the subset itself) as a stabilizer mask, and
/// the strict successors of each element in increasing index order.
struct ChainSpace {
  ComplexKind kind;
  const RootSystem* system;
  std::vector<IndexSet> ideals;          // empty for CP
  std::vector<ParabolicType> parabolics; // CP only
  std::vector<std::uint32_t> stabilizer;
  std::vector<std::vector<std::uint32_t>> successors;
  std::uint32_t full_mask = 0;

  std::size_t size() const noexcept { return stabilizer.size(); }
};

ChainSpace make_chain_space(const RootSystem& rs, ComplexKind kind);
ChainSpace make_chain_space(const RootSystem&& rs, ComplexKind kind) = delete;

/// Number of chains (including the empty one) by dynamic programming over
/// the successor DAG; saturates at UINT64_MAX.
std::uint64_t count_chains(const ChainSpace& space);

/// Depth-first walk over chains whose first element lies in
/// [first_begin, first_end), in lexicographic order of element-index
/// sequences. visit(path, stabilizer_mask) sees each chain once; the path
/// buffer is reused between calls. Memory is proportional to the chain depth.
template <typename Visitor>
void walk_chains(const ChainSpace& space, std::size_t first_begin, std::size_t first_end,
                 Visitor&& visit) {
  std::vector<std::uint32_t> path;
  std::vector<std::uint32_t> cursor;
  std::vector<std::uint32_t> masks;
  for (std::size_t first = first_begin; first < first_end; ++first) {
    path.assign(1, static_cast<std::uint32_t>(first));
    cursor.assign(1, 0);
    masks.assign(1, space.full_mask & space.stabilizer[first]);
    visit(std::span<const std::uint32_t>(path), masks.back());
    while (!path.empty()) {
      const auto& next = space.successors[path.back()];
      auto& pos = cursor.back();
      if (pos < next.size()) {
        const std::uint32_t element = next[pos++];
        path.push_back(element);
        cursor.push_back(0);
        masks.push_back(masks.back() & space.stabilizer[element]);
        visit(std::span<const std::uint32_t>(path), masks.back());
      } else {
        path.pop_back();
        cursor.pop_back();
        masks.pop_back();
      }
    }
  }
}

/// Whole-space walk, starting with the empty chain.
template <typename Visitor>
void walk_chains(const ChainSpace& space, Visitor&& visit) {
  visit(std::span<const std::uint32_t>{}, space.full_mask);
  walk_chains(space, 0, space.size(), visit);
}

Chain chain_from_path(const ChainSpace& space, std::span<const std::uint32_t> path);
ParabolicChain parabolic_chain_from_path(const ChainSpace& space,
                                         std::span<const std::uint32_t> path);

/// Streams every chain of kind CI, CA or CR (throws UsageError for CP).
void for_each_chain(const RootSystem& rs, ComplexKind kind,
                    const std::function<void(const Chain&)>& visit);
/// Streams every chain of proper standard parabolics.
void for_each_parabolic_chain(const RootSystem& rs,
                              const std::function<void(const ParabolicChain&)>& visit);

}  // namespace nilchain
