#include "nilchain/chain.hpp"

#include <algorithm>
#include <cctype>

#include "nilchain/checked.hpp"
#include "nilchain/errors.hpp"

namespace nilchain {

std::string_view to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::CI: return "CI";
    case ComplexKind::CA: return "CA";
    case ComplexKind::CR: return "CR";
    case ComplexKind::CP: return "CP";
  }
  return "?";
}

std::optional<ComplexKind> parse_complex_kind(std::string_view text) {
  std::string lower(text);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "ci") return ComplexKind::CI;
  if (lower == "ca") return ComplexKind::CA;
  if (lower == "cr") return ComplexKind::CR;
  if (lower == "cp") return ComplexKind::CP;
  return std::nullopt;
}

Chain::Chain(const RootSystem& rs, std::vector<Ideal> members)
    : rs_(&rs), members_(std::move(members)) {
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (&members_[k].system() != &rs) {
      throw UsageError("chain member " + std::to_string(k + 1) + " belongs to another root system");
    }
    if (members_[k].empty()) {
      throw DomainError("chain member " + std::to_string(k + 1) + " is the zero ideal");
    }
    if (k > 0 && !members_[k - 1].is_proper_subset_of(members_[k])) {
      throw DomainError("chain members " + std::to_string(k) + " and " + std::to_string(k + 1) +
                        " are not strictly increasing");
    }
  }
}

const Ideal& Chain::top() const {
  if (members_.empty()) throw DomainError("the empty chain has no top member");
  return members_.back();
}

ParabolicChain::ParabolicChain(std::size_t rank, std::vector<ParabolicType> members)
    : rank_(rank), members_(std::move(members)) {
  const ParabolicType full = ParabolicType::full(rank);
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (!members_[k].is_subset_of(full) || members_[k] == full) {
      throw DomainError("parabolic chain member " + std::to_string(k + 1) +
                        " is not a proper subset of the simple roots");
    }
    if (k > 0 && (!members_[k - 1].is_subset_of(members_[k]) || members_[k - 1] == members_[k])) {
      throw DomainError("parabolic chain members " + std::to_string(k) + " and " +
                        std::to_string(k + 1) + " are not strictly increasing");
    }
  }
}

bool membership(ComplexKind kind, const Chain& c) {
  switch (kind) {
    case ComplexKind::CI:
      return true;
    case ComplexKind::CA:
      return std::all_of(c.members().begin(), c.members().end(),
                         [](const Ideal& n) { return is_abelian(n); });
    case ComplexKind::CR:
      return std::all_of(c.members().begin(), c.members().end(),
                         [](const Ideal& n) { return is_radical_member(n); });
    case ComplexKind::CP:
      break;
  }
  throw UsageError("CP chains are chains of parabolics, not of ideals");
}

ParabolicType chain_stabilizer_type(const Chain& c) {
  ParabolicType stab = ParabolicType::full(c.system().rank());
  for (const auto& n : c.members()) stab = stab & normalizer_type(n);
  return stab;
}

ParabolicType chain_stabilizer_type(const ParabolicChain& d) {
  if (d.empty()) return ParabolicType::full(d.rank());
  return d.members().front();
}

ParabolicChain cr_to_cp(const Chain& c) {
  if (!membership(ComplexKind::CR, c)) {
    throw DomainError("precondition violated: chain is not in CR (a member is not a parabolic nilradical)");
  }
  std::vector<ParabolicType> out;
  out.reserve(c.length());
  for (auto it = c.members().rbegin(); it != c.members().rend(); ++it) {
    out.push_back(normalizer_type(*it));
  }
  return ParabolicChain(c.system().rank(), std::move(out));
}

Chain cp_to_cr(const RootSystem& rs, const ParabolicChain& d) {
  if (d.rank() != rs.rank()) throw UsageError("parabolic chain rank does not match root system");
  std::vector<Ideal> out;
  out.reserve(d.length());
  for (auto it = d.members().rbegin(); it != d.members().rend(); ++it) {
    out.push_back(nilradical_of_parabolic(rs, *it));
  }
  return Chain(rs, std::move(out));
}

namespace {

void link_successors(ChainSpace& space) {
  const std::size_t n = space.size();
  space.successors.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const bool below = space.kind == ComplexKind::CP
                             ? (space.parabolics[x].is_subset_of(space.parabolics[y]) &&
                                space.parabolics[x] != space.parabolics[y])
                             : space.ideals[x].is_proper_subset_of(space.ideals[y]);
      if (below) space.successors[x].push_back(static_cast<std::uint32_t>(y));
    }
  }
}

}  // namespace

ChainSpace make_chain_space(const RootSystem& rs, ComplexKind kind) {
  ChainSpace space{kind, &rs, {}, {}, {}, {}, ParabolicType::full(rs.rank()).mask()};
  if (kind == ComplexKind::CP) {
    const std::uint32_t full = space.full_mask;
    for (std::uint32_t m = 0; m < full; ++m) space.parabolics.emplace_back(m);
    // Smaller sets first so strict supersets always have larger indices.
    std::stable_sort(space.parabolics.begin(), space.parabolics.end(),
                     [](ParabolicType a, ParabolicType b) {
                       if (a.size() != b.size()) return a.size() < b.size();
                       return a.labels() < b.labels();
                     });
    for (auto p : space.parabolics) space.stabilizer.push_back(p.mask());
  } else {
    for (const auto& ideal : enumerate_ideals(rs)) {
      if (ideal.empty()) continue;
      if (kind == ComplexKind::CA && !is_abelian(ideal)) continue;
      if (kind == ComplexKind::CR && !is_radical_member(ideal)) continue;
      space.ideals.push_back(ideal.roots());
      space.stabilizer.push_back(normalizer_type(ideal).mask());
    }
  }
  link_successors(space);
  return space;
}

std::uint64_t count_chains(const ChainSpace& space) {
  std::vector<std::uint64_t> ending(space.size(), 1);
  std::uint64_t total = 1;
  for (std::size_t x = 0; x < space.size(); ++x) {
    total = saturating_add(total, ending[x]);
    for (auto y : space.successors[x]) ending[y] = saturating_add(ending[y], ending[x]);
  }
  return total;
}

Chain chain_from_path(const ChainSpace& space, std::span<const std::uint32_t> path) {
  std::vector<Ideal> members;
  members.reserve(path.size());
  for (auto id : path) members.emplace_back(*space.system, space.ideals[id]);
  return Chain(*space.system, std::move(members));
}

ParabolicChain parabolic_chain_from_path(const ChainSpace& space,
                                         std::span<const std::uint32_t> path) {
  std::vector<ParabolicType> members;
  members.reserve(path.size());
  for (auto id : path) members.push_back(space.parabolics[id]);
  return ParabolicChain(space.system->rank(), std::move(members));
}

void for_each_chain(const RootSystem& rs, ComplexKind kind,
                    const std::function<void(const Chain&)>& visit) {
  if (kind == ComplexKind::CP) {
    throw UsageError("use for_each_parabolic_chain for CP");
  }
  const ChainSpace space = make_chain_space(rs, kind);
  walk_chains(space, [&](std::span<const std::uint32_t> path, std::uint32_t) {
    visit(chain_from_path(space, path));
  });
}

void for_each_parabolic_chain(const RootSystem& rs,
                              const std::function<void(const ParabolicChain&)>& visit) {
  const ChainSpace space = make_chain_space(rs, ComplexKind::CP);
  walk_chains(space, [&](std::span<const std::uint32_t> path, std::uint32_t) {
    visit(parabolic_chain_from_path(space, path));
  });
}

}  // namespace nilchain
