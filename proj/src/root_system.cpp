#include "nilchain/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "nilchain/errors.hpp"

namespace nilchain {

namespace {

std::string family_range(Family f) {
  switch (f) {
    case Family::A: return "rank >= 1";
    case Family::B: return "rank >= 2";
    case Family::C: return "rank >= 3";
    case Family::D: return "rank >= 4";
    case Family::E: return "rank 6, 7 or 8";
    case Family::F: return "rank 4";
    case Family::G: return "rank 2";
  }
  return {};
}

bool rank_valid(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

// Classical counts, used to refuse requests that cannot fit in an IndexSet
// before any generation work happens.
long long positive_root_count(Family f, long long n) {
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

constexpr std::int16_t kNone = -1;

}  // namespace

RootSystemSpec::RootSystemSpec(Family family, int rank) : family_(family), rank_(rank) {
  if (!rank_valid(family, rank)) {
    throw SpecError("invalid rank " + std::to_string(rank) + " for family " +
                    std::string(1, static_cast<char>(family)) + " (requires " +
                    family_range(family) + ")");
  }
}

RootSystemSpec RootSystemSpec::parse(std::string_view family, int rank) {
  if (family.size() != 1) {
    throw SpecError("unknown family '" + std::string(family) + "'");
  }
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(family[0])));
  if (c < 'A' || c > 'G') {
    throw SpecError("unknown family '" + std::string(family) + "'");
  }
  return RootSystemSpec(static_cast<Family>(c), rank);
}

std::string RootSystemSpec::name() const { return std::string(1, letter()) + std::to_string(rank_); }

CartanMatrix cartan_matrix(const RootSystemSpec& spec) {
  const int n = spec.rank();
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };

  switch (spec.family()) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-...-n with 2 hanging off 4.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Family::G:
      a[0][1] = -3;
      a[1][0] = -1;  // alpha_1 short
      break;
  }
  return a;
}

RootSystem::RootSystem(const RootSystemSpec& spec, RootSystemOptions options)
    : RootSystem([&] {
        const long long count = positive_root_count(spec.family(), spec.rank());
        if (count > static_cast<long long>(IndexSet::kCapacity)) {
          throw SpecError(spec.name() + " has " + std::to_string(count) +
                          " positive roots, beyond the supported capacity of " +
                          std::to_string(IndexSet::kCapacity));
        }
        const bool large = count > static_cast<long long>(kDefaultRootLimit) ||
                           (spec.family() == Family::E && spec.rank() >= 7);
        if (large && !options.allow_large) {
          throw SpecError(spec.name() + " has " + std::to_string(count) +
                          " positive roots; set allow_large (--allow-large) to build it");
        }
        return cartan_matrix(spec);
      }(),
                 spec.name(), spec) {}

RootSystem RootSystem::from_cartan(const CartanMatrix& cartan, std::string name) {
  return RootSystem(cartan, std::move(name), std::nullopt);
}

RootSystem::RootSystem(CartanMatrix cartan, std::string name, std::optional<RootSystemSpec> spec)
    : spec_(std::move(spec)), name_(std::move(name)), cartan_(std::move(cartan)) {
  const std::size_t n = cartan_.size();
  for (const auto& row : cartan_) {
    if (row.size() != n) throw SpecError("Cartan matrix of " + name_ + " is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_[i][i] != 2) throw SpecError("Cartan matrix diagonal must be 2");
  }

  // Height induction with root strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> >= 1, where p is the length of the alpha_i-string
  // below beta.
  std::map<std::vector<int>, bool> known;
  std::vector<std::vector<int>> layer;
  std::vector<std::vector<int>> all;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known[e] = true;
    layer.push_back(e);
    all.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        std::vector<int> probe = beta;
        while (true) {
          --probe[i];
          if (known.count(probe) == 0) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan_[i][j];
        if (p - pairing >= 1) {
          std::vector<int> up = beta;
          ++up[i];
          if (known.emplace(up, true).second) {
            next.push_back(up);
            all.push_back(up);
            if (all.size() > IndexSet::kCapacity) {
              throw SpecError("Cartan matrix of " + name_ +
                              " is not of finite type or exceeds root capacity");
            }
          }
        }
      }
    }
    layer = std::move(next);
  }

  for (auto& c : all) {
    Root r;
    r.height = std::accumulate(c.begin(), c.end(), 0);
    r.coeffs = std::move(c);
    roots_.push_back(std::move(r));
  }
  std::sort(roots_.begin(), roots_.end(), [](const Root& x, const Root& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.coeffs > y.coeffs;
  });

  const std::size_t count = roots_.size();
  std::map<std::vector<int>, RootIndex> index;
  for (std::size_t a = 0; a < count; ++a) index[roots_[a].coeffs] = static_cast<RootIndex>(a);

  add_table_.assign(count * count, kNone);
  step_up_table_.assign(count * n, kNone);
  step_down_table_.assign(count * n, kNone);
  up_covers_.assign(count, IndexSet{});
  partners_.assign(count, IndexSet{});

  std::vector<int> scratch(n);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      for (std::size_t k = 0; k < n; ++k) scratch[k] = roots_[a].coeffs[k] + roots_[b].coeffs[k];
      if (auto it = index.find(scratch); it != index.end()) {
        add_table_[a * count + b] = static_cast<std::int16_t>(it->second);
        partners_[a].set(b);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      scratch = roots_[a].coeffs;
      ++scratch[i];
      if (auto it = index.find(scratch); it != index.end()) {
        step_up_table_[a * n + i] = static_cast<std::int16_t>(it->second);
        up_covers_[a].set(it->second);
      }
      scratch = roots_[a].coeffs;
      --scratch[i];
      if (auto it = index.find(scratch); it != index.end()) {
        step_down_table_[a * n + i] = static_cast<std::int16_t>(it->second);
      }
    }
  }
}

void RootSystem::check_index(RootIndex a) const {
  if (a >= roots_.size()) {
    throw UsageError("root index " + std::to_string(a) + " out of range for " + name_ + " (" +
                     std::to_string(roots_.size()) + " positive roots)");
  }
}

const Root& RootSystem::root(RootIndex a) const {
  check_index(a);
  return roots_[a];
}

std::optional<RootIndex> RootSystem::add(RootIndex a, RootIndex b) const {
  check_index(a);
  check_index(b);
  const auto v = add_table_[a * size() + b];
  if (v == kNone) return std::nullopt;
  return static_cast<RootIndex>(v);
}

std::optional<RootIndex> RootSystem::add_simple(RootIndex b, std::size_t i) const {
  check_index(b);
  if (i >= rank()) throw UsageError("simple index " + std::to_string(i + 1) + " out of range");
  const auto v = step_up_table_[b * rank() + i];
  if (v == kNone) return std::nullopt;
  return static_cast<RootIndex>(v);
}

std::optional<RootIndex> RootSystem::subtract_simple(RootIndex b, std::size_t i) const {
  check_index(b);
  if (i >= rank()) throw UsageError("simple index " + std::to_string(i + 1) + " out of range");
  const auto v = step_down_table_[b * rank() + i];
  if (v == kNone) return std::nullopt;
  return static_cast<RootIndex>(v);
}

std::optional<RootIndex> RootSystem::find(std::span<const int> coeffs) const {
  if (coeffs.size() != rank()) return std::nullopt;
  for (std::size_t a = 0; a < roots_.size(); ++a) {
    if (std::equal(coeffs.begin(), coeffs.end(), roots_[a].coeffs.begin())) {
      return static_cast<RootIndex>(a);
    }
  }
  return std::nullopt;
}

RootIndex RootSystem::simple_root(std::size_t i) const {
  if (i >= rank()) throw UsageError("simple index " + std::to_string(i + 1) + " out of range");
  return static_cast<RootIndex>(i);
}

RootIndex RootSystem::highest_root() const {
  if (roots_.empty()) throw UsageError(name_ + " has no roots");
  return static_cast<RootIndex>(roots_.size() - 1);
}

std::uint32_t RootSystem::support(RootIndex a) const {
  const Root& r = root(a);
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if (r.coeffs[i] != 0) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

std::vector<RootIndex> RootSystem::permute(std::span<const std::size_t> sigma) const {
  const std::size_t n = rank();
  if (sigma.size() != n) throw UsageError("permutation length does not match rank");
  std::vector<bool> seen(n, false);
  for (auto s : sigma) {
    if (s >= n || seen[s]) throw UsageError("not a permutation of the simple roots");
    seen[s] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cartan_[sigma[i]][sigma[j]] != cartan_[i][j]) {
        throw DomainError("permutation is not a diagram automorphism of " + name_);
      }
    }
  }
  std::vector<RootIndex> image(size());
  std::vector<int> moved(n);
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t i = 0; i < n; ++i) moved[sigma[i]] = roots_[a].coeffs[i];
    image[a] = *find(moved);
  }
  return image;
}

}  // namespace nilchain
