#include "nilchain/pairing.hpp"

#include <optional>
#include <vector>

#include "nilchain/errors.hpp"

namespace nilchain {

std::string_view to_string(Pairing p) {
  return p == Pairing::NonAbelian ? "ci-minus-ca" : "ci-minus-cr";
}

bool in_pairing_domain(Pairing p, const Chain& c) {
  return !membership(p == Pairing::NonAbelian ? ComplexKind::CA : ComplexKind::CR, c);
}

Chain pair_nonabelian(const Chain& c) {
  if (c.empty()) throw DomainError("precondition violated: the empty chain lies in CA");
  const RootSystem& rs = c.system();
  const Ideal& top = c.top();
  if (is_abelian(top)) {
    throw DomainError("precondition violated: every member is abelian (chain lies in CA)");
  }
  const Ideal derived = derived_ideal(top);
  const auto members = c.members();

  // members[j] is n_{j+1}; n_0 is the implicit zero ideal.
  std::size_t j = 0;
  while (!derived.is_subset_of(members[j])) ++j;
  const Ideal& below = j == 0 ? Ideal::zero(rs) : members[j - 1];
  const Ideal candidate = sum_ideals(below, derived);

  std::vector<Ideal> out(members.begin(), members.end());
  if (candidate != members[j]) {
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(j), candidate);
  } else {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return Chain(rs, std::move(out));
}

Chain pair_nonradical(const Chain& c) {
  const RootSystem& rs = c.system();
  const auto members = c.members();
  const std::size_t n = members.size();

  std::size_t i = 0;
  std::optional<Ideal> radical;
  for (; i < n; ++i) {
    Ideal m = nilradical_of_parabolic(rs, normalizer_type(members[i]));
    if (m != members[i]) {
      radical = m;
      break;
    }
  }
  if (!radical) {
    throw DomainError("precondition violated: every member is a parabolic nilradical (chain lies in CR)");
  }

  std::size_t j = n - 1;
  while (radical->is_subset_of(members[j])) --j;  // stops at i at the latest

  const Ideal candidate = sum_ideals(*radical, members[j]);
  std::vector<Ideal> out(members.begin(), members.end());
  if (j + 1 < n && candidate == members[j + 1]) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(j + 1));
  } else {
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(j + 1), candidate);
  }
  return Chain(rs, std::move(out));
}

Chain apply_pairing(Pairing p, const Chain& c) {
  return p == Pairing::NonAbelian ? pair_nonabelian(c) : pair_nonradical(c);
}

}  // namespace nilchain
