#pragma once

#include <string_view>

#include "nilchain/chain.hpp"

namespace nilchain {

/// The two fixed-point-free, sign-reversing involutions that cancel chains
/// outside CA (resp. CR) in the alternating sum over CI.
enum class Pairing { NonAbelian, NonRadical };

std::string_view to_string(Pairing p);

/// True when c lies in CI \ CA (resp. CI \ CR), the domain of the pairing.
bool in_pairing_domain(Pairing p, const Chain& c);

/// Domain CI \ CA. With d = [top, top] and j the first position whose member
/// contains d, the candidate n_{j-1} + d is inserted before n_j, or n_j is
/// removed when the two coincide. Throws DomainError outside the domain.
Chain pair_nonabelian(const Chain& c);

/// Domain CI \ CR. With i the first member that differs from the nilradical
/// m of its normalizer and j the last position whose member does not contain
/// m, either n_{j+1} = m + n_j is removed or m + n_j is inserted after n_j.
/// Throws DomainError outside the domain.
Chain pair_nonradical(const Chain& c);

Chain apply_pairing(Pairing p, const Chain& c);

}  // namespace nilchain
