#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "nilchain/chain.hpp"
#include "nilchain/ideal.hpp"
#include "nilchain/root_system.hpp"
#include "nilchain/sum_engine.hpp"

namespace nilchain {

// Text forms. Root indices are zero-based positions in the canonical root
// order; simple indices (in parabolic types) are one-based labels.

std::string format_coeffs(const Root& r);               // (1,2)
std::string format_ideal(const Ideal& n);               // {0,2}
std::string format_ideal_expanded(const Ideal& n);      // [(1,0),(1,1)]
std::string format_parabolic(ParabolicType j);          // {1,2}
std::string format_chain(const Chain& c);               // [{2} < {0,1,2}]
std::string format_parabolic_chain(const ParabolicChain& d);
std::string format_sum(const SumVector& v);             // {1,2}:+1 {1}:-1 ... or 0

/// Parses `[{i,j,...} < {...} < ...]`. Brackets are optional, whitespace is
/// ignored, and `[]` or an empty string is the empty chain. Syntax errors throw
/// ParseError carrying the offending offset; well-formed literals that are not
/// a chain of ideals throw DomainError, bad indices UsageError.
Chain parse_chain_literal(const RootSystem& rs, std::string_view text);

/// Same grammar for chains of proper parabolics, with one-based simple labels.
ParabolicChain parse_parabolic_chain_literal(std::size_t rank, std::string_view text);

nlohmann::json ideal_to_json(const Ideal& n);
nlohmann::json chain_to_json(const Chain& c);
nlohmann::json parabolic_chain_to_json(const ParabolicChain& d);
nlohmann::json sum_to_json(const SumVector& v);
nlohmann::json report_to_json(const VerificationReport& report);

Chain chain_from_json(const RootSystem& rs, const nlohmann::json& j);
SumVector sum_from_json(std::size_t rank, const nlohmann::json& j);

}  // namespace nilchain
