#include "catch_amalgamated.hpp"
#include "nilchain/errors.hpp"
#include "nilchain/format.hpp"

using namespace nilchain;

namespace {

Ideal ideal(const RootSystem& rs, std::vector<RootIndex> roots) { return Ideal::from_indices(rs, roots); }

std::size_t parse_error_position(const RootSystem& rs, std::string_view text) {
  try {
    parse_chain_literal(rs, text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("text forms", "[format]") {
  const RootSystem rs(RootSystemSpec(Family::A, 2));
  const Chain c(rs, {ideal(rs, {2}), Ideal::full(rs)});
  CHECK(format_chain(c) == "[{2} < {0,1,2}]");
  CHECK(format_chain(Chain(rs)) == "[]");
  CHECK(format_ideal_expanded(ideal(rs, {0, 2})) == "[(1,0),(1,1)]");
  CHECK(format_parabolic(ParabolicType(0b11)) == "{1,2}");
  CHECK(format_parabolic(ParabolicType{}) == "{}");
  CHECK(format_parabolic_chain(ParabolicChain(2, {ParabolicType{}, ParabolicType(0b01)})) == "[{} < {1}]");
  CHECK(format_sum(closed_form_sum(rs)) == "{1,2}:+1 {1}:-1 {2}:-1 {}:+1");
  CHECK(format_sum(SumVector{}) == "0");
  CHECK(chain_to_json(c).dump() == "[[2],[0,1,2]]");
}

TEST_CASE("chain literal parsing", "[format]") {
  const RootSystem rs(RootSystemSpec(Family::A, 2));
  const Chain expected(rs, {ideal(rs, {2}), ideal(rs, {0, 2})});
  CHECK(parse_chain_literal(rs, "[{2} < {0,2}]") == expected);
  CHECK(parse_chain_literal(rs, "  { 2 }<{2,0} ") == expected);
  CHECK(parse_chain_literal(rs, "[]").empty());
  CHECK(parse_chain_literal(rs, "").empty());

  CHECK(parse_error_position(rs, "[{2} < {0,2}") == 12);
  CHECK(parse_error_position(rs, "[{x}]") == 2);
  CHECK(parse_error_position(rs, "{2} {0,2}") == 4);
  CHECK(parse_error_position(rs, "[{2},]") == 4);
  CHECK(parse_error_position(rs, "[{2}] trailing") == 6);
  CHECK_THROWS_WITH(parse_chain_literal(rs, "[{2"), Catch::Matchers::ContainsSubstring("position 3"));

  CHECK_THROWS_AS(parse_chain_literal(rs, "[{0}]"), DomainError);           // not upper-closed
  CHECK_THROWS_AS(parse_chain_literal(rs, "[{0,2} < {2}]"), DomainError);   // decreasing
  CHECK_THROWS_AS(parse_chain_literal(rs, "[{} < {2}]"), DomainError);      // zero member
  CHECK_THROWS_AS(parse_chain_literal(rs, "[{9}]"), UsageError);

  CHECK(parse_parabolic_chain_literal(2, "[{} < {2}]") ==
        ParabolicChain(2, {ParabolicType{}, ParabolicType(0b10)}));
  CHECK_THROWS_AS(parse_parabolic_chain_literal(2, "[{1,2}]"), DomainError);
}

TEST_CASE("emitted literals re-parse to equal values", "[format][property]") {
  for (const auto& spec : std::vector<RootSystemSpec>{{Family::A, 3}, {Family::B, 3}}) {
    const RootSystem rs(spec);
    for_each_chain(rs, ComplexKind::CI, [&](const Chain& c) {
      CHECK(parse_chain_literal(rs, format_chain(c)) == c);
      CHECK(chain_from_json(rs, nlohmann::json::parse(chain_to_json(c).dump())) == c);
    });
    for_each_parabolic_chain(rs, [&](const ParabolicChain& d) {
      CHECK(parse_parabolic_chain_literal(rs.rank(), format_parabolic_chain(d)) == d);
    });
    for (auto kind : {ComplexKind::CI, ComplexKind::CP}) {
      const SumVector s = alternating_sum(rs, kind);
      CHECK(sum_from_json(rs.rank(), sum_to_json(s)) == s);
    }
  }
}

TEST_CASE("report JSON schema", "[format]") {
  const RootSystem rs(RootSystemSpec(Family::A, 2));
  const auto j = report_to_json(verify(rs));
  for (const char* key : {"type", "rank", "complex", "closed_form", "verdicts", "elapsed_ms", "scope"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["type"] == "A");
  CHECK(j["rank"] == 2);
  for (const char* kind : {"CI", "CA", "CR", "CP"}) {
    CAPTURE(kind);
    REQUIRE(j["complex"].contains(kind));
    CHECK(j["complex"][kind].contains("chain_counts"));
    CHECK(j["complex"][kind]["sum"] == nlohmann::json::parse("[[[1,2],1],[[1],-1],[[2],-1],[[],1]]"));
  }
  CHECK(j["complex"]["CI"]["chain_counts"]["total"] == 12);
  CHECK(j["closed_form"] == j["complex"]["CP"]["sum"]);
  for (const auto& [name, ok] : j["verdicts"].items()) {
    CAPTURE(name);
    CHECK(ok == true);
  }
  CHECK(j["scope"].get<std::string>().find("not computed") != std::string::npos);
}
